#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "thmon/circuits.hpp"
#include "thmon/green.hpp"
#include "thmon/reductions.hpp"
#include "thmon/structure.hpp"

using namespace thmon;

namespace {

  // Complete code of about n leaves over k letters, grown by splitting a
  // random leaf, mapped bijectively onto a shuffled second such code.
  Element random_unit(std::mt19937_64& rng, unsigned k, std::size_t n) {
    auto grow = [&] {
      std::vector<Word> leaves{Word{}};
      while (leaves.size() + k - 1 <= n) {
        std::size_t i = rng() % leaves.size();
        Word        w = leaves[i];
        leaves.erase(leaves.begin() + static_cast<long>(i));
        for (unsigned a = 0; a < k; ++a) {
          Word c = w;
          c.push_back(static_cast<Letter>(a));
          leaves.push_back(c);
        }
      }
      return leaves;
    };
    auto dom = grow();
    auto img = grow();
    while (img.size() != dom.size()) {
      img = grow();
    }
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      entries.push_back(Entry{dom[i], img[i]});
    }
    return canonicalize(Table(Alphabet{k, 0}, std::move(entries)));
  }

  void BM_compose(benchmark::State& state) {
    std::mt19937_64 rng(1);
    auto            n = static_cast<std::size_t>(state.range(0));
    Element         a = random_unit(rng, 2, n);
    Element         b = random_unit(rng, 2, n);
    for (auto _ : state) {
      benchmark::DoNotOptimize(compose(a, b));
    }
  }
  BENCHMARK(BM_compose)->RangeMultiplier(4)->Range(4, 256);

  void BM_canonicalize_after_split(benchmark::State& state) {
    std::mt19937_64 rng(2);
    auto            n = static_cast<std::size_t>(state.range(0));
    Element         a = random_unit(rng, 3, n);
    Table           t = a;
    for (std::size_t i = 0; i < a.size(); i += 2) {
      t = restrict(t, i, 2);
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(canonicalize(t));
    }
  }
  BENCHMARK(BM_canonicalize_after_split)->RangeMultiplier(4)->Range(4, 256);

  void BM_pivot(benchmark::State& state) {
    std::mt19937_64 rng(3);
    auto            n   = static_cast<std::size_t>(state.range(0));
    Element         psi = compose(eta(2, 3), random_unit(rng, 3, n));
    Element         phi = compose(random_unit(rng, 3, n), eta(2, 3));
    for (auto _ : state) {
      benchmark::DoNotOptimize(pivot_search(psi, phi));
    }
  }
  BENCHMARK(BM_pivot)->RangeMultiplier(4)->Range(4, 64);

  void BM_image_size(benchmark::State& state) {
    auto    vars = static_cast<std::size_t>(state.range(0));
    Formula b    = Formula::parse("(x1 | x2) & !x3");
    for (std::size_t i = 4; i <= vars; ++i) {
      b = Formula::disj(b, Formula::conj(Formula::var(i), Formula::var(i - 1)));
    }
    Circuit c = c_gadget(b, vars / 2, vars - vars / 2);
    for (auto _ : state) {
      benchmark::DoNotOptimize(image_size(c));
    }
    state.SetComplexityN(static_cast<long>(1) << vars);
  }
  BENCHMARK(BM_image_size)->DenseRange(8, 18, 2)->Complexity(benchmark::oN);

  void BM_id_power(benchmark::State& state) {
    auto l = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(id_power_factorized(l, 3));
    }
  }
  BENCHMARK(BM_id_power)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
