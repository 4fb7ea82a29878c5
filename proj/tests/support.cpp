#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace thmon::testing {

  namespace {

    bool raw_prefix(Word const& a, Word const& b) {
      if (a.headed() != b.headed() || a.size() > b.size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
          return false;
        }
      }
      return true;
    }

    Word extend(Word w, std::vector<Letter> const& tail) {
      for (Letter a : tail) {
        w.push_back(a);
      }
      return w;
    }

    std::vector<std::vector<Letter>> tails(unsigned k, std::size_t n) {
      std::vector<std::vector<Letter>> out{{}};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Letter>> next;
        for (auto const& t : out) {
          for (unsigned a = 0; a < k; ++a) {
            auto u = t;
            u.push_back(static_cast<Letter>(a));
            next.push_back(std::move(u));
          }
        }
        out = std::move(next);
      }
      return out;
    }

    std::vector<Word> roots(Alphabet const& alpha) {
      if (!alpha.headed()) {
        return {Word()};
      }
      std::vector<Word> r;
      for (unsigned j = 0; j < alpha.b; ++j) {
        r.push_back(Word::with_head(static_cast<Letter>(j)));
      }
      return r;
    }

    std::size_t head_len(Word const& w) {
      return w.headed() ? 1 : 0;
    }

  }  // namespace

  std::vector<Word> level_words(Alphabet const& alpha, std::size_t n) {
    std::vector<Word> out;
    for (auto const& r : roots(alpha)) {
      for (auto const& t : tails(alpha.k, n)) {
        out.push_back(extend(r, t));
      }
    }
    return out;
  }

  std::vector<Word> words_up_to(Alphabet const& alpha, std::size_t n) {
    std::vector<Word> out;
    for (std::size_t i = 0; i <= n; ++i) {
      auto lvl = level_words(alpha, i);
      out.insert(out.end(), lvl.begin(), lvl.end());
    }
    return out;
  }

  std::size_t longest_tail(std::vector<Word> const& words) {
    std::size_t n = 0;
    for (auto const& w : words) {
      n = std::max(n, w.size() - head_len(w));
    }
    return n;
  }

  std::size_t longest_dom(Table const& t) {
    std::size_t n = 0;
    for (auto const& e : t.entries()) {
      n = std::max(n, e.dom.size() - head_len(e.dom));
    }
    return n;
  }

  std::size_t longest_img(Table const& t) {
    std::size_t n = 0;
    for (auto const& e : t.entries()) {
      n = std::max(n, e.img.size() - head_len(e.img));
    }
    return n;
  }

  bool brute_is_prefix_code(std::vector<Word> const& words) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (i != j && raw_prefix(words[i], words[j])) {
          return false;
        }
      }
    }
    return true;
  }

  bool in_ideal(std::vector<Word> const& code, Word const& w) {
    for (auto const& p : code) {
      if (raw_prefix(p, w)) {
        return true;
      }
    }
    return false;
  }

  bool brute_is_maximal(std::vector<Word> const& code, Alphabet const& alpha) {
    if (code.empty()) {
      return false;
    }
    for (auto const& w : level_words(alpha, longest_tail(code))) {
      if (!in_ideal(code, w)) {
        return false;
      }
    }
    return true;
  }

  bool brute_ess_contained(std::vector<Word> const& p,
                           std::vector<Word> const& q,
                           Alphabet const&          alpha) {
    std::size_t n = std::max(longest_tail(p), longest_tail(q)) + 1;
    for (auto const& w : level_words(alpha, n)) {
      if (in_ideal(p, w) && !in_ideal(q, w)) {
        return false;
      }
    }
    return true;
  }

  bool brute_ess_equal(std::vector<Word> const& p,
                       std::vector<Word> const& q,
                       Alphabet const&          alpha) {
    return brute_ess_contained(p, q, alpha) && brute_ess_contained(q, p, alpha);
  }

  bool brute_ess_equal_by_singletons(std::vector<Word> const& p,
                                     std::vector<Word> const& q,
                                     Alphabet const&          alpha) {
    auto meets = [](std::vector<Word> const& code, Word const& u) {
      for (auto const& w : code) {
        if (raw_prefix(w, u) || raw_prefix(u, w)) {
          return true;
        }
      }
      return false;
    };
    std::size_t n = std::max(longest_tail(p), longest_tail(q)) + 1;
    for (std::size_t i = 0; i <= n; ++i) {
      for (auto const& u : level_words(alpha, i)) {
        if (meets(p, u) != meets(q, u)) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<Word> brute_apply(Table const& t, Word const& w) {
    for (auto const& e : t.entries()) {
      if (raw_prefix(e.dom, w)) {
        Word out = e.img;
        for (std::size_t i = e.dom.size(); i < w.size(); ++i) {
          out.push_back(w[i]);
        }
        return out;
      }
    }
    return std::nullopt;
  }

  bool agree_on_level(Table const& a, Table const& b, std::size_t n) {
    for (auto const& w : level_words(a.alphabet(), n)) {
      if (brute_apply(a, w) != brute_apply(b, w)) {
        return false;
      }
    }
    return true;
  }

  std::size_t compare_level(Table const& a, Table const& b) {
    return std::max(longest_dom(a), longest_dom(b));
  }

  bool same_element(Table const& a, Table const& b) {
    return a.alphabet() == b.alphabet()
           && agree_on_level(a, b, compare_level(a, b));
  }

  bool brute_compose_matches(Table const& psi,
                             Table const& phi,
                             Table const& product) {
    std::size_t n = std::max(longest_dom(phi) + longest_dom(psi),
                             longest_dom(product));
    for (auto const& w : level_words(phi.alphabet(), n)) {
      std::optional<Word> expect;
      if (auto v = brute_apply(phi, w)) {
        expect = brute_apply(psi, *v);
      }
      if (expect != brute_apply(product, w)) {
        return false;
      }
    }
    return true;
  }

  bool no_merge_applies(Table const& t) {
    unsigned const    k      = t.alphabet().k;
    std::size_t const lowest = t.alphabet().headed() ? 2 : 1;
    for (auto const& e : t.entries()) {
      if (e.dom.size() < lowest || e.img.size() < lowest) {
        continue;
      }
      Word p = e.dom.prefix(e.dom.size() - 1);
      Word q = e.img.prefix(e.img.size() - 1);
      bool all = true;
      for (unsigned a = 0; a < k && all; ++a) {
        Word want_dom = p, want_img = q;
        want_dom.push_back(static_cast<Letter>(a));
        want_img.push_back(static_cast<Letter>(a));
        bool found = false;
        for (auto const& f : t.entries()) {
          if (f.dom == want_dom && f.img == want_img) {
            found = true;
          }
        }
        all = found;
      }
      if (all) {
        return false;
      }
    }
    return true;
  }

  bool brute_is_injective(Table const& t) {
    std::size_t          bound = longest_dom(t) + longest_img(t) + 1;
    std::map<Word, Word> seen;
    for (auto const& w : words_up_to(t.alphabet(), bound)) {
      auto v = brute_apply(t, w);
      if (!v) {
        continue;
      }
      auto [it, fresh] = seen.emplace(*v, w);
      if (!fresh && it->second != w) {
        return false;
      }
    }
    return true;
  }

  std::vector<Word> random_code(Rng&            rng,
                                Alphabet const& alpha,
                                std::size_t     max_words,
                                std::size_t     max_len,
                                bool            keep_all) {
    std::vector<Word> leaves = roots(alpha);
    std::size_t       splits = std::uniform_int_distribution<std::size_t>(
        0, max_words + 1)(rng);
    for (std::size_t s = 0; s < splits; ++s) {
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (leaves[i].size() - head_len(leaves[i]) < max_len) {
          open.push_back(i);
        }
      }
      if (open.empty()) {
        break;
      }
      std::size_t pick
          = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(
              rng)];
      Word w = leaves[pick];
      leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
      for (unsigned a = 0; a < alpha.k; ++a) {
        Word c = w;
        c.push_back(static_cast<Letter>(a));
        leaves.push_back(std::move(c));
      }
    }
    if (!keep_all) {
      std::shuffle(leaves.begin(), leaves.end(), rng);
      std::size_t keep = std::uniform_int_distribution<std::size_t>(
          0, std::min(max_words, leaves.size()))(rng);
      leaves.resize(keep);
    }
    std::sort(leaves.begin(), leaves.end());
    return leaves;
  }

  Word random_word(Rng& rng, Alphabet const& alpha, std::size_t max_len) {
    std::vector<Word> r   = roots(alpha);
    Word              w   = r[std::uniform_int_distribution<std::size_t>(
        0, r.size() - 1)(rng)];
    std::size_t       len = std::uniform_int_distribution<std::size_t>(
        0, max_len)(rng);
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(static_cast<Letter>(
          std::uniform_int_distribution<unsigned>(0, alpha.k - 1)(rng)));
    }
    return w;
  }

  Element random_element(Rng&            rng,
                         Alphabet const& alpha,
                         std::size_t     max_entries,
                         std::size_t     max_dom_len,
                         std::size_t     max_img_len) {
    std::vector<Entry> entries;
    for (auto const& d : random_code(rng, alpha, max_entries, max_dom_len)) {
      entries.push_back(Entry{d, random_word(rng, alpha, max_img_len)});
    }
    return canonicalize(Table(alpha, std::move(entries)));
  }

  Element random_nonzero(Rng&            rng,
                         Alphabet const& alpha,
                         std::size_t     max_entries,
                         std::size_t     max_dom_len,
                         std::size_t     max_img_len) {
    while (true) {
      Element e
          = random_element(rng, alpha, max_entries, max_dom_len, max_img_len);
      if (!is_zero(e)) {
        return e;
      }
    }
  }

  Element random_injective(Rng&            rng,
                           Alphabet const& alpha,
                           std::size_t     max_entries,
                           std::size_t     max_len) {
    while (true) {
      auto dom = random_code(rng, alpha, max_entries, max_len);
      auto img = random_code(rng, alpha, max_entries, max_len, true);
      if (dom.empty() || img.size() < dom.size()) {
        continue;
      }
      std::shuffle(img.begin(), img.end(), rng);
      std::vector<Entry> entries;
      for (std::size_t i = 0; i < dom.size(); ++i) {
        entries.push_back(Entry{dom[i], img[i]});
      }
      return canonicalize(Table(alpha, std::move(entries)));
    }
  }

  Element random_subgroup_member(Rng&        rng,
                                 unsigned    k,
                                 std::size_t i,
                                 std::size_t splits) {
    auto grow = [&]() {
      std::vector<Word> leaves;
      for (std::size_t j = 0; j < i; ++j) {
        leaves.push_back(Word{static_cast<Letter>(j)});
      }
      for (std::size_t s = 0; s < splits; ++s) {
        std::size_t pick = std::uniform_int_distribution<std::size_t>(
            0, leaves.size() - 1)(rng);
        Word w = leaves[pick];
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
        for (unsigned a = 0; a < k; ++a) {
          Word c = w;
          c.push_back(static_cast<Letter>(a));
          leaves.push_back(std::move(c));
        }
      }
      return leaves;
    };
    auto dom = grow();
    auto img = grow();
    std::shuffle(img.begin(), img.end(), rng);
    std::vector<Entry> entries;
    for (std::size_t j = 0; j < dom.size(); ++j) {
      entries.push_back(Entry{dom[j], img[j]});
    }
    return canonicalize(Table(Alphabet{k, 0}, std::move(entries)));
  }

  std::vector<Element> tiny_family(Alphabet const& alpha,
                                   std::size_t     max_entries,
                                   std::size_t     max_len) {
    std::vector<Word>    words = words_up_to(alpha, max_len);
    std::set<Element>    found;
    std::vector<Word>    chosen;
    std::vector<Entry>   entries;
    auto                 assign = [&](auto&& self, std::size_t pos) -> void {
      if (pos == chosen.size()) {
        Element e = canonicalize(Table(alpha, entries));
        if (e.size() <= max_entries && longest_dom(e) <= max_len
            && longest_img(e) <= max_len) {
          found.insert(e);
        }
        return;
      }
      for (auto const& w : words) {
        entries[pos].img = w;
        self(self, pos + 1);
      }
    };
    auto choose = [&](auto&& self, std::size_t from) -> void {
      entries.clear();
      for (auto const& d : chosen) {
        entries.push_back(Entry{d, Word()});
      }
      assign(assign, 0);
      if (chosen.size() == max_entries) {
        return;
      }
      for (std::size_t i = from; i < words.size(); ++i) {
        bool ok = true;
        for (auto const& d : chosen) {
          if (raw_prefix(d, words[i]) || raw_prefix(words[i], d)) {
            ok = false;
          }
        }
        if (ok) {
          chosen.push_back(words[i]);
          self(self, i + 1);
          chosen.pop_back();
        }
      }
    };
    choose(choose, 0);
    return {found.begin(), found.end()};
  }

  Formula random_formula(Rng& rng, std::size_t vars, std::size_t depth) {
    std::uniform_int_distribution<int> coin(0, 9);
    if (depth == 0 || coin(rng) < 2) {
      if (coin(rng) == 0) {
        return Formula::constant(coin(rng) < 5);
      }
      return Formula::var(
          std::uniform_int_distribution<std::size_t>(1, vars)(rng));
    }
    int op = std::uniform_int_distribution<int>(0, 2)(rng);
    if (op == 0) {
      return Formula::negate(random_formula(rng, vars, depth - 1));
    }
    Formula a = random_formula(rng, vars, depth - 1);
    Formula b = random_formula(rng, vars, depth - 1);
    return op == 1 ? Formula::conj(a, b) : Formula::disj(a, b);
  }

  std::vector<Formula> all_formulas(std::size_t vars, std::size_t depth) {
    std::vector<Formula> level;
    for (std::size_t v = 1; v <= vars; ++v) {
      level.push_back(Formula::var(v));
    }
    level.push_back(Formula::constant(false));
    level.push_back(Formula::constant(true));
    for (std::size_t d = 0; d < depth; ++d) {
      std::vector<Formula> next = level;
      for (auto const& f : level) {
        next.push_back(Formula::negate(f));
      }
      for (auto const& f : level) {
        for (auto const& g : level) {
          next.push_back(Formula::conj(f, g));
          next.push_back(Formula::disj(f, g));
        }
      }
      level = std::move(next);
    }
    return level;
  }

  Formula dnf(std::uint64_t truth_table, std::size_t vars) {
    std::optional<Formula> out;
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << vars); ++a) {
      if (((truth_table >> a) & 1u) == 0) {
        continue;
      }
      std::optional<Formula> term;
      for (std::size_t v = 1; v <= vars; ++v) {
        bool    bit = ((a >> (vars - v)) & 1u) != 0;
        Formula lit = bit ? Formula::var(v) : Formula::negate(Formula::var(v));
        term        = term ? Formula::conj(*term, lit) : lit;
      }
      if (!term) {
        term = Formula::constant(true);
      }
      out = out ? Formula::disj(*out, *term) : *term;
    }
    return out ? *out : Formula::constant(false);
  }

  std::optional<std::vector<bool>> reference_eval(Circuit const&           c,
                                                  std::vector<bool> const& x) {
    // 0, 1, or -1 for bottom
    std::vector<int> val(c.num_wires(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      val[c.inputs()[i]] = x[i] ? 1 : 0;
    }
    for (auto const& g : c.gates()) {
      bool bad = false;
      for (auto w : g.in) {
        bad = bad || val[w] < 0;
      }
      std::vector<int> out;
      if (bad) {
        out.assign(g.out.size(), -1);
      } else {
        int a = val[g.in[0]];
        int b = g.in.size() > 1 ? val[g.in[1]] : 0;
        switch (g.kind) {
          case GateKind::And:
            out = {a * b};
            break;
          case GateKind::Or:
            out = {std::max(a, b)};
            break;
          case GateKind::Not:
            out = {1 - a};
            break;
          case GateKind::Fork:
            out = {a, a};
            break;
          case GateKind::Cross:
            out = {b, a};
            break;
          case GateKind::Id1:
            out = {a == 1 ? 1 : -1};
            break;
        }
      }
      for (std::size_t i = 0; i < g.out.size(); ++i) {
        val[g.out[i]] = out[i];
      }
    }
    std::vector<bool> y;
    for (auto w : c.outputs()) {
      if (val[w] < 0) {
        return std::nullopt;
      }
      y.push_back(val[w] == 1);
    }
    return y;
  }

}  // namespace thmon::testing
