#include "thmon/reductions.hpp"

#include <algorithm>

#include "thmon/error.hpp"

namespace thmon {

  namespace {

    Word bits_word(std::uint64_t bits, std::size_t n) {
      Word w;
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(static_cast<Letter>((bits >> (n - 1 - i)) & 1u));
      }
      return w;
    }

    void check_vars(Formula const& b, std::size_t m) {
      if (b.max_var() > m) {
        throw Error("formula uses x" + std::to_string(b.max_var())
                    + " but only " + std::to_string(m)
                    + " variables are declared");
      }
      if (m > 20) {
        throw CapExceeded("too many variables for a truth table");
      }
    }

    Element restrict_first_letter(unsigned k) {
      return id_code(PrefixCode::trusted({Word{0}, Word{1}}), Alphabet{k, 0});
    }

  }  // namespace

  Element tau_element(std::size_t i, unsigned k) {
    if (i < 1) {
      throw Error("tau_element: position must be >= 1");
    }
    std::vector<Entry> entries;
    for (auto const& w : all_words(k, i + 1)) {
      std::string raw = w.raw();
      std::swap(raw[i - 1], raw[i]);
      entries.push_back(Entry{w, Word::from_raw(raw, false)});
    }
    return canonicalize(Table(Alphabet{k, 0}, std::move(entries)));
  }

  Element tau_transposition(std::size_t j, unsigned k) {
    if (j < 2) {
      throw Error("tau_transposition: need j >= 2");
    }
    Element t = tau_element(1, k);
    for (std::size_t i = 2; i < j; ++i) {
      Element s = tau_element(i, k);
      t         = compose(s, compose(t, s));
    }
    return t;
  }

  Element truth_table_element(Formula const& b, std::size_t m, unsigned k) {
    check_vars(b, m);
    std::vector<Entry> entries;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << m); ++x) {
      entries.push_back(
          Entry{bits_word(x, m), Word{static_cast<Letter>(b.eval_bits(x, m))}});
    }
    return canonicalize(Table(Alphabet{k, 0}, std::move(entries)));
  }

  Element taut_reduction(Formula const& b, std::size_t m, unsigned k) {
    Element only0 = id_code(PrefixCode::trusted({Word{0}}), Alphabet{k, 0});
    return compose(only0, truth_table_element(b, m, k));
  }

  std::pair<Element, Element> nontaut_or_taut_instance(Formula const& b1,
                                                       std::size_t    m1,
                                                       Formula const& b2,
                                                       std::size_t    m2,
                                                       unsigned       k) {
    return {taut_reduction(b1, m1, k), taut_reduction(b2, m2, k)};
  }

  Element phi0_B(Formula const& b, std::size_t m, unsigned k) {
    check_vars(b, m);
    std::vector<Entry> entries;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << m); ++x) {
      Word in = Word{0} + bits_word(x, m);
      Word out{0, static_cast<Letter>(b.eval_bits(x, m))};
      entries.push_back(Entry{in, out + bits_word(x, m)});
    }
    return canonicalize(Table(Alphabet{k, 0}, std::move(entries)));
  }

  Element inv_D_reduction(Formula const& b, std::size_t m, unsigned k) {
    Alphabet alpha{k, 0};
    Element  left  = id_code(PrefixCode::trusted({Word{0, 1}}), alpha);
    Element  right = id_code(PrefixCode::trusted({Word{0}}), alpha);
    return compose(left, compose(phi0_B(b, m, k), right));
  }

  Element id_power(std::size_t l, unsigned k) {
    std::vector<Word> words = all_words(2, l);
    return id_code(PrefixCode::trusted(std::move(words)), Alphabet{k, 0});
  }

  Element id_power_tail_factors(std::size_t l, unsigned k) {
    Element const first = restrict_first_letter(k);
    Element       prod  = identity(Alphabet{k, 0});
    for (std::size_t j = 2; j <= l; ++j) {
      Element t = tau_transposition(j, k);
      prod      = compose(prod, compose(t, compose(first, t)));
    }
    return prod;
  }

  Element id_power_factorized(std::size_t l, unsigned k) {
    if (l < 1) {
      throw Error("id_power_factorized: need l >= 1");
    }
    return compose(restrict_first_letter(k), id_power_tail_factors(l, k));
  }

  Element lift_alphabet(Element const& e, unsigned k, std::size_t l) {
    if (e.alphabet() != Alphabet{2, 0}) {
      throw Error("lift_alphabet: input must use the plain 2-letter alphabet");
    }
    std::size_t longest = 0;
    for (auto const& x : e.entries()) {
      longest = std::max({longest, x.dom.size(), x.img.size()});
    }
    if (l < longest) {
      throw Error("lift_alphabet: l = " + std::to_string(l)
                  + " is shorter than the table's longest word ("
                  + std::to_string(longest) + ")");
    }
    Element wide = canonicalize(Table(Alphabet{k, 0}, e.entries()));
    return compose(wide, id_power(l, k));
  }

}  // namespace thmon
