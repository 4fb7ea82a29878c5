#pragma once

// Brute-force oracles and random generators shared by the unit tests and
// the acceptance suite.  The oracles work on words and functions directly
// and do not call the library routines they are used to check.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "thmon/circuits.hpp"
#include "thmon/formula.hpp"
#include "thmon/morphisms.hpp"

namespace thmon::testing {

  using Rng = std::mt19937_64;

  inline Alphabet plain(unsigned k) {
    return Alphabet{k, 0};
  }
  inline Element el(std::string_view text, Alphabet const& alpha = plain(2)) {
    return canonicalize(parse_table(text, alpha));
  }
  inline Word wd(std::string_view text, Alphabet const& alpha = plain(2)) {
    return parse_word(text, alpha);
  }
  inline std::vector<Word> wds(std::initializer_list<std::string_view> texts,
                               Alphabet const& alpha = plain(2)) {
    std::vector<Word> out;
    for (auto t : texts) {
      out.push_back(parse_word(t, alpha));
    }
    return out;
  }
  inline PrefixCode code(std::initializer_list<std::string_view> texts,
                         Alphabet const& alpha = plain(2)) {
    return PrefixCode(wds(texts, alpha));
  }

  // Words over the alphabet with tail length exactly n (all heads when the
  // alphabet is headed).
  std::vector<Word> level_words(Alphabet const& alpha, std::size_t n);
  // Tail length at most n.
  std::vector<Word> words_up_to(Alphabet const& alpha, std::size_t n);

  std::size_t longest_tail(std::vector<Word> const& words);
  std::size_t longest_dom(Table const& t);
  std::size_t longest_img(Table const& t);

  bool brute_is_prefix_code(std::vector<Word> const& words);
  // Some word of the code is a prefix of w.
  bool in_ideal(std::vector<Word> const& code, Word const& w);
  // Every word of tail length = longest has a prefix in the code.
  bool brute_is_maximal(std::vector<Word> const& code, Alphabet const& alpha);
  // Compared on every word of tail length longest + 1.
  bool brute_ess_contained(std::vector<Word> const& p,
                           std::vector<Word> const& q,
                           Alphabet const&          alpha);
  bool brute_ess_equal(std::vector<Word> const& p,
                       std::vector<Word> const& q,
                       Alphabet const&          alpha);
  // Singleton ideals u A^* with |u| <= longest + 1 meet both or neither.
  bool brute_ess_equal_by_singletons(std::vector<Word> const& p,
                                     std::vector<Word> const& q,
                                     Alphabet const&          alpha);

  // Partial function of a table evaluated by scanning entries.
  std::optional<Word> brute_apply(Table const& t, Word const& w);
  // Same partial function on every word of tail length n.
  bool agree_on_level(Table const& a, Table const& b, std::size_t n);
  // Level at which two tables can be compared as elements.
  std::size_t compare_level(Table const& a, Table const& b);
  bool        same_element(Table const& a, Table const& b);
  // psi(phi(w)) for all w at a level where this decides the product.
  bool brute_compose_matches(Table const& psi,
                             Table const& phi,
                             Table const& product);
  // No complete sibling group p a_i -> q a_i remains.
  bool no_merge_applies(Table const& t);
  // No two inputs of tail length <= bound collide.
  bool brute_is_injective(Table const& t);

  // Random prefix code grown by splitting leaves, then thinned.
  std::vector<Word> random_code(Rng&            rng,
                                Alphabet const& alpha,
                                std::size_t     max_words,
                                std::size_t     max_len,
                                bool            keep_all = false);
  Word    random_word(Rng& rng, Alphabet const& alpha, std::size_t max_len);
  Element random_element(Rng&            rng,
                         Alphabet const& alpha,
                         std::size_t     max_entries,
                         std::size_t     max_dom_len,
                         std::size_t     max_img_len);
  Element random_nonzero(Rng&            rng,
                         Alphabet const& alpha,
                         std::size_t     max_entries,
                         std::size_t     max_dom_len,
                         std::size_t     max_img_len);
  // Injective element: images drawn from another random prefix code.
  Element random_injective(Rng&            rng,
                           Alphabet const& alpha,
                           std::size_t     max_entries,
                           std::size_t     max_len);
  // Bijection between two maximal codes inside {a_1..a_i} A^*.
  Element random_subgroup_member(Rng&        rng,
                                 unsigned    k,
                                 std::size_t i,
                                 std::size_t splits);

  // Every canonical element whose table has at most max_entries entries and
  // words of tail length at most max_len.
  std::vector<Element> tiny_family(Alphabet const& alpha,
                                   std::size_t     max_entries,
                                   std::size_t     max_len);

  // Random formula over variables x1..x_vars of depth at most depth.
  Formula random_formula(Rng& rng, std::size_t vars, std::size_t depth);
  // All formulas of depth at most depth over x1..x_vars and the constants.
  std::vector<Formula> all_formulas(std::size_t vars, std::size_t depth);
  // Disjunctive normal form of the function whose truth table is bits.
  Formula dnf(std::uint64_t truth_table, std::size_t vars);

  // Direct gate-by-gate reference evaluation of a circuit.
  std::optional<std::vector<bool>> reference_eval(Circuit const&           c,
                                                  std::vector<bool> const& x);

}  // namespace thmon::testing
