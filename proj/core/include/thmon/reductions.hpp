#pragma once

#include <cstddef>
#include <utility>

#include "thmon/formula.hpp"
#include "thmon/morphisms.hpp"

namespace thmon {

  // Swaps positions i and i+1 (1-based) of every word of length i+1.
  Element     tau_element(std::size_t i, unsigned k);
  inline std::size_t tau_word_length(std::size_t i) {
    return i + 1;
  }

  // Transposition of positions 1 and j written as a product of adjacent
  // swaps: tau(j-1) ... tau(1) ... tau(j-1).
  Element tau_transposition(std::size_t j, unsigned k);

  // The table {x -> B(x) : x in {0,1}^m} over k letters.
  Element truth_table_element(Formula const& b, std::size_t m, unsigned k = 2);

  // id_{0} o {x -> B(x)}: zero exactly when B is a tautology.
  Element taut_reduction(Formula const& b, std::size_t m, unsigned k = 2);

  std::pair<Element, Element> nontaut_or_taut_instance(Formula const& b1,
                                                       std::size_t    m1,
                                                       Formula const& b2,
                                                       std::size_t    m2,
                                                       unsigned       k = 2);

  // {0x -> 0 B(x) x : x in {0,1}^m}
  Element phi0_B(Formula const& b, std::size_t m, unsigned k = 2);

  // id_{01} o phi0_B o id_{0}: injective with |imC| = #sat(B).
  Element inv_D_reduction(Formula const& b, std::size_t m, unsigned k = 2);

  // id on {a_1, a_2}^l, built directly.
  Element id_power(std::size_t l, unsigned k);
  // The same element as a product of conjugated first-letter restrictions.
  Element id_power_factorized(std::size_t l, unsigned k);
  // Product over positions 2..l only (no restriction of the first letter).
  Element id_power_tail_factors(std::size_t l, unsigned k);

  // Reads a 2-letter element over k letters and restricts it to inputs in
  // {a_1, a_2}^l; l must be at least the longest word in the table.
  Element lift_alphabet(Element const& e, unsigned k, std::size_t l);

}  // namespace thmon
