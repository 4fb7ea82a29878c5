#pragma once

#include <cstddef>

#include "thmon/green.hpp"
#include "thmon/morphisms.hpp"

namespace thmon {

  // Partial identity {a_1 -> a_1, ..., a_i -> a_i}, 1 <= i <= k - 1.
  Element eta(std::size_t i, unsigned k);

  // Membership in the maximal subgroup around eta(i, k): injective, with
  // domain and image codes essential in {a_1, ..., a_i}.
  bool in_max_subgroup(Element const& e, std::size_t i);

  // Rewrites the leading letter a_j of every word as the head letter b_j,
  // giving an element over i head letters.
  Element subgroup_to_higman(Element const& e, std::size_t i);

  // For an element over n >= k head letters: b_j stays b_j for j <= n - k,
  // and b_{n-k+j} becomes b_{n-k+1} a_j.  The result uses n - k + 1 heads.
  Element embed_E(Element const& e);

  // Idempotent of D-class j in the monoid with s head letters.
  Element bmode_idempotent(std::size_t j, unsigned k, std::size_t s);

  // beta o e o alpha = identity for a nonzero e.  Over s head letters the
  // chosen entry (b_m x0 -> b_n y0) is extended by the prefix code
  // p_i = a_2^(i-1) a_1 (i < s), p_s = a_2^(s-1).
  Multipliers jsimple_witness(Element const& e);

}  // namespace thmon
