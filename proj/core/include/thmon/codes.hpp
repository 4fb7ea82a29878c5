#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thmon/word.hpp"

namespace thmon {

  using Rational = boost::multiprecision::cpp_rational;

  // Finite prefix code, kept sorted (length, then lex) and free of
  // duplicates.
  class PrefixCode {
   public:
    PrefixCode() = default;
    // Throws Error if two words are prefix-comparable.
    explicit PrefixCode(std::vector<Word> words);

    // For words already known to be sorted and pairwise incomparable.
    static PrefixCode trusted(std::vector<Word> sorted) {
      PrefixCode p;
      p.words_ = std::move(sorted);
      return p;
    }

    std::vector<Word> const& words() const noexcept {
      return words_;
    }
    std::size_t size() const noexcept {
      return words_.size();
    }
    bool empty() const noexcept {
      return words_.empty();
    }
    auto begin() const noexcept {
      return words_.begin();
    }
    auto end() const noexcept {
      return words_.end();
    }
    bool contains(Word const& w) const;

    friend bool operator==(PrefixCode const&, PrefixCode const&) = default;

   private:
    std::vector<Word> words_;
  };

  std::string to_string(PrefixCode const& p);

  bool is_prefix_code(std::vector<Word> const& words);

  // Minimal elements under the prefix order; generates the same right ideal.
  PrefixCode minimal_words(std::vector<Word> words);

  // Sum of k^-|w| over the tails of the words, exact.
  Rational kraft_sum(PrefixCode const& p, unsigned k);

  bool is_maximal_prefix_code(PrefixCode const& p, Alphabet const& alpha);

  // Merges complete sibling sets into their parent until none is left.
  PrefixCode ideal_canonical(PrefixCode const& p, Alphabet const& alpha);

  bool ess_equal_ideals(PrefixCode const& p,
                        PrefixCode const& q,
                        Alphabet const&   alpha);

  // P A^* is essentially contained in Q A^*: every right ideal that meets
  // P A^* also meets Q A^*.
  bool ess_contained(PrefixCode const& p,
                     PrefixCode const& q,
                     Alphabet const&   alpha);

  // P A^* is a subset of Q A^* and essential in it.
  bool is_essential_in(PrefixCode const& p,
                       PrefixCode const& q,
                       Alphabet const&   alpha);

  // The common refinement {longer of u, v : u in P, v in Q comparable}.
  PrefixCode meet(PrefixCode const& p, PrefixCode const& q);

}  // namespace thmon
