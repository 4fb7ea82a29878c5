#pragma once

#include <cstddef>
#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thmon/formula.hpp"
#include "thmon/word.hpp"

namespace thmon {

  // Finite binary relation on plain words over k letters.
  class FinRel {
   public:
    explicit FinRel(unsigned k = 2) : k_(k) {}

    unsigned k() const noexcept {
      return k_;
    }
    std::set<std::pair<Word, Word>> const& pairs() const noexcept {
      return pairs_;
    }
    void insert(Word x, Word y);
    std::size_t size() const noexcept {
      return pairs_.size();
    }

    // Distinct first components, sorted.
    std::vector<Word> firsts() const;

    friend bool operator==(FinRel const&, FinRel const&) = default;

   private:
    unsigned                        k_;
    std::set<std::pair<Word, Word>> pairs_;
  };

  // File format: header "finrel v1 k=<k>", then one "x y" pair per line.
  FinRel      read_finrel(std::istream& in);
  std::string write_finrel(FinRel const& r);

  // Membership in a modular counting class: x is in the class when
  // |(x)R| mod h lies in yes, out of it when it lies in no.
  struct ModSpec {
    std::size_t           h;
    std::set<std::size_t> yes;
    std::set<std::size_t> no;

    void validate() const;
  };

  enum class Membership { Yes, No, Neither };
  std::string to_string(Membership m);

  std::size_t slice_count(FinRel const& r, Word const& x);
  Membership  in_class(FinRel const& r, Word const& x, ModSpec const& spec);

  // A word longer than every first component; a stand-in for the inputs on
  // which the relation is empty.
  Word fresh_probe(FinRel const& r);
  // firsts() plus fresh_probe().
  std::vector<Word> probe_set(FinRel const& r);

  // (x, y) -> (x, x y a_1), plus the diagonal on probe_set(r).  Every probe
  // x gets exactly one more related word.
  FinRel add_one(FinRel const& r);

  // (x, y) -> (x, u_s y) for the tags u_s = a_2^(s-1) a_1, s = 1..m.
  FinRel times_m(FinRel const& r, std::size_t m);

  // Tags the second components of r1 with u_1 and those of r2 with u_2;
  // slice counts add up.
  std::pair<FinRel, FinRel> disjointify(FinRel const& r1, FinRel const& r2);

  // Direct: {(x, x) : x in L}.  Complement: one related word for every
  // x in L, in the universe, or equal to the fresh probe word; h of them
  // when x is in L.
  FinRel np_embed(std::vector<Word> const& language,
                  std::size_t              h,
                  bool                     complement,
                  std::vector<Word> const& universe = {},
                  unsigned                 k        = 2);

  // Adds one (h - j) times, then multiplies by the inverse of (i - j)
  // modulo h: counts congruent to i become 1 and counts congruent to j
  // become 0.  Needs gcd(i - j, h) = 1.
  FinRel normalize_to_10(FinRel const& r,
                         std::size_t   h,
                         std::size_t   i,
                         std::size_t   j);

  // Number of y in {0,1}^n such that B(x, y) holds for some x in {0,1}^m.
  // B's variables are x_1..x_m followed by y as x_{m+1}..x_{m+n}.
  std::size_t exists_count(Formula const& b, std::size_t m, std::size_t n);

  // exists_count = i mod h
  bool oplus_exists_sat(Formula const& b,
                        std::size_t    m_exist,
                        std::size_t    n_free,
                        std::size_t    h,
                        std::size_t    i);

  // exists_count = 1 mod h and 2^n - exists_count = 0 mod h.
  bool oplus_10_exists_sat(Formula const& b,
                           std::size_t    m_exist,
                           std::size_t    n_free,
                           std::size_t    h);

}  // namespace thmon
