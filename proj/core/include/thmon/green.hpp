#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "thmon/morphisms.hpp"

namespace thmon {

  enum class Relation { J_le, J_eq, D_eq, R_le, R_eq, L_le, L_eq, H_eq };

  std::string to_string(Relation r);

  // psi = beta o phi o alpha
  struct Multipliers {
    Element alpha;
    Element beta;
  };

  // Multipliers backing a verdict.  Which fields are set depends on the
  // relation:
  //   J_le          beta, alpha with psi = beta phi alpha
  //   R_le / R_eq   right (psi = phi right), right_back (phi = psi right_back)
  //   L_eq          left (psi = left phi), left_back (phi = left_back psi)
  //   H_eq          all four of the above
  //   D_eq          pivot chi, with left/left_back for psi ~L chi and
  //                 right/right_back for chi ~R phi
  struct Witness {
    std::optional<Element> alpha;
    std::optional<Element> beta;
    std::optional<Element> right;
    std::optional<Element> right_back;
    std::optional<Element> left;
    std::optional<Element> left_back;
    std::optional<Element> pivot;
  };

  struct GreenVerdict {
    Relation               relation;
    bool                   holds = false;
    std::optional<Witness> witness;
  };

  GreenVerdict leq_J(Element const& psi, Element const& phi);
  GreenVerdict equiv_J(Element const& psi, Element const& phi);
  GreenVerdict equiv_D(Element const& psi, Element const& phi);
  GreenVerdict leq_R_fast(Element const& psi, Element const& phi);
  GreenVerdict equiv_R(Element const& psi, Element const& phi);
  GreenVerdict equiv_L(Element const& psi, Element const& phi);
  GreenVerdict equiv_H(Element const& psi, Element const& phi);

  // 0 for the zero element, otherwise ((|imC| - 1) mod (k - 1)) + 1.
  std::size_t dclass_index(Element const& e);

  // alpha with psi = phi o alpha, built from the image codes; nullopt when
  // the image of psi is not essentially contained in that of phi.
  std::optional<Element> right_multiplier(Element const& psi,
                                          Element const& phi);
  // beta with psi = beta o phi for elements with essentially equal domains;
  // nullopt when the kernel of phi is not contained in that of psi.
  std::optional<Element> left_multiplier(Element const& psi,
                                         Element const& phi);

  // psi = beta o phi o alpha; phi must be nonzero unless psi is zero.
  Multipliers multiplier_search(Element const& psi, Element const& phi);

  // Table whose image words are pairwise equal or incomparable, obtained by
  // splitting entries; represents the same element.
  Table antichain_normalize(Table const& t);

  struct PivotResult {
    Table   psi_split;
    Table   phi_split;
    Element alpha;  // bijection between the image codes
    Element chi;    // alpha o psi
    Element left;        // psi = left o chi
    Element left_back;   // chi = left_back o psi
    Element right;       // chi = phi o right
    Element right_back;  // phi = chi o right_back
  };

  // For D-equivalent psi, phi: chi with psi ~L chi ~R phi.
  PivotResult pivot_search(Element const& psi, Element const& phi);

  struct OracleBudget {
    std::size_t max_entries = 3;
    std::size_t max_dom_len = 3;
    std::size_t max_img_len = 3;
  };

  // Bounded exhaustive witness search.  Candidate multipliers are all
  // tables with at most max_entries entries, domain words of tail length at
  // most max_dom_len and image words of tail length at most max_img_len.
  // A negative answer only means that no witness exists in that space.
  class MultiplierOracle {
   public:
    MultiplierOracle(Alphabet const& alpha, OracleBudget const& budget);

    std::vector<Element> const& candidates() const noexcept {
      return cands_;
    }

    // psi = phi o alpha
    std::optional<Element> find_right(Element const& psi, Element const& phi);
    // psi = beta o phi
    std::optional<Element> find_left(Element const& psi, Element const& phi);
    // psi = beta o phi o alpha.  First looks for candidates beta1, alpha1
    // with beta1 phi alpha1 = 1 (then psi = (psi beta1) phi alpha1), then
    // searches products beta (phi alpha) directly.
    std::optional<Multipliers> find_two_sided(Element const& psi,
                                              Element const& phi);

    // Every product phi o alpha over the candidate space.
    std::vector<Element> const& right_orbit(Element const& phi);
    std::vector<Element> const& left_orbit(Element const& phi);

   private:
    std::optional<Multipliers> const& unit_route(Element const& phi);

    Alphabet             alpha_;
    std::vector<Element> cands_;
    std::unordered_map<Element, std::vector<Element>, ElementHash> right_;
    std::unordered_map<Element, std::vector<Element>, ElementHash> left_;
    std::unordered_map<Element, std::optional<Multipliers>, ElementHash>
        unit_;
  };

  // One-shot form of the oracle for relation R_le, L_le or J_le.
  GreenVerdict oracle_leq(Element const&      psi,
                          Element const&      phi,
                          Relation            rel,
                          OracleBudget const& budget);

}  // namespace thmon
