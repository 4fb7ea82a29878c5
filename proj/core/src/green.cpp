#include "thmon/green.hpp"

#include <algorithm>
#include <unordered_set>

#include "thmon/error.hpp"
#include "thmon/structure.hpp"

namespace thmon {

  namespace {

    [[noreturn]] void internal(std::string const& what) {
      throw Error("internal check failed: " + what);
    }

    std::size_t image_count(Table const& t) {
      return image_words(t).size();
    }

    // Splits every entry whose image is the longest image word.
    Table split_top(Table const& t) {
      std::vector<Word> imgs = image_words(t);
      Word const        top  = imgs.back();
      std::vector<Entry> out;
      for (auto const& e : t.entries()) {
        if (e.img != top) {
          out.push_back(e);
          continue;
        }
        for (unsigned a = 0; a < t.alphabet().k; ++a) {
          Word s{static_cast<Letter>(a)};
          out.push_back(Entry{e.dom + s, e.img + s});
        }
      }
      std::sort(out.begin(), out.end(), [](Entry const& x, Entry const& y) {
        return x.dom < y.dom;
      });
      return Table(t.alphabet(), std::move(out));
    }

    // Distinct images in order of first appearance along the sorted domain.
    std::vector<Word> images_in_domain_order(Table const& t) {
      std::vector<Entry> entries = t.entries();
      std::sort(entries.begin(),
                entries.end(),
                [](Entry const& x, Entry const& y) { return x.dom < y.dom; });
      std::vector<Word>                       out;
      std::unordered_set<Word, WordHash> seen;
      for (auto const& e : entries) {
        if (seen.insert(e.img).second) {
          out.push_back(e.img);
        }
      }
      return out;
    }

    // Longest entry of a table whose domain word is a prefix of w.
    std::optional<Word> image_at(Table const& t, Word const& w) {
      return apply(t, w);
    }

  }  // namespace

  std::string to_string(Relation r) {
    switch (r) {
      case Relation::J_le:
        return "J<=";
      case Relation::J_eq:
        return "J";
      case Relation::D_eq:
        return "D";
      case Relation::R_le:
        return "R<=";
      case Relation::R_eq:
        return "R";
      case Relation::L_le:
        return "L<=";
      case Relation::L_eq:
        return "L";
      case Relation::H_eq:
        return "H";
    }
    return "?";
  }

  std::size_t dclass_index(Element const& e) {
    if (is_zero(e)) {
      return 0;
    }
    std::size_t const k = e.alphabet().k;
    return (imC(e).size() - 1) % (k - 1) + 1;
  }

  std::optional<Element> right_multiplier(Element const& psi,
                                          Element const& phi) {
    Alphabet const& alpha = phi.alphabet();
    if (is_zero(psi)) {
      return zero(alpha);
    }
    if (is_zero(phi)) {
      return std::nullopt;
    }
    PrefixCode const anti = imC(phi);
    std::unordered_map<std::string, Word> preimage;
    for (auto const& e : phi.entries()) {
      if (anti.contains(e.img)) {
        preimage.emplace(e.img.raw(), e.dom);
      }
    }
    std::vector<std::string> lex;
    for (auto const& w : anti) {
      lex.push_back(w.raw());
    }
    std::sort(lex.begin(), lex.end());

    std::vector<Entry> out;
    for (auto const& e : psi.entries()) {
      Word const& v     = e.img;
      bool        found = false;
      for (std::size_t n = v.headed() ? 1 : 0; n <= v.size(); ++n) {
        auto it = preimage.find(v.raw().substr(0, n));
        if (it != preimage.end()) {
          out.push_back(Entry{e.dom, it->second + v.suffix(n)});
          found = true;
          break;
        }
      }
      if (found) {
        continue;
      }
      std::vector<Word> residual;
      std::vector<Entry> pending;
      for (auto it = std::lower_bound(lex.begin(), lex.end(), v.raw());
           it != lex.end() && it->compare(0, v.size(), v.raw()) == 0;
           ++it) {
        Word z = Word::from_raw(it->substr(v.size()), false);
        pending.push_back(Entry{e.dom + z, preimage.at(*it)});
        residual.push_back(std::move(z));
      }
      std::sort(residual.begin(), residual.end());
      if (residual.empty()
          || kraft_sum(PrefixCode::trusted(std::move(residual)), alpha.k)
                 != 1) {
        return std::nullopt;
      }
      out.insert(out.end(), pending.begin(), pending.end());
    }
    Element a = canonicalize(Table(alpha, std::move(out)));
    if (compose(phi, a) != psi) {
      internal("right multiplier " + to_string(a));
    }
    return a;
  }

  std::optional<Element> left_multiplier(Element const& psi,
                                         Element const& phi) {
    Alphabet const& alpha = phi.alphabet();
    if (is_zero(psi)) {
      return zero(alpha);
    }
    if (is_zero(phi)) {
      return std::nullopt;
    }
    if (!ess_equal_ideals(domC(psi), domC(phi), alpha)) {
      return std::nullopt;
    }
    PrefixCode const  common = meet(domC(psi), domC(phi));
    std::vector<Word> psi_img, phi_img;
    for (auto const& d : common) {
      psi_img.push_back(*image_at(psi, d));
      phi_img.push_back(*image_at(phi, d));
    }
    // Kernel containment: phi(d2) = phi(d1) r forces psi(d2) = psi(d1) r.
    std::unordered_map<std::string, std::size_t> rep;
    for (std::size_t i = 0; i < common.size(); ++i) {
      rep.emplace(phi_img[i].raw(), i);
    }
    for (std::size_t i = 0; i < common.size(); ++i) {
      Word const& w = phi_img[i];
      for (std::size_t n = w.headed() ? 1 : 0; n <= w.size(); ++n) {
        auto it = rep.find(w.raw().substr(0, n));
        if (it == rep.end()) {
          continue;
        }
        if (psi_img[i] != psi_img[it->second] + w.suffix(n)) {
          return std::nullopt;
        }
      }
    }
    std::vector<Entry> out;
    for (auto const& a : minimal_words(phi_img)) {
      out.push_back(Entry{a, psi_img[rep.at(a.raw())]});
    }
    Element b = canonicalize(Table(alpha, std::move(out)));
    if (compose(b, phi) != psi) {
      internal("left multiplier " + to_string(b));
    }
    return b;
  }

  GreenVerdict leq_J(Element const& psi, Element const& phi) {
    GreenVerdict v{Relation::J_le, is_zero(psi) || !is_zero(phi), {}};
    if (v.holds) {
      Multipliers m = multiplier_search(psi, phi);
      v.witness     = Witness{};
      v.witness->alpha = m.alpha;
      v.witness->beta  = m.beta;
    }
    return v;
  }

  GreenVerdict equiv_J(Element const& psi, Element const& phi) {
    GreenVerdict v{Relation::J_eq, is_zero(psi) == is_zero(phi), {}};
    if (v.holds) {
      Multipliers a = multiplier_search(psi, phi);
      Multipliers b = multiplier_search(phi, psi);
      v.witness     = Witness{};
      v.witness->alpha      = a.alpha;
      v.witness->beta       = a.beta;
      v.witness->right_back = b.alpha;
      v.witness->left_back  = b.beta;
    }
    return v;
  }

  GreenVerdict equiv_D(Element const& psi, Element const& phi) {
    GreenVerdict v{Relation::D_eq, dclass_index(psi) == dclass_index(phi), {}};
    if (psi.alphabet() != phi.alphabet()) {
      throw Error("equiv_D: alphabets differ");
    }
    if (v.holds) {
      PivotResult p = pivot_search(psi, phi);
      v.witness     = Witness{};
      v.witness->pivot      = p.chi;
      v.witness->left       = p.left;
      v.witness->left_back  = p.left_back;
      v.witness->right      = p.right;
      v.witness->right_back = p.right_back;
    }
    return v;
  }

  GreenVerdict leq_R_fast(Element const& psi, Element const& phi) {
    GreenVerdict v{Relation::R_le, false, {}};
    if (is_zero(psi)) {
      v.holds = true;
    } else if (!is_zero(phi)) {
      v.holds = ess_contained(imC(psi), imC(phi), phi.alphabet());
    }
    if (v.holds) {
      auto a = right_multiplier(psi, phi);
      if (!a) {
        internal("leq_R fast path without multiplier");
      }
      v.witness        = Witness{};
      v.witness->right = *a;
    }
    return v;
  }

  GreenVerdict equiv_R(Element const& psi, Element const& phi) {
    GreenVerdict v{Relation::R_eq, false, {}};
    if (is_zero(psi) || is_zero(phi)) {
      v.holds = is_zero(psi) && is_zero(phi);
    } else {
      v.holds = ess_equal_ideals(imC(psi), imC(phi), phi.alphabet());
    }
    if (v.holds) {
      auto a = right_multiplier(psi, phi);
      auto b = right_multiplier(phi, psi);
      if (!a || !b) {
        internal("equiv_R without multipliers");
      }
      v.witness             = Witness{};
      v.witness->right      = *a;
      v.witness->right_back = *b;
    }
    return v;
  }

  GreenVerdict equiv_L(Element const& psi, Element const& phi) {
    GreenVerdict v{Relation::L_eq, false, {}};
    std::optional<Element> a, b;
    if (is_zero(psi) || is_zero(phi)) {
      v.holds = is_zero(psi) && is_zero(phi);
      a = b = zero(phi.alphabet());
    } else {
      a       = left_multiplier(psi, phi);
      b       = a ? left_multiplier(phi, psi) : std::nullopt;
      v.holds = a && b;
    }
    if (v.holds) {
      v.witness            = Witness{};
      v.witness->left      = *a;
      v.witness->left_back = *b;
    }
    return v;
  }

  GreenVerdict equiv_H(Element const& psi, Element const& phi) {
    GreenVerdict r = equiv_R(psi, phi);
    GreenVerdict l = equiv_L(psi, phi);
    GreenVerdict v{Relation::H_eq, r.holds && l.holds, {}};
    if (v.holds) {
      v.witness             = Witness{};
      v.witness->right      = r.witness->right;
      v.witness->right_back = r.witness->right_back;
      v.witness->left       = l.witness->left;
      v.witness->left_back  = l.witness->left_back;
    }
    return v;
  }

  Multipliers multiplier_search(Element const& psi, Element const& phi) {
    Alphabet const& alpha = phi.alphabet();
    if (psi.alphabet() != alpha) {
      throw Error("multiplier_search: alphabets differ");
    }
    if (is_zero(psi)) {
      return Multipliers{zero(alpha), zero(alpha)};
    }
    if (is_zero(phi)) {
      throw Error("multiplier_search: nonzero element below zero");
    }
    Multipliers unit;
    if (alpha.headed()) {
      unit = jsimple_witness(phi);
    } else {
      Word const y0 = imC(phi).words().front();
      Word       x0;
      for (auto const& e : phi.entries()) {
        if (e.img == y0) {
          x0 = e.dom;
          break;
        }
      }
      unit.alpha = canonicalize(Table(alpha, {Entry{Word(), x0}}));
      unit.beta  = canonicalize(Table(alpha, {Entry{y0, Word()}}));
    }
    Multipliers m{unit.alpha, compose(psi, unit.beta)};
    if (compose(m.beta, compose(phi, m.alpha)) != psi) {
      internal("multiplier_search");
    }
    return m;
  }

  Table antichain_normalize(Table const& t) {
    Table cur = t;
    while (true) {
      std::unordered_set<std::string> below;  // images with a longer image
      for (auto const& e : cur.entries()) {
        Word const& w = e.img;
        for (std::size_t n = w.headed() ? 1 : 0; n < w.size(); ++n) {
          below.insert(w.raw().substr(0, n));
        }
      }
      std::vector<Entry> out;
      bool               changed = false;
      for (auto const& e : cur.entries()) {
        if (below.count(e.img.raw()) == 0) {
          out.push_back(e);
          continue;
        }
        changed = true;
        for (unsigned a = 0; a < cur.alphabet().k; ++a) {
          Word s{static_cast<Letter>(a)};
          out.push_back(Entry{e.dom + s, e.img + s});
        }
      }
      if (!changed) {
        break;
      }
      std::sort(out.begin(), out.end(), [](Entry const& x, Entry const& y) {
        return x.dom < y.dom;
      });
      cur = Table(cur.alphabet(), std::move(out));
    }
    return cur;
  }

  PivotResult pivot_search(Element const& psi, Element const& phi) {
    Alphabet const& alpha = phi.alphabet();
    if (psi.alphabet() != alpha) {
      throw Error("pivot_search: alphabets differ");
    }
    if (dclass_index(psi) != dclass_index(phi)) {
      throw Error("pivot_search: elements are not D-equivalent");
    }
    PivotResult r;
    r.psi_split = antichain_normalize(psi);
    r.phi_split = antichain_normalize(phi);
    if (is_zero(psi)) {
      r.alpha = r.chi = r.left = r.left_back = r.right = r.right_back
          = zero(alpha);
      return r;
    }
    while (image_count(r.psi_split) < image_count(r.phi_split)) {
      r.psi_split = split_top(r.psi_split);
    }
    while (image_count(r.phi_split) < image_count(r.psi_split)) {
      r.phi_split = split_top(r.phi_split);
    }
    std::vector<Word> from = images_in_domain_order(r.psi_split);
    std::vector<Word> to   = images_in_domain_order(r.phi_split);
    std::vector<Entry> bij;
    for (std::size_t i = 0; i < from.size(); ++i) {
      bij.push_back(Entry{from[i], to[i]});
    }
    r.alpha = canonicalize(Table(alpha, std::move(bij)));
    r.chi   = compose(r.alpha, r.psi_split);
    auto l  = left_multiplier(psi, r.chi);
    auto lb = left_multiplier(r.chi, psi);
    auto rt = right_multiplier(r.chi, phi);
    auto rb = right_multiplier(phi, r.chi);
    if (!l || !lb || !rt || !rb) {
      internal("pivot " + to_string(r.chi));
    }
    r.left       = *l;
    r.left_back  = *lb;
    r.right      = *rt;
    r.right_back = *rb;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // MultiplierOracle
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<Word> words_up_to(Alphabet const& alpha, std::size_t len) {
      std::vector<Word> out;
      for (std::size_t n = 0; n <= len; ++n) {
        for (auto const& w : all_words(alpha.k, n)) {
          if (alpha.headed()) {
            for (unsigned j = 0; j < alpha.b; ++j) {
              out.push_back(Word::with_head(static_cast<Letter>(j)) + w);
            }
          } else {
            out.push_back(w);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace

  MultiplierOracle::MultiplierOracle(Alphabet const&     alpha,
                                     OracleBudget const& budget)
      : alpha_(alpha) {
    std::vector<Word> doms = words_up_to(alpha, budget.max_dom_len);
    std::vector<Word> imgs = words_up_to(alpha, budget.max_img_len);
    std::unordered_set<Element, ElementHash> seen;

    std::vector<std::size_t> chosen;
    std::vector<Entry>       entries;
    // Assigns images to the chosen domain words in every possible way.
    auto emit = [&](auto&& self, std::size_t pos) -> void {
      if (pos == chosen.size()) {
        Element e = canonicalize(Table(alpha, entries));
        if (seen.insert(e).second) {
          cands_.push_back(std::move(e));
        }
        return;
      }
      for (auto const& w : imgs) {
        entries[pos].img = w;
        self(self, pos + 1);
      }
    };
    auto choose = [&](auto&& self, std::size_t from) -> void {
      entries.clear();
      for (auto i : chosen) {
        entries.push_back(Entry{doms[i], Word()});
      }
      emit(emit, 0);
      if (chosen.size() == budget.max_entries) {
        return;
      }
      for (std::size_t i = from; i < doms.size(); ++i) {
        bool ok = true;
        for (auto j : chosen) {
          if (doms[i].comparable(doms[j])) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chosen.push_back(i);
          self(self, i + 1);
          chosen.pop_back();
        }
      }
    };
    choose(choose, 0);
    std::sort(cands_.begin(), cands_.end());
  }

  std::vector<Element> const& MultiplierOracle::right_orbit(
      Element const& phi) {
    auto it = right_.find(phi);
    if (it == right_.end()) {
      std::vector<Element> orbit;
      orbit.reserve(cands_.size());
      for (auto const& a : cands_) {
        orbit.push_back(compose(phi, a));
      }
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      it = right_.emplace(phi, std::move(orbit)).first;
    }
    return it->second;
  }

  std::vector<Element> const& MultiplierOracle::left_orbit(
      Element const& phi) {
    auto it = left_.find(phi);
    if (it == left_.end()) {
      std::vector<Element> orbit;
      orbit.reserve(cands_.size());
      for (auto const& b : cands_) {
        orbit.push_back(compose(b, phi));
      }
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      it = left_.emplace(phi, std::move(orbit)).first;
    }
    return it->second;
  }

  std::optional<Element> MultiplierOracle::find_right(Element const& psi,
                                                      Element const& phi) {
    for (auto const& a : cands_) {
      if (compose(phi, a) == psi) {
        return a;
      }
    }
    return std::nullopt;
  }

  std::optional<Element> MultiplierOracle::find_left(Element const& psi,
                                                     Element const& phi) {
    for (auto const& b : cands_) {
      if (compose(b, phi) == psi) {
        return b;
      }
    }
    return std::nullopt;
  }

  std::optional<Multipliers> const& MultiplierOracle::unit_route(
      Element const& phi) {
    auto it = unit_.find(phi);
    if (it != unit_.end()) {
      return it->second;
    }
    Element const                            one = identity(alpha_);
    std::optional<Multipliers>               found;
    std::unordered_set<Element, ElementHash> tried;
    for (auto const& a : cands_) {
      Element t = compose(phi, a);
      // b t = 1 forces t to be injective with a maximal domain.
      if (is_zero(t) || !tried.insert(t).second || !is_injective(t)
          || !is_maximal_prefix_code(domC(t), alpha_)) {
        continue;
      }
      for (auto const& b : cands_) {
        if (compose(b, t) == one) {
          found = Multipliers{a, b};
          break;
        }
      }
      if (found) {
        break;
      }
    }
    return unit_.emplace(phi, std::move(found)).first->second;
  }

  std::optional<Multipliers> MultiplierOracle::find_two_sided(
      Element const& psi,
      Element const& phi) {
    if (auto const& u = unit_route(phi)) {
      return Multipliers{u->alpha, compose(psi, u->beta)};
    }
    for (auto const& t : right_orbit(phi)) {
      auto const& reach = left_orbit(t);
      if (std::binary_search(reach.begin(), reach.end(), psi)) {
        return Multipliers{*find_right(t, phi), *find_left(psi, t)};
      }
    }
    return std::nullopt;
  }

  GreenVerdict oracle_leq(Element const&      psi,
                          Element const&      phi,
                          Relation            rel,
                          OracleBudget const& budget) {
    MultiplierOracle oracle(phi.alphabet(), budget);
    GreenVerdict     v{rel, false, {}};
    switch (rel) {
      case Relation::R_le:
        if (auto a = oracle.find_right(psi, phi)) {
          v.holds          = true;
          v.witness        = Witness{};
          v.witness->right = *a;
        }
        break;
      case Relation::L_le:
        if (auto b = oracle.find_left(psi, phi)) {
          v.holds         = true;
          v.witness       = Witness{};
          v.witness->left = *b;
        }
        break;
      case Relation::J_le:
        if (auto m = oracle.find_two_sided(psi, phi)) {
          v.holds          = true;
          v.witness        = Witness{};
          v.witness->alpha = m->alpha;
          v.witness->beta  = m->beta;
        }
        break;
      default:
        throw Error("oracle_leq: relation must be R<=, L<= or J<=");
    }
    return v;
  }

}  // namespace thmon
