#include "thmon/structure.hpp"

#include "thmon/error.hpp"

namespace thmon {

  namespace {

    PrefixCode first_letters(std::size_t i) {
      std::vector<Word> w;
      for (std::size_t j = 0; j < i; ++j) {
        w.push_back(Word{static_cast<Letter>(j)});
      }
      return PrefixCode::trusted(std::move(w));
    }

    Word relabel(Word const& w) {
      Word out = Word::with_head(w[0]);
      return out + w.suffix(1);
    }

  }  // namespace

  Element eta(std::size_t i, unsigned k) {
    if (i < 1 || i >= k) {
      throw Error("eta: need 1 <= i <= k - 1");
    }
    return id_code(first_letters(i), Alphabet{k, 0});
  }

  bool in_max_subgroup(Element const& e, std::size_t i) {
    Alphabet const& alpha = e.alphabet();
    if (alpha.headed() || i < 1 || i >= alpha.k) {
      throw Error("in_max_subgroup: need a plain alphabet and 1 <= i <= k-1");
    }
    if (is_zero(e) || !is_injective(e)) {
      return false;
    }
    PrefixCode const gen = first_letters(i);
    return is_essential_in(domC(e), gen, alpha)
           && is_essential_in(imC(e), gen, alpha);
  }

  Element subgroup_to_higman(Element const& e, std::size_t i) {
    if (!in_max_subgroup(e, i)) {
      throw Error("subgroup_to_higman: element is not in the subgroup of eta_"
                  + std::to_string(i));
    }
    std::vector<Entry> out;
    for (auto const& x : e.entries()) {
      out.push_back(Entry{relabel(x.dom), relabel(x.img)});
    }
    return canonicalize(
        Table(Alphabet{e.alphabet().k, static_cast<unsigned>(i)}, std::move(out)));
  }

  Element embed_E(Element const& e) {
    Alphabet const& alpha = e.alphabet();
    if (!alpha.headed() || alpha.b < alpha.k) {
      throw Error("embed_E: need at least k head letters");
    }
    unsigned const shift = alpha.b - alpha.k;
    auto           map   = [&](Word const& w) {
      if (w.head() < shift) {
        return w;
      }
      Word out = Word::with_head(static_cast<Letter>(shift));
      out.push_back(static_cast<Letter>(w.head() - shift));
      return out + w.suffix(1);
    };
    std::vector<Entry> out;
    for (auto const& x : e.entries()) {
      out.push_back(Entry{map(x.dom), map(x.img)});
    }
    return canonicalize(Table(Alphabet{alpha.k, shift + 1}, std::move(out)));
  }

  Element bmode_idempotent(std::size_t j, unsigned k, std::size_t s) {
    if (j < 1 || j >= k || s < 1) {
      throw Error("bmode_idempotent: need 1 <= j <= k - 1 and s >= 1");
    }
    Alphabet          alpha{k, static_cast<unsigned>(s)};
    std::vector<Word> words;
    if (j < s) {
      for (std::size_t i = 0; i < j; ++i) {
        words.push_back(Word::with_head(static_cast<Letter>(i)));
      }
    } else {
      for (std::size_t i = 0; i + 1 < s; ++i) {
        words.push_back(Word::with_head(static_cast<Letter>(i)));
      }
      for (std::size_t a = 0; a < j - s + 1; ++a) {
        Word w = Word::with_head(static_cast<Letter>(s - 1));
        w.push_back(static_cast<Letter>(a));
        words.push_back(std::move(w));
      }
    }
    return id_code(PrefixCode(std::move(words)), alpha);
  }

  Multipliers jsimple_witness(Element const& e) {
    Alphabet const& alpha = e.alphabet();
    if (is_zero(e)) {
      throw Error("jsimple_witness: zero element");
    }
    Entry const&      pick = e.entries().front();
    std::size_t const s    = alpha.headed() ? alpha.b : 1;
    std::vector<Word> p;
    for (std::size_t i = 0; i < s; ++i) {
      Word w;
      for (std::size_t t = 0; t < i; ++t) {
        w.push_back(1);
      }
      if (i + 1 < s) {
        w.push_back(0);
      }
      p.push_back(std::move(w));
    }
    std::vector<Entry> a, b;
    for (std::size_t i = 0; i < s; ++i) {
      Word start = alpha.headed() ? Word::with_head(static_cast<Letter>(i))
                                  : Word();
      a.push_back(Entry{start, pick.dom + p[i]});
      b.push_back(Entry{pick.img + p[i], start});
    }
    Multipliers m{canonicalize(Table(alpha, std::move(a))),
                  canonicalize(Table(alpha, std::move(b)))};
    if (compose(m.beta, compose(e, m.alpha)) != identity(alpha)) {
      throw Error("internal check failed: jsimple_witness");
    }
    return m;
  }

}  // namespace thmon
