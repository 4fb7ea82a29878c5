#include "thmon/counting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thmon/error.hpp"

namespace thmon {

  namespace {

    Word tag(std::size_t s) {
      Word w;
      for (std::size_t t = 1; t < s; ++t) {
        w.push_back(1);
      }
      w.push_back(0);
      return w;
    }

    Alphabet plain(unsigned k) {
      Alphabet a{k, 0};
      a.validate();
      return a;
    }

  }  // namespace

  void FinRel::insert(Word x, Word y) {
    if (x.headed() || y.headed()) {
      throw Error("FinRel holds plain words only");
    }
    pairs_.emplace(std::move(x), std::move(y));
  }

  std::vector<Word> FinRel::firsts() const {
    std::vector<Word> out;
    for (auto const& [x, y] : pairs_) {
      if (out.empty() || out.back() != x) {
        out.push_back(x);
      }
    }
    return out;
  }

  FinRel read_finrel(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool        header = false;
    FinRel      r;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       ss(line);
      std::vector<std::string> tok;
      for (std::string t; ss >> t;) {
        tok.push_back(t);
      }
      if (tok.empty()) {
        continue;
      }
      auto fail = [&](std::string const& msg) {
        return Error("finrel line " + std::to_string(lineno) + ": " + msg);
      };
      if (!header) {
        if (tok.size() != 3 || tok[0] != "finrel" || tok[1] != "v1"
            || tok[2].rfind("k=", 0) != 0) {
          throw fail("expected header 'finrel v1 k=<k>'");
        }
        unsigned k = 0;
        try {
          k = static_cast<unsigned>(std::stoul(tok[2].substr(2)));
        } catch (std::exception const&) {
          throw fail("bad alphabet size");
        }
        r      = FinRel(plain(k).k);
        header = true;
        continue;
      }
      if (tok.size() != 2) {
        throw fail("expected a pair 'x y'");
      }
      try {
        Alphabet a = plain(r.k());
        r.insert(parse_word(tok[0], a), parse_word(tok[1], a));
      } catch (Error const& e) {
        throw fail(e.what());
      }
    }
    if (!header) {
      throw Error("finrel: empty input");
    }
    return r;
  }

  std::string write_finrel(FinRel const& r) {
    std::string s = "finrel v1 k=" + std::to_string(r.k()) + "\n";
    for (auto const& [x, y] : r.pairs()) {
      s += to_string(x) + " " + to_string(y) + "\n";
    }
    return s;
  }

  void ModSpec::validate() const {
    if (h < 2) {
      throw Error("modulus must be at least 2");
    }
    for (auto s : yes) {
      if (s >= h || no.count(s) != 0) {
        throw Error("residue sets must be disjoint subsets of [0, h)");
      }
    }
    for (auto s : no) {
      if (s >= h) {
        throw Error("residue sets must be disjoint subsets of [0, h)");
      }
    }
  }

  std::string to_string(Membership m) {
    switch (m) {
      case Membership::Yes:
        return "yes";
      case Membership::No:
        return "no";
      case Membership::Neither:
        return "neither";
    }
    return "?";
  }

  std::size_t slice_count(FinRel const& r, Word const& x) {
    auto lo = r.pairs().lower_bound({x, Word()});
    std::size_t n = 0;
    for (; lo != r.pairs().end() && lo->first == x; ++lo) {
      ++n;
    }
    return n;
  }

  Membership in_class(FinRel const& r, Word const& x, ModSpec const& spec) {
    spec.validate();
    std::size_t c = slice_count(r, x) % spec.h;
    if (spec.yes.count(c) != 0) {
      return Membership::Yes;
    }
    if (spec.no.count(c) != 0) {
      return Membership::No;
    }
    return Membership::Neither;
  }

  Word fresh_probe(FinRel const& r) {
    std::size_t longest = 0;
    for (auto const& x : r.firsts()) {
      longest = std::max(longest, x.size());
    }
    Word w;
    for (std::size_t i = 0; i <= longest; ++i) {
      w.push_back(0);
    }
    return w;
  }

  std::vector<Word> probe_set(FinRel const& r) {
    std::vector<Word> p = r.firsts();
    p.push_back(fresh_probe(r));
    return p;
  }

  FinRel add_one(FinRel const& r) {
    FinRel out(r.k());
    for (auto const& [x, y] : r.pairs()) {
      out.insert(x, x + y + Word{0});
    }
    for (auto const& x : probe_set(r)) {
      out.insert(x, x);
    }
    return out;
  }

  FinRel times_m(FinRel const& r, std::size_t m) {
    FinRel out(r.k());
    for (std::size_t s = 1; s <= m; ++s) {
      Word u = tag(s);
      for (auto const& [x, y] : r.pairs()) {
        out.insert(x, u + y);
      }
    }
    return out;
  }

  std::pair<FinRel, FinRel> disjointify(FinRel const& r1, FinRel const& r2) {
    if (r1.k() != r2.k()) {
      throw Error("disjointify: alphabets differ");
    }
    FinRel a(r1.k()), b(r2.k());
    for (auto const& [x, y] : r1.pairs()) {
      a.insert(x, tag(1) + y);
    }
    for (auto const& [x, y] : r2.pairs()) {
      b.insert(x, tag(2) + y);
    }
    return {a, b};
  }

  FinRel np_embed(std::vector<Word> const& language,
                  std::size_t              h,
                  bool                     complement,
                  std::vector<Word> const& universe,
                  unsigned                 k) {
    plain(k);
    if (h < 2) {
      throw Error("np_embed: modulus must be at least 2");
    }
    FinRel out(k);
    if (!complement) {
      for (auto const& x : language) {
        out.insert(x, x);
      }
      return out;
    }
    std::set<Word> in(language.begin(), language.end());
    std::set<Word> all(universe.begin(), universe.end());
    all.insert(language.begin(), language.end());
    FinRel direct(k);
    for (auto const& x : all) {
      direct.insert(x, x);
    }
    all.insert(fresh_probe(direct));
    for (auto const& x : all) {
      out.insert(x, x);
      if (in.count(x) != 0) {
        for (std::size_t s = 1; s < h; ++s) {
          out.insert(x, x + tag(s));
        }
      }
    }
    return out;
  }

  FinRel normalize_to_10(FinRel const& r,
                         std::size_t   h,
                         std::size_t   i,
                         std::size_t   j) {
    if (h < 2 || i >= h || j >= h || i == j) {
      throw Error("normalize_to_10: need distinct residues i, j below h >= 2");
    }
    std::size_t const d = (i + h - j) % h;
    if (std::gcd(d, h) != 1) {
      throw Error("normalize_to_10: i - j must be invertible modulo h");
    }
    std::size_t inv = 1;
    while ((d * inv) % h != 1) {
      ++inv;
    }
    FinRel out = r;
    for (std::size_t t = 0; t < (h - j) % h; ++t) {
      out = add_one(out);
    }
    return times_m(out, inv);
  }

  std::size_t exists_count(Formula const& b, std::size_t m, std::size_t n) {
    if (b.max_var() > m + n) {
      throw Error("formula uses more than m + n variables");
    }
    if (m + n > 30) {
      throw CapExceeded("exists_count: too many variables");
    }
    std::size_t c = 0;
    for (std::uint64_t y = 0; y < (std::uint64_t(1) << n); ++y) {
      for (std::uint64_t x = 0; x < (std::uint64_t(1) << m); ++x) {
        if (b.eval_bits((x << n) | y, m + n)) {
          ++c;
          break;
        }
      }
    }
    return c;
  }

  bool oplus_exists_sat(Formula const& b,
                        std::size_t    m_exist,
                        std::size_t    n_free,
                        std::size_t    h,
                        std::size_t    i) {
    if (h < 2) {
      throw Error("modulus must be at least 2");
    }
    return exists_count(b, m_exist, n_free) % h == i % h;
  }

  bool oplus_10_exists_sat(Formula const& b,
                           std::size_t    m_exist,
                           std::size_t    n_free,
                           std::size_t    h) {
    if (h < 2) {
      throw Error("modulus must be at least 2");
    }
    std::size_t sat   = exists_count(b, m_exist, n_free);
    std::size_t unsat = (std::size_t(1) << n_free) - sat;
    return sat % h == 1 && unsat % h == 0;
  }

}  // namespace thmon
