#include "thmon/codes.hpp"

#include <algorithm>
#include <unordered_set>

#include "thmon/error.hpp"

namespace thmon {

  namespace {

    using Raw = std::string;

    bool has_proper_prefix_in(Word const&                     w,
                              std::unordered_set<Raw> const& set) {
      std::size_t lo = w.headed() ? 1 : 0;
      for (std::size_t n = lo; n < w.size(); ++n) {
        if (set.count(w.raw().substr(0, n)) != 0) {
          return true;
        }
      }
      return false;
    }

    void sort_unique(std::vector<Word>& words) {
      std::sort(words.begin(), words.end());
      words.erase(std::unique(words.begin(), words.end()), words.end());
    }

    // Lex-sorted raw strings, used for "all words extending u" lookups.
    std::vector<Raw> lex_sorted(std::vector<Word> const& words) {
      std::vector<Raw> out;
      out.reserve(words.size());
      for (auto const& w : words) {
        out.push_back(w.raw());
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace

  PrefixCode::PrefixCode(std::vector<Word> words) : words_(std::move(words)) {
    sort_unique(words_);
    if (!is_prefix_code(words_)) {
      throw Error("not a prefix code: " + to_string(*this));
    }
  }

  bool PrefixCode::contains(Word const& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }

  std::string to_string(PrefixCode const& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i != 0) {
        s += ',';
      }
      s += to_string(p.words()[i]);
    }
    return s + "}";
  }

  bool is_prefix_code(std::vector<Word> const& words) {
    if (words.empty()) {
      return true;
    }
    bool                    headed = words.front().headed();
    std::unordered_set<Raw> set;
    for (auto const& w : words) {
      if (w.headed() != headed) {
        return false;
      }
      if (!set.insert(w.raw()).second) {
        return false;
      }
    }
    for (auto const& w : words) {
      if (has_proper_prefix_in(w, set)) {
        return false;
      }
    }
    return true;
  }

  PrefixCode minimal_words(std::vector<Word> words) {
    sort_unique(words);
    std::unordered_set<Raw> kept;
    std::vector<Word>       out;
    for (auto& w : words) {
      if (!has_proper_prefix_in(w, kept)) {
        kept.insert(w.raw());
        out.push_back(std::move(w));
      }
    }
    return PrefixCode::trusted(std::move(out));
  }

  Rational kraft_sum(PrefixCode const& p, unsigned k) {
    using boost::multiprecision::cpp_int;
    std::size_t longest = 0;
    for (auto const& w : p) {
      longest = std::max(longest, w.tail_size());
    }
    cpp_int num = 0;
    for (auto const& w : p) {
      num += boost::multiprecision::pow(cpp_int(k),
                                        static_cast<unsigned>(longest
                                                              - w.tail_size()));
    }
    cpp_int den
        = boost::multiprecision::pow(cpp_int(k), static_cast<unsigned>(longest));
    return Rational(num, den);
  }

  bool is_maximal_prefix_code(PrefixCode const& p, Alphabet const& alpha) {
    if (!alpha.headed()) {
      return !p.empty() && kraft_sum(p, alpha.k) == 1;
    }
    std::vector<std::vector<Word>> residual(alpha.b);
    for (auto const& w : p) {
      if (!w.headed() || w.head() >= alpha.b) {
        return false;
      }
      residual[w.head()].push_back(w.suffix(1));
    }
    for (auto& r : residual) {
      if (r.empty()
          || kraft_sum(PrefixCode::trusted(std::move(r)), alpha.k) != 1) {
        return false;
      }
    }
    return true;
  }

  PrefixCode ideal_canonical(PrefixCode const& p, Alphabet const& alpha) {
    if (p.empty()) {
      return p;
    }
    std::size_t                    longest = p.words().back().size();
    std::vector<std::vector<Word>> level(longest + 1);
    for (auto const& w : p) {
      level[w.size()].push_back(w);
    }
    std::size_t const lowest = alpha.headed() ? 2 : 1;
    std::size_t const k      = alpha.k;
    for (std::size_t n = longest; n >= lowest; --n) {
      auto& words = level[n];
      std::sort(words.begin(), words.end());
      std::vector<Word> kept;
      for (std::size_t i = 0; i < words.size();) {
        if (i + k - 1 < words.size()
            && words[i].raw().compare(0, n - 1, words[i + k - 1].raw(), 0, n - 1)
                   == 0) {
          level[n - 1].push_back(words[i].parent());
          i += k;
        } else {
          kept.push_back(std::move(words[i]));
          ++i;
        }
      }
      words = std::move(kept);
    }
    std::vector<Word> out;
    for (auto& words : level) {
      std::sort(words.begin(), words.end());
      for (auto& w : words) {
        out.push_back(std::move(w));
      }
    }
    return PrefixCode::trusted(std::move(out));
  }

  bool ess_equal_ideals(PrefixCode const& p,
                        PrefixCode const& q,
                        Alphabet const&   alpha) {
    return ideal_canonical(p, alpha) == ideal_canonical(q, alpha);
  }

  bool ess_contained(PrefixCode const& p,
                     PrefixCode const& q,
                     Alphabet const&   alpha) {
    std::unordered_set<Raw> qset;
    for (auto const& w : q) {
      qset.insert(w.raw());
    }
    std::vector<Raw> qlex = lex_sorted(q.words());
    for (auto const& u : p) {
      if (qset.count(u.raw()) != 0 || has_proper_prefix_in(u, qset)) {
        continue;
      }
      std::vector<Word> residual;
      for (auto it = std::lower_bound(qlex.begin(), qlex.end(), u.raw());
           it != qlex.end() && it->compare(0, u.size(), u.raw()) == 0;
           ++it) {
        residual.push_back(Word::from_raw(it->substr(u.size()), false));
      }
      if (residual.empty()) {
        return false;
      }
      if (kraft_sum(PrefixCode::trusted(std::move(residual)), alpha.k) != 1) {
        return false;
      }
    }
    return true;
  }

  bool is_essential_in(PrefixCode const& p,
                       PrefixCode const& q,
                       Alphabet const&   alpha) {
    std::unordered_set<Raw> qset;
    for (auto const& w : q) {
      qset.insert(w.raw());
    }
    for (auto const& u : p) {
      if (qset.count(u.raw()) == 0 && !has_proper_prefix_in(u, qset)) {
        return false;
      }
    }
    return ess_contained(q, p, alpha);
  }

  PrefixCode meet(PrefixCode const& p, PrefixCode const& q) {
    std::unordered_set<Raw> qset;
    for (auto const& w : q) {
      qset.insert(w.raw());
    }
    std::vector<Raw>  qlex = lex_sorted(q.words());
    std::vector<Word> out;
    for (auto const& u : p) {
      if (qset.count(u.raw()) != 0 || has_proper_prefix_in(u, qset)) {
        out.push_back(u);
        continue;
      }
      for (auto it = std::lower_bound(qlex.begin(), qlex.end(), u.raw());
           it != qlex.end() && it->compare(0, u.size(), u.raw()) == 0;
           ++it) {
        out.push_back(Word::from_raw(*it, u.headed()));
      }
    }
    std::sort(out.begin(), out.end());
    return PrefixCode::trusted(std::move(out));
  }

}  // namespace thmon
