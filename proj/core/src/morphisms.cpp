#include "thmon/morphisms.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "thmon/error.hpp"

namespace thmon {

  namespace {

    void check_word(Word const& w, Alphabet const& alpha) {
      if (w.headed() != alpha.headed()) {
        throw Error("word " + to_string(w) + " does not match alphabet "
                    + to_string(alpha));
      }
      std::size_t i = 0;
      if (w.headed()) {
        if (w.head() >= alpha.b) {
          throw Error("head letter out of range in " + to_string(w));
        }
        i = 1;
      }
      for (; i < w.size(); ++i) {
        if (w[i] >= alpha.k) {
          throw Error("letter out of range in " + to_string(w));
        }
      }
    }

    bool by_dom(Entry const& x, Entry const& y) {
      return x.dom < y.dom;
    }

    // Index over the domain words of a table for prefix lookups.
    class DomainIndex {
     public:
      explicit DomainIndex(Table const& t) {
        exact_.reserve(t.size());
        lex_.reserve(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
          exact_.emplace(t.entries()[i].dom.raw(), i);
          lex_.emplace_back(t.entries()[i].dom.raw(), i);
        }
        std::sort(lex_.begin(), lex_.end());
      }

      // Entry whose domain word is a prefix of w (at most one exists).
      std::optional<std::size_t> prefix_of(Word const& w) const {
        std::size_t lo = w.headed() ? 1 : 0;
        for (std::size_t n = lo; n <= w.size(); ++n) {
          auto it = exact_.find(w.raw().substr(0, n));
          if (it != exact_.end()) {
            return it->second;
          }
        }
        return std::nullopt;
      }

      // Entries whose domain word strictly extends w.
      template <typename F>
      void extensions_of(Word const& w, F&& f) const {
        auto it = std::lower_bound(lex_.begin(),
                                   lex_.end(),
                                   std::make_pair(w.raw(), std::size_t(0)));
        for (; it != lex_.end()
               && it->first.compare(0, w.size(), w.raw()) == 0;
             ++it) {
          if (it->first.size() > w.size()) {
            f(it->second);
          }
        }
      }

     private:
      std::unordered_map<std::string, std::size_t> exact_;
      std::vector<std::pair<std::string, std::size_t>> lex_;
    };

  }  // namespace

  Table::Table(Alphabet alpha, std::vector<Entry> entries)
      : alpha_(alpha), entries_(std::move(entries)) {
    alpha_.validate();
    std::vector<Word> doms;
    doms.reserve(entries_.size());
    for (auto const& e : entries_) {
      check_word(e.dom, alpha_);
      check_word(e.img, alpha_);
      doms.push_back(e.dom);
    }
    if (!is_prefix_code(doms)) {
      throw Error("table domain is not a prefix code");
    }
  }

  bool operator<(Element const& x, Element const& y) {
    auto const& a = x.entries();
    auto const& b = y.entries();
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].dom != b[i].dom) {
        return a[i].dom < b[i].dom;
      }
      if (a[i].img != b[i].img) {
        return a[i].img < b[i].img;
      }
    }
    return false;
  }

  std::size_t ElementHash::operator()(Element const& e) const noexcept {
    std::size_t h = e.size();
    WordHash    wh;
    for (auto const& x : e.entries()) {
      h = h * 1000003u ^ wh(x.dom);
      h = h * 1000003u ^ wh(x.img);
    }
    return h;
  }

  std::string to_string(Table const& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != 0) {
        s += ',';
      }
      s += to_string(t.entries()[i].dom) + "->" + to_string(t.entries()[i].img);
    }
    return s + "}";
  }

  Table parse_table(std::string_view text, Alphabet const& alpha) {
    std::size_t i    = 0;
    auto        skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    auto expect = [&](std::string_view tok) {
      skip();
      if (text.substr(i, tok.size()) != tok) {
        throw ParseError("expected '" + std::string(tok) + "'", i);
      }
      i += tok.size();
    };
    auto word = [&] {
      skip();
      std::size_t start = i;
      while (i < text.size()
             && (std::isalnum(static_cast<unsigned char>(text[i]))
                 || text[i] == '.' || text[i] == '^')) {
        ++i;
      }
      if (start == i) {
        throw ParseError("expected a word", start);
      }
      try {
        return parse_word(text.substr(start, i - start), alpha);
      } catch (ParseError const& e) {
        throw ParseError(e.message(), start + e.position());
      }
    };
    expect("{");
    std::vector<Entry> entries;
    skip();
    if (i < text.size() && text[i] == '}') {
      ++i;
    } else {
      while (true) {
        Word d = word();
        expect("->");
        Word v = word();
        entries.push_back(Entry{std::move(d), std::move(v)});
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        expect("}");
        break;
      }
    }
    skip();
    if (i != text.size()) {
      throw ParseError("trailing input after table", i);
    }
    try {
      return Table(alpha, std::move(entries));
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(e.what(), 0);
    }
  }

  Element canonicalize(Table const& t) {
    Alphabet const& alpha = t.alphabet();
    Element         result;
    if (t.empty()) {
      result.table_ = Table(alpha, {});
      return result;
    }
    std::size_t longest = 0;
    for (auto const& e : t.entries()) {
      longest = std::max(longest, e.dom.size());
    }
    std::vector<std::vector<Entry>> level(longest + 1);
    for (auto const& e : t.entries()) {
      level[e.dom.size()].push_back(e);
    }
    std::size_t const lowest = alpha.headed() ? 2 : 1;
    std::size_t const k      = alpha.k;
    auto              mergeable = [&](std::vector<Entry> const& v,
                         std::size_t               i,
                         std::size_t               n) {
      if (i + k > v.size()) {
        return false;
      }
      if (v[i].dom.raw().compare(0, n - 1, v[i + k - 1].dom.raw(), 0, n - 1)
          != 0) {
        return false;
      }
      Word const& first = v[i].img;
      if (first.size() < lowest) {
        return false;
      }
      for (std::size_t j = 0; j < k; ++j) {
        Word const& img = v[i + j].img;
        if (img.size() != first.size() || img.back() != v[i + j].dom.back()
            || img.raw().compare(0, img.size() - 1, first.raw(), 0,
                                 first.size() - 1)
                   != 0) {
          return false;
        }
      }
      return true;
    };
    for (std::size_t n = longest; n >= lowest; --n) {
      auto& entries = level[n];
      std::sort(entries.begin(), entries.end(), by_dom);
      std::vector<Entry> kept;
      for (std::size_t i = 0; i < entries.size();) {
        if (mergeable(entries, i, n)) {
          level[n - 1].push_back(
              Entry{entries[i].dom.parent(), entries[i].img.parent()});
          i += k;
        } else {
          kept.push_back(std::move(entries[i]));
          ++i;
        }
      }
      entries = std::move(kept);
    }
    std::vector<Entry> out;
    out.reserve(t.size());
    for (auto& entries : level) {
      std::sort(entries.begin(), entries.end(), by_dom);
      for (auto& e : entries) {
        out.push_back(std::move(e));
      }
    }
    result.table_ = Table(alpha, std::move(out));
    return result;
  }

  Table restrict(Table const& t, std::size_t idx, std::size_t depth) {
    if (idx >= t.size()) {
      throw Error("restrict: entry index out of range");
    }
    std::vector<Entry> out;
    out.reserve(t.size() + 8);
    for (std::size_t i = 0; i < t.size(); ++i) {
      Entry const& e = t.entries()[i];
      if (i != idx) {
        out.push_back(e);
        continue;
      }
      for (auto const& w : all_words(t.alphabet().k, depth)) {
        out.push_back(Entry{e.dom + w, e.img + w});
      }
    }
    return Table(t.alphabet(), std::move(out));
  }

  Table split_entry(Table const& t, std::size_t idx) {
    return restrict(t, idx, 1);
  }

  Element compose(Table const& psi, Table const& phi) {
    if (psi.alphabet() != phi.alphabet()) {
      throw Error("compose: alphabets differ (" + to_string(psi.alphabet())
                  + " vs " + to_string(phi.alphabet()) + ")");
    }
    DomainIndex        index(psi);
    std::vector<Entry> out;
    for (auto const& e : phi.entries()) {
      if (auto j = index.prefix_of(e.img)) {
        Entry const& f = psi.entries()[*j];
        out.push_back(Entry{e.dom, f.img + e.img.suffix(f.dom.size())});
        continue;
      }
      index.extensions_of(e.img, [&](std::size_t j) {
        Entry const& f = psi.entries()[j];
        out.push_back(Entry{e.dom + f.dom.suffix(e.img.size()), f.img});
      });
    }
    return canonicalize(Table(phi.alphabet(), std::move(out)));
  }

  std::optional<Word> apply(Table const& t, Word const& w) {
    for (auto const& e : t.entries()) {
      if (e.dom.is_prefix_of(w)) {
        return e.img + w.suffix(e.dom.size());
      }
    }
    return std::nullopt;
  }

  Element zero(Alphabet const& alpha) {
    return canonicalize(Table(alpha, {}));
  }

  Element identity(Alphabet const& alpha) {
    std::vector<Entry> entries;
    if (!alpha.headed()) {
      entries.push_back(Entry{Word(), Word()});
    }
    for (unsigned j = 0; j < alpha.b; ++j) {
      Word h = Word::with_head(static_cast<Letter>(j));
      entries.push_back(Entry{h, h});
    }
    return canonicalize(Table(alpha, std::move(entries)));
  }

  Element id_code(PrefixCode const& p, Alphabet const& alpha) {
    std::vector<Entry> entries;
    for (auto const& w : p) {
      entries.push_back(Entry{w, w});
    }
    return canonicalize(Table(alpha, std::move(entries)));
  }

  PrefixCode domC(Table const& t) {
    std::vector<Word> doms;
    for (auto const& e : t.entries()) {
      doms.push_back(e.dom);
    }
    std::sort(doms.begin(), doms.end());
    return PrefixCode::trusted(std::move(doms));
  }

  std::vector<Word> image_words(Table const& t) {
    std::vector<Word> imgs;
    for (auto const& e : t.entries()) {
      imgs.push_back(e.img);
    }
    std::sort(imgs.begin(), imgs.end());
    imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
    return imgs;
  }

  PrefixCode imC(Table const& t) {
    return minimal_words(image_words(t));
  }

  std::map<Word, std::size_t> image_multiset(Table const& t) {
    std::map<Word, std::size_t> m;
    for (auto const& e : t.entries()) {
      ++m[e.img];
    }
    return m;
  }

  bool is_zero(Table const& t) {
    return t.empty();
  }

  bool is_identity(Element const& e) {
    return e == identity(e.alphabet());
  }

  bool is_idempotent(Element const& e) {
    return compose(e, e) == e;
  }

  bool is_injective(Table const& t) {
    std::vector<Word> imgs;
    imgs.reserve(t.size());
    for (auto const& e : t.entries()) {
      imgs.push_back(e.img);
    }
    std::sort(imgs.begin(), imgs.end());
    if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end()) {
      return false;
    }
    return is_prefix_code(imgs);
  }

  bool is_unit(Element const& e) {
    return is_injective(e) && is_maximal_prefix_code(domC(e), e.alphabet())
           && is_maximal_prefix_code(imC(e), e.alphabet());
  }

  Element invert(Element const& e) {
    if (!is_injective(e)) {
      throw Error("invert: element is not injective: " + to_string(e));
    }
    std::vector<Entry> out;
    for (auto const& x : e.entries()) {
      out.push_back(Entry{x.img, x.dom});
    }
    return canonicalize(Table(e.alphabet(), std::move(out)));
  }

  KernelPartition kernel_partition(Element const& e) {
    if (is_zero(e)) {
      throw Error("kernel_partition: zero element");
    }
    std::size_t longest = 0;
    for (auto const& x : e.entries()) {
      longest = std::max(longest, x.img.size());
    }
    std::vector<Entry> refined;
    for (auto const& x : e.entries()) {
      for (auto const& w : all_words(e.alphabet().k, longest - x.img.size())) {
        refined.push_back(Entry{x.dom + w, x.img + w});
      }
    }
    std::map<Word, std::vector<Word>> by_image;
    std::vector<Word>                 doms;
    for (auto const& x : refined) {
      by_image[x.img].push_back(x.dom);
      doms.push_back(x.dom);
    }
    KernelPartition kp;
    std::sort(doms.begin(), doms.end());
    kp.domain = PrefixCode::trusted(std::move(doms));
    for (auto& [img, block] : by_image) {
      std::sort(block.begin(), block.end());
      kp.blocks.push_back(std::move(block));
    }
    std::sort(kp.blocks.begin(), kp.blocks.end());
    return kp;
  }

  Element bmode_wrap(Element const& e) {
    if (e.alphabet().headed()) {
      throw Error("bmode_wrap: element already uses head letters");
    }
    Alphabet           alpha{e.alphabet().k, 1};
    Word const         h = Word::with_head(0);
    std::vector<Entry> out;
    for (auto const& x : e.entries()) {
      out.push_back(Entry{h + x.dom, h + x.img});
    }
    return canonicalize(Table(alpha, std::move(out)));
  }

  Element bmode_unwrap(Element const& e) {
    if (e.alphabet().b != 1) {
      throw Error("bmode_unwrap: needs exactly one head letter");
    }
    std::vector<Entry> out;
    for (auto const& x : e.entries()) {
      out.push_back(Entry{x.dom.suffix(1), x.img.suffix(1)});
    }
    return canonicalize(Table(Alphabet{e.alphabet().k, 0}, std::move(out)));
  }

}  // namespace thmon
