#include "thmon/word.hpp"

#include "thmon/error.hpp"

namespace thmon {

  void Alphabet::validate() const {
    if (k < 2 || k > 10) {
      throw Error("alphabet size k must lie in [2, 10], found "
                  + std::to_string(k));
    }
    if (b > 255) {
      throw Error("too many head letters: " + std::to_string(b));
    }
  }

  std::string to_string(Alphabet const& alpha) {
    std::string s = "k=" + std::to_string(alpha.k);
    if (alpha.headed()) {
      s += " b=" + std::to_string(alpha.b);
    }
    return s;
  }

  Word::Word(std::initializer_list<Letter> letters) {
    for (Letter a : letters) {
      raw_.push_back(static_cast<char>(a));
    }
  }

  std::string to_string(Word const& w) {
    std::string out;
    std::size_t i = 0;
    if (w.headed()) {
      out = "b" + std::to_string(w.head() + 1);
      i   = 1;
      if (w.size() > 1) {
        out += '.';
      }
    } else if (w.empty()) {
      return "^";
    }
    for (; i < w.size(); ++i) {
      out += static_cast<char>('0' + w[i]);
    }
    return out;
  }

  Word parse_word(std::string_view text, Alphabet const& alpha) {
    Word        w;
    std::size_t i = 0;
    if (!text.empty() && text[0] == 'b') {
      if (!alpha.headed()) {
        throw ParseError("head letter in a plain alphabet", 0);
      }
      i = 1;
      unsigned j = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        j = j * 10 + static_cast<unsigned>(text[i] - '0');
        ++i;
        if (j > 1000) {
          break;
        }
      }
      if (i == 1 || j == 0 || j > alpha.b) {
        throw ParseError("bad head letter in '" + std::string(text) + "'", 0);
      }
      w = Word::with_head(static_cast<Letter>(j - 1));
      if (i < text.size()) {
        if (text[i] != '.') {
          throw ParseError("expected '.' after head letter", i);
        }
        ++i;
        if (i == text.size()) {
          throw ParseError("empty tail after '.'", i);
        }
      }
    } else if (alpha.headed()) {
      throw ParseError("word '" + std::string(text) + "' lacks a head letter",
                       0);
    } else if (text == "^") {
      return w;
    }
    if (i == text.size() && !alpha.headed()) {
      throw ParseError("empty word must be written '^'", 0);
    }
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9'
          || static_cast<unsigned>(c - '0') >= alpha.k) {
        throw ParseError("bad letter '" + std::string(1, c) + "'", i);
      }
      w.push_back(static_cast<Letter>(c - '0'));
    }
    return w;
  }

  std::vector<Word> all_words(unsigned k, std::size_t n) {
    std::vector<Word> out{Word()};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Word> next;
      next.reserve(out.size() * k);
      for (auto const& w : out) {
        for (unsigned a = 0; a < k; ++a) {
          Word x = w;
          x.push_back(static_cast<Letter>(a));
          next.push_back(std::move(x));
        }
      }
      out = std::move(next);
    }
    return out;
  }

}  // namespace thmon
