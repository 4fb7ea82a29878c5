#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace thmon {

  using Letter = std::uint8_t;

  // k letters a_1..a_k (stored 0..k-1).  When b > 0 every word starts with
  // exactly one head letter b_1..b_b followed by a tail over the k letters.
  struct Alphabet {
    unsigned k = 2;
    unsigned b = 0;

    bool headed() const noexcept {
      return b != 0;
    }
    void validate() const;

    friend bool operator==(Alphabet const&, Alphabet const&) = default;
  };

  std::string to_string(Alphabet const& alpha);

  // A word is a byte string of letter indices.  For headed words the first
  // byte is the head index.  Ordering is length first, then lexicographic.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters);

    static Word with_head(Letter head) {
      Word w;
      w.headed_ = true;
      w.raw_.push_back(static_cast<char>(head));
      return w;
    }

    static Word from_raw(std::string raw, bool headed) {
      Word w;
      w.raw_    = std::move(raw);
      w.headed_ = headed;
      return w;
    }

    bool headed() const noexcept {
      return headed_;
    }
    Letter head() const noexcept {
      return static_cast<Letter>(raw_[0]);
    }
    std::size_t size() const noexcept {
      return raw_.size();
    }
    std::size_t tail_size() const noexcept {
      return raw_.size() - (headed_ ? 1 : 0);
    }
    bool empty() const noexcept {
      return raw_.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return static_cast<Letter>(raw_[i]);
    }
    Letter back() const noexcept {
      return static_cast<Letter>(raw_.back());
    }
    std::string const& raw() const noexcept {
      return raw_;
    }

    void push_back(Letter a) {
      raw_.push_back(static_cast<char>(a));
    }
    // suffix must be an unheaded word
    Word& operator+=(Word const& suffix) {
      raw_ += suffix.raw_;
      return *this;
    }

    // Drops the last symbol.
    Word parent() const {
      return from_raw(raw_.substr(0, raw_.size() - 1), headed_);
    }
    Word prefix(std::size_t n) const {
      return from_raw(raw_.substr(0, n), headed_);
    }
    // Unheaded word made of the symbols from position n on.
    Word suffix(std::size_t n) const {
      return from_raw(raw_.substr(n), false);
    }

    bool is_prefix_of(Word const& w) const noexcept {
      return headed_ == w.headed_ && raw_.size() <= w.raw_.size()
             && w.raw_.compare(0, raw_.size(), raw_) == 0;
    }
    bool comparable(Word const& w) const noexcept {
      return is_prefix_of(w) || w.is_prefix_of(*this);
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& x, Word const& y) {
      if (x.headed_ != y.headed_) {
        return x.headed_ <=> y.headed_;
      }
      if (x.raw_.size() != y.raw_.size()) {
        return x.raw_.size() <=> y.raw_.size();
      }
      int c = x.raw_.compare(y.raw_);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater
                            : std::strong_ordering::equal);
    }

   private:
    std::string raw_;
    bool        headed_ = false;
  };

  inline Word operator+(Word w, Word const& suffix) {
    w += suffix;
    return w;
  }

  // Digits for tail letters, "bJ." for a head letter, "^" for the empty word.
  std::string to_string(Word const& w);
  Word        parse_word(std::string_view text, Alphabet const& alpha);

  // All unheaded words of length exactly n over k letters, in lex order.
  std::vector<Word> all_words(unsigned k, std::size_t n);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      return std::hash<std::string>()(w.raw()) ^ (w.headed() ? 0x9e37u : 0u);
    }
  };

}  // namespace thmon
