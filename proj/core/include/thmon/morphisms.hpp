#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thmon/codes.hpp"
#include "thmon/word.hpp"

namespace thmon {

  struct Entry {
    Word dom;
    Word img;

    friend bool operator==(Entry const&, Entry const&) = default;
  };

  // A finite table of a right-ideal morphism.  The domain words form a
  // prefix code; the table maps dom.x to img.x.  Need not be canonical.
  class Table {
   public:
    Table() = default;
    Table(Alphabet alpha, std::vector<Entry> entries);

    Alphabet const& alphabet() const noexcept {
      return alpha_;
    }
    std::vector<Entry> const& entries() const noexcept {
      return entries_;
    }
    std::size_t size() const noexcept {
      return entries_.size();
    }
    bool empty() const noexcept {
      return entries_.empty();
    }

    friend bool operator==(Table const&, Table const&) = default;

   private:
    Alphabet           alpha_;
    std::vector<Entry> entries_;
  };

  // A canonical table: no merge applies and entries are sorted by domain.
  // Two elements are equal exactly when their canonical tables are.
  class Element {
   public:
    Element() = default;

    Table const& table() const noexcept {
      return table_;
    }
    operator Table const&() const noexcept {  // NOLINT
      return table_;
    }
    Alphabet const& alphabet() const noexcept {
      return table_.alphabet();
    }
    std::vector<Entry> const& entries() const noexcept {
      return table_.entries();
    }
    std::size_t size() const noexcept {
      return table_.size();
    }

    friend bool operator==(Element const&, Element const&) = default;
    friend bool operator<(Element const& x, Element const& y);

   private:
    friend Element canonicalize(Table const& t);
    Table table_;
  };

  struct ElementHash {
    std::size_t operator()(Element const& e) const noexcept;
  };

  std::string to_string(Table const& t);
  // Reads a literal "{u->v, ...}" as printed by to_string.  Positions in
  // ParseError are offsets into text.
  Table parse_table(std::string_view text, Alphabet const& alpha);
  inline std::string to_string(Element const& e) {
    return to_string(e.table());
  }

  // Repeatedly replaces k entries (p a_i -> q a_i) by (p -> q).
  Element canonicalize(Table const& t);

  // Replaces entry idx by its k^depth refinements (p w -> q w).
  Table restrict(Table const& t, std::size_t idx, std::size_t depth);

  // psi o phi: phi is applied first.
  Element compose(Table const& psi, Table const& phi);

  std::optional<Word> apply(Table const& t, Word const& w);

  Element zero(Alphabet const& alpha);
  Element identity(Alphabet const& alpha);
  Element id_code(PrefixCode const& p, Alphabet const& alpha);

  PrefixCode domC(Table const& t);
  // Minimal image words: the prefix code generating the image ideal.
  PrefixCode imC(Table const& t);
  // Distinct image words, sorted.
  std::vector<Word> image_words(Table const& t);
  std::map<Word, std::size_t> image_multiset(Table const& t);

  bool is_zero(Table const& t);
  bool is_identity(Element const& e);
  bool is_idempotent(Element const& e);
  // Images pairwise distinct and prefix-incomparable.
  bool    is_injective(Table const& t);
  bool    is_unit(Element const& e);
  Element invert(Element const& e);

  struct KernelPartition {
    PrefixCode                     domain;
    std::vector<std::vector<Word>> blocks;
  };

  // Refines the table until every image has the maximal image length, then
  // groups the refined domain by image.
  KernelPartition kernel_partition(Element const& e);

  // Moves a plain element to the one-head-letter alphabet by prefixing b_1 to
  // every word, and back.
  Element bmode_wrap(Element const& e);
  Element bmode_unwrap(Element const& e);

  // Entry idx of t split one level, keeping order otherwise.
  Table split_entry(Table const& t, std::size_t idx);

}  // namespace thmon
