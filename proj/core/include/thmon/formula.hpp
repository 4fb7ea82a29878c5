#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thmon {

  // Boolean formula over x1, x2, ... with '!', '&', '|', parentheses and
  // the constants 0 and 1.  '!' binds tightest, then '&', then '|'.
  class Formula {
   public:
    enum class Op : std::uint8_t { Var, Const, Not, And, Or };

    struct Node {
      Op          op;
      std::size_t var   = 0;  // 1-based for Var, value for Const
      std::size_t left  = 0;
      std::size_t right = 0;
    };

    // Grammar: or := and ("|" and)*, and := not ("&" not)*, not := "!" not
    // | atom, atom := "x" digits | "x" | "0" | "1" | "(" or ")".  A bare x
    // is x1.
    static Formula parse(std::string_view text);
    static Formula var(std::size_t i);
    static Formula constant(bool v);
    static Formula negate(Formula const& f);
    static Formula conj(Formula const& f, Formula const& g);
    static Formula disj(Formula const& f, Formula const& g);

    // Largest variable index occurring, 0 if none.
    std::size_t max_var() const noexcept;
    std::size_t depth() const;

    // x[i-1] is the value of x_i.
    bool eval(std::vector<bool> const& x) const;
    // x_1 is the most significant of the n low bits of assignment.
    bool eval_bits(std::uint64_t assignment, std::size_t n) const;

    std::size_t count_sat(std::size_t n) const;
    bool        is_tautology(std::size_t n) const;

    std::vector<Node> const& nodes() const noexcept {
      return nodes_;
    }
    std::size_t root() const noexcept {
      return nodes_.size() - 1;
    }

    std::string to_string() const;

   private:
    std::size_t append(Formula const& f);

    // Children always precede parents; the root is the last node.
    std::vector<Node> nodes_;
  };

}  // namespace thmon
