#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "thmon/morphisms.hpp"

namespace thmon::cli {

  // Element expressions:
  //   expr := "{" u->v, ... "}"          table literal
  //         | name                       binding from --let
  //         | compose(expr, expr, ...)   rightmost is applied first
  //         | tau(i) | eta(i)
  //         | idcode{w, ...}
  //         | circuit(path)              path may be quoted
  //         | phi0(formula [, m])        formula may be quoted
  //         | lift(expr, k, l)           expr is read over two letters
  //         | invert(expr)
  struct Expr {
    enum class Kind { Literal, Name, Compose, Tau, Eta, IdCode, Circuit, Phi0,
                      Lift, Invert };

    Kind                  kind;
    std::size_t           pos = 0;
    std::string           text;  // literal, name, path or formula
    std::vector<Expr>     args;
    std::vector<std::size_t> nums;
    Alphabet              alpha;  // alphabet of the value
  };

  struct EvalContext {
    std::map<std::string, Element> bindings;
    std::uint64_t                  cap = std::uint64_t(1) << 24;
  };

  // Throws ParseError with a 0-based offset into text.  Alphabet mismatches
  // (for example a literal inside lift over a headed alphabet) are parse
  // errors too.
  Expr parse_expr(std::string_view text, Alphabet const& alpha,
                  EvalContext const& ctx);

  // Materializes the canonical table.  Throws CapExceeded when an
  // intermediate table has more than ctx.cap entries.
  Element eval_expr(Expr const& e, EvalContext const& ctx);

  inline Element eval_text(std::string_view text, Alphabet const& alpha,
                           EvalContext const& ctx) {
    return eval_expr(parse_expr(text, alpha, ctx), ctx);
  }

}  // namespace thmon::cli
