#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "thmon/circuits.hpp"
#include "thmon/error.hpp"
#include "thmon/formula.hpp"
#include "thmon/reductions.hpp"
#include "thmon/structure.hpp"

namespace thmon::cli {

  namespace {

    class Parser {
     public:
      Parser(std::string_view text, EvalContext const& ctx)
          : text_(text), ctx_(ctx) {}

      Expr parse_all(Alphabet const& alpha) {
        Expr e = expr(alpha);
        skip();
        if (i_ != text_.size()) {
          throw ParseError("trailing input", i_);
        }
        return e;
      }

     private:
      void skip() {
        while (i_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[i_]))) {
          ++i_;
        }
      }

      bool peek(char c) {
        skip();
        return i_ < text_.size() && text_[i_] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          throw ParseError(std::string("expected '") + c + "'", i_);
        }
        ++i_;
      }

      std::string ident() {
        skip();
        std::size_t start = i_;
        while (i_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[i_]))
                   || text_[i_] == '_')) {
          ++i_;
        }
        return std::string(text_.substr(start, i_ - start));
      }

      std::size_t number() {
        skip();
        std::size_t v     = 0;
        auto        first = text_.data() + i_;
        auto [end, ec]    = std::from_chars(first, text_.data() + text_.size(), v);
        if (ec != std::errc{}) {
          throw ParseError("expected a number", i_);
        }
        i_ += static_cast<std::size_t>(end - first);
        return v;
      }

      // Text up to the matching close bracket, which is consumed.
      std::string_view balanced(char open, char close) {
        std::size_t start = i_;
        int         depth = 1;
        while (i_ < text_.size()) {
          char c = text_[i_];
          if (c == open) {
            ++depth;
          } else if (c == close && --depth == 0) {
            ++i_;
            return text_.substr(start, i_ - 1 - start);
          }
          ++i_;
        }
        throw ParseError(std::string("missing '") + close + "'", start);
      }

      // A quoted string, or raw text up to a top-level ',' or ')'.
      std::string argument_text() {
        skip();
        if (i_ < text_.size() && text_[i_] == '"') {
          std::size_t start = ++i_;
          while (i_ < text_.size() && text_[i_] != '"') {
            ++i_;
          }
          if (i_ == text_.size()) {
            throw ParseError("unterminated string", start - 1);
          }
          return std::string(text_.substr(start, i_++ - start));
        }
        std::size_t start = i_;
        int         depth = 0;
        while (i_ < text_.size()) {
          char c = text_[i_];
          if (c == '(') {
            ++depth;
          } else if (c == ')' || c == ',') {
            if (depth == 0) {
              break;
            }
            if (c == ')') {
              --depth;
            }
          }
          ++i_;
        }
        std::string_view s = text_.substr(start, i_ - start);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
          s.remove_suffix(1);
        }
        if (s.empty()) {
          throw ParseError("expected an argument", start);
        }
        return std::string(s);
      }

      void need_plain(Alphabet const& alpha, std::string const& what,
                      std::size_t pos) {
        if (alpha.headed()) {
          throw ParseError(what + " needs a plain alphabet, got "
                               + to_string(alpha),
                           pos);
        }
      }

      Expr expr(Alphabet const& alpha) {
        skip();
        Expr e;
        e.pos   = i_;
        e.alpha = alpha;
        if (peek('{')) {
          ++i_;
          e.kind = Expr::Kind::Literal;
          e.text = "{" + std::string(balanced('{', '}')) + "}";
          try {
            (void)parse_table(e.text, alpha);
          } catch (ParseError const& err) {
            throw ParseError(err.message(), e.pos + err.position());
          } catch (Error const& err) {
            throw ParseError(err.what(), e.pos);
          }
          return e;
        }
        std::string name = ident();
        if (name.empty()) {
          throw ParseError("expected an expression", e.pos);
        }
        if (name == "idcode") {
          e.kind = Expr::Kind::IdCode;
          expect('{');
          std::size_t body = i_;
          e.text           = std::string(balanced('{', '}'));
          check_code(e.text, alpha, body);
          return e;
        }
        if (!peek('(')) {
          auto it = ctx_.bindings.find(name);
          if (it == ctx_.bindings.end()) {
            throw ParseError("unknown name '" + name + "'", e.pos);
          }
          if (it->second.alphabet() != alpha) {
            throw ParseError("'" + name + "' is over "
                                 + to_string(it->second.alphabet())
                                 + ", expected " + to_string(alpha),
                             e.pos);
          }
          e.kind = Expr::Kind::Name;
          e.text = name;
          return e;
        }
        expect('(');
        if (name == "compose") {
          e.kind = Expr::Kind::Compose;
          e.args.push_back(expr(alpha));
          while (peek(',')) {
            ++i_;
            e.args.push_back(expr(alpha));
          }
        } else if (name == "tau" || name == "eta") {
          need_plain(alpha, name, e.pos);
          e.kind = name == "tau" ? Expr::Kind::Tau : Expr::Kind::Eta;
          skip();
          std::size_t at = i_;
          e.nums.push_back(number());
          if (e.nums[0] == 0
              || (e.kind == Expr::Kind::Eta && e.nums[0] >= alpha.k)) {
            throw ParseError(name + " index out of range", at);
          }
        } else if (name == "circuit") {
          need_plain(alpha, name, e.pos);
          e.kind = Expr::Kind::Circuit;
          e.text = argument_text();
        } else if (name == "phi0") {
          need_plain(alpha, name, e.pos);
          e.kind          = Expr::Kind::Phi0;
          skip();
          std::size_t at  = i_;
          e.text          = argument_text();
          std::size_t m   = 0;
          try {
            m = Formula::parse(e.text).max_var();
          } catch (ParseError const& err) {
            throw ParseError("formula: " + err.message(), at);
          }
          if (peek(',')) {
            ++i_;
            skip();
            std::size_t mat = i_;
            std::size_t mm  = number();
            if (mm < m) {
              throw ParseError("m is smaller than the largest variable", mat);
            }
            m = mm;
          }
          e.nums.push_back(std::max<std::size_t>(m, 1));
        } else if (name == "lift") {
          need_plain(alpha, name, e.pos);
          e.kind = Expr::Kind::Lift;
          e.args.push_back(expr(Alphabet{2, 0}));
          expect(',');
          skip();
          std::size_t at = i_;
          std::size_t k  = number();
          if (k != alpha.k) {
            throw ParseError("lift target has " + std::to_string(k)
                                 + " letters but the context has "
                                 + std::to_string(alpha.k),
                             at);
          }
          expect(',');
          e.nums = {k, number()};
        } else if (name == "invert") {
          e.kind = Expr::Kind::Invert;
          e.args.push_back(expr(alpha));
        } else {
          throw ParseError("unknown function '" + name + "'", e.pos);
        }
        expect(')');
        return e;
      }

      void check_code(std::string const& body, Alphabet const& alpha,
                      std::size_t pos) {
        try {
          (void)PrefixCode(words_of(body, alpha));
        } catch (ParseError const& err) {
          throw ParseError(err.message(), pos + err.position());
        } catch (Error const& err) {
          throw ParseError(err.what(), pos);
        }
      }

      std::string_view   text_;
      EvalContext const& ctx_;
      std::size_t        i_ = 0;

     public:
      // Comma-separated words; positions in errors are offsets into body.
      static std::vector<Word> words_of(std::string_view body,
                                        Alphabet const&  alpha) {
        std::vector<Word> out;
        std::size_t       start = 0;
        while (start <= body.size()) {
          std::size_t end = body.find(',', start);
          if (end == std::string_view::npos) {
            end = body.size();
          }
          std::string_view w = body.substr(start, end - start);
          std::size_t      lead = 0;
          while (lead < w.size()
                 && std::isspace(static_cast<unsigned char>(w[lead]))) {
            ++lead;
          }
          w.remove_prefix(lead);
          while (!w.empty()
                 && std::isspace(static_cast<unsigned char>(w.back()))) {
            w.remove_suffix(1);
          }
          if (w.empty()) {
            if (out.empty() && end == body.size()) {
              break;
            }
            throw ParseError("expected a word", start + lead);
          }
          try {
            out.push_back(parse_word(w, alpha));
          } catch (ParseError const& err) {
            throw ParseError(err.message(), start + lead + err.position());
          }
          start = end + 1;
        }
        return out;
      }
    };

    Element capped(Element e, EvalContext const& ctx) {
      if (e.size() > ctx.cap) {
        throw CapExceeded("table has " + std::to_string(e.size())
                          + " entries, cap is " + std::to_string(ctx.cap));
      }
      return e;
    }

  }  // namespace

  Expr parse_expr(std::string_view text, Alphabet const& alpha,
                  EvalContext const& ctx) {
    alpha.validate();
    return Parser(text, ctx).parse_all(alpha);
  }

  Element eval_expr(Expr const& e, EvalContext const& ctx) {
    Alphabet const& a = e.alpha;
    switch (e.kind) {
      case Expr::Kind::Literal:
        return capped(canonicalize(parse_table(e.text, a)), ctx);
      case Expr::Kind::Name:
        return ctx.bindings.at(e.text);
      case Expr::Kind::Compose: {
        Element acc = eval_expr(e.args.back(), ctx);
        for (std::size_t i = e.args.size() - 1; i-- > 0;) {
          acc = capped(compose(eval_expr(e.args[i], ctx), acc), ctx);
        }
        return acc;
      }
      case Expr::Kind::Tau:
        return capped(tau_element(e.nums[0], a.k), ctx);
      case Expr::Kind::Eta:
        return eta(e.nums[0], a.k);
      case Expr::Kind::IdCode:
        return capped(id_code(PrefixCode(Parser::words_of(e.text, a)), a), ctx);
      case Expr::Kind::Circuit:
        return capped(circuit_to_element(read_netlist_file(e.text), a.k, ctx.cap),
                      ctx);
      case Expr::Kind::Phi0:
        return capped(phi0_B(Formula::parse(e.text), e.nums[0], a.k), ctx);
      case Expr::Kind::Lift: {
        Element inner = eval_expr(e.args[0], ctx);
        return capped(lift_alphabet(inner, static_cast<unsigned>(e.nums[0]),
                                    e.nums[1]),
                      ctx);
      }
      case Expr::Kind::Invert:
        return invert(eval_expr(e.args[0], ctx));
    }
    throw Error("unhandled expression");
  }

}  // namespace thmon::cli
