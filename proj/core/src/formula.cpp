#include "thmon/formula.hpp"

#include <algorithm>
#include <cctype>

#include "thmon/error.hpp"

namespace thmon {

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view s) : s_(s) {}

      Formula run() {
        Formula f = parse_or();
        skip();
        if (pos_ != s_.size()) {
          throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'",
                           pos_);
        }
        return f;
      }

     private:
      void skip() {
        while (pos_ < s_.size()
               && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      Formula parse_or() {
        Formula f = parse_and();
        while (eat('|')) {
          f = Formula::disj(f, parse_and());
        }
        return f;
      }

      Formula parse_and() {
        Formula f = parse_not();
        while (eat('&')) {
          f = Formula::conj(f, parse_not());
        }
        return f;
      }

      Formula parse_not() {
        if (eat('!')) {
          return Formula::negate(parse_not());
        }
        return parse_atom();
      }

      Formula parse_atom() {
        skip();
        if (pos_ >= s_.size()) {
          throw ParseError("unexpected end of formula", pos_);
        }
        char c = s_[pos_];
        if (c == '(') {
          ++pos_;
          Formula f = parse_or();
          if (!eat(')')) {
            throw ParseError("expected ')'", pos_);
          }
          return f;
        }
        if (c == '0' || c == '1') {
          ++pos_;
          return Formula::constant(c == '1');
        }
        if (c == 'x') {
          std::size_t start = ++pos_;
          std::size_t i     = 0;
          while (pos_ < s_.size()
                 && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            i = i * 10 + static_cast<std::size_t>(s_[pos_] - '0');
            ++pos_;
            if (i > 63) {
              throw ParseError("variable index too large", start);
            }
          }
          if (pos_ == start) {
            return Formula::var(1);  // bare x means x1
          }
          if (i == 0) {
            throw ParseError("expected variable index >= 1", start);
          }
          return Formula::var(i);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
      }

      std::string_view s_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  Formula Formula::parse(std::string_view text) {
    return Parser(text).run();
  }

  Formula Formula::var(std::size_t i) {
    Formula f;
    f.nodes_.push_back(Node{Op::Var, i, 0, 0});
    return f;
  }

  Formula Formula::constant(bool v) {
    Formula f;
    f.nodes_.push_back(Node{Op::Const, v ? 1u : 0u, 0, 0});
    return f;
  }

  std::size_t Formula::append(Formula const& f) {
    std::size_t const off = nodes_.size();
    for (Node n : f.nodes_) {
      if (n.op == Op::Not || n.op == Op::And || n.op == Op::Or) {
        n.left += off;
        n.right += off;
      }
      nodes_.push_back(n);
    }
    return nodes_.size() - 1;
  }

  Formula Formula::negate(Formula const& f) {
    Formula g;
    std::size_t a = g.append(f);
    g.nodes_.push_back(Node{Op::Not, 0, a, a});
    return g;
  }

  Formula Formula::conj(Formula const& f, Formula const& h) {
    Formula     g;
    std::size_t a = g.append(f);
    std::size_t b = g.append(h);
    g.nodes_.push_back(Node{Op::And, 0, a, b});
    return g;
  }

  Formula Formula::disj(Formula const& f, Formula const& h) {
    Formula     g;
    std::size_t a = g.append(f);
    std::size_t b = g.append(h);
    g.nodes_.push_back(Node{Op::Or, 0, a, b});
    return g;
  }

  std::size_t Formula::max_var() const noexcept {
    std::size_t m = 0;
    for (auto const& n : nodes_) {
      if (n.op == Op::Var) {
        m = std::max(m, n.var);
      }
    }
    return m;
  }

  std::size_t Formula::depth() const {
    std::vector<std::size_t> d(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Node const& n = nodes_[i];
      if (n.op == Op::Not) {
        d[i] = d[n.left] + 1;
      } else if (n.op == Op::And || n.op == Op::Or) {
        d[i] = std::max(d[n.left], d[n.right]) + 1;
      }
    }
    return d.back();
  }

  bool Formula::eval_bits(std::uint64_t a, std::size_t n) const {
    std::vector<std::uint8_t> v(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Node const& x = nodes_[i];
      switch (x.op) {
        case Op::Var:
          if (x.var > n) {
            throw Error("formula uses x" + std::to_string(x.var)
                        + " but only " + std::to_string(n)
                        + " variables are assigned");
          }
          v[i] = (a >> (n - x.var)) & 1u;
          break;
        case Op::Const:
          v[i] = static_cast<std::uint8_t>(x.var);
          break;
        case Op::Not:
          v[i] = !v[x.left];
          break;
        case Op::And:
          v[i] = v[x.left] && v[x.right];
          break;
        case Op::Or:
          v[i] = v[x.left] || v[x.right];
          break;
      }
    }
    return v.back() != 0;
  }

  bool Formula::eval(std::vector<bool> const& x) const {
    std::uint64_t a = 0;
    for (bool bit : x) {
      a = (a << 1) | (bit ? 1u : 0u);
    }
    return eval_bits(a, x.size());
  }

  std::size_t Formula::count_sat(std::size_t n) const {
    if (n > 30) {
      throw CapExceeded("count_sat: too many variables");
    }
    std::size_t c = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
      c += eval_bits(a, n) ? 1 : 0;
    }
    return c;
  }

  bool Formula::is_tautology(std::size_t n) const {
    return count_sat(n) == (std::size_t(1) << n);
  }

  std::string Formula::to_string() const {
    std::vector<std::string> s(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Node const& x = nodes_[i];
      switch (x.op) {
        case Op::Var:
          s[i] = "x" + std::to_string(x.var);
          break;
        case Op::Const:
          s[i] = x.var != 0 ? "1" : "0";
          break;
        case Op::Not:
          s[i] = "!" + s[x.left];
          break;
        case Op::And:
          s[i] = "(" + s[x.left] + " & " + s[x.right] + ")";
          break;
        case Op::Or:
          s[i] = "(" + s[x.left] + " | " + s[x.right] + ")";
          break;
      }
    }
    return s.back();
  }

}  // namespace thmon
