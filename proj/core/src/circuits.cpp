#include "thmon/circuits.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "thmon/error.hpp"

namespace thmon {

  namespace {

    constexpr std::uint8_t bottom = 2;

    void check_cap(std::size_t m, std::uint64_t cap) {
      if (m >= 63 || (std::uint64_t(1) << m) > cap) {
        throw CapExceeded("enumeration of 2^" + std::to_string(m)
                          + " inputs exceeds the cap of "
                          + std::to_string(cap) + " evaluations");
      }
    }

    std::vector<std::size_t> copies(Circuit& c, std::size_t w, std::size_t n) {
      std::vector<std::size_t> out;
      if (n == 0) {
        return out;
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        auto f = c.add_gate(GateKind::Fork, {w});
        out.push_back(f[0]);
        w = f[1];
      }
      out.push_back(w);
      return out;
    }

    // Wires carrying B; pools[v] holds unread copies of x_v.
    std::size_t compile(Circuit&                               c,
                        Formula const&                         b,
                        std::vector<std::vector<std::size_t>>& pools) {
      auto take = [&](std::size_t v) {
        if (v >= pools.size() || pools[v].empty()) {
          throw Error("formula uses x" + std::to_string(v)
                      + " beyond the declared inputs");
        }
        std::size_t w = pools[v].back();
        pools[v].pop_back();
        return w;
      };
      auto const&              nodes = b.nodes();
      std::vector<std::size_t> wire(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto const& n = nodes[i];
        switch (n.op) {
          case Formula::Op::Var:
            wire[i] = take(n.var);
            break;
          case Formula::Op::Const: {
            auto f   = c.add_gate(GateKind::Fork, {take(1)});
            auto neg = c.add_gate(GateKind::Not, {f[1]});
            wire[i]  = c.add_gate(n.var != 0 ? GateKind::Or : GateKind::And,
                                 {f[0], neg[0]})[0];
            break;
          }
          case Formula::Op::Not:
            wire[i] = c.add_gate(GateKind::Not, {wire[n.left]})[0];
            break;
          case Formula::Op::And:
            wire[i] = c.add_gate(GateKind::And, {wire[n.left], wire[n.right]})[0];
            break;
          case Formula::Op::Or:
            wire[i] = c.add_gate(GateKind::Or, {wire[n.left], wire[n.right]})[0];
            break;
        }
      }
      return wire.back();
    }

    std::vector<std::size_t> uses(Formula const& b, std::size_t m) {
      std::vector<std::size_t> u(m + 1, 0);
      for (auto const& n : b.nodes()) {
        if (n.op == Formula::Op::Var) {
          if (n.var > m) {
            throw Error("formula uses x" + std::to_string(n.var) + " but only "
                        + std::to_string(m) + " inputs are declared");
          }
          ++u[n.var];
        } else if (n.op == Formula::Op::Const) {
          if (m == 0) {
            throw Error("constants need at least one input variable");
          }
          ++u[1];
        }
      }
      return u;
    }

    // Inputs x_1..x_m with copy pools sized by the given use counts.
    std::vector<std::vector<std::size_t>> make_inputs(
        Circuit&                        c,
        std::vector<std::size_t> const& u) {
      std::vector<std::vector<std::size_t>> pools(u.size());
      for (std::size_t v = 1; v < u.size(); ++v) {
        std::size_t w = c.add_input();
        pools[v]      = copies(c, w, u[v]);
      }
      return pools;
    }

  }  // namespace

  std::string to_string(GateKind g) {
    switch (g) {
      case GateKind::And:
        return "AND";
      case GateKind::Or:
        return "OR";
      case GateKind::Not:
        return "NOT";
      case GateKind::Fork:
        return "FORK";
      case GateKind::Cross:
        return "CROSS";
      case GateKind::Id1:
        return "ID1";
    }
    return "?";
  }

  std::optional<GateKind> parse_gate_kind(std::string_view s) {
    for (auto g : {GateKind::And,
                   GateKind::Or,
                   GateKind::Not,
                   GateKind::Fork,
                   GateKind::Cross,
                   GateKind::Id1}) {
      if (to_string(g) == s) {
        return g;
      }
    }
    return std::nullopt;
  }

  std::size_t gate_inputs(GateKind g) {
    return (g == GateKind::And || g == GateKind::Or || g == GateKind::Cross)
               ? 2
               : 1;
  }

  std::size_t gate_outputs(GateKind g) {
    return (g == GateKind::Fork || g == GateKind::Cross) ? 2 : 1;
  }

  std::string EvalResult::to_string() const {
    if (!defined) {
      return "bottom";
    }
    std::string s;
    for (std::size_t i = 0; i < width; ++i) {
      s += ((bits >> (width - 1 - i)) & 1u) != 0 ? '1' : '0';
    }
    return width == 0 ? "^" : s;
  }

  std::size_t Circuit::new_wire() {
    read_.push_back(false);
    return wires_++;
  }

  void Circuit::read(std::size_t wire) {
    if (wire >= wires_) {
      throw Error("wire " + std::to_string(wire) + " has no driver");
    }
    if (read_[wire]) {
      throw Error("wire " + std::to_string(wire)
                  + " is read twice; fan-out needs FORK");
    }
    read_[wire] = true;
  }

  std::size_t Circuit::add_input() {
    if (inputs_.size() >= 62) {
      throw Error("too many circuit inputs");
    }
    std::size_t w = new_wire();
    inputs_.push_back(w);
    return w;
  }

  std::vector<std::size_t> Circuit::add_gate(
      GateKind                        kind,
      std::vector<std::size_t> const& in) {
    if (in.size() != gate_inputs(kind)) {
      throw Error(to_string(kind) + " takes " + std::to_string(gate_inputs(kind))
                  + " inputs");
    }
    for (auto w : in) {
      read(w);
    }
    Gate g{kind, in, {}};
    for (std::size_t i = 0; i < gate_outputs(kind); ++i) {
      g.out.push_back(new_wire());
    }
    gates_.push_back(g);
    return gates_.back().out;
  }

  void Circuit::add_output(std::size_t wire) {
    if (outputs_.size() >= 64) {
      throw Error("too many circuit outputs");
    }
    read(wire);
    outputs_.push_back(wire);
  }

  EvalResult Circuit::eval(std::uint64_t x) const {
    std::vector<std::uint8_t> v(wires_, 0);
    std::size_t const         m = inputs_.size();
    for (std::size_t i = 0; i < m; ++i) {
      v[inputs_[i]] = (x >> (m - 1 - i)) & 1u;
    }
    for (auto const& g : gates_) {
      std::uint8_t a = v[g.in[0]];
      std::uint8_t b = g.in.size() > 1 ? v[g.in[1]] : 0;
      if (a == bottom || b == bottom) {
        for (auto w : g.out) {
          v[w] = bottom;
        }
        continue;
      }
      switch (g.kind) {
        case GateKind::And:
          v[g.out[0]] = a & b;
          break;
        case GateKind::Or:
          v[g.out[0]] = a | b;
          break;
        case GateKind::Not:
          v[g.out[0]] = a ^ 1u;
          break;
        case GateKind::Fork:
          v[g.out[0]] = v[g.out[1]] = a;
          break;
        case GateKind::Cross:
          v[g.out[0]] = b;
          v[g.out[1]] = a;
          break;
        case GateKind::Id1:
          v[g.out[0]] = a == 1 ? 1 : bottom;
          break;
      }
    }
    EvalResult r{true, 0, outputs_.size()};
    for (auto w : outputs_) {
      if (v[w] == bottom) {
        return EvalResult{false, 0, outputs_.size()};
      }
      r.bits = (r.bits << 1) | v[w];
    }
    return r;
  }

  Circuit read_netlist(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto        fail   = [&](std::string const& msg) -> Error {
      return Error("netlist line " + std::to_string(lineno) + ": " + msg);
    };
    bool                               header = false;
    Circuit                            c;
    std::map<std::string, std::size_t> wire;
    std::vector<std::string>           outs;
    auto lookup = [&](std::string const& name) {
      auto it = wire.find(name);
      if (it == wire.end()) {
        throw fail("wire '" + name + "' is used before it is driven");
      }
      return it->second;
    };
    auto define = [&](std::string const& name, std::size_t w) {
      if (!wire.emplace(name, w).second) {
        throw fail("wire '" + name + "' has two drivers");
      }
    };
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
      if (!header) {
        if (tok.size() != 2 || tok[0] != "netlist" || tok[1] != "v1") {
          throw fail("expected header 'netlist v1'");
        }
        header = true;
        continue;
      }
      if (tok[0] == "inputs") {
        if (c.num_inputs() != 0 || !c.gates().empty()) {
          throw fail("inputs must be declared once, before any gate");
        }
        for (std::size_t i = 1; i < tok.size(); ++i) {
          define(tok[i], c.add_input());
        }
      } else if (tok[0] == "outputs") {
        outs.insert(outs.end(), tok.begin() + 1, tok.end());
      } else if (tok[0] == "gate") {
        if (tok.size() < 3) {
          throw fail("gate needs a name and a kind");
        }
        auto kind = parse_gate_kind(tok[2]);
        if (!kind) {
          throw fail("unknown gate kind '" + tok[2] + "'");
        }
        std::size_t arrow = 3;
        while (arrow < tok.size() && tok[arrow] != "->") {
          ++arrow;
        }
        if (arrow == tok.size()) {
          throw fail("missing '->'");
        }
        std::vector<std::size_t> ins;
        for (std::size_t i = 3; i < arrow; ++i) {
          ins.push_back(lookup(tok[i]));
        }
        if (ins.size() != gate_inputs(*kind)
            || tok.size() - arrow - 1 != gate_outputs(*kind)) {
          throw fail("wrong number of wires for " + tok[2]);
        }
        std::vector<std::size_t> got;
        try {
          got = c.add_gate(*kind, ins);
        } catch (Error const& e) {
          throw fail(e.what());
        }
        for (std::size_t i = 0; i < got.size(); ++i) {
          define(tok[arrow + 1 + i], got[i]);
        }
      } else {
        throw fail("unknown directive '" + tok[0] + "'");
      }
    }
    if (!header) {
      throw Error("netlist: empty input");
    }
    for (auto const& o : outs) {
      try {
        c.add_output(lookup(o));
      } catch (Error const& e) {
        throw Error(std::string("netlist outputs: ") + e.what());
      }
    }
    return c;
  }

  Circuit read_netlist_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open netlist '" + path + "'");
    }
    return read_netlist(in);
  }

  std::string write_netlist(Circuit const& c) {
    auto        name = [](std::size_t w) { return "w" + std::to_string(w); };
    std::string s    = "netlist v1\ninputs";
    for (auto w : c.inputs()) {
      s += " " + name(w);
    }
    s += "\noutputs";
    for (auto w : c.outputs()) {
      s += " " + name(w);
    }
    s += "\n";
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
      auto const& g = c.gates()[i];
      s += "gate g" + std::to_string(i) + " " + to_string(g.kind);
      for (auto w : g.in) {
        s += " " + name(w);
      }
      s += " ->";
      for (auto w : g.out) {
        s += " " + name(w);
      }
      s += "\n";
    }
    return s;
  }

  std::set<std::uint64_t> image(Circuit const& c, std::uint64_t cap) {
    check_cap(c.num_inputs(), cap);
    std::set<std::uint64_t> out;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << c.num_inputs()); ++x) {
      EvalResult r = c.eval(x);
      if (r.defined) {
        out.insert(r.bits);
      }
    }
    return out;
  }

  std::size_t image_size(Circuit const& c, std::uint64_t cap) {
    return image(c, cap).size();
  }

  bool image_size_mod(Circuit const& c, std::size_t h, std::uint64_t cap) {
    if (h < 2) {
      throw Error("modulus must be at least 2");
    }
    return image_size(c, cap) % h == 1;
  }

  std::size_t domain_size(Circuit const& c, std::uint64_t cap) {
    check_cap(c.num_inputs(), cap);
    std::size_t n = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << c.num_inputs()); ++x) {
      n += c.eval(x).defined ? 1 : 0;
    }
    return n;
  }

  bool domain_size_mod(Circuit const& c, std::size_t h, std::uint64_t cap) {
    if (h < 2) {
      throw Error("modulus must be at least 2");
    }
    return domain_size(c, cap) % h == 1;
  }

  Circuit formula_to_circuit(Formula const& b, std::size_t m) {
    Circuit c;
    auto    pools = make_inputs(c, uses(b, m));
    c.add_output(compile(c, b, pools));
    return c;
  }

  Circuit c_gadget(Formula const& b, std::size_t m, std::size_t n) {
    if (n == 0) {
      throw Error("c_gadget: needs at least one output variable");
    }
    std::vector<std::size_t> u = uses(b, m + n);
    for (std::size_t v = m + 1; v <= m + n; ++v) {
      ++u[v];  // one more copy of each y bit for the output mask
    }
    Circuit c;
    auto    pools = make_inputs(c, u);
    std::vector<std::size_t> mask;
    for (std::size_t v = m + 1; v <= m + n; ++v) {
      mask.push_back(pools[v].front());
      pools[v].erase(pools[v].begin());
    }
    std::size_t gate = c.add_gate(GateKind::Id1, {compile(c, b, pools)})[0];
    auto        rep  = copies(c, gate, n);
    for (std::size_t j = 0; j < n; ++j) {
      c.add_output(c.add_gate(GateKind::And, {rep[j], mask[j]})[0]);
    }
    return c;
  }

  Circuit domain_gadget(Formula const& b, std::size_t m) {
    Circuit c;
    auto    pools = make_inputs(c, uses(b, m));
    c.add_output(c.add_gate(GateKind::Id1, {compile(c, b, pools)})[0]);
    return c;
  }

  Element circuit_to_element(Circuit const& c, unsigned k, std::uint64_t cap) {
    check_cap(c.num_inputs(), cap);
    auto word_of = [](std::uint64_t bits, std::size_t n) {
      Word w;
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(static_cast<Letter>((bits >> (n - 1 - i)) & 1u));
      }
      return w;
    };
    std::vector<Entry> entries;
    std::size_t const  m = c.num_inputs();
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << m); ++x) {
      EvalResult r = c.eval(x);
      if (r.defined) {
        entries.push_back(Entry{word_of(x, m), word_of(r.bits, r.width)});
      }
    }
    return canonicalize(Table(Alphabet{k, 0}, std::move(entries)));
  }

}  // namespace thmon
