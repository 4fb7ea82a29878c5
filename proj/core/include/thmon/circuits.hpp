#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thmon/formula.hpp"
#include "thmon/morphisms.hpp"

namespace thmon {

  enum class GateKind : std::uint8_t { And, Or, Not, Fork, Cross, Id1 };

  std::string              to_string(GateKind g);
  std::optional<GateKind>  parse_gate_kind(std::string_view s);
  std::size_t              gate_inputs(GateKind g);
  std::size_t              gate_outputs(GateKind g);

  struct Gate {
    GateKind                 kind;
    std::vector<std::size_t> in;
    std::vector<std::size_t> out;
  };

  // Outcome of one evaluation: either bottom or an n-bit string with the
  // first output as the most significant bit.
  struct EvalResult {
    bool          defined = false;
    std::uint64_t bits    = 0;
    std::size_t   width   = 0;

    std::string to_string() const;
  };

  inline constexpr std::uint64_t default_eval_cap = std::uint64_t(1) << 24;

  // Acyclic gate network in which every wire has one driver and at most one
  // reader.  Fan-out goes through FORK.  ID1 turns 0 into bottom, and a
  // bottom anywhere in a gate's inputs makes all its outputs bottom; a
  // bottom on any output wire makes the whole output bottom.
  class Circuit {
   public:
    std::size_t              add_input();
    std::vector<std::size_t> add_gate(GateKind kind,
                                      std::vector<std::size_t> const& in);
    void                     add_output(std::size_t wire);

    std::size_t num_inputs() const noexcept {
      return inputs_.size();
    }
    std::size_t num_outputs() const noexcept {
      return outputs_.size();
    }
    std::size_t num_wires() const noexcept {
      return wires_;
    }
    std::vector<std::size_t> const& inputs() const noexcept {
      return inputs_;
    }
    std::vector<std::size_t> const& outputs() const noexcept {
      return outputs_;
    }
    std::vector<Gate> const& gates() const noexcept {
      return gates_;
    }

    // x_1 is the most significant of the m low bits of x.
    EvalResult eval(std::uint64_t x) const;

   private:
    std::size_t new_wire();
    void        read(std::size_t wire);

    std::size_t              wires_ = 0;
    std::vector<bool>        read_;
    std::vector<std::size_t> inputs_;
    std::vector<std::size_t> outputs_;
    std::vector<Gate>        gates_;
  };

  // Netlist text format:
  //   netlist v1
  //   inputs <wire>...
  //   outputs <wire>...
  //   gate <name> <KIND> <in-wire>... -> <out-wire>...
  // Gates must appear in evaluation order; '#' starts a comment.
  Circuit     read_netlist(std::istream& in);
  Circuit     read_netlist_file(std::string const& path);
  std::string write_netlist(Circuit const& c);

  std::set<std::uint64_t> image(Circuit const& c,
                                std::uint64_t  cap = default_eval_cap);
  std::size_t image_size(Circuit const& c, std::uint64_t cap = default_eval_cap);
  // |image| = 1 mod h
  bool        image_size_mod(Circuit const& c,
                             std::size_t    h,
                             std::uint64_t  cap = default_eval_cap);
  std::size_t domain_size(Circuit const& c,
                          std::uint64_t  cap = default_eval_cap);
  // |domain| = 1 mod h
  bool domain_size_mod(Circuit const& c,
                       std::size_t    h,
                       std::uint64_t  cap = default_eval_cap);

  // Single-output circuit computing B over m inputs (m >= B.max_var()).
  Circuit formula_to_circuit(Formula const& b, std::size_t m);

  // Inputs x (m bits) then y (n bits); outputs y when B(x, y) = 1, bottom
  // otherwise.  Image size equals the number of y with some x making B true.
  Circuit c_gadget(Formula const& b, std::size_t m, std::size_t n);

  // One output 1 when B = 1, bottom otherwise.  Domain size is #sat(B).
  Circuit domain_gadget(Formula const& b, std::size_t m);

  // Table {x -> C(x)} over the letters a_1 = 0, a_2 = 1 of a k-letter
  // alphabet, restricted to inputs where C is defined.
  Element circuit_to_element(Circuit const& c,
                             unsigned       k   = 2,
                             std::uint64_t  cap = default_eval_cap);

}  // namespace thmon
