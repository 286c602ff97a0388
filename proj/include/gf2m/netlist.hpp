#pragma once

// Combinational gate netlists (XOR / AND / NAND) with a line-oriented text
// format:
//
//   # comment
//   INPUT a_0
//   GATE g0 XOR a_0 a_1
//   OUTPUT z_0 g0
//
// Gates are listed in topological order and named g0, g1, ... in emission
// order.  CONST0 names the constant-zero node.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gf2m {

enum class GateKind { Xor, And, Nand };

std::string_view gate_kind_name(GateKind kind) noexcept;

// -1 is CONST0; [0, inputs) are inputs; the rest are gates in order.
using NodeId = std::int32_t;
inline constexpr NodeId kConst0 = -1;
inline constexpr std::string_view kConst0Name = "CONST0";

struct Gate {
  GateKind kind;
  NodeId lhs;
  NodeId rhs;
};

struct OutputPort {
  std::string name;
  NodeId source;
};

struct GateCounts {
  std::size_t and_gates = 0;
  std::size_t nand_gates = 0;
  std::size_t xor_gates = 0;
  std::size_t total() const noexcept { return and_gates + nand_gates + xor_gates; }
};

// Longest input-to-output path, with the gate kinds it passes through.
struct PathStats {
  unsigned depth = 0;
  unsigned and_levels = 0;
  unsigned nand_levels = 0;
  unsigned xor_levels = 0;
};

// "T_A + 3T_X" style delay expression.
std::string format_delay(const PathStats& path);

class Netlist {
 public:
  const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<OutputPort>& outputs() const noexcept { return outputs_; }

  std::string node_name(NodeId id) const;
  GateCounts counts() const noexcept;
  PathStats critical_path() const;
  unsigned depth() const { return critical_path().depth; }

  // Bit-sliced evaluation: word i of `inputs` carries 64 independent
  // assignments of input i; returns one word per output.
  std::vector<std::uint64_t> simulate(std::span<const std::uint64_t> inputs) const;
  // Single assignment; bit i of `assignment` drives input i.
  std::vector<bool> simulate_one(const std::vector<bool>& assignment) const;

 private:
  friend class NetlistBuilder;
  friend Netlist parse_netlist(std::string_view text);

  std::vector<std::string> inputs_;
  std::vector<Gate> gates_;
  std::vector<OutputPort> outputs_;
};

class NetlistBuilder {
 public:
  NodeId input(std::string name);
  // Gate constructors fold CONST0 operands instead of emitting gates.
  NodeId xor_gate(NodeId a, NodeId b);
  NodeId and_gate(NodeId a, NodeId b);
  NodeId nand_gate(NodeId a, NodeId b);
  // a XOR b as NAND(NAND(a, t), NAND(t, b)) with t = NAND(a, b).
  NodeId xor_from_nands(NodeId a, NodeId b);
  // Balanced tree, pairing neighbours level by level in the given order.
  NodeId xor_tree(std::span<const NodeId> leaves);
  void output(std::string name, NodeId source);

  Netlist build() &&;

 private:
  NodeId add_gate(GateKind kind, NodeId a, NodeId b);
  Netlist net_;
};

std::string to_text(const Netlist& net, std::string_view title = {});
std::string to_json(const Netlist& net, std::string_view title = {});
// Throws ParseError on malformed input, forward references or unknown names.
Netlist parse_netlist(std::string_view text);

}  // namespace gf2m
