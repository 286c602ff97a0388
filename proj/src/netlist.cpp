#include "gf2m/netlist.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gf2m/error.hpp"

namespace gf2m {

std::string_view gate_kind_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Xor: return "XOR";
    case GateKind::And: return "AND";
    case GateKind::Nand: return "NAND";
  }
  return "?";
}

std::string format_delay(const PathStats& path) {
  std::string out;
  auto term = [&out](unsigned n, std::string_view sym) {
    if (n == 0) return;
    if (!out.empty()) out += " + ";
    if (n > 1) out += std::to_string(n);
    out += sym;
  };
  term(path.and_levels, "T_A");
  term(path.nand_levels, "T_N");
  term(path.xor_levels, "T_X");
  return out.empty() ? "0" : out;
}

std::string Netlist::node_name(NodeId id) const {
  if (id == kConst0) return std::string(kConst0Name);
  const auto n_inputs = static_cast<NodeId>(inputs_.size());
  if (id < n_inputs) return inputs_[static_cast<std::size_t>(id)];
  return "g" + std::to_string(id - n_inputs);
}

GateCounts Netlist::counts() const noexcept {
  GateCounts c;
  for (const auto& g : gates_) {
    switch (g.kind) {
      case GateKind::And: ++c.and_gates; break;
      case GateKind::Nand: ++c.nand_gates; break;
      case GateKind::Xor: ++c.xor_gates; break;
    }
  }
  return c;
}

PathStats Netlist::critical_path() const {
  const std::size_t n_inputs = inputs_.size();
  std::vector<PathStats> at(n_inputs + gates_.size());
  auto stats_of = [&](NodeId id) { return id == kConst0 ? PathStats{} : at[static_cast<std::size_t>(id)]; };
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    const auto& g = gates_[k];
    const PathStats l = stats_of(g.lhs);
    const PathStats r = stats_of(g.rhs);
    PathStats s = r.depth > l.depth ? r : l;
    ++s.depth;
    switch (g.kind) {
      case GateKind::And: ++s.and_levels; break;
      case GateKind::Nand: ++s.nand_levels; break;
      case GateKind::Xor: ++s.xor_levels; break;
    }
    at[n_inputs + k] = s;
  }
  PathStats worst;
  for (const auto& o : outputs_) {
    const PathStats s = stats_of(o.source);
    if (s.depth > worst.depth) worst = s;
  }
  return worst;
}

std::vector<std::uint64_t> Netlist::simulate(std::span<const std::uint64_t> inputs) const {
  if (inputs.size() != inputs_.size())
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(inputs_.size()) + " input words");
  std::vector<std::uint64_t> value(inputs_.size() + gates_.size());
  std::copy(inputs.begin(), inputs.end(), value.begin());
  auto v = [&](NodeId id) { return id == kConst0 ? std::uint64_t{0} : value[static_cast<std::size_t>(id)]; };
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    const auto& g = gates_[k];
    const std::uint64_t a = v(g.lhs);
    const std::uint64_t b = v(g.rhs);
    std::uint64_t out = 0;
    switch (g.kind) {
      case GateKind::Xor: out = a ^ b; break;
      case GateKind::And: out = a & b; break;
      case GateKind::Nand: out = ~(a & b); break;
    }
    value[inputs_.size() + k] = out;
  }
  std::vector<std::uint64_t> outs;
  outs.reserve(outputs_.size());
  for (const auto& o : outputs_) outs.push_back(v(o.source));
  return outs;
}

std::vector<bool> Netlist::simulate_one(const std::vector<bool>& assignment) const {
  std::vector<std::uint64_t> words(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) words[i] = assignment[i] ? 1 : 0;
  std::vector<bool> out;
  for (std::uint64_t w : simulate(words)) out.push_back(w & 1U);
  return out;
}

NodeId NetlistBuilder::input(std::string name) {
  if (!net_.gates_.empty()) throw Error(Errc::InvalidArgument, "inputs must be declared before gates");
  net_.inputs_.push_back(std::move(name));
  return static_cast<NodeId>(net_.inputs_.size() - 1);
}

NodeId NetlistBuilder::add_gate(GateKind kind, NodeId a, NodeId b) {
  net_.gates_.push_back(Gate{kind, a, b});
  return static_cast<NodeId>(net_.inputs_.size() + net_.gates_.size() - 1);
}

NodeId NetlistBuilder::xor_gate(NodeId a, NodeId b) {
  if (a == kConst0) return b;
  if (b == kConst0) return a;
  return add_gate(GateKind::Xor, a, b);
}

NodeId NetlistBuilder::and_gate(NodeId a, NodeId b) {
  if (a == kConst0 || b == kConst0) return kConst0;
  return add_gate(GateKind::And, a, b);
}

NodeId NetlistBuilder::nand_gate(NodeId a, NodeId b) { return add_gate(GateKind::Nand, a, b); }

NodeId NetlistBuilder::xor_from_nands(NodeId a, NodeId b) {
  if (a == kConst0) return b;
  if (b == kConst0) return a;
  const NodeId t = nand_gate(a, b);
  const NodeId u = nand_gate(a, t);
  const NodeId v = nand_gate(t, b);
  return nand_gate(u, v);
}

NodeId NetlistBuilder::xor_tree(std::span<const NodeId> leaves) {
  std::vector<NodeId> level;
  for (NodeId id : leaves) {
    if (id != kConst0) level.push_back(id);
  }
  if (level.empty()) return kConst0;
  while (level.size() > 1) {
    std::vector<NodeId> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(xor_gate(level[i], level[i + 1]));
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

void NetlistBuilder::output(std::string name, NodeId source) {
  net_.outputs_.push_back(OutputPort{std::move(name), source});
}

Netlist NetlistBuilder::build() && { return std::move(net_); }

std::string to_text(const Netlist& net, std::string_view title) {
  std::ostringstream os;
  if (!title.empty()) os << "# " << title << '\n';
  const auto c = net.counts();
  const auto path = net.critical_path();
  os << "# gates: AND=" << c.and_gates << " NAND=" << c.nand_gates << " XOR=" << c.xor_gates
     << " depth=" << path.depth << " (" << format_delay(path) << ")\n";
  for (const auto& in : net.inputs()) os << "INPUT " << in << '\n';
  const auto n_inputs = static_cast<NodeId>(net.inputs().size());
  for (std::size_t k = 0; k < net.gates().size(); ++k) {
    const auto& g = net.gates()[k];
    os << "GATE " << net.node_name(n_inputs + static_cast<NodeId>(k)) << ' ' << gate_kind_name(g.kind) << ' '
       << net.node_name(g.lhs) << ' ' << net.node_name(g.rhs) << '\n';
  }
  for (const auto& o : net.outputs()) os << "OUTPUT " << o.name << ' ' << net.node_name(o.source) << '\n';
  return os.str();
}

std::string to_json(const Netlist& net, std::string_view title) {
  nlohmann::ordered_json j;
  j["title"] = std::string(title);
  j["inputs"] = net.inputs();
  auto gates = nlohmann::ordered_json::array();
  const auto n_inputs = static_cast<NodeId>(net.inputs().size());
  for (std::size_t k = 0; k < net.gates().size(); ++k) {
    const auto& g = net.gates()[k];
    nlohmann::ordered_json gj;
    gj["id"] = net.node_name(n_inputs + static_cast<NodeId>(k));
    gj["kind"] = std::string(gate_kind_name(g.kind));
    gj["fanin"] = {net.node_name(g.lhs), net.node_name(g.rhs)};
    gates.push_back(std::move(gj));
  }
  j["gates"] = std::move(gates);
  auto outs = nlohmann::ordered_json::array();
  for (const auto& o : net.outputs()) outs.push_back({{"port", o.name}, {"source", net.node_name(o.source)}});
  j["outputs"] = std::move(outs);
  const auto c = net.counts();
  j["counts"] = {{"and", c.and_gates}, {"nand", c.nand_gates}, {"xor", c.xor_gates}};
  const auto path = net.critical_path();
  j["depth"] = path.depth;
  j["critical_path"] = format_delay(path);
  return j.dump(2) + "\n";
}

Netlist parse_netlist(std::string_view text) {
  Netlist net;
  std::map<std::string, NodeId, std::less<>> names;
  names.emplace(std::string(kConst0Name), kConst0);
  auto lookup = [&names](const std::string& name, std::size_t line_no) {
    const auto it = names.find(name);
    if (it == names.end())
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unknown node '" + name + "'");
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::vector<std::string> args;
    for (std::string tok; ls >> tok;) args.push_back(tok);
    auto expect = [&](std::size_t n) {
      if (args.size() != n)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + keyword + " takes " +
                                          std::to_string(n) + " fields");
    };
    if (keyword == "INPUT") {
      expect(1);
      if (!net.gates_.empty()) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": INPUT after GATE");
      if (!names.emplace(args[0], static_cast<NodeId>(net.inputs_.size())).second)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": duplicate name " + args[0]);
      net.inputs_.push_back(args[0]);
    } else if (keyword == "GATE") {
      expect(4);
      const std::string expected_id = "g" + std::to_string(net.gates_.size());
      if (args[0] != expected_id)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected gate id " + expected_id);
      GateKind kind;
      if (args[1] == "XOR") {
        kind = GateKind::Xor;
      } else if (args[1] == "AND") {
        kind = GateKind::And;
      } else if (args[1] == "NAND") {
        kind = GateKind::Nand;
      } else {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unknown gate kind " + args[1]);
      }
      const NodeId lhs = lookup(args[2], line_no);
      const NodeId rhs = lookup(args[3], line_no);
      net.gates_.push_back(Gate{kind, lhs, rhs});
      names.emplace(args[0], static_cast<NodeId>(net.inputs_.size() + net.gates_.size() - 1));
    } else if (keyword == "OUTPUT") {
      expect(2);
      net.outputs_.push_back(OutputPort{args[0], lookup(args[1], line_no)});
    } else {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unknown keyword " + keyword);
    }
  }
  return net;
}

}  // namespace gf2m
