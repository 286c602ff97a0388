#include <doctest.h>

#include <json.hpp>

#include "gf2m/error.hpp"
#include "gf2m/netlist.hpp"

using namespace gf2m;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected gf2m::Error");
  return Errc::InvariantViolation;
}

}  // namespace

TEST_SUITE("netlist") {
  TEST_CASE("constant folding") {
    NetlistBuilder nb;
    const NodeId a = nb.input("a");
    CHECK(nb.xor_gate(a, kConst0) == a);
    CHECK(nb.xor_gate(kConst0, a) == a);
    CHECK(nb.and_gate(a, kConst0) == kConst0);
    CHECK(nb.xor_tree({}) == kConst0);
    const NodeId leaves[] = {a};
    CHECK(nb.xor_tree(leaves) == a);
    nb.output("z", kConst0);
    const Netlist net = std::move(nb).build();
    CHECK(net.gates().empty());
    CHECK(net.simulate_one({true})[0] == false);
    CHECK(net.node_name(kConst0) == "CONST0");
  }

  TEST_CASE("balanced trees have logarithmic depth") {
    for (unsigned n = 1; n <= 33; ++n) {
      NetlistBuilder nb;
      std::vector<NodeId> leaves;
      for (unsigned i = 0; i < n; ++i) leaves.push_back(nb.input("x" + std::to_string(i)));
      nb.output("p", nb.xor_tree(leaves));
      const Netlist net = std::move(nb).build();
      CHECK(net.counts().xor_gates == n - 1);
      unsigned levels = 0;
      while ((1U << levels) < n) ++levels;
      CHECK(net.depth() == levels);
      std::vector<std::uint64_t> in(n);
      for (unsigned i = 0; i < n; ++i) in[i] = 0x9e3779b97f4a7c15ULL * (i + 1);
      std::uint64_t parity = 0;
      for (auto w : in) parity ^= w;
      CHECK(net.simulate(in)[0] == parity);
    }
  }

  TEST_CASE("delay expressions") {
    CHECK(format_delay({3, 1, 0, 2}) == "T_A + 2T_X");
    CHECK(format_delay({6, 0, 6, 0}) == "6T_N");
    CHECK(format_delay({1, 0, 0, 1}) == "T_X");
    CHECK(format_delay({0, 0, 0, 0}) == "0");
  }

  TEST_CASE("text round trip and parse errors") {
    const char* text =
        "# sample\n"
        "INPUT a_0\n"
        "INPUT a_1\n"
        "GATE g0 XOR a_0 a_1\n"
        "GATE g1 NAND g0 a_1\n"
        "OUTPUT z_0 g1\n"
        "OUTPUT z_1 CONST0\n";
    const Netlist net = parse_netlist(text);
    CHECK(net.inputs().size() == 2);
    CHECK(net.gates().size() == 2);
    CHECK(parse_netlist(to_text(net)).gates().size() == 2);
    CHECK(to_text(parse_netlist(to_text(net))) == to_text(net));
    CHECK(net.simulate_one({true, false}) == std::vector<bool>{true, false});
    CHECK(net.simulate_one({true, true}) == std::vector<bool>{true, false});
    CHECK(net.simulate_one({false, true}) == std::vector<bool>{false, false});
    CHECK(code_of([] { parse_netlist("GATE g0 XOR a b\n"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_netlist("INPUT a\nGATE g0 OR a a\n"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_netlist("INPUT a\nFROB\n"); }) == Errc::ParseError);
  }

  TEST_CASE("json form") {
    NetlistBuilder nb;
    const NodeId a = nb.input("a"), b = nb.input("b");
    nb.output("y", nb.and_gate(a, b));
    const Netlist net = std::move(nb).build();
    const auto j = nlohmann::json::parse(to_json(net, "and"));
    CHECK(j["inputs"].size() == 2);
    CHECK(j["gates"].size() == 1);
    CHECK(j["outputs"].size() == 1);
  }
}
