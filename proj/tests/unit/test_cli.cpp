#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless `merge` is set.
Run gf2m_cli(const std::string& args, bool merge = false) {
  const std::string cmd = std::string("'") + GF2M_CLI_PATH + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden_path(const std::string& name) { return std::string("'") + GOLDEN_DIR + "/" + name + "'"; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("Table 2 golden") {
    const Run r = gf2m_cli("field table --m 4");
    CHECK(r.status == 0);
    CHECK(r.out == golden("field_table_m4.txt"));
  }

  TEST_CASE("Table 6 golden, all three polynomial encodings") {
    const std::string expect = golden("lfsr_table6.txt");
    CHECK(gf2m_cli("lfsr divide --g 101101 --p 11001110 --trace table").out == expect);
    CHECK(gf2m_cli("lfsr divide --g 0x2d --p 0xce --trace table").out == expect);
    CHECK(gf2m_cli("lfsr divide --g x^5+x^3+x^2+1 --p x^7+x^6+x^3+x^2+x --trace table").out == expect);
  }

  TEST_CASE("alpha^13 constant multiplier golden") {
    const Run r = gf2m_cli("constmul --m 4 --power 13 --emit equations");
    CHECK(r.status == 0);
    CHECK(r.out == golden("constmul_m4_p13.txt"));
  }

  TEST_CASE("triple repetition code") {
    const Run r = gf2m_cli("code analyze --words " + golden_path("triple_repetition.txt") + " --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["d_min"] == "3");
    CHECK(j["detect"] == "2");
    CHECK(j["correct"] == "1");
    CHECK(j["rate"] == "1/3");
  }

  TEST_CASE("gate report shows exact counts beside the estimate") {
    const Run r = gf2m_cli("report gates --m 4 --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["estimate"] == "4");
    CHECK(j["rows"].size() == 14);
    CHECK(j["rows"][12]["xor_gates"] == "3");
  }

  TEST_CASE("exit codes") {
    CHECK(gf2m_cli("--help").status == 0);
    CHECK(gf2m_cli("").status == 2);
    CHECK(gf2m_cli("field table").status == 2);
    CHECK(gf2m_cli("field table --m 40").status == 2);
    CHECK(gf2m_cli("field table --m 4 --poly x^4+x^2+1").status == 2);
    CHECK(gf2m_cli("field inverse --m 4 --a 0").status == 2);
    CHECK(gf2m_cli("lfsr divide --g x^3+x --p 101").status == 2);
    CHECK(gf2m_cli("report complexity --m 4 --k 2").status == 2);
    const Run err = gf2m_cli("poly check --poly 12", true);
    CHECK(err.status == 2);
    CHECK(err.out.rfind("error: ", 0) == 0);
  }

  TEST_CASE("identical invocations give identical bytes") {
    for (const char* args : {"field table --m 6 --format json", "mastrovito --m 5 --emit multiplier",
                             "report complexity --m 7 --k 1", "bases --m 4 --format csv", "errata --format json"}) {
      CAPTURE(args);
      const Run a = gf2m_cli(args), b = gf2m_cli(args);
      CHECK(a.status == 0);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("json and csv outputs") {
    const auto j = nlohmann::json::parse(gf2m_cli("field table --m 3 --format json").out);
    CHECK(j["m"] == 3);
    CHECK(j["rows"].size() == 8);
    const std::string csv = gf2m_cli("minpolys --m 4 --format csv").out;
    CHECK(csv.rfind("Elements of Field,Minimal Polynomial\n", 0) == 0);
    CHECK(csv.find("1 + X + X^2 + X^3 + X^4") != std::string::npos);
    const auto ops = nlohmann::json::parse(gf2m_cli("field ops --m 4 --a alpha^7 --b alpha^10 --format json").out);
    CHECK(ops["a + b"] == "α^6 = α^3 + α^2 (1100)");
  }

  TEST_CASE("ascii notation") {
    const std::string out = gf2m_cli("field table --m 4 --ascii").out;
    CHECK(out.find("α") == std::string::npos);
    CHECK(out.find("a^3 + a + 1") != std::string::npos);
  }

  TEST_CASE("netlist output parses and matches the circuit counts") {
    const Run r = gf2m_cli("constmul --m 4 --power 13 --emit netlist");
    CHECK(r.status == 0);
    std::size_t gates = 0;
    std::istringstream ss(r.out);
    for (std::string line; std::getline(ss, line);) gates += line.rfind("GATE ", 0) == 0;
    CHECK(gates == 3);
  }
}
