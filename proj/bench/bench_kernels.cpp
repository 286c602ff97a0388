// Serial reference kernels against their OpenMP counterparts.
//
//   gf2m_bench [--quick] [--m M] [--pairs N] [--repeat R]
//
// Every timed pair is also compared for identical output; a mismatch makes
// the run fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "gf2m/field.hpp"
#include "gf2m/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double best_ms(int repeat, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

struct Row {
  std::string kernel;
  double serial_ms;
  double omp_ms;
  bool same;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-28s %12s %12s %8s %6s\n", "kernel", "serial ms", "omp ms", "speedup", "match");
  for (const auto& r : rows) {
    std::printf("%-28s %12.3f %12.3f %8.2f %6s\n", r.kernel.c_str(), r.serial_ms, r.omp_ms,
                r.omp_ms > 0 ? r.serial_ms / r.omp_ms : 0.0, r.same ? "yes" : "NO");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel timings"};
  bool quick = false;
  unsigned m = 16;
  std::size_t pairs = 1 << 20;
  int repeat = 3;
  unsigned sweep_m = 8;
  app.add_flag("--quick", quick, "Small sizes, single repetition (used as a smoke test)");
  app.add_option("--m", m, "Field degree for the bulk multiply kernels")->check(CLI::Range(2u, 32u));
  app.add_option("--pairs", pairs, "Operand pairs per bulk multiply");
  app.add_option("--repeat", repeat, "Repetitions; the best time is reported")->check(CLI::PositiveNumber);
  app.add_option("--sweep-m", sweep_m, "Field degree for the exhaustive path sweep")->check(CLI::Range(2u, 10u));
  CLI11_PARSE(app, argc, argv);
  if (quick) {
    m = 8;
    pairs = 1 << 12;
    repeat = 1;
    sweep_m = 5;
  }

  std::cout << "threads: " << omp_get_max_threads() << "\n\n";
  using namespace gf2m;
  const Field field = Field::build(m);
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::uint32_t> pick(0, field.mask());
  std::vector<std::uint32_t> a(pairs), b(pairs), out_s(pairs), out_p(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    a[i] = pick(rng);
    b[i] = pick(rng);
  }

  std::vector<Row> rows;
  const std::pair<kernels::MulPath, const char*> paths[] = {
      {kernels::MulPath::Table, "multiply/table"},
      {kernels::MulPath::Clmul, "multiply/clmul"},
      {kernels::MulPath::Matrix, "multiply/matrix"},
  };
  for (const auto& [path, name] : paths) {
    const std::size_t n = path == kernels::MulPath::Matrix ? pairs / 8 : pairs;
    std::span<const std::uint32_t> sa(a.data(), n), sb(b.data(), n);
    const double ts = best_ms(repeat, [&] { kernels::multiply_serial(field, path, sa, sb, {out_s.data(), n}); });
    const double tp = best_ms(repeat, [&] { kernels::multiply_omp(field, path, sa, sb, {out_p.data(), n}); });
    rows.push_back({std::string(name) + " m=" + std::to_string(m), ts, tp,
                    std::equal(out_s.begin(), out_s.begin() + static_cast<std::ptrdiff_t>(n), out_p.begin())});
  }

  const Field small = Field::build(sweep_m);
  kernels::SweepResult ss, sp;
  const double tss = best_ms(repeat, [&] { ss = kernels::path_sweep_serial(small); });
  const double tsp = best_ms(repeat, [&] { sp = kernels::path_sweep_omp(small); });
  rows.push_back({"path sweep m=" + std::to_string(sweep_m), tss, tsp, ss == sp && ss.mismatches == 0});

  const Field root_field = Field::build(quick ? 10 : 16);
  const Gf2Poly f = root_field.prime_poly();
  std::vector<std::uint32_t> rs, rp;
  const double trs = best_ms(repeat, [&] { rs = kernels::roots_serial(root_field, f); });
  const double trp = best_ms(repeat, [&] { rp = kernels::roots_omp(root_field, f); });
  rows.push_back({"roots m=" + std::to_string(root_field.m()), trs, trp, rs == rp && rs.size() == root_field.m()});

  const std::size_t words = quick ? 256 : 4096;
  const std::size_t stride = 2;
  std::vector<std::uint64_t> limbs(words * stride);
  for (auto& l : limbs) l = rng();
  std::uint64_t ds = 0, dp = 0;
  const double tds = best_ms(repeat, [&] { ds = kernels::min_distance_serial(limbs, stride); });
  const double tdp = best_ms(repeat, [&] { dp = kernels::min_distance_omp(limbs, stride); });
  rows.push_back({"min distance " + std::to_string(words) + "x128", tds, tdp, ds == dp});

  print_rows(rows);
  for (const auto& r : rows) {
    if (!r.same) return 1;
  }
  return 0;
}
