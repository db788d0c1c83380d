// Times the serial reference loop against the OpenMP runner on each suite.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "fatgraph/verify.hpp"

using namespace fg;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int genus = argc > 1 ? std::atoi(argv[1]) : 2;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  SuiteConfig cfg;
  cfg.genus = genus;
  cfg.exhaustive = genus <= 2;
  cfg.steps = 300;
  std::printf("genus %d, %s inputs, %d threads, best of %d\n", genus, cfg.exhaustive ? "exhaustive" : "walk",
              omp_get_max_threads(), reps);
  std::printf("%-12s %8s %10s %10s %8s %s\n", "suite", "graphs", "serial_s", "parallel_s", "speedup", "same");
  double ts = 0, tp = 0;
  bool all_same = true;
  for (Suite s : all_suites()) {
    const auto inputs = suite_inputs(s, cfg);
    double best_s = 1e9, best_p = 1e9;
    SuiteReport rs, rp;
    for (int r = 0; r < reps; ++r) {
      best_s = std::min(best_s, seconds([&] { rs = run_suite_on(s, inputs, cfg, Exec::Serial); }));
      best_p = std::min(best_p, seconds([&] { rp = run_suite_on(s, inputs, cfg, Exec::Parallel); }));
    }
    const bool same = rs == rp;
    all_same = all_same && same;
    ts += best_s;
    tp += best_p;
    std::printf("%-12s %8zu %10.4f %10.4f %8.2f %s\n", to_string(s), inputs.size(), best_s, best_p,
                best_s / best_p, same ? "yes" : "NO");
  }
  std::printf("%-12s %8s %10.4f %10.4f %8.2f %s\n", "total", "", ts, tp, ts / tp, all_same ? "yes" : "NO");
  return all_same ? 0 : 1;
}
