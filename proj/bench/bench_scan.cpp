// Serial reference scan vs. the OpenMP scan on the same configuration.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qpow/report.hpp"
#include "qpow/search.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scan benchmark"};
  qpow::ScanConfig config;
  config.bound = "thm43";
  config.min_n = 2;
  config.max_n = 6;
  config.alpha_grid = {1, 2};
  std::vector<int> thread_counts;
  int repeats = 3;
  app.add_option("--id", config.bound);
  app.add_option("--min-n", config.min_n);
  app.add_option("--max-n", config.max_n);
  app.add_option("--alpha-grid", config.alpha_grid)->delimiter(',');
  app.add_option("--threads", thread_counts, "thread counts to try")->delimiter(',');
  app.add_option("--repeats", repeats);
  CLI11_PARSE(app, argc, argv);
  if (thread_counts.empty()) {
    for (int t = 1; t <= omp_get_max_threads(); t *= 2) thread_counts.push_back(t);
    if (thread_counts.back() != omp_get_max_threads()) thread_counts.push_back(omp_get_max_threads());
  }

  qpow::ScanReport reference;
  double serial = 1e300;
  for (int r = 0; r < repeats; ++r) {
    serial = std::min(serial, seconds([&] { reference = qpow::scan_serial(config); }));
  }
  const std::string expected = qpow::to_json(reference, true).dump();
  std::printf("%s n=%d..%d, %llu graphs, %llu evaluations\n", config.bound.c_str(), config.min_n,
              config.max_n, static_cast<unsigned long long>(reference.graphs_scanned),
              static_cast<unsigned long long>(reference.evaluations));
  std::printf("%-10s %10s %9s %s\n", "kernel", "seconds", "speedup", "report");
  std::printf("%-10s %10.3f %9s %s\n", "serial", serial, "1.00", "reference");

  int mismatches = 0;
  for (int t : thread_counts) {
    config.threads = t;
    qpow::ScanReport report;
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
      best = std::min(best, seconds([&] { report = qpow::scan(config); }));
    }
    const bool same = qpow::to_json(report, true).dump() == expected;
    mismatches += same ? 0 : 1;
    const std::string label = "omp x" + std::to_string(t);
    std::printf("%-10s %10.3f %9.2f %s\n", label.c_str(), best, serial / best,
                same ? "identical" : "DIFFERS");
  }
  return mismatches == 0 ? 0 : 1;
}
