// Compares the serial reference paths against the OpenMP kernels on two
// workloads: a wide slope scan for one knot, and a family classification
// sweep. Results are checked for equality before timings are reported.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lsobstruct/report.hpp"
#include "lsobstruct/scan.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* workload, double serial_s, double parallel_s, int jobs) {
  std::printf("%-28s serial %8.3fs   parallel(%d) %8.3fs   speedup %.2fx\n", workload,
              serial_s, jobs, parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t slope_count = 8000;
  std::int64_t family_max = 400;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slopes") == 0 && i + 1 < argc) {
      slope_count = std::atoll(argv[++i]);
    } else if (std::strcmp(argv[i], "--family") == 0 && i + 1 < argc) {
      family_max = std::atoll(argv[++i]);
    } else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      jobs = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--slopes N] [--family N] [--jobs J]\n", argv[0]);
      return 64;
    }
  }

#ifndef _OPENMP
  std::printf("built without OpenMP; parallel paths run serially\n");
#endif

  using namespace lsobstruct;

  {
    const auto member = kn_knot(6);
    const auto profile = knot_torsion_profile(member.knot);
    const std::int64_t lo = 2 * profile.genus - 1;
    const std::int64_t hi = lo + slope_count - 1;

    // Screening would skip tabulation at almost every large slope; turn it
    // off so the kernels do the full work.
    auto start = Clock::now();
    const auto serial = scan_slopes_serial(profile, lo, hi, false);
    const double serial_s = seconds_since(start);

    ScanOptions options;
    options.jobs = jobs;
    options.screen = false;
    start = Clock::now();
    const auto parallel = scan_slopes(profile, lo, hi, options);
    const double parallel_s = seconds_since(start);

    if (!(serial == parallel)) {
      std::fprintf(stderr, "slope scan mismatch between serial and parallel kernels\n");
      return 1;
    }
    report("slope scan", serial_s, parallel_s, jobs);
  }

  {
    auto start = Clock::now();
    const auto serial = kn_classification_range(1, family_max, 1);
    const double serial_s = seconds_since(start);

    start = Clock::now();
    const auto parallel = kn_classification_range(1, family_max, jobs);
    const double parallel_s = seconds_since(start);

    if (serial.size() != parallel.size()) {
      std::fprintf(stderr, "family sweep size mismatch\n");
      return 1;
    }
    for (std::size_t i = 0; i < serial.size(); ++i) {
      if (serial[i].m != parallel[i].m ||
          !(serial[i].classification == parallel[i].classification)) {
        std::fprintf(stderr, "family sweep mismatch at index %zu\n", i + 1);
        return 1;
      }
    }
    report("family classification", serial_s, parallel_s, jobs);
  }

  return 0;
}
