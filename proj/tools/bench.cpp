// Compares the OpenMP kernels against their serial references and checks that
// both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gbm/measures.hpp"
#include "gbm/refutation.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}

int main(int argc, char** argv) {
  std::int64_t samples = 8000000;
  for (int i = 1; i < argc - 1; ++i)
    if (std::strcmp(argv[i], "--samples") == 0) samples = std::atoll(argv[i + 1]);
  if (samples < 1000) samples = 1000;

  std::printf("threads: %d\n\n", threads());
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]",
              "speedup");

  bool ok = true;

  {
    const gbm::Wedge w(1.3, 0.1);
    auto t0 = std::chrono::steady_clock::now();
    const auto serial = gbm::wedge_measure_montecarlo_serial(w, samples, 7);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto parallel = gbm::wedge_measure_montecarlo(w, samples, 7);
    const double tp = seconds_since(t0);
    char label[64];
    std::snprintf(label, sizeof label, "montecarlo (%.3g pts)",
                  static_cast<double>(samples));
    std::printf("%-28s %12.3f %12.3f %8.2fx\n", label, ts, tp, ts / tp);
    if (serial.mean != parallel.mean || serial.std_error != parallel.std_error) {
      std::printf("  MISMATCH: serial %.17g vs parallel %.17g\n", serial.mean,
                  parallel.mean);
      ok = false;
    }
  }

  {
    std::vector<double> alphas{0.3, 0.6, 0.9, 1.1, 1.3, 1.4};
    std::vector<double> epss{0.02, 0.05, 0.1};
    std::vector<double> lambdas{0.25, 0.5, 0.75};
    const auto cfg = gbm::QuadratureConfig::with_tol(1e-10);
    auto t0 = std::chrono::steady_clock::now();
    const auto serial = gbm::gbm_scan_serial(alphas, epss, lambdas, cfg);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto parallel = gbm::gbm_scan(alphas, epss, lambdas, cfg);
    const double tp = seconds_since(t0);
    std::printf("%-28s %12.3f %12.3f %8.2fx\n", "gbm_scan (54 cells)", ts, tp,
                ts / tp);
    for (std::size_t i = 0; i < serial.size(); ++i)
      if (serial[i].gap != parallel[i].gap ||
          serial[i].gap_error_bound != parallel[i].gap_error_bound ||
          serial[i].violated != parallel[i].violated) {
        std::printf("  MISMATCH at cell %zu\n", i);
        ok = false;
      }
  }

  if (!ok) {
    std::printf("\nresult mismatch between serial and parallel kernels\n");
    return 1;
  }
  std::printf("\nserial and parallel results identical\n");
  return 0;
}
