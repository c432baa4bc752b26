#ifndef GBM_MEASURES_HPP
#define GBM_MEASURES_HPP

#include <cstdint>

#include "gbm/geometry.hpp"
#include "gbm/quadrature.hpp"

namespace gbm {

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Gaussian measure of a wedge,
///   gamma_2(W) = 2 int_0^inf T(x tan(alpha) - shift) density(x) dx,
/// by adaptive quadrature. The error bound covers the doubled integral, so it
/// stays within cfg.abs_tol.
QuadratureResult wedge_measure(const Wedge& w, const QuadratureConfig& cfg);

/// gamma_2 of a wedge with apex at the origin: 1/2 - alpha/pi.
double apex_wedge_measure_closed(double alpha);

/// gamma_2 of the strip {|y| <= c}: 1 - 2 T(c).
double strip_measure_closed(double halfwidth);

/// Hit-fraction estimate of gamma_2(w) from `samples` standard bivariate
/// Gaussian draws. Deterministic in (samples, seed): points come in fixed-size
/// blocks from a counter-based generator, so the estimate does not depend on
/// the thread count. Requires samples >= 1000.
MonteCarloEstimate wedge_measure_montecarlo(const Wedge& w, std::int64_t samples,
                                            std::uint64_t seed);

/// Serial reference for wedge_measure_montecarlo; same blocks, same estimate.
MonteCarloEstimate wedge_measure_montecarlo_serial(const Wedge& w, std::int64_t samples,
                                                   std::uint64_t seed);

}

#endif
