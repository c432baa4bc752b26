#include "gbm/refutation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gbm/gauss.hpp"

namespace gbm {

namespace {

// First-order error propagation through the square root.
double sqrt_err(const QuadratureResult& m) {
  return m.error_bound / (2.0 * std::sqrt(m.value));
}

GapReport make_gap_report(double alpha, double eps, double lambda,
                          const QuadratureResult& ma, const QuadratureResult& mb,
                          const QuadratureResult& mc, bool converged) {
  GapReport rep;
  rep.alpha = alpha;
  rep.eps = eps;
  rep.lambda = lambda;
  rep.converged = converged;
  rep.gap = std::sqrt(mc.value) - lambda * std::sqrt(ma.value) -
            (1.0 - lambda) * std::sqrt(mb.value);
  // Doubled as a safety factor against the linearisation.
  rep.gap_error_bound =
      2.0 * (sqrt_err(mc) + lambda * sqrt_err(ma) + (1.0 - lambda) * sqrt_err(mb));
  rep.predicted = predicted_gap(alpha, eps, lambda);
  rep.agreement = rep.predicted != 0.0
                      ? rep.gap / rep.predicted
                      : std::numeric_limits<double>::quiet_NaN();
  rep.violated = rep.gap + rep.gap_error_bound < 0.0;
  return rep;
}

std::vector<GapReport> scan_cells(std::span<const double> alphas,
                                  std::span<const double> epss,
                                  std::span<const double> lambdas,
                                  const QuadratureConfig& cfg, bool parallel) {
  if (alphas.empty() || epss.empty() || lambdas.empty())
    throw std::domain_error("gbm_scan: grids must be non-empty");
  cfg.validate();
  // Validate every grid value up front so cells cannot throw mid-scan.
  for (double a : alphas) (void)Wedge(a, 0.0);
  for (double e : epss)
    if (!std::isfinite(e) || e < 0.0)
      throw std::domain_error("gbm_scan: eps must be >= 0");
  for (double l : lambdas)
    if (!std::isfinite(l) || l < 0.0 || l > 1.0)
      throw std::domain_error("gbm_scan: lambda must lie in [0, 1]");

  const std::int64_t na = static_cast<std::int64_t>(alphas.size());
  const std::int64_t ne = static_cast<std::int64_t>(epss.size());
  const std::int64_t nl = static_cast<std::int64_t>(lambdas.size());
  const std::int64_t cells = na * ne * nl;
  std::vector<GapReport> out(static_cast<std::size_t>(cells));

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t idx = 0; idx < cells; ++idx) {
    const double alpha = alphas[static_cast<std::size_t>(idx / (ne * nl))];
    const double eps = epss[static_cast<std::size_t>((idx / nl) % ne)];
    const double lambda = lambdas[static_cast<std::size_t>(idx % nl)];
    bool converged = true;
    const auto measure = [&cfg, &converged](const Wedge& w) {
      try {
        return wedge_measure(w, cfg);
      } catch (const ConvergenceError& e) {
        converged = false;
        return e.best_estimate();
      }
    };
    const Wedge a(alpha, 0.0);
    const Wedge b(alpha, eps);
    const Wedge c = minkowski_combination(a, b, lambda);
    // Sequence the measures before the report call; they may flip `converged`.
    const QuadratureResult ma = measure(a);
    const QuadratureResult mb = measure(b);
    const QuadratureResult mc = measure(c);
    out[static_cast<std::size_t>(idx)] =
        make_gap_report(alpha, eps, lambda, ma, mb, mc, converged);
  }
  return out;
}

struct MeasurePoint {
  double value;
  double abs_err;
};

// Central second difference of F = ln(measure) with a step-halving truncation
// estimate and the amplified measure noise.
template <class MeasureAt>
void fd_second_difference(const MeasureAt& measure_at, double t0, double h,
                          BConjReport& rep) {
  if (!std::isfinite(t0))
    throw std::domain_error("b_second_derivative: t0 must be finite");
  if (!std::isfinite(h) || h <= 0.0)
    throw std::domain_error("b_second_derivative: step h must be > 0");

  double max_log_err = 0.0;
  const auto log_measure = [&](double t) {
    const MeasurePoint m = measure_at(t);
    if (!(m.value > 0.0))
      throw std::runtime_error("b_second_derivative: measure is not positive");
    max_log_err = std::max(max_log_err, m.abs_err / m.value);
    return std::log(m.value);
  };

  const double f0 = log_measure(t0);
  const double d_h =
      (log_measure(t0 - h) - 2.0 * f0 + log_measure(t0 + h)) / (h * h);
  const double hh = 0.5 * h;
  const double d_hh =
      (log_measure(t0 - hh) - 2.0 * f0 + log_measure(t0 + hh)) / (hh * hh);

  const double truncation = (4.0 / 3.0) * std::abs(d_h - d_hh);
  const double noise = 4.0 * max_log_err / (h * h);
  rep.t0 = t0;
  rep.step = h;
  rep.second_derivative = d_h;
  rep.fd_error_bound = truncation + noise;
  rep.log_concave_locally = rep.second_derivative - rep.fd_error_bound <= 0.0;
}

// Closed-form measures carry only rounding error; a few ulps of a value in
// (0, 1].
constexpr double kClosedFormAbsErr = 1e-15;

}

GapReport gbm_gap(double alpha, double eps, double lambda,
                  const QuadratureConfig& cfg) {
  const Wedge a(alpha, 0.0);
  const Wedge b(alpha, eps);
  const Wedge c = minkowski_combination(a, b, lambda);
  return make_gap_report(alpha, eps, lambda, wedge_measure(a, cfg),
                         wedge_measure(b, cfg), wedge_measure(c, cfg), true);
}

std::vector<GapReport> gbm_scan(std::span<const double> alphas,
                                std::span<const double> epss,
                                std::span<const double> lambdas,
                                const QuadratureConfig& cfg) {
  return scan_cells(alphas, epss, lambdas, cfg, true);
}

std::vector<GapReport> gbm_scan_serial(std::span<const double> alphas,
                                       std::span<const double> epss,
                                       std::span<const double> lambdas,
                                       const QuadratureConfig& cfg) {
  return scan_cells(alphas, epss, lambdas, cfg, false);
}

BConjReport b_second_derivative_wedge(const Wedge& w, double t0, double h,
                                      const QuadratureConfig& cfg) {
  cfg.validate();
  // ln amplifies measure noise by 1/m, so keep the quadrature tight.
  QuadratureConfig tight = QuadratureConfig::with_tol(std::min(cfg.abs_tol, 1e-12));
  tight.max_depth = std::max(cfg.max_depth, 48);
  BConjReport rep;
  rep.shape = BShape::wedge;
  rep.alpha = w.alpha;
  rep.eps = w.shift;
  fd_second_difference(
      [&w, &tight](double t) {
        const QuadratureResult m = wedge_measure(dilate(w, t), tight);
        return MeasurePoint{m.value, m.error_bound};
      },
      t0, h, rep);
  return rep;
}

BConjReport b_second_derivative_strip(const Strip& s, double t0, double h) {
  BConjReport rep;
  rep.shape = BShape::strip;
  rep.halfwidth = s.halfwidth;
  fd_second_difference(
      [&s](double t) {
        return MeasurePoint{strip_measure_closed(s.halfwidth * std::exp(t)),
                            kClosedFormAbsErr};
      },
      t0, h, rep);
  return rep;
}

BConjReport b_second_derivative_halfspace1d(double eps, double t0, double h) {
  if (!std::isfinite(eps) || eps <= 0.0)
    throw std::domain_error("b_second_derivative_halfspace1d: eps must be > 0");
  BConjReport rep;
  rep.shape = BShape::halfspace_1d;
  rep.eps = eps;
  fd_second_difference(
      [eps](double t) {
        return MeasurePoint{1.0 - gaussian_tail(eps * std::exp(t)),
                            kClosedFormAbsErr};
      },
      t0, h, rep);
  return rep;
}

double beta_ratio(double alpha) {
  const ExpansionCoefficients c = coefficients_closed(alpha);
  return -c.a1 / c.a0;
}

}
