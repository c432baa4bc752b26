#include "gbm/quadrature.hpp"

#include <cmath>

#include "gbm/gauss.hpp"

namespace gbm {

namespace {

// Gauss(7)/Kronrod(15) nodes and weights on [-1, 1] (QUADPACK dqk15 values).
// The Gauss nodes are kXgk[1], kXgk[3], kXgk[5] and the centre.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Accumulator {
  double value = 0.0;
  double err = 0.0;
  std::int64_t evals = 0;
};

void gk15(const std::function<double(double)>& f, double a, double b,
          double& kronrod, double& gauss) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  kronrod = resk * half;
  gauss = resg * half;
}

// Bisects until the local |K15 - G7| estimate meets the panel's share of the
// tolerance or the depth cap is hit; either way the panel's value and local
// estimate are accumulated. Whether the run converged is decided afterwards
// from the accumulated estimate alone.
void adapt(const std::function<double(double)>& f, double a, double b, int depth,
           double tol_share, int max_depth, Accumulator& acc) {
  double k = 0.0, g = 0.0;
  gk15(f, a, b, k, g);
  acc.evals += 15;
  const double local = std::abs(k - g);
  if (local <= tol_share || depth >= max_depth) {
    acc.value += k;
    acc.err += local;
    return;
  }
  const double mid = 0.5 * (a + b);
  adapt(f, a, mid, depth + 1, 0.5 * tol_share, max_depth, acc);
  adapt(f, mid, b, depth + 1, 0.5 * tol_share, max_depth, acc);
}

// Smallest X >= 8 with envelope * sqrt(2 pi) * T(X) <= tail_mass. T underflows
// to zero near x = 38.6, so the bracket [8, 45] always closes.
double truncation_point(double envelope, double tail_mass) {
  if (envelope == 0.0) return 8.0;
  const auto tail_ok = [&](double x) {
    return envelope * kSqrt2Pi * gaussian_tail(x) <= tail_mass;
  };
  if (tail_ok(8.0)) return 8.0;
  double lo = 8.0;
  double hi = 45.0;
  for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tail_ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

}

QuadratureConfig QuadratureConfig::with_tol(double tol) {
  QuadratureConfig cfg;
  cfg.abs_tol = tol;
  cfg.truncation_tail = tol / 100.0;
  return cfg;
}

void QuadratureConfig::validate() const {
  if (!std::isfinite(abs_tol) || abs_tol <= 0.0)
    throw std::invalid_argument("QuadratureConfig: abs_tol must be positive");
  if (!std::isfinite(truncation_tail) || truncation_tail < 0.0 ||
      truncation_tail > abs_tol / 10.0)
    throw std::invalid_argument(
        "QuadratureConfig: truncation_tail must lie in [0, abs_tol/10]");
  if (max_depth < 10)
    throw std::invalid_argument("QuadratureConfig: max_depth must be >= 10");
}

ConvergenceError::ConvergenceError(const std::string& what, QuadratureResult best)
    : std::runtime_error(what), best_(best) {}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double envelope,
                                         const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(envelope) || envelope < 0.0)
    throw std::domain_error(
        "integrate_semi_infinite: envelope must be finite and non-negative");

  const double upper = truncation_point(envelope, cfg.truncation_tail);
  const double tail_bound = envelope * kSqrt2Pi * gaussian_tail(upper);
  const double budget = cfg.abs_tol - cfg.truncation_tail;

  Accumulator acc;
  adapt(f, 0.0, upper, 0, budget, cfg.max_depth, acc);

  const QuadratureResult result{acc.value, acc.err + tail_bound, acc.evals};
  if (acc.err > budget)
    throw ConvergenceError(
        "integrate_semi_infinite: depth cap reached before the tolerance was met",
        result);
  return result;
}

}
