#include "gbm/expansion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gbm/gauss.hpp"

namespace gbm {

namespace {

void check_alpha(double alpha, const char* who) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= kHalfPi)
    throw std::domain_error(std::string(who) + ": alpha must lie in [0, pi/2)");
}

// sup |T^(k)| over the reals; |x| density(x) peaks at x = 1.
constexpr double kSupTailDeriv[3] = {1.0, kInvSqrt2Pi, 0.24197072451914337};

}

ExpansionCoefficients coefficients_quadrature(double alpha,
                                              const QuadratureConfig& cfg) {
  check_alpha(alpha, "coefficients_quadrature");
  cfg.validate();
  const double slope = std::tan(alpha);
  double a[3];
  for (int k = 0; k < 3; ++k) {
    const auto integrand = [slope, k](double x) {
      return gaussian_tail_deriv(x * slope, k) * gaussian_density(x);
    };
    try {
      a[k] = integrate_semi_infinite(integrand, kSupTailDeriv[k] * kInvSqrt2Pi, cfg)
                 .value;
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(
          "coefficients_quadrature: a" + std::to_string(k) + " did not converge",
          e.best_estimate());
    }
  }
  return ExpansionCoefficients{alpha, a[0], a[1], a[2], CoefficientRoute::quadrature};
}

ExpansionCoefficients coefficients_closed(double alpha) {
  check_alpha(alpha, "coefficients_closed");
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return ExpansionCoefficients{alpha,
                               0.5 * (0.5 - alpha / kPi),
                               -c / (2.0 * kSqrt2Pi),
                               s * c / (2.0 * kPi),
                               CoefficientRoute::closed_form};
}

double discriminant(const ExpansionCoefficients& c) {
  return 2.0 * c.a0 * c.a2 - c.a1 * c.a1;
}

double discriminant_simplified(double alpha) {
  check_alpha(alpha, "discriminant_simplified");
  const double c = std::cos(alpha);
  return (1.0 / (8.0 * kPi)) * c * c * critical_angle_bracket(alpha);
}

double critical_angle_bracket(double alpha) {
  check_alpha(alpha, "critical_angle_bracket");
  return std::tan(alpha) * (2.0 - 4.0 * alpha / kPi) - 1.0;
}

double critical_angle(double tol) {
  if (!std::isfinite(tol) || tol <= 0.0)
    throw std::domain_error("critical_angle: tol must be > 0");
  double lo = 1e-6;
  double hi = kHalfPi - 1e-6;
  if (!(critical_angle_bracket(lo) < 0.0 && critical_angle_bracket(hi) > 0.0))
    throw std::runtime_error("critical_angle: endpoints do not bracket a root");
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (critical_angle_bracket(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double predicted_gap(double alpha, double eps, double lambda) {
  check_alpha(alpha, "predicted_gap");
  if (!std::isfinite(eps) || eps < 0.0)
    throw std::domain_error("predicted_gap: eps must be >= 0");
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0)
    throw std::domain_error("predicted_gap: lambda must lie in [0, 1]");
  const ExpansionCoefficients c = coefficients_closed(alpha);
  const double two_a0 = 2.0 * c.a0;
  return -lambda * (1.0 - lambda) * discriminant(c) * eps * eps /
         (2.0 * std::pow(two_a0, 1.5));
}

SqrtExpansion sqrt_measure_expansion(double alpha) {
  check_alpha(alpha, "sqrt_measure_expansion");
  const ExpansionCoefficients c = coefficients_closed(alpha);
  const double two_a0 = 2.0 * c.a0;
  const double c0 = std::sqrt(two_a0);
  return SqrtExpansion{c0, -c.a1 / c0,
                       c.a2 / (2.0 * c0) -
                           c.a1 * c.a1 / (2.0 * std::pow(two_a0, 1.5))};
}

}
