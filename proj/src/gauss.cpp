#include "gbm/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace gbm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
// erfc(x/sqrt(2)) keeps full relative accuracy well past this point; the
// continued fraction needs few terms here, so the switch is uncritical.
constexpr double kTailSwitch = 20.0;

// Mills ratio R(x) = T(x)/density(x) via the Laplace continued fraction
//   R(x) = 1/(x + 1/(x + 2/(x + 3/(x + ...)))),
// evaluated bottom up. For x >= 20 the truncation error after 30 levels is
// far below double precision.
double mills_ratio(double x) {
  double r = 0.0;
  for (int k = 30; k >= 1; --k) r = k / (x + r);
  return 1.0 / (x + r);
}

}

double gaussian_density(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gaussian_density: non-finite input");
  return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double gaussian_tail(double x) {
  if (!std::isfinite(x)) throw std::domain_error("gaussian_tail: non-finite input");
  if (x < kTailSwitch) return 0.5 * std::erfc(x * kInvSqrt2);
  return gaussian_density(x) * mills_ratio(x);
}

double gaussian_tail_deriv(double x, int k) {
  if (!std::isfinite(x)) throw std::domain_error("gaussian_tail_deriv: non-finite input");
  switch (k) {
    case 0:
      return gaussian_tail(x);
    case 1:
      return -gaussian_density(x);
    case 2:
      return x * gaussian_density(x);
    default:
      throw std::domain_error("gaussian_tail_deriv: k must be 0, 1 or 2");
  }
}

}
