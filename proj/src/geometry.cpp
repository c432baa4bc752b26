#include "gbm/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "gbm/gauss.hpp"

namespace gbm {

namespace {
constexpr double kMaxAlpha = kHalfPi - 1e-6; // keeps tan(alpha) finite
}

Wedge::Wedge(double alpha_in, double shift_in) {
  if (!std::isfinite(alpha_in) || alpha_in < 0.0 || alpha_in >= kHalfPi)
    throw std::domain_error("Wedge: alpha must lie in [0, pi/2)");
  if (!std::isfinite(shift_in) || shift_in < 0.0)
    throw std::domain_error("Wedge: shift must be >= 0");
  alpha = std::min(alpha_in, kMaxAlpha);
  shift = shift_in;
}

Strip::Strip(double halfwidth_in) {
  if (!std::isfinite(halfwidth_in) || halfwidth_in <= 0.0)
    throw std::domain_error("Strip: halfwidth must be > 0");
  halfwidth = halfwidth_in;
}

bool contains(const Wedge& w, Point p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw std::domain_error("contains: point must be finite");
  return p.y >= std::abs(p.x) * std::tan(w.alpha) - w.shift;
}

Wedge minkowski_combination(const Wedge& w1, const Wedge& w2, double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0)
    throw std::domain_error("minkowski_combination: lambda must lie in [0, 1]");
  if (w1.alpha != w2.alpha)
    throw UnsupportedCombination(
        "minkowski_combination: wedges must share the same angle");
  return Wedge(w1.alpha, lambda * w1.shift + (1.0 - lambda) * w2.shift);
}

Wedge dilate(const Wedge& w, double t) {
  if (!std::isfinite(t)) throw std::domain_error("dilate: t must be finite");
  if (w.shift == 0.0) return w; // cones are dilation invariant
  const double scaled = w.shift * std::exp(t);
  if (!std::isfinite(scaled))
    throw std::range_error("dilate: dilated shift overflows");
  return Wedge(w.alpha, scaled);
}

}
