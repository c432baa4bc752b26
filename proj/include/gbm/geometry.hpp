#ifndef GBM_GEOMETRY_HPP
#define GBM_GEOMETRY_HPP

#include <stdexcept>

namespace gbm {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Translated cone {(x, y) : y >= |x| * tan(alpha) - shift}.
///
/// alpha = 0 degenerates to the halfspace {y >= -shift}; shift >= 0 keeps the
/// origin inside. Angles are clamped to pi/2 - 1e-6 so tan(alpha) stays finite.
struct Wedge {
  double alpha;
  double shift;
  Wedge(double alpha, double shift);
};

/// Origin-symmetric control set {(x, y) : |y| <= halfwidth}.
struct Strip {
  double halfwidth;
  explicit Strip(double halfwidth);
};

/// Raised when a Minkowski combination leaves the wedge family.
class UnsupportedCombination : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Membership test; p must be finite.
bool contains(const Wedge& w, Point p);

/// lambda * w1 + (1 - lambda) * w2 for wedges of equal angle; the result stays
/// in the family with shift lambda * s1 + (1 - lambda) * s2.
Wedge minkowski_combination(const Wedge& w1, const Wedge& w2, double lambda);

/// e^t * w. Cones (shift = 0) are dilation invariant; otherwise only the
/// shift scales. Throws std::range_error if the scaled shift overflows.
Wedge dilate(const Wedge& w, double t);

}

#endif
