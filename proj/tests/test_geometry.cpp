#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "gbm/gauss.hpp"
#include "gbm/geometry.hpp"

using namespace gbm;

namespace {
// Bit distance between two positive doubles; IEEE positives order like ints.
std::int64_t ulp_distance(double a, double b) {
  return std::abs(std::bit_cast<std::int64_t>(a) - std::bit_cast<std::int64_t>(b));
}
}

TEST_CASE("wedge membership") {
  const Wedge w(kPi / 4.0, 0.0);
  CHECK(contains(w, Point{1.0, 1.0}));       // on the boundary up to rounding
  CHECK(contains(w, Point{0.0, 0.0}));
  CHECK(contains(w, Point{-2.0, 2.5}));
  CHECK(!contains(w, Point{1.0, 0.5}));

  const Wedge shifted(kPi / 4.0, 0.2);
  CHECK(contains(shifted, Point{1.0, 0.81}));
  CHECK(!contains(shifted, Point{1.0, 0.79}));
}

TEST_CASE("alpha = 0 degenerates to a halfspace") {
  const Wedge h(0.0, 0.3);
  CHECK(contains(h, Point{100.0, -0.29}));
  CHECK(!contains(h, Point{100.0, -0.31}));
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Wedge(-0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(Wedge(kHalfPi, 0.0), std::domain_error);
  CHECK_THROWS_AS(Wedge(std::numeric_limits<double>::quiet_NaN(), 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(Wedge(0.5, -0.1), std::domain_error);
  // angles just below pi/2 are clamped so tan stays finite
  const Wedge steep(kHalfPi - 1e-9, 0.0);
  CHECK(steep.alpha <= kHalfPi - 1e-6);
  CHECK(std::isfinite(std::tan(steep.alpha)));

  CHECK_THROWS_AS(Strip(0.0), std::domain_error);
  CHECK_THROWS_AS(Strip(-1.0), std::domain_error);
  CHECK(Strip(0.7).halfwidth == 0.7);
}

TEST_CASE("non-finite points rejected") {
  const Wedge w(0.5, 0.0);
  CHECK_THROWS_AS(contains(w, Point{std::numeric_limits<double>::infinity(), 0.0}),
                  std::domain_error);
  CHECK_THROWS_AS(contains(w, Point{0.0, std::nan("")}), std::domain_error);
}

TEST_CASE("minkowski combination stays in the family") {
  const Wedge a(1.3, 0.0);
  const Wedge b(1.3, 0.2);
  const Wedge c = minkowski_combination(a, b, 0.5);
  CHECK(c.alpha == 1.3);
  CHECK(c.shift == 0.1);

  CHECK(minkowski_combination(a, a, 0.3).shift == 0.0);
  CHECK(minkowski_combination(a, b, 1.0).shift == 0.0);
  CHECK(minkowski_combination(a, b, 0.0).shift == 0.2);

  CHECK_THROWS_AS(minkowski_combination(Wedge(1.0, 0.0), b, 0.5),
                  UnsupportedCombination);
  CHECK_THROWS_AS(minkowski_combination(a, b, 1.2), std::domain_error);
  CHECK_THROWS_AS(minkowski_combination(a, b, -0.2), std::domain_error);
}

TEST_CASE("dilation") {
  const Wedge w(0.9, 0.1);
  const Wedge same = dilate(w, 0.0);
  CHECK(same.alpha == w.alpha);
  CHECK(same.shift == w.shift);

  const Wedge doubled = dilate(w, std::log(2.0));
  CHECK(ulp_distance(doubled.shift, 0.2) <= 2);

  // cones are invariant, even under dilations that would overflow the shift
  const Wedge cone(0.9, 0.0);
  CHECK(dilate(cone, 1e6).shift == 0.0);
  CHECK(dilate(cone, 1e6).alpha == cone.alpha);

  CHECK_THROWS_AS(dilate(w, 1000.0), std::range_error);
  CHECK_THROWS_AS(dilate(w, std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("dilation semigroup") {
  // s, t exactly representable so s + t is exact; the two evaluation orders
  // round at most twice more, which keeps them within 2 ulps.
  const double steps[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.5};
  const double shifts[] = {0.1, 1.0, 3.0};
  for (double shift : shifts)
    for (double s : steps)
      for (double t : steps) {
        const Wedge w(0.8, shift);
        const double d1 = dilate(dilate(w, s), t).shift;
        const double d2 = dilate(w, s + t).shift;
        CHECK(ulp_distance(d1, d2) <= 2);
      }
}

TEST_CASE("shift monotonicity of membership") {
  std::mt19937 rng(20240815);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_real_distribution<double> angle(0.0, 1.5);
  std::uniform_real_distribution<double> shift_dist(0.0, 2.0);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = angle(rng);
    double s1 = shift_dist(rng);
    double s2 = shift_dist(rng);
    if (s1 > s2) std::swap(s1, s2);
    const Wedge small(alpha, s1);
    const Wedge big(alpha, s2);
    const Point p{coord(rng), coord(rng)};
    if (contains(small, p)) CHECK(contains(big, p));
  }
}

TEST_CASE("combination decomposition") {
  // Every point of C = lambda A + (1 - lambda) B, with A = Wedge(alpha, 0) and
  // B = A - (0, eps), splits as lambda a + (1 - lambda) b with a in A, b in B:
  // a = p + (0, (1 - lambda) eps), b = p - (0, lambda eps).
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = 1.5 * unit(rng);
    const double eps = 0.001 + 0.5 * unit(rng);
    const double lambda = unit(rng);
    const Wedge a_set(alpha, 0.0);
    const Wedge b_set(alpha, eps);
    const Wedge c_set = minkowski_combination(a_set, b_set, lambda);

    const double px = coord(rng);
    const double margin = 1e-9 + 3.0 * unit(rng);
    const double py = std::abs(px) * std::tan(alpha) - (1.0 - lambda) * eps + margin;
    const Point p{px, py};
    REQUIRE(contains(c_set, p));

    const Point a{px, py + (1.0 - lambda) * eps};
    const Point b{px, py - lambda * eps};
    CHECK(contains(a_set, a));
    CHECK(contains(b_set, b));

    // recombination is exact up to rounding of the two products
    const double ry = lambda * a.y + (1.0 - lambda) * b.y;
    const double slack =
        4.0 * std::numeric_limits<double>::epsilon() *
        std::max({1.0, std::abs(a.y), std::abs(b.y)});
    CHECK(std::abs(lambda * a.x + (1.0 - lambda) * b.x - p.x) <= slack);
    CHECK(std::abs(ry - p.y) <= slack);
  }
}
