#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gbm/gauss.hpp"
#include "gbm/refutation.hpp"

using namespace gbm;

TEST_CASE("gap vanishes at the trivial endpoints") {
  const QuadratureConfig cfg = QuadratureConfig::with_tol(1e-10);
  for (const auto& [eps, lambda] : std::vector<std::pair<double, double>>{
           {0.1, 0.0}, {0.1, 1.0}, {0.0, 0.37}}) {
    const GapReport r = gbm_gap(1.3, eps, lambda, cfg);
    CHECK(std::abs(r.gap) <= 1e-12);
    CHECK(r.predicted == 0.0);
    CHECK(std::isnan(r.agreement));
    CHECK(!r.violated);
    CHECK(r.converged);
  }
}

TEST_CASE("witness triple violates the inequality with certainty") {
  const GapReport r = gbm_gap(1.3, 0.1, 0.5, QuadratureConfig::with_tol(1e-10));
  CHECK(r.violated);
  CHECK(r.gap + r.gap_error_bound < 0.0);
  CHECK(r.gap_error_bound >= 0.0);
  // mpmath oracle: gap = -3.00402913581224e-5
  CHECK(std::abs(r.gap + 3.00402913581224e-5) <= 1e-9);
  CHECK(std::abs(r.agreement - 0.882834123142843) <= 1e-4);
  CHECK(std::abs(r.predicted + 3.4027107211466331e-5) <= 1e-15);
}

TEST_CASE("agreement tightens as eps shrinks") {
  const QuadratureConfig cfg = QuadratureConfig::with_tol(1e-10);
  double prev_dev = 2.0;
  for (double eps : {0.1, 0.05, 0.025}) {
    const GapReport r = gbm_gap(1.3, eps, 0.5, cfg);
    CHECK(r.violated);
    const double dev = std::abs(r.agreement - 1.0);
    CHECK(dev < prev_dev);
    prev_dev = dev;
  }
  CHECK(prev_dev <= 0.1);
}

TEST_CASE("below the critical angle the gap stays positive") {
  const GapReport r =
      gbm_gap(kPi / 8.0, 0.05, 0.5, QuadratureConfig::with_tol(1e-10));
  CHECK(!r.violated);
  CHECK(r.gap > 0.0);
  // mpmath oracle: +1.8853543382371665e-5
  CHECK(std::abs(r.gap - 1.8853543382371665e-5) <= 1e-9);
}

TEST_CASE("scan covers the grid row-major and matches single calls") {
  const QuadratureConfig cfg = QuadratureConfig::with_tol(1e-10);
  const std::vector<double> alphas{1.3, 1.4};
  const std::vector<double> epss{0.05, 0.1};
  const std::vector<double> lambdas{0.25, 0.5};
  const auto reports = gbm_scan(alphas, epss, lambdas, cfg);
  REQUIRE(reports.size() == 8);

  std::size_t idx = 0;
  for (double alpha : alphas)
    for (double eps : epss)
      for (double lambda : lambdas) {
        const GapReport& r = reports[idx++];
        CHECK(r.alpha == alpha);
        CHECK(r.eps == eps);
        CHECK(r.lambda == lambda);
        CHECK(r.violated);
        CHECK(r.converged);
        const GapReport single = gbm_gap(alpha, eps, lambda, cfg);
        CHECK(r.gap == single.gap);
        CHECK(r.gap_error_bound == single.gap_error_bound);
      }

  const auto serial = gbm_scan_serial(alphas, epss, lambdas, cfg);
  REQUIRE(serial.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(serial[i].gap == reports[i].gap);
    CHECK(serial[i].gap_error_bound == reports[i].gap_error_bound);
    CHECK(serial[i].agreement == reports[i].agreement);
    CHECK(serial[i].violated == reports[i].violated);
  }
}

TEST_CASE("scan validation") {
  const QuadratureConfig cfg;
  const std::vector<double> empty;
  const std::vector<double> one{1.3};
  CHECK_THROWS_AS(gbm_scan(empty, one, one, cfg), std::domain_error);
  CHECK_THROWS_AS(gbm_scan(one, empty, one, cfg), std::domain_error);
  CHECK_THROWS_AS(gbm_scan(one, one, empty, cfg), std::domain_error);
  const std::vector<double> bad_lambda{1.5};
  CHECK_THROWS_AS(gbm_scan(one, one, bad_lambda, cfg), std::domain_error);

  const std::vector<double> below{kPi / 8.0};
  const std::vector<double> eps{0.05};
  const std::vector<double> lam{0.5};
  const auto r = gbm_scan(below, eps, lam, cfg);
  REQUIRE(r.size() == 1);
  CHECK(!r[0].violated);
}

TEST_CASE("unreachable tolerance: gbm_gap throws, gbm_scan records") {
  QuadratureConfig absurd;
  absurd.abs_tol = 1e-300;
  absurd.truncation_tail = 1e-301;
  absurd.max_depth = 10;
  CHECK_THROWS_AS(gbm_gap(1.3, 0.1, 0.5, absurd), ConvergenceError);

  const std::vector<double> alphas{1.3};
  const std::vector<double> epss{0.1};
  const std::vector<double> lambdas{0.5};
  const auto reports = gbm_scan(alphas, epss, lambdas, absurd);
  REQUIRE(reports.size() == 1);
  CHECK(!reports[0].converged);
  // the best estimates are still roundoff-accurate here
  CHECK(std::abs(reports[0].gap + 3.00402913581224e-5) <= 1e-9);
}

TEST_CASE("wedge measure convergence failure carries the best estimate") {
  QuadratureConfig absurd;
  absurd.abs_tol = 1e-300;
  absurd.truncation_tail = 1e-301;
  absurd.max_depth = 10;
  try {
    wedge_measure(Wedge(1.3, 0.1), absurd);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::abs(e.best_estimate().value - 0.097277367232783599) <= 1e-10);
  }
}

TEST_CASE("(B) second derivative: wedges violate, controls do not") {
  const QuadratureConfig cfg = QuadratureConfig::with_tol(1e-10);

  const BConjReport wedge =
      b_second_derivative_wedge(Wedge(1.0, 0.01), 0.0, 0.05, cfg);
  CHECK(wedge.shape == BShape::wedge);
  CHECK(wedge.second_derivative > 0.0);
  CHECK(wedge.second_derivative - wedge.fd_error_bound > 0.0);
  CHECK(!wedge.log_concave_locally);
  // mpmath oracle for the identical second difference: 0.01174399782821249
  CHECK(std::abs(wedge.second_derivative - 0.011743997828212487) <= 1e-7);
  // small-eps model: D ~ beta * eps
  const double model = beta_ratio(1.0) * 0.01;
  CHECK(std::abs(wedge.second_derivative - model) / model <= 0.2);

  for (double alpha : {0.5, 1.0, 1.3})
    for (double eps : {0.005, 0.01}) {
      const BConjReport r =
          b_second_derivative_wedge(Wedge(alpha, eps), 0.0, 0.05, cfg);
      CHECK(r.second_derivative - r.fd_error_bound > 0.0);
      CHECK(!r.log_concave_locally);
    }

  const BConjReport strip = b_second_derivative_strip(Strip(1.0), 0.0, 0.05);
  CHECK(strip.shape == BShape::strip);
  CHECK(strip.second_derivative < 0.0);
  CHECK(strip.log_concave_locally);
  // mpmath oracle: -0.50257221670337892
  CHECK(std::abs(strip.second_derivative + 0.50257221670337892) <= 1e-9);

  for (double c : {0.5, 1.0, 2.0}) {
    const BConjReport r = b_second_derivative_strip(Strip(c), 0.0, 0.01);
    CHECK(r.second_derivative <= 0.0);
    CHECK(r.log_concave_locally);
  }

  const BConjReport half = b_second_derivative_halfspace1d(0.01, 0.0, 0.05);
  CHECK(half.shape == BShape::halfspace_1d);
  CHECK(half.second_derivative > 0.0);
  // mpmath oracle: 0.0078534063145508
  CHECK(std::abs(half.second_derivative - 0.0078534063145508001) <= 1e-9);
}

TEST_CASE("alpha = 0 wedge route agrees with the 1d halfspace closed form") {
  // gamma_2 of Wedge(0, eps) factorises, so the quadrature-backed second
  // difference must match the closed-form halfspace one.
  const QuadratureConfig cfg = QuadratureConfig::with_tol(1e-10);
  const BConjReport via_wedge =
      b_second_derivative_wedge(Wedge(0.0, 0.01), 0.0, 0.05, cfg);
  const BConjReport closed = b_second_derivative_halfspace1d(0.01, 0.0, 0.05);
  CHECK(std::abs(via_wedge.second_derivative - closed.second_derivative) <= 1e-6);
  CHECK(via_wedge.second_derivative > 0.0);
}

TEST_CASE("(B) input validation") {
  const QuadratureConfig cfg;
  CHECK_THROWS_AS(b_second_derivative_wedge(Wedge(1.0, 0.01), 0.0, 0.0, cfg),
                  std::domain_error);
  CHECK_THROWS_AS(b_second_derivative_wedge(Wedge(1.0, 0.01), 0.0, -0.1, cfg),
                  std::domain_error);
  CHECK_THROWS_AS(b_second_derivative_strip(Strip(1.0), std::nan(""), 0.05),
                  std::domain_error);
  CHECK_THROWS_AS(b_second_derivative_halfspace1d(0.0, 0.0, 0.05),
                  std::domain_error);
  CHECK_THROWS_AS(b_second_derivative_halfspace1d(-0.1, 0.0, 0.05),
                  std::domain_error);
}

TEST_CASE("beta ratio") {
  CHECK(std::abs(beta_ratio(0.0) - 0.79788456080286536) <= 1e-15);
  CHECK(std::abs(beta_ratio(1.0) - 1.1863575264597472) <= 1e-14);
  for (int i = 0; i <= 15; ++i) CHECK(beta_ratio(0.1 * i) > 0.0);

  // quadrature coefficients give the same ratio
  const auto q = coefficients_quadrature(0.7, QuadratureConfig::with_tol(1e-10));
  CHECK(std::abs(-q.a1 / q.a0 - beta_ratio(0.7)) <= 1e-8);
}
