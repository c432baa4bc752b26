#ifndef GBM_QUADRATURE_HPP
#define GBM_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace gbm {

/// Tolerance contract for the semi-infinite integrals.
struct QuadratureConfig {
  double abs_tol = 1e-10;         ///< target absolute error of the value
  int max_depth = 48;             ///< bisection depth cap per panel
  double truncation_tail = 1e-12; ///< integrand mass allowed beyond the truncation point

  /// Config with abs_tol = tol and truncation_tail = tol / 100.
  static QuadratureConfig with_tol(double tol);

  /// Throws std::invalid_argument unless abs_tol > 0,
  /// 0 <= truncation_tail <= abs_tol / 10 and max_depth >= 10.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0; ///< estimated absolute error, truncation term included
  std::int64_t evaluations = 0;
};

/// Thrown when subdivision stops before the local error estimates sum below
/// the tolerance. Carries the best estimate obtained so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadratureResult best);
  const QuadratureResult& best_estimate() const { return best_; }

 private:
  QuadratureResult best_;
};

/// Integrates f over [0, inf) for integrands with a Gaussian decay envelope
/// |f(x)| <= envelope * exp(-x^2/2).
///
/// The interval is truncated at the smallest X >= 8 whose tail mass
/// envelope * sqrt(2 pi) * T(X) is at most cfg.truncation_tail; [0, X] is then
/// subdivided adaptively with an embedded Gauss(7)/Kronrod(15) pair until the
/// local |K15 - G7| estimates sum below abs_tol - truncation_tail.
/// error_bound = sum of local estimates + tail mass, so it never exceeds
/// abs_tol on success.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double envelope,
                                         const QuadratureConfig& cfg);

}

#endif
