#ifndef GBM_EXPANSION_HPP
#define GBM_EXPANSION_HPP

#include "gbm/quadrature.hpp"

namespace gbm {

enum class CoefficientRoute { quadrature, closed_form };

/// Second-order expansion coefficients of gamma_2(B_eps) in eps at a fixed
/// angle: a_k = int_0^inf T^(k)(x tan(alpha)) density(x) dx.
struct ExpansionCoefficients {
  double alpha;
  double a0;
  double a1;
  double a2;
  CoefficientRoute route;
};

/// Coefficients by adaptive quadrature of the defining integrals.
ExpansionCoefficients coefficients_quadrature(double alpha, const QuadratureConfig& cfg);

/// a0 = (1/2)(1/2 - alpha/pi), a1 = -cos(alpha) / (2 sqrt(2 pi)),
/// a2 = sin(alpha) cos(alpha) / (2 pi).
ExpansionCoefficients coefficients_closed(double alpha);

/// 2 a0 a2 - a1^2 straight from the coefficients.
double discriminant(const ExpansionCoefficients& c);

/// The same quantity in simplified form,
/// (1 / (8 pi)) cos^2(alpha) (tan(alpha) (2 - 4 alpha/pi) - 1).
double discriminant_simplified(double alpha);

/// tan(alpha) (2 - 4 alpha/pi) - 1; carries the sign of the discriminant.
double critical_angle_bracket(double alpha);

/// Unique root of the bracket in (0, pi/2), by bisection, to within tol.
double critical_angle(double tol);

/// eps^2-order prediction of the Brunn-Minkowski gap,
///   -lambda (1 - lambda) (2 a0 a2 - a1^2) eps^2 / (2 (2 a0)^(3/2)),
/// from closed-form coefficients.
double predicted_gap(double alpha, double eps, double lambda);

/// sqrt(gamma_2(B_eps)) = c0 + c1 eps + c2 eps^2 + o(eps^2).
struct SqrtExpansion {
  double c0;
  double c1;
  double c2;
};

SqrtExpansion sqrt_measure_expansion(double alpha);

}

#endif
