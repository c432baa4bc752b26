#ifndef GBM_GAUSS_HPP
#define GBM_GAUSS_HPP

namespace gbm {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = 1.57079632679489661923;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;

/// Standard normal density (2 pi)^(-1/2) exp(-x^2/2).
double gaussian_density(double x);

/// Upper tail T(x) = (2 pi)^(-1/2) int_x^inf exp(-t^2/2) dt.
///
/// Evaluated as erfc(x/sqrt(2))/2 for moderate x; deep in the right tail it
/// switches to density(x) times a Mills-ratio continued fraction, which keeps
/// relative accuracy down to where the density itself underflows.
/// Throws std::domain_error on non-finite input.
double gaussian_tail(double x);

/// k-th derivative of the tail function, k in {0, 1, 2}:
///   T^(0) = T,  T^(1)(x) = -density(x),  T^(2)(x) = x * density(x).
/// Throws std::domain_error for other k or non-finite x.
double gaussian_tail_deriv(double x, int k);

}

#endif
