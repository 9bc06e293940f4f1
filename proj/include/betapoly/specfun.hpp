#pragma once

#include <cstdint>

// Special functions and geometric constants shared by every formula in the
// library.  All functions are pure and safe to call concurrently.

namespace betapoly::specfun {

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Natural log of Gamma(x), x > 0.  Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// log(Gamma(a) / Gamma(b)), a, b > 0, evaluated without overflow.
double log_gamma_ratio(double a, double b);

/// Gamma(a) / Gamma(b).  When a - b is a small integer the ratio is computed
/// by the recurrence Gamma(x+1) = x Gamma(x), which is exact up to rounding;
/// otherwise it is assembled in log space.
double gamma_ratio(double a, double b);

/// log of the (complete) beta function B(a, b).
double log_beta(double a, double b);

/// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
/// Continued-fraction evaluation with the symmetry switch at
/// x = (a+1)/(a+b+2), giving uniform accuracy over both tails.
double reg_inc_beta(double a, double b, double x);

/// Volume kappa_k of the k-dimensional unit ball, k >= 0.
double ball_volume(int k);
double log_ball_volume(int k);

/// Surface area omega_k of the unit sphere S^{k-1}, k >= 1.
/// Evaluated independently of ball_volume (through Gamma(k/2)) so the
/// identity omega_k = k kappa_k is a genuine consistency check.
double sphere_surface(int k);

double log_factorial(int n);
double log_binomial(std::int64_t n, std::int64_t k);

}  // namespace betapoly::specfun
