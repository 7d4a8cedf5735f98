#pragma once
#include <functional>

namespace ivm {

// log vol_n of the unit ball in R^n; vol_0 = 1
double log_ball_volume(int n);
double ball_volume(int n);

// log omega_n, the surface measure of the unit sphere S^{n-1} in R^n (n >= 1)
double log_sphere_surface(int n);
double sphere_surface(int n);

double log_binomial(int n, int k);
double log_beta_fn(double a, double b);

// Regularized incomplete beta I_x(a, b), continued fraction with the symmetry
// switch at x = (a+1)/(a+b+2); accurate to ~1e-14.
double regularized_incomplete_beta(double a, double b, double x);

// Adaptive Simpson quadrature with absolute tolerance; throws numeric_error
// when the recursion cannot reach the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_depth = 52);

}  // namespace ivm
