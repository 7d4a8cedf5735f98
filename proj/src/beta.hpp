#pragma once
#include "linalg.hpp"
#include "rng.hpp"

namespace ivm {

// Normalizer c_{n,beta} of the density c (1-|x|^2)^beta on the unit ball of
// R^n; requires beta > -1.
double log_beta_normalizer(int n, double beta);
double beta_normalizer(int n, double beta);

// Draw from the beta body density: uniform direction, squared radius from
// Beta(n/2, beta+1).
Vec sample_beta(int n, double beta, RngStream& rng);

// Uniform on the unit sphere S^{n-1} (normalized Gaussian); this is the weak
// limit of the beta family as beta -> -1.
Vec sample_sphere(int n, RngStream& rng);

// One-dimensional marginal CDF F_{1,beta}(h) = c_{1,beta} ∫_{-1}^h (1-x^2)^beta dx.
// h outside [-1,1] is clamped; *clamped reports it when non-null.
double cdf_F1(double beta, double h, bool* clamped = nullptr);

// Inverse of cdf_F1 by safeguarded Newton/bisection; |F(h)-p| <= ~1e-12.
double inverse_cdf_F1(double beta, double p);

struct KsCheck {
    double statistic = 0.0;
    double critical = 0.0;
    bool pass = false;
};

// Project `samples` draws (beta body, or sphere when beta == -1) onto the
// first j coordinates and KS-test the squared radius against
// Beta(j/2, beta + (n-j)/2 + 1), alpha = 0.01.
KsCheck projection_law_check(int n, int j, double beta, long samples, RngStream& rng);

}  // namespace ivm
