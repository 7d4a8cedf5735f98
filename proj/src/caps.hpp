#pragma once
#include "rng.hpp"

namespace ivm {

// Mass of the cap {x in B_n : x_1 >= h} under the beta body law; the sphere
// limit beta = -1 is allowed for n >= 2.
double cap_probability(int n, double beta, double h);

// d/dh of cap_probability: -c_{1, beta+(n-1)/2} (1-h^2)^{beta+(n-1)/2}.
double cap_derivative(int n, double beta, double h);

struct SandwichCheck {
    double lower = 0.0;
    double value = 0.0;  // d_{n,beta} * cap mass
    double upper = 0.0;
    bool ok = false;
};

// Cap-volume sandwich r^{n+2b+1} <= d v <= r^{n+2b+1} (1+r^2) for
// r = sqrt(1-h^2) in (0, 3/4); r >= 3/4 is out of range.
SandwichCheck cap_bounds_check(int n, double beta, double r);

// d_{n,beta}: evaluated both as (n+2b+1)/c_{1,b+(n-1)/2} and as
// 2 pi / B(1/2, n/2+b+1); the two must agree to 1e-12 relative.
double d_const(int n, double beta);

// Limit constant of the expected missed volume of beta polytopes:
// N^{2/(n+2b+1)} E[vol(B_n \ P)] -> A_{n,beta}.
double affentranger_A(int n, double beta);

// E[vol_{n-1}(conv of n beta points in B_{n-1})^2] = n/((n-1)! (n+2b+1)^{n-1}).
double simplex_second_moment(int n, double beta);

// MC check of the weighted second moment of slice simplices at height h;
// returns |mc - closed| / closed.
double weighted_slice_moment_check(int n, double beta, double h, long samples,
                                   RngStream& rng);

// Flag coefficient: binom(n,j) vol_n / (vol_j vol_{n-j}), cross-checked
// against omega_{j+1} omega_{n-j+1} / (2 omega_{n+1}) to 1e-12 relative.
double flag_coefficient(int n, int j);
double log_flag_coefficient(int n, int j);

// Mean squared projection factor between a Haar j-plane of R^n and a fixed
// j-plane, ambient extension ell; built from omega-bar products.
double chern_constant(int n, int j, int ell);

double log_omega_bar(int p);

}  // namespace ivm
