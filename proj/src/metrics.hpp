#pragma once
#include "geometry.hpp"
#include "rng.hpp"
#include "stats.hpp"

namespace ivm {

struct MetricConfig {
    int subspace_samples = 256;  // outer Grassmannian draws when j < n
    int volume_samples = 4096;   // inner indicator draws when no exact path applies
    bool exact_low_dim = true;   // exact per-subspace evaluation for j = 1, 2
    double lp_tol = 1e-9;
};

// V_j(B_n) of the unit ball, exact.
double ball_intrinsic_volume(int n, int j);

// Kubota estimator of V_j; closed form (std_error 0) for balls, exact
// per-subspace shadows for polytopes at j = 1, 2.
McEstimate intrinsic_volume(const ConvexBody& K, int j, const MetricConfig& cfg,
                            RngStream& rng);

// Mean j-volume of the symmetric difference of the shadows, flag-weighted.
// The Grassmannian level is skipped at j = n (the measure is a point mass),
// and nested full-dimensional balls take the exact closed form.
McEstimate delta_j(const ConvexBody& K, const ConvexBody& L, int j,
                   const MetricConfig& cfg, RngStream& rng);

// 2 <flag n,1> * spherical mean of |h_K - h_L|; equals delta_1 whenever the
// bodies intersect (the caller guarantees that).
McEstimate delta_1_support(const ConvexBody& K, const ConvexBody& L,
                           const MetricConfig& cfg, RngStream& rng);

// V_j(P) + V_j(Q) - 2 V_j(P cap Q); the three shadow volumes share subspaces
// and indicator samples, intersection shadows decided by a joint LP.
McEstimate deviation_Delta_j(const Polytope& P, const Polytope& Q, int j,
                             const MetricConfig& cfg, RngStream& rng);

// 2 V_j(conv(P u Q)) - V_j(P) - V_j(Q), shared subspaces and samples.
McEstimate deviation_rho_j(const Polytope& P, const Polytope& Q, int j,
                           const MetricConfig& cfg, RngStream& rng);

// Zero-pad into a higher-dimensional ambient space; balls stay the same point
// set (they become flat, keeping their intrinsic dimension).
ConvexBody embed(const ConvexBody& body, int extra_dims);

}  // namespace ivm
