#pragma once
#include "geometry.hpp"
#include "linalg.hpp"

#include <vector>

namespace ivm {

// Phase-I feasibility of { x >= 0 : A x = b } via the dense simplex method
// with Bland's rule.  Feasible iff the artificial objective reaches <= tol.
// Throws numeric_error if the iteration cap is hit.
bool lp_feasible(const Mat& A, const Vec& b, double tol = 1e-9);

// Reusable membership tester for q in conv(points); the LP tableau scratch is
// kept across queries and a bounding-box pre-check rejects far points fast.
class HullMembership {
public:
    HullMembership(const std::vector<Vec>& points, double tol = 1e-9);
    bool contains(const Vec& q) const;

private:
    int dim_ = 0;
    double tol_ = 1e-9;
    std::vector<Vec> pts_;
    Vec lo_, hi_;
    mutable std::vector<double> tableau_;  // scratch
    mutable std::vector<int> basis_;
};

bool hull_membership(const std::vector<Vec>& points, const Vec& q, double tol = 1e-9);

// Membership of q (coordinates in the frame) in the projection of P cap Q:
// exists lambda, mu >= 0 with sum(lambda) = sum(mu) = 1,
// sum(lambda v_i) = sum(mu w_i) and frame-coordinates of that point equal q.
class IntersectionShadowMembership {
public:
    IntersectionShadowMembership(const std::vector<Vec>& P, const std::vector<Vec>& Q,
                                 const Frame& frame, double tol = 1e-9);
    bool contains(const Vec& q) const;

private:
    double tol_;
    Mat A_;        // rows: n ambient matches + j projection rows + 2 simplex rows
    mutable Vec b_;
    int n_ = 0, j_ = 0;
};

}  // namespace ivm
