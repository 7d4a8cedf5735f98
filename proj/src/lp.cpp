#include "lp.hpp"
#include "errors.hpp"

#include <cmath>
#include <limits>

namespace ivm {

namespace {

constexpr double kPivotEps = 1e-11;

// Dense phase-I simplex on a prepared tableau.
//
// Layout: (m+1) x (k+m+1), row-major.  Columns [0,k) are the original
// variables, [k, k+m) the artificial basis, the last column the rhs, and the
// last row the reduced costs of "minimize sum of artificials".  basis[i] is
// the column currently basic in row i.  Returns the optimal artificial sum.
double phase1(std::vector<double>& t, std::vector<int>& basis, int m, int k) {
    const int width = k + m + 1;
    auto T = [&](int r, int c) -> double& {
        return t[static_cast<std::size_t>(r) * width + c];
    };
    const long cap = 400 + 80L * (m + k);
    for (long it = 0; it < cap; ++it) {
        // Bland: entering column = lowest index with negative reduced cost
        int enter = -1;
        for (int c = 0; c < k + m; ++c) {
            if (T(m, c) < -kPivotEps) {
                enter = c;
                break;
            }
        }
        if (enter < 0) return -T(m, width - 1);

        // ratio test; ties resolved toward the smallest basis label (Bland)
        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < m; ++r) {
            const double a = T(r, enter);
            if (a > kPivotEps) {
                const double ratio = T(r, width - 1) / a;
                if (ratio < best - 1e-12) {
                    best = ratio;
                    leave = r;
                } else if (ratio <= best + 1e-12 && leave >= 0 && basis[r] < basis[leave]) {
                    leave = r;
                }
            }
        }
        if (leave < 0)
            throw numeric_error("phase-I simplex: unbounded pivot (numerical breakdown)");

        const double piv = T(leave, enter);
        for (int c = 0; c < width; ++c) T(leave, c) /= piv;
        T(leave, enter) = 1.0;
        for (int r = 0; r <= m; ++r) {
            if (r == leave) continue;
            const double f = T(r, enter);
            if (f == 0.0) continue;
            for (int c = 0; c < width; ++c) T(r, c) -= f * T(leave, c);
            T(r, enter) = 0.0;
        }
        basis[leave] = enter;
    }
    throw numeric_error("phase-I simplex: iteration cap exceeded");
}

// Fill the tableau for A x = b, x >= 0 (rows with negative rhs are flipped).
void build_tableau(const Mat& A, const Vec& b, std::vector<double>& t,
                   std::vector<int>& basis) {
    const int m = A.rows;
    const int k = A.cols;
    const int width = k + m + 1;
    t.assign(static_cast<std::size_t>(m + 1) * width, 0.0);
    basis.assign(m, 0);
    auto T = [&](int r, int c) -> double& {
        return t[static_cast<std::size_t>(r) * width + c];
    };
    for (int r = 0; r < m; ++r) {
        const double sign = b[r] < 0.0 ? -1.0 : 1.0;
        for (int c = 0; c < k; ++c) T(r, c) = sign * A(r, c);
        T(r, k + r) = 1.0;
        T(r, width - 1) = sign * b[r];
        basis[r] = k + r;
    }
    // reduced costs after pricing out the artificial basis
    for (int c = 0; c < k; ++c) {
        double s = 0.0;
        for (int r = 0; r < m; ++r) s += T(r, c);
        T(m, c) = -s;
    }
    double sb = 0.0;
    for (int r = 0; r < m; ++r) sb += T(r, width - 1);
    T(m, width - 1) = -sb;
}

}  // namespace

bool lp_feasible(const Mat& A, const Vec& b, double tol) {
    if (A.rows != static_cast<int>(b.size())) throw param_error("lp_feasible: shape mismatch");
    if (A.rows == 0) return true;
    std::vector<double> t;
    std::vector<int> basis;
    build_tableau(A, b, t, basis);
    return phase1(t, basis, A.rows, A.cols) <= tol;
}

HullMembership::HullMembership(const std::vector<Vec>& points, double tol)
    : tol_(tol), pts_(points) {
    if (pts_.empty()) throw param_error("HullMembership: no points");
    dim_ = static_cast<int>(pts_[0].size());
    lo_.assign(dim_, std::numeric_limits<double>::infinity());
    hi_.assign(dim_, -std::numeric_limits<double>::infinity());
    for (const auto& p : pts_) {
        if (static_cast<int>(p.size()) != dim_)
            throw param_error("HullMembership: mixed dimensions");
        for (int r = 0; r < dim_; ++r) {
            lo_[r] = std::min(lo_[r], p[r]);
            hi_[r] = std::max(hi_[r], p[r]);
        }
    }
}

bool HullMembership::contains(const Vec& q) const {
    if (static_cast<int>(q.size()) != dim_)
        throw param_error("HullMembership: query dimension mismatch");
    for (int r = 0; r < dim_; ++r)
        if (q[r] < lo_[r] - tol_ || q[r] > hi_[r] + tol_) return false;

    const int m = dim_ + 1;
    const int k = static_cast<int>(pts_.size());
    Mat A(m, k);
    for (int c = 0; c < k; ++c) {
        for (int r = 0; r < dim_; ++r) A(r, c) = pts_[c][r];
        A(dim_, c) = 1.0;
    }
    Vec b(m);
    for (int r = 0; r < dim_; ++r) b[r] = q[r];
    b[dim_] = 1.0;
    build_tableau(A, b, tableau_, basis_);
    return phase1(tableau_, basis_, m, k) <= tol_;
}

bool hull_membership(const std::vector<Vec>& points, const Vec& q, double tol) {
    return HullMembership(points, tol).contains(q);
}

IntersectionShadowMembership::IntersectionShadowMembership(const std::vector<Vec>& P,
                                                           const std::vector<Vec>& Q,
                                                           const Frame& frame, double tol)
    : tol_(tol), n_(frame.n), j_(frame.j) {
    if (P.empty() || Q.empty())
        throw param_error("IntersectionShadowMembership: empty vertex list");
    const int kp = static_cast<int>(P.size());
    const int kq = static_cast<int>(Q.size());
    const int m = n_ + j_ + 2;
    A_ = Mat(m, kp + kq);
    for (int c = 0; c < kp; ++c) {
        if (static_cast<int>(P[c].size()) != n_)
            throw param_error("IntersectionShadowMembership: dimension mismatch");
        for (int r = 0; r < n_; ++r) A_(r, c) = P[c][r];
        const Vec pc = project(P[c], frame);
        for (int r = 0; r < j_; ++r) A_(n_ + r, c) = pc[r];
        A_(n_ + j_, c) = 1.0;
    }
    for (int c = 0; c < kq; ++c) {
        if (static_cast<int>(Q[c].size()) != n_)
            throw param_error("IntersectionShadowMembership: dimension mismatch");
        for (int r = 0; r < n_; ++r) A_(r, kp + c) = -Q[c][r];
        A_(n_ + j_ + 1, kp + c) = 1.0;
    }
    b_.assign(m, 0.0);
    b_[n_ + j_] = 1.0;
    b_[n_ + j_ + 1] = 1.0;
}

bool IntersectionShadowMembership::contains(const Vec& q) const {
    if (static_cast<int>(q.size()) != j_)
        throw param_error("IntersectionShadowMembership: query dimension mismatch");
    for (int r = 0; r < j_; ++r) b_[n_ + r] = q[r];
    return lp_feasible(A_, b_, tol_);
}

}  // namespace ivm
