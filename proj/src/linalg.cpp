#include "linalg.hpp"
#include "errors.hpp"

#include <cmath>
#include <cstddef>

namespace ivm {

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw param_error("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec vadd(Vec a, const Vec& b) {
    if (a.size() != b.size()) throw param_error("vadd: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec vsub(Vec a, const Vec& b) {
    if (a.size() != b.size()) throw param_error("vsub: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Vec vscale(Vec a, double t) {
    for (auto& v : a) v *= t;
    return a;
}

Mat identity_mat(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw param_error("matmul: shape mismatch");
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Mat transpose(const Mat& a) {
    Mat t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

Vec matvec(const Mat& a, const Vec& x) {
    if (a.cols != static_cast<int>(x.size())) throw param_error("matvec: shape mismatch");
    Vec y(a.rows, 0.0);
    for (int i = 0; i < a.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double det(Mat m) {
    if (m.rows != m.cols) throw param_error("det: matrix must be square");
    const int n = m.rows;
    double sign = 1.0, d = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(m(r, col)) > std::fabs(m(piv, col))) piv = r;
        if (m(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            sign = -sign;
        }
        d *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = m(r, col) / m(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return sign * d;
}

bool spd_solve(Mat s, const Vec& rhs, Vec& x) {
    if (s.rows != s.cols || s.rows != static_cast<int>(rhs.size()))
        throw param_error("spd_solve: shape mismatch");
    const int n = s.rows;
    // in-place Cholesky, s = L L^T
    for (int j = 0; j < n; ++j) {
        double diag = s(j, j);
        for (int k = 0; k < j; ++k) diag -= s(j, k) * s(j, k);
        if (!(diag > 0.0)) return false;
        const double ljj = std::sqrt(diag);
        s(j, j) = ljj;
        for (int i = j + 1; i < n; ++i) {
            double v = s(i, j);
            for (int k = 0; k < j; ++k) v -= s(i, k) * s(j, k);
            s(i, j) = v / ljj;
        }
    }
    x = rhs;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < i; ++k) x[i] -= s(i, k) * x[k];
        x[i] /= s(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) x[i] -= s(k, i) * x[k];
        x[i] /= s(i, i);
    }
    return true;
}

bool is_orthogonal(const Mat& q, double tol) {
    if (q.rows != q.cols) return false;
    const int n = q.rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += q(k, i) * q(k, j);
            const double target = (i == j) ? 1.0 : 0.0;
            if (std::fabs(s - target) > tol) return false;
        }
    return true;
}

}  // namespace ivm
