#pragma once
#include <vector>

namespace ivm {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec vadd(Vec a, const Vec& b);
Vec vsub(Vec a, const Vec& b);
Vec vscale(Vec a, double t);

// dense row-major matrix; everything here is small (dims <= ambient + few)
struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

Mat identity_mat(int n);
Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Vec matvec(const Mat& a, const Vec& x);

// determinant by Gaussian elimination with partial pivoting
double det(Mat m);

// solve s x = rhs for SPD s via Cholesky; false if s is not positive definite
bool spd_solve(Mat s, const Vec& rhs, Vec& x);

bool is_orthogonal(const Mat& q, double tol);

}  // namespace ivm
