#pragma once
#include "linalg.hpp"
#include "rng.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace ivm {

// Orthonormal columns spanning a j-plane through the origin of R^n.
struct Frame {
    int n = 0, j = 0;
    std::vector<double> cols;  // column-major: cols[c*n + r]

    double at(int r, int c) const { return cols[static_cast<std::size_t>(c) * n + r]; }
    double& at(int r, int c) { return cols[static_cast<std::size_t>(c) * n + r]; }
};

// Uniform j-dimensional subspace: Gram-Schmidt on i.i.d. Gaussian columns.
Frame haar_subspace(int n, int j, RngStream& rng);
Frame identity_frame(int n, int j);

// Coordinates of x in the frame's basis (length j).
Vec project(const Vec& x, const Frame& f);
Vec frame_column(const Frame& f, int c);

// m-volume of conv(v_0..v_m) from the Gram determinant of edge vectors.
double simplex_volume(const std::vector<Vec>& vertices);

struct Polytope {
    std::vector<Vec> vertices;
};

struct Ball {
    Vec center;
    double radius = 1.0;
    // Orthonormal directions of the affine hull when the ball is flat
    // (lower-dimensional than the ambient space); empty means full-dimensional.
    std::optional<Frame> span;
};

using ConvexBody = std::variant<Polytope, Ball>;

ConvexBody make_ball(int n, double radius);

int ambient_dim(const ConvexBody& body);
// Intrinsic dimension: affine-hull dimension for balls; ambient for polytopes
// (vertex clouds are not analyzed, degenerate clouds are legal and carry
// zero volume in higher-dimensional evaluations).
int ball_dim(const Ball& b);

double support(const ConvexBody& body, const Vec& u);

// rotation must be square, match the ambient dimension and be orthogonal
// within 1e-10; bodies are transformed eagerly, vertex by vertex.
ConvexBody apply_rigid_motion(const ConvexBody& body, const Mat& rotation,
                              const Vec& translation);
ConvexBody scale_body(const ConvexBody& body, double t);

// Zero-pad into R^{n+extra}. A full-dimensional ball becomes flat: the set is
// unchanged as a point set, so its affine hull keeps dimension n.
ConvexBody pad_dims(const ConvexBody& body, int extra);

}  // namespace ivm
