#include "geometry.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ivm {

Frame haar_subspace(int n, int j, RngStream& rng) {
    if (n < 1 || j < 1 || j > n) throw param_error("haar_subspace: need 1 <= j <= n");
    Frame f;
    f.n = n;
    f.j = j;
    f.cols.assign(static_cast<std::size_t>(n) * j, 0.0);
    for (int c = 0; c < j; ++c) {
        for (;;) {
            Vec v(n);
            for (int r = 0; r < n; ++r) v[r] = rng.normal();
            // two orthogonalization passes keep the Gram matrix at ~1e-15
            for (int pass = 0; pass < 2; ++pass) {
                for (int k = 0; k < c; ++k) {
                    double s = 0.0;
                    for (int r = 0; r < n; ++r) s += v[r] * f.at(r, k);
                    for (int r = 0; r < n; ++r) v[r] -= s * f.at(r, k);
                }
            }
            const double len = norm(v);
            if (len > 1e-8) {
                for (int r = 0; r < n; ++r) f.at(r, c) = v[r] / len;
                break;
            }
            // numerically degenerate Gaussian draw: redraw the column
        }
    }
    return f;
}

Frame identity_frame(int n, int j) {
    if (n < 1 || j < 1 || j > n) throw param_error("identity_frame: need 1 <= j <= n");
    Frame f;
    f.n = n;
    f.j = j;
    f.cols.assign(static_cast<std::size_t>(n) * j, 0.0);
    for (int c = 0; c < j; ++c) f.at(c, c) = 1.0;
    return f;
}

Vec project(const Vec& x, const Frame& f) {
    if (static_cast<int>(x.size()) != f.n) throw param_error("project: dimension mismatch");
    Vec y(f.j, 0.0);
    for (int c = 0; c < f.j; ++c) {
        double s = 0.0;
        for (int r = 0; r < f.n; ++r) s += x[r] * f.at(r, c);
        y[c] = s;
    }
    return y;
}

Vec frame_column(const Frame& f, int c) {
    if (c < 0 || c >= f.j) throw param_error("frame_column: index out of range");
    Vec u(f.n);
    for (int r = 0; r < f.n; ++r) u[r] = f.at(r, c);
    return u;
}

double simplex_volume(const std::vector<Vec>& vertices) {
    if (vertices.size() < 2) throw param_error("simplex_volume: need at least 2 vertices");
    const int m = static_cast<int>(vertices.size()) - 1;
    const int dim = static_cast<int>(vertices[0].size());
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != dim)
            throw param_error("simplex_volume: mixed dimensions");
    if (m > dim) return 0.0;
    // Gram matrix of edge vectors; vol = sqrt(det G) / m!
    Mat g(m, m);
    std::vector<Vec> e(m);
    for (int i = 0; i < m; ++i) e[i] = vsub(vertices[i + 1], vertices[0]);
    for (int i = 0; i < m; ++i)
        for (int k = i; k < m; ++k) g(i, k) = g(k, i) = dot(e[i], e[k]);
    const double d = det(g);
    if (d <= 0.0) return 0.0;
    double vol = std::sqrt(d);
    for (int i = 2; i <= m; ++i) vol /= i;
    return vol;
}

ConvexBody make_ball(int n, double radius) {
    if (n < 1) throw param_error("make_ball: n must be >= 1");
    if (!(radius > 0.0)) throw param_error("make_ball: radius must be positive");
    Ball b;
    b.center.assign(n, 0.0);
    b.radius = radius;
    return b;
}

int ambient_dim(const ConvexBody& body) {
    if (const auto* p = std::get_if<Polytope>(&body)) {
        if (p->vertices.empty()) throw param_error("ambient_dim: polytope has no vertices");
        return static_cast<int>(p->vertices[0].size());
    }
    return static_cast<int>(std::get<Ball>(body).center.size());
}

int ball_dim(const Ball& b) {
    return b.span ? b.span->j : static_cast<int>(b.center.size());
}

double support(const ConvexBody& body, const Vec& u) {
    if (const auto* p = std::get_if<Polytope>(&body)) {
        double h = -std::numeric_limits<double>::infinity();
        for (const auto& v : p->vertices) h = std::max(h, dot(v, u));
        return h;
    }
    const auto& b = std::get<Ball>(body);
    double tangent = 0.0;
    if (b.span) {
        // only the in-plane component of u sees the ball
        for (int c = 0; c < b.span->j; ++c) {
            double s = 0.0;
            for (int r = 0; r < b.span->n; ++r) s += u[r] * b.span->at(r, c);
            tangent += s * s;
        }
        tangent = std::sqrt(tangent);
    } else {
        tangent = norm(u);
    }
    return dot(b.center, u) + b.radius * tangent;
}

ConvexBody apply_rigid_motion(const ConvexBody& body, const Mat& rotation,
                              const Vec& translation) {
    const int n = ambient_dim(body);
    if (rotation.rows != n || rotation.cols != n)
        throw param_error("apply_rigid_motion: rotation shape mismatch");
    if (static_cast<int>(translation.size()) != n)
        throw param_error("apply_rigid_motion: translation dimension mismatch");
    if (!is_orthogonal(rotation, 1e-10))
        throw param_error("apply_rigid_motion: rotation is not orthogonal");

    if (const auto* p = std::get_if<Polytope>(&body)) {
        Polytope out;
        out.vertices.reserve(p->vertices.size());
        for (const auto& v : p->vertices) out.vertices.push_back(vadd(matvec(rotation, v), translation));
        return out;
    }
    Ball b = std::get<Ball>(body);
    b.center = vadd(matvec(rotation, b.center), translation);
    if (b.span) {
        Frame s = *b.span;
        for (int c = 0; c < s.j; ++c) {
            Vec col = frame_column(s, c);
            Vec rotated = matvec(rotation, col);
            for (int r = 0; r < s.n; ++r) s.at(r, c) = rotated[r];
        }
        b.span = s;
    }
    return b;
}

ConvexBody scale_body(const ConvexBody& body, double t) {
    if (!(t > 0.0)) throw param_error("scale_body: factor must be positive");
    if (const auto* p = std::get_if<Polytope>(&body)) {
        Polytope out;
        out.vertices.reserve(p->vertices.size());
        for (const auto& v : p->vertices) out.vertices.push_back(vscale(v, t));
        return out;
    }
    Ball b = std::get<Ball>(body);
    b.center = vscale(b.center, t);
    b.radius *= t;
    return b;
}

ConvexBody pad_dims(const ConvexBody& body, int extra) {
    if (extra < 0) throw param_error("pad_dims: extra must be >= 0");
    if (extra == 0) return body;
    const int n = ambient_dim(body);
    const int m = n + extra;
    if (const auto* p = std::get_if<Polytope>(&body)) {
        Polytope out;
        out.vertices.reserve(p->vertices.size());
        for (const auto& v : p->vertices) {
            Vec w(m, 0.0);
            std::copy(v.begin(), v.end(), w.begin());
            out.vertices.push_back(std::move(w));
        }
        return out;
    }
    const Ball& b = std::get<Ball>(body);
    Ball out;
    out.radius = b.radius;
    out.center.assign(m, 0.0);
    std::copy(b.center.begin(), b.center.end(), out.center.begin());
    const int k = ball_dim(b);
    Frame span;
    span.n = m;
    span.j = k;
    span.cols.assign(static_cast<std::size_t>(m) * k, 0.0);
    if (b.span) {
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < n; ++r) span.at(r, c) = b.span->at(r, c);
    } else {
        for (int c = 0; c < k; ++c) span.at(c, c) = 1.0;
    }
    out.span = span;
    return out;
}

}  // namespace ivm
