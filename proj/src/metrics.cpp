#include "metrics.hpp"
#include "beta.hpp"
#include "caps.hpp"
#include "errors.hpp"
#include "lp.hpp"
#include "polygon.hpp"
#include "specfun.hpp"

#include <cmath>
#include <memory>
#include <optional>

namespace ivm {

namespace {

constexpr std::uint64_t kFrameTag = 0x66726d65;
constexpr std::uint64_t kVolTag = 0x766f6c73;

struct Shadow {
    enum class Kind { cloud, disk, ellipsoid } kind = Kind::cloud;
    std::vector<Vec> pts;  // cloud: projected vertices
    Vec center;            // disk / ellipsoid
    double radius = 0.0;
    Mat quad;                // ellipsoid: inverse Gram of the projected span
    bool degenerate = false; // ellipsoid collapsed to a lower-dimensional set
};

Shadow project_body(const ConvexBody& body, const Frame& f) {
    Shadow s;
    if (const auto* p = std::get_if<Polytope>(&body)) {
        s.kind = Shadow::Kind::cloud;
        s.pts.reserve(p->vertices.size());
        for (const auto& v : p->vertices) s.pts.push_back(project(v, f));
        return s;
    }
    const auto& b = std::get<Ball>(body);
    s.center = project(b.center, f);
    s.radius = b.radius;
    if (!b.span) {
        s.kind = Shadow::Kind::disk;
        return s;
    }
    s.kind = Shadow::Kind::ellipsoid;
    const int j = f.j;
    const int k = b.span->j;
    Mat g(j, k);
    for (int r = 0; r < j; ++r)
        for (int c = 0; c < k; ++c) {
            double acc = 0.0;
            for (int m = 0; m < f.n; ++m) acc += f.at(m, r) * b.span->at(m, c);
            g(r, c) = acc;
        }
    Mat gg(j, j);
    for (int r = 0; r < j; ++r)
        for (int c = r; c < j; ++c) {
            double acc = 0.0;
            for (int m = 0; m < k; ++m) acc += g(r, m) * g(c, m);
            gg(r, c) = gg(c, r) = acc;
        }
    // quad = gg^{-1}, column by column; a singular Gram means the shadow is
    // lower-dimensional and carries no j-volume
    s.quad = Mat(j, j);
    for (int c = 0; c < j; ++c) {
        Vec e(j, 0.0), col;
        e[c] = 1.0;
        if (!spd_solve(gg, e, col)) {
            s.degenerate = true;
            break;
        }
        for (int r = 0; r < j; ++r) s.quad(r, c) = col[r];
    }
    return s;
}

class ShadowTester {
public:
    ShadowTester(const Shadow& s, double lp_tol) : s_(&s) {
        if (s.kind == Shadow::Kind::cloud)
            hull_ = std::make_unique<HullMembership>(s.pts, lp_tol);
    }

    bool contains(const Vec& y) const {
        switch (s_->kind) {
            case Shadow::Kind::cloud:
                return hull_->contains(y);
            case Shadow::Kind::disk:
                return norm(vsub(y, s_->center)) <= s_->radius;
            case Shadow::Kind::ellipsoid: {
                if (s_->degenerate) return false;
                const Vec d = vsub(y, s_->center);
                const Vec qd = matvec(s_->quad, d);
                return dot(d, qd) <= s_->radius * s_->radius;
            }
        }
        return false;
    }

private:
    const Shadow* s_;
    std::unique_ptr<HullMembership> hull_;
};

struct Region {
    Vec center;
    double radius = 0.0;
};

// Ball around the projected sites, guaranteed to contain every shadow.
Region enclosing_region(const std::vector<const Shadow*>& shadows, int j) {
    Vec c(j, 0.0);
    long sites = 0;
    for (const auto* s : shadows) {
        if (s->kind == Shadow::Kind::cloud) {
            for (const auto& p : s->pts) {
                c = vadd(std::move(c), p);
                ++sites;
            }
        } else {
            c = vadd(std::move(c), s->center);
            ++sites;
        }
    }
    Region out;
    if (sites == 0) {
        out.center = c;
        return out;
    }
    out.center = vscale(std::move(c), 1.0 / sites);
    double r = 0.0;
    for (const auto* s : shadows) {
        if (s->kind == Shadow::Kind::cloud) {
            for (const auto& p : s->pts) r = std::max(r, norm(vsub(p, out.center)));
        } else {
            // projections contract, so the shadow sits within radius of center
            r = std::max(r, norm(vsub(s->center, out.center)) + s->radius);
        }
    }
    out.radius = 1.01 * r;
    return out;
}

Vec sample_in_ball(const Region& reg, int j, RngStream& rng) {
    Vec x(j);
    for (;;) {
        double len2 = 0.0;
        for (int i = 0; i < j; ++i) {
            x[i] = rng.normal();
            len2 += x[i] * x[i];
        }
        if (len2 > 1e-24) {
            const double r = reg.radius * std::pow(rng.uniform01(), 1.0 / j);
            const double f = r / std::sqrt(len2);
            for (int i = 0; i < j; ++i) x[i] = reg.center[i] + x[i] * f;
            return x;
        }
    }
}

struct Inner {
    double value = 0.0;
    double variance = 0.0;  // of the per-frame value; 0 on exact paths
    long samples = 1;
};

std::vector<P2> to_p2(const std::vector<Vec>& pts) {
    std::vector<P2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p[0], p[1]});
    return out;
}

double interval_symdiff(double a1, double b1, double a2, double b2) {
    const double overlap = std::max(0.0, std::min(b1, b2) - std::max(a1, a2));
    return (b1 - a1) + (b2 - a2) - 2.0 * overlap;
}

// Exact planar symmetric difference when both shadows have polygon/disk form.
std::optional<double> planar_symdiff(const Shadow& a, const Shadow& b) {
    using K = Shadow::Kind;
    if (a.kind == K::ellipsoid || b.kind == K::ellipsoid) return std::nullopt;
    if (a.kind == K::cloud && b.kind == K::cloud) {
        const auto ha = hull2d(to_p2(a.pts));
        const auto hb = hull2d(to_p2(b.pts));
        const double inter = polygon_area(clip_convex(ha, hb));
        return polygon_area(ha) + polygon_area(hb) - 2.0 * inter;
    }
    if (a.kind == K::cloud && b.kind == K::disk)
        return disk_polygon_symdiff(to_p2(a.pts), {b.center[0], b.center[1]}, b.radius);
    if (a.kind == K::disk && b.kind == K::cloud)
        return disk_polygon_symdiff(to_p2(b.pts), {a.center[0], a.center[1]}, a.radius);
    const double inter = disk_disk_intersection_area({a.center[0], a.center[1]}, a.radius,
                                                     {b.center[0], b.center[1]}, b.radius);
    constexpr double pi = 3.141592653589793238462643383279502884;
    return pi * a.radius * a.radius + pi * b.radius * b.radius - 2.0 * inter;
}

Inner symdiff_on_frame(const ConvexBody& K, const ConvexBody& L, const Frame& f,
                       const MetricConfig& cfg, RngStream vol_rng) {
    Inner out;
    if (f.j == 1) {
        const Vec u = frame_column(f, 0);
        const Vec mu = vscale(u, -1.0);
        out.value = interval_symdiff(-support(K, mu), support(K, u), -support(L, mu),
                                     support(L, u));
        return out;
    }
    const Shadow sk = project_body(K, f);
    const Shadow sl = project_body(L, f);
    if (f.j == 2 && cfg.exact_low_dim) {
        if (const auto exact = planar_symdiff(sk, sl)) {
            out.value = *exact;
            return out;
        }
    }
    const Region reg = enclosing_region({&sk, &sl}, f.j);
    const long m = cfg.volume_samples;
    out.samples = m;
    if (reg.radius <= 0.0) return out;
    const ShadowTester tk(sk, cfg.lp_tol);
    const ShadowTester tl(sl, cfg.lp_tol);
    long hits = 0;
    for (long i = 0; i < m; ++i) {
        const Vec y = sample_in_ball(reg, f.j, vol_rng);
        if (tk.contains(y) != tl.contains(y)) ++hits;
    }
    const double vol_region = std::exp(log_ball_volume(f.j)) * std::pow(reg.radius, f.j);
    const double p = static_cast<double>(hits) / m;
    out.value = p * vol_region;
    out.variance = vol_region * vol_region * p * (1.0 - p) / m;
    return out;
}

McEstimate reduce_frames(double flag, const std::vector<Inner>& inner) {
    McEstimate est;
    Accum acc;
    long samples = 0;
    for (const auto& in : inner) {
        acc.add(in.value);
        samples += in.samples;
    }
    est.value = flag * acc.mean();
    est.samples = samples;
    if (inner.size() > 1) {
        est.std_error = flag * acc.sem();
    } else {
        est.std_error = flag * std::sqrt(inner[0].variance);
    }
    return est;
}

bool nested_full_balls(const ConvexBody& K, const ConvexBody& L, const Ball** inner,
                       const Ball** outer) {
    const auto* a = std::get_if<Ball>(&K);
    const auto* b = std::get_if<Ball>(&L);
    if (!a || !b || a->span || b->span) return false;
    const double d = norm(vsub(a->center, b->center));
    if (d + a->radius <= b->radius) {
        *inner = a;
        *outer = b;
        return true;
    }
    if (d + b->radius <= a->radius) {
        *inner = b;
        *outer = a;
        return true;
    }
    return false;
}

void check_pair(const ConvexBody& K, const ConvexBody& L, int j, const char* who) {
    const int n = ambient_dim(K);
    if (ambient_dim(L) != n)
        throw param_error(std::string(who) + ": ambient dimensions differ");
    if (j < 1 || j > n) throw param_error(std::string(who) + ": need 1 <= j <= n");
}

}  // namespace

double ball_intrinsic_volume(int n, int j) {
    return std::exp(log_flag_coefficient(n, j) + log_ball_volume(j));
}

McEstimate intrinsic_volume(const ConvexBody& K, int j, const MetricConfig& cfg,
                            RngStream& rng) {
    const int n = ambient_dim(K);
    if (j < 0 || j > n) throw param_error("intrinsic_volume: need 0 <= j <= n");
    McEstimate est;
    if (j == 0) {  // Euler characteristic of a nonempty convex body
        est.value = 1.0;
        est.samples = 1;
        return est;
    }
    if (const auto* b = std::get_if<Ball>(&K)) {
        const int k = ball_dim(*b);
        est.value = j > k ? 0.0
                          : std::pow(b->radius, j) * ball_intrinsic_volume(k, j);
        est.samples = 1;
        return est;
    }
    const auto& P = std::get<Polytope>(K);
    const double flag = flag_coefficient(n, j);
    const int outer = (j == n) ? 1 : cfg.subspace_samples;
    if (outer < 1) throw param_error("intrinsic_volume: subspace_samples must be >= 1");
    std::vector<Inner> inner;
    inner.reserve(outer);
    for (int s = 0; s < outer; ++s) {
        RngStream frame_rng = rng.substream(kFrameTag, s);
        const Frame f = (j == n) ? identity_frame(n, j) : haar_subspace(n, j, frame_rng);
        Inner in;
        if (j == 1) {
            double lo = 0.0, hi = 0.0;
            bool first = true;
            for (const auto& v : P.vertices) {
                double t = 0.0;
                for (int r = 0; r < n; ++r) t += v[r] * f.at(r, 0);
                lo = first ? t : std::min(lo, t);
                hi = first ? t : std::max(hi, t);
                first = false;
            }
            in.value = hi - lo;
        } else {
            const Shadow sh = project_body(K, f);
            if (j == 2 && cfg.exact_low_dim) {
                in.value = polygon_area(hull2d(to_p2(sh.pts)));
            } else {
                const Region reg = enclosing_region({&sh}, j);
                const long m = cfg.volume_samples;
                in.samples = m;
                if (reg.radius > 0.0) {
                    RngStream vol_rng = rng.substream(kVolTag, s);
                    const ShadowTester tester(sh, cfg.lp_tol);
                    long hits = 0;
                    for (long i = 0; i < m; ++i)
                        if (tester.contains(sample_in_ball(reg, j, vol_rng))) ++hits;
                    const double vol_region =
                        std::exp(log_ball_volume(j)) * std::pow(reg.radius, j);
                    const double p = static_cast<double>(hits) / m;
                    in.value = p * vol_region;
                    in.variance = vol_region * vol_region * p * (1.0 - p) / m;
                }
            }
        }
        inner.push_back(in);
    }
    return reduce_frames(flag, inner);
}

McEstimate delta_j(const ConvexBody& K, const ConvexBody& L, int j, const MetricConfig& cfg,
                   RngStream& rng) {
    check_pair(K, L, j, "delta_j");
    const int n = ambient_dim(K);

    const Ball *bi = nullptr, *bo = nullptr;
    if (nested_full_balls(K, L, &bi, &bo)) {
        McEstimate est;
        est.value = (std::pow(bo->radius, j) - std::pow(bi->radius, j)) *
                    ball_intrinsic_volume(n, j);
        est.samples = 1;
        return est;
    }

    const double flag = flag_coefficient(n, j);
    const int outer = (j == n) ? 1 : cfg.subspace_samples;
    if (outer < 1) throw param_error("delta_j: subspace_samples must be >= 1");
    std::vector<Inner> inner;
    inner.reserve(outer);
    for (int s = 0; s < outer; ++s) {
        RngStream frame_rng = rng.substream(kFrameTag, s);
        const Frame f = (j == n) ? identity_frame(n, j) : haar_subspace(n, j, frame_rng);
        inner.push_back(symdiff_on_frame(K, L, f, cfg, rng.substream(kVolTag, s)));
    }
    return reduce_frames(flag, inner);
}

McEstimate delta_1_support(const ConvexBody& K, const ConvexBody& L,
                           const MetricConfig& cfg, RngStream& rng) {
    const int n = ambient_dim(K);
    if (ambient_dim(L) != n) throw param_error("delta_1_support: ambient dimensions differ");
    const int m = cfg.subspace_samples;
    if (m < 2) throw param_error("delta_1_support: subspace_samples must be >= 2");
    const double flag = flag_coefficient(n, 1);
    Accum acc;
    for (int s = 0; s < m; ++s) {
        RngStream dir_rng = rng.substream(kFrameTag, s);
        const Vec u = sample_sphere(n, dir_rng);
        acc.add(std::fabs(support(K, u) - support(L, u)));
    }
    McEstimate est;
    est.value = 2.0 * flag * acc.mean();
    est.std_error = 2.0 * flag * acc.sem();
    est.samples = m;
    return est;
}

McEstimate deviation_Delta_j(const Polytope& P, const Polytope& Q, int j,
                             const MetricConfig& cfg, RngStream& rng) {
    const ConvexBody bp = P, bq = Q;
    check_pair(bp, bq, j, "deviation_Delta_j");
    const int n = ambient_dim(bp);
    const double flag = flag_coefficient(n, j);
    const int outer = (j == n) ? 1 : cfg.subspace_samples;
    std::vector<Inner> inner;
    inner.reserve(outer);
    for (int s = 0; s < outer; ++s) {
        RngStream frame_rng = rng.substream(kFrameTag, s);
        const Frame f = (j == n) ? identity_frame(n, j) : haar_subspace(n, j, frame_rng);
        const Shadow sp = project_body(bp, f);
        const Shadow sq = project_body(bq, f);
        const HullMembership hp(sp.pts, cfg.lp_tol);
        const HullMembership hq(sq.pts, cfg.lp_tol);
        const IntersectionShadowMembership hpq(P.vertices, Q.vertices, f, cfg.lp_tol);
        const Region reg = enclosing_region({&sp, &sq}, j);
        Inner in;
        const long m = cfg.volume_samples;
        in.samples = m;
        if (reg.radius > 0.0) {
            RngStream vol_rng = rng.substream(kVolTag, s);
            const double vol_region = std::exp(log_ball_volume(j)) * std::pow(reg.radius, j);
            Accum g;
            for (long i = 0; i < m; ++i) {
                const Vec y = sample_in_ball(reg, j, vol_rng);
                const int gp = hp.contains(y) ? 1 : 0;
                const int gq = hq.contains(y) ? 1 : 0;
                const int gpq = (gp && gq && hpq.contains(y)) ? 1 : 0;
                g.add(static_cast<double>(gp + gq - 2 * gpq));
            }
            in.value = vol_region * g.mean();
            in.variance = vol_region * vol_region * g.variance() / m;
        }
        inner.push_back(in);
    }
    return reduce_frames(flag, inner);
}

McEstimate deviation_rho_j(const Polytope& P, const Polytope& Q, int j,
                           const MetricConfig& cfg, RngStream& rng) {
    const ConvexBody bp = P, bq = Q;
    check_pair(bp, bq, j, "deviation_rho_j");
    const int n = ambient_dim(bp);
    Polytope U;
    U.vertices = P.vertices;
    U.vertices.insert(U.vertices.end(), Q.vertices.begin(), Q.vertices.end());
    const ConvexBody bu = U;

    const double flag = flag_coefficient(n, j);
    const int outer = (j == n) ? 1 : cfg.subspace_samples;
    std::vector<Inner> inner;
    inner.reserve(outer);
    for (int s = 0; s < outer; ++s) {
        RngStream frame_rng = rng.substream(kFrameTag, s);
        const Frame f = (j == n) ? identity_frame(n, j) : haar_subspace(n, j, frame_rng);
        Inner in;
        if (j == 1) {
            const Vec u = frame_column(f, 0);
            const Vec mu = vscale(u, -1.0);
            const auto ival = [&](const ConvexBody& b) {
                return support(b, u) + support(b, mu);
            };
            in.value = 2.0 * ival(bu) - ival(bp) - ival(bq);
        } else if (j == 2 && cfg.exact_low_dim) {
            const auto area = [&](const ConvexBody& b) {
                return polygon_area(hull2d(to_p2(project_body(b, f).pts)));
            };
            in.value = 2.0 * area(bu) - area(bp) - area(bq);
        } else {
            const Shadow sp = project_body(bp, f);
            const Shadow sq = project_body(bq, f);
            const Shadow su = project_body(bu, f);
            const HullMembership hp(sp.pts, cfg.lp_tol);
            const HullMembership hq(sq.pts, cfg.lp_tol);
            const HullMembership hu(su.pts, cfg.lp_tol);
            const Region reg = enclosing_region({&su}, j);
            const long m = cfg.volume_samples;
            in.samples = m;
            if (reg.radius > 0.0) {
                RngStream vol_rng = rng.substream(kVolTag, s);
                const double vol_region =
                    std::exp(log_ball_volume(j)) * std::pow(reg.radius, j);
                Accum g;
                for (long i = 0; i < m; ++i) {
                    const Vec y = sample_in_ball(reg, j, vol_rng);
                    const int gu = hu.contains(y) ? 1 : 0;
                    const int gp = gu && hp.contains(y) ? 1 : 0;
                    const int gq = gu && hq.contains(y) ? 1 : 0;
                    g.add(static_cast<double>(2 * gu - gp - gq));
                }
                in.value = vol_region * g.mean();
                in.variance = vol_region * vol_region * g.variance() / m;
            }
        }
        inner.push_back(in);
    }
    return reduce_frames(flag, inner);
}

ConvexBody embed(const ConvexBody& body, int extra_dims) {
    if (extra_dims < 0) throw param_error("embed: extra_dims must be >= 0");
    return pad_dims(body, extra_dims);
}

}  // namespace ivm
