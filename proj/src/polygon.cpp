#include "polygon.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cmath>

namespace ivm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

inline double cross(const P2& o, const P2& a, const P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline double cross2(const P2& a, const P2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline double dot2(const P2& a, const P2& b) { return a[0] * b[0] + a[1] * b[1]; }

// signed circular sector area from direction a to direction b (|angle| < pi)
inline double sector(const P2& a, const P2& b, double r) {
    const double c = cross2(a, b);
    const double d = dot2(a, b);
    if (c == 0.0 && d == 0.0) return 0.0;  // a vertex sits on the center
    return 0.5 * r * r * std::atan2(c, d);
}

}  // namespace

std::vector<P2> hull2d(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<P2> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

double polygon_area(const std::vector<P2>& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const P2& a = poly[i];
        const P2& b = poly[(i + 1) % n];
        s += cross2(a, b);
    }
    return 0.5 * s;
}

std::vector<P2> clip_convex(const std::vector<P2>& subject, const std::vector<P2>& clip) {
    if (subject.size() < 3 || clip.size() < 3) return {};
    std::vector<P2> out = subject;
    for (std::size_t e = 0; e < clip.size() && !out.empty(); ++e) {
        const P2& a = clip[e];
        const P2& b = clip[(e + 1) % clip.size()];
        std::vector<P2> in;
        in.swap(out);
        for (std::size_t i = 0; i < in.size(); ++i) {
            const P2& p = in[i];
            const P2& q = in[(i + 1) % in.size()];
            const double sp = cross(a, b, p);
            const double sq = cross(a, b, q);
            if (sp >= 0.0) out.push_back(p);
            if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
                const double t = sp / (sp - sq);
                out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
            }
        }
    }
    return out;
}

double disk_polygon_intersection_area(const std::vector<P2>& poly, const P2& center,
                                      double r, double tol) {
    if (!(r > 0.0)) throw param_error("disk_polygon_intersection_area: radius must be positive");
    const std::size_t n = poly.size();
    if (n < 3) return 0.0;
    double area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        P2 a{poly[i][0] - center[0], poly[i][1] - center[1]};
        P2 b{poly[(i + 1) % n][0] - center[0], poly[(i + 1) % n][1] - center[1]};
        const P2 d{b[0] - a[0], b[1] - a[1]};
        const double dd = dot2(d, d);
        if (dd == 0.0) continue;
        const double ad = dot2(a, d);
        // distance from the center to the supporting line; tangency window
        const double disc = ad * ad - dd * (dot2(a, a) - r * r);
        const double line_dist = std::sqrt(std::max(0.0, dot2(a, a) - ad * ad / dd));
        if (disc <= 0.0 || line_dist >= r - tol) {
            area += sector(a, b, r);
            continue;
        }
        const double sq = std::sqrt(disc);
        const double t1 = (-ad - sq) / dd;
        const double t2 = (-ad + sq) / dd;
        if (t2 <= 0.0 || t1 >= 1.0) {
            area += sector(a, b, r);
            continue;
        }
        const double u1 = std::max(t1, 0.0);
        const double u2 = std::min(t2, 1.0);
        const P2 p1{a[0] + u1 * d[0], a[1] + u1 * d[1]};
        const P2 p2{a[0] + u2 * d[0], a[1] + u2 * d[1]};
        area += sector(a, p1, r) + 0.5 * cross2(p1, p2) + sector(p2, b, r);
    }
    const double cap = std::min(std::fabs(polygon_area(poly)), kPi * r * r);
    return std::clamp(area, 0.0, cap);
}

double disk_polygon_symdiff(const std::vector<P2>& pts, const P2& center, double r) {
    if (!(r > 0.0)) throw param_error("disk_polygon_symdiff: radius must be positive");
    const std::vector<P2> hull = hull2d(pts);
    const double pa = polygon_area(hull);
    const double da = kPi * r * r;
    if (hull.size() < 3) return da;
    const double inter = disk_polygon_intersection_area(hull, center, r);
    return pa + da - 2.0 * inter;
}

double disk_disk_intersection_area(const P2& c1, double r1, const P2& c2, double r2) {
    if (!(r1 > 0.0) || !(r2 > 0.0))
        throw param_error("disk_disk_intersection_area: radii must be positive");
    const double dx = c2[0] - c1[0];
    const double dy = c2[1] - c1[1];
    const double d = std::hypot(dx, dy);
    if (d >= r1 + r2) return 0.0;
    const double rmin = std::min(r1, r2);
    if (d <= std::fabs(r1 - r2)) return kPi * rmin * rmin;
    const double a1 = std::acos(std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0));
    const double a2 = std::acos(std::clamp((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0));
    return r1 * r1 * (a1 - 0.5 * std::sin(2.0 * a1)) + r2 * r2 * (a2 - 0.5 * std::sin(2.0 * a2));
}

}  // namespace ivm
