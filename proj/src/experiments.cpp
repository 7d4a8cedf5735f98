#include "experiments.hpp"
#include "beta.hpp"
#include "caps.hpp"
#include "errors.hpp"
#include "lp.hpp"
#include "parallel.hpp"
#include "polygon.hpp"
#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

namespace ivm {

namespace {

constexpr std::uint64_t kPtsTag = 0x70747374;
constexpr std::uint64_t kEstTag = 0x65737474;
constexpr std::uint64_t kScaleTag = 0x7363616c;
constexpr std::uint64_t kRepTag = 0x72657073;
constexpr std::uint64_t kStartTag = 0x73747274;
constexpr std::uint64_t kEvalTag = 0x6576616c;
constexpr std::uint64_t kMutTag = 0x6d757461;
constexpr std::uint64_t kRowTag = 0x726f7773;

std::string name_nb(const char* what, int n, double beta) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s n=%d beta=%g", what, n, beta);
    return buf;
}

Polytope sphere_polytope_scaled(int n, long N, double t, RngStream& rng) {
    Polytope P;
    P.vertices.reserve(static_cast<std::size_t>(N));
    const double inv = 1.0 / t;
    for (long i = 0; i < N; ++i) {
        Vec v = sample_sphere(n, rng);
        if (t != 1.0) v = vscale(std::move(v), inv);
        P.vertices.push_back(std::move(v));
    }
    return P;
}

double missed_volume_one(int n, const std::vector<Vec>& pts, long inner_samples,
                         RngStream& rng) {
    if (n == 1) {
        double lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return 2.0 - (hi - lo);
    }
    if (n == 2) {
        std::vector<P2> flat;
        flat.reserve(pts.size());
        for (const auto& p : pts) flat.push_back({p[0], p[1]});
        constexpr double pi = 3.141592653589793238462643383279502884;
        return pi - polygon_area(hull2d(flat));
    }
    const HullMembership hull(pts, 1e-9);
    long miss = 0;
    Vec x(n);
    for (long i = 0; i < inner_samples; ++i) {
        const Vec dir = sample_sphere(n, rng);
        const double r = std::pow(rng.uniform01(), 1.0 / n);
        for (int d = 0; d < n; ++d) x[d] = r * dir[d];
        if (!hull.contains(x)) ++miss;
    }
    return std::exp(log_ball_volume(n)) * static_cast<double>(miss) / inner_samples;
}

}  // namespace

const char* to_string(ScalingMode mode) {
    switch (mode) {
        case ScalingMode::asymptotic: return "asymptotic";
        case ScalingMode::empirical: return "empirical";
        case ScalingMode::none: return "none";
    }
    return "none";
}

ScalingMode scaling_mode_from_string(const std::string& s) {
    if (s == "asymptotic") return ScalingMode::asymptotic;
    if (s == "empirical") return ScalingMode::empirical;
    if (s == "none") return ScalingMode::none;
    throw param_error("scaling: expected asymptotic, empirical or none, got '" + s + "'");
}

double scaling_factor_asymptotic(int n, long N, double beta) {
    if (N < n + 1) throw param_error("scaling_factor: need N >= n+1");
    const double A = affentranger_A(n, beta);
    const double omega = std::exp(log_sphere_surface(n));
    const double q = n + 2.0 * beta + 1.0;
    const double t = 1.0 - (A / omega) * std::pow(static_cast<double>(N), -2.0 / q);
    // the closed form leaves (0,1) only for very small N, where it carries no
    // meaning anyway; keep the factor usable for constructions
    return std::max(t, 0.5);
}

McEstimate missed_volume_empirical(int n, long N, double beta, long reps,
                                   long inner_samples, RngStream& rng) {
    if (n < 1) throw param_error("missed_volume_empirical: need n >= 1");
    if (N < n + 1) throw param_error("missed_volume_empirical: need N >= n+1");
    if (reps < 1) throw param_error("missed_volume_empirical: need reps >= 1");
    if (beta < -1.0) throw param_error("missed_volume_empirical: need beta >= -1");
    if (n >= 3 && inner_samples < 1)
        throw param_error("missed_volume_empirical: need inner_samples >= 1 for n >= 3");
    std::vector<double> missed(static_cast<std::size_t>(reps));
    parallel_for(static_cast<std::size_t>(reps), [&](std::size_t r) {
        RngStream rr = rng.substream(kRepTag, r);
        std::vector<Vec> pts;
        pts.reserve(static_cast<std::size_t>(N));
        for (long i = 0; i < N; ++i)
            pts.push_back(beta == -1.0 ? sample_sphere(n, rr) : sample_beta(n, beta, rr));
        missed[r] = missed_volume_one(n, pts, inner_samples, rr);
    });
    Accum acc;
    for (double v : missed) acc.add(v);
    return {acc.mean(), acc.sem(), reps};
}

McEstimate scaling_factor_empirical(int n, long N, double beta, long reps,
                                    long inner_samples, RngStream& rng) {
    const McEstimate missed = missed_volume_empirical(n, N, beta, reps, inner_samples, rng);
    const double ball = std::exp(log_ball_volume(n));
    if (missed.value >= ball)
        throw numeric_error("scaling_factor_empirical: degenerate N, polytope misses the whole ball");
    const double base = 1.0 - missed.value / ball;
    const double t = std::pow(base, 1.0 / n);
    const double dtdv = std::pow(base, 1.0 / n - 1.0) / (n * ball);
    return {t, dtdv * missed.std_error, missed.samples};
}

double scaling_factor(int n, long N, double beta, ScalingMode mode, RngStream& rng) {
    switch (mode) {
        case ScalingMode::none: return 1.0;
        case ScalingMode::asymptotic: return scaling_factor_asymptotic(n, N, beta);
        case ScalingMode::empirical:
            return scaling_factor_empirical(n, N, beta, 500, 2000, rng).value;
    }
    return 1.0;
}

Polytope theorem1_polytope(int n, int j, long N, ScalingMode mode, RngStream& rng) {
    if (n < 2) throw param_error("theorem1_polytope: need n >= 2");
    if (j < 1 || j > n) throw param_error("theorem1_polytope: need 1 <= j <= n");
    if (N < n + 1) throw param_error("theorem1_polytope: need N >= n+1");
    const double beta = 0.5 * (n - j - 2);
    double t = 1.0;
    if (mode != ScalingMode::none) {
        RngStream scale_rng = rng.substream(kScaleTag);
        t = scaling_factor(j, N, beta, mode, scale_rng);
    }
    return sphere_polytope_scaled(n, N, t, rng);
}

Polytope theorem1_polytope(int n, int j, long N, RngStream& rng) {
    return theorem1_polytope(n, j, N, ScalingMode::asymptotic, rng);
}

ExperimentResult theorem1_run(const ExperimentSpec& spec) {
    if (spec.n < 2) throw param_error("theorem1_run: need n >= 2");
    if (spec.j < 1 || spec.j > spec.n) throw param_error("theorem1_run: need 1 <= j <= n");
    if (spec.reps < 1) throw param_error("theorem1_run: need reps >= 1");
    if (spec.N_grid.size() < 3)
        throw param_error("theorem1_run: need at least 3 vertex counts for the rate fit");
    for (long N : spec.N_grid)
        if (N < spec.n + 1) throw param_error("theorem1_run: every N must be >= n+1");
    if (spec.cfg.subspace_samples < 1 || spec.cfg.volume_samples < 1)
        throw param_error("theorem1_run: sample counts must be >= 1");

    RngStream master(spec.seed);
    const std::size_t nN = spec.N_grid.size();
    const std::size_t reps = static_cast<std::size_t>(spec.reps);

    // empirical shrink factors are estimated once per vertex count
    std::vector<double> shrink(nN, 1.0);
    const double beta = 0.5 * (spec.n - spec.j - 2);
    for (std::size_t i = 0; i < nN; ++i) {
        if (spec.scaling == ScalingMode::asymptotic) {
            shrink[i] = scaling_factor_asymptotic(spec.j, spec.N_grid[i], beta);
        } else if (spec.scaling == ScalingMode::empirical) {
            RngStream srng = master.substream(kScaleTag, i);
            shrink[i] = scaling_factor_empirical(spec.j, spec.N_grid[i], beta, 500, 2000,
                                                 srng).value;
        }
    }

    ExperimentResult out;
    out.scaling_extrapolated = (spec.j == spec.n && spec.scaling != ScalingMode::none);
    out.rep_values.assign(nN, std::vector<double>(reps, 0.0));

    const ConvexBody ball = make_ball(spec.n, 1.0);
    parallel_for(nN * reps, [&](std::size_t idx) {
        const std::size_t iN = idx / reps;
        RngStream pts_rng = master.substream(kPtsTag, idx);
        RngStream est_rng = master.substream(kEstTag, idx);
        const ConvexBody poly =
            sphere_polytope_scaled(spec.n, spec.N_grid[iN], shrink[iN], pts_rng);
        out.rep_values[iN][idx % reps] =
            delta_j(poly, ball, spec.j, spec.cfg, est_rng).value;
    });

    std::vector<double> xs, ys, ws;
    for (std::size_t i = 0; i < nN; ++i) {
        Accum acc;
        for (double v : out.rep_values[i]) acc.add(v);
        ExperimentRow row;
        row.N = spec.N_grid[i];
        row.mean = acc.mean();
        row.std_error = reps > 1 ? acc.sem() : 0.0;
        row.bound = 2.0 * spec.j / (spec.n - 1.0) *
                    ball_intrinsic_volume(spec.n, spec.j) *
                    std::pow(static_cast<double>(row.N), -2.0 / (spec.n - 1));
        row.ratio = row.mean / row.bound;
        out.rows.push_back(row);
        if (!(row.mean > 0.0) || !std::isfinite(row.mean))
            throw numeric_error("theorem1_run: rate fit needs positive means");
        xs.push_back(std::log(static_cast<double>(row.N)));
        ys.push_back(std::log(row.mean));
        ws.push_back(reps > 1 && row.std_error > 0.0
                         ? (row.mean / row.std_error) * (row.mean / row.std_error)
                         : 1.0);
    }
    const LineFit fit = weighted_line_fit(xs, ys, ws);
    out.slope = fit.slope;
    out.slope_std_error = fit.slope_se;
    return out;
}

double appendixB_quadrature(long N, double beta) {
    if (N < 1) throw param_error("appendixB: need N >= 1");
    if (beta <= -1.0) throw param_error("appendixB: need beta > -1");
    // E[max] = 1 - int_{-1}^{1} F(x)^N dx, after integrating by parts; then
    // x = sin(theta) so the integrand F(sin t)^N cos t has a bounded first
    // derivative even for beta < 0, where F' itself blows up at the endpoints.
    // The mass concentrates in a boundary layer near t = pi/2 that narrows
    // with N, so split into dyadic panels toward both endpoints instead of
    // trusting one adaptive pass to find it; the skipped outermost sliver of
    // width pi/2 * 2^-45 contributes at most its width squared.
    const double half_pi = 2.0 * std::atan(1.0);
    const auto g = [N, beta](double t) {
        return std::pow(cdf_F1(beta, std::sin(t)), static_cast<double>(N)) * std::cos(t);
    };
    double tail = 0.0;
    double a = 0.0;
    for (int k = 1; k <= 45; ++k) {
        const double b = half_pi * (1.0 - std::ldexp(1.0, -k));
        tail += integrate(g, a, b, 1e-12) + integrate(g, -b, -a, 1e-12);
        a = b;
    }
    return 2.0 * (1.0 - tail);
}

double appendixB_expectation(long N, double beta) {
    if (N < 1) throw param_error("appendixB: need N >= 1");
    if (beta <= -1.0) throw param_error("appendixB: need beta > -1");
    if (beta == 0.0) return 2.0 * (N - 1.0) / (N + 1.0);
    return appendixB_quadrature(N, beta);
}

SearchResult best_approx_search(int n, int j, long N_vertices, long budget,
                                const MetricConfig& cfg, RngStream& rng) {
    if (budget < 0) throw param_error("best_approx_search: need budget >= 0");
    RngStream start_rng = rng.substream(kStartTag);
    const RngStream eval_root = rng.substream(kEvalTag);
    RngStream mut_rng = rng.substream(kMutTag);

    SearchResult res;
    res.best = theorem1_polytope(n, j, N_vertices, ScalingMode::asymptotic, start_rng);
    const ConvexBody ball = make_ball(n, 1.0);
    const auto evaluate = [&](const Polytope& P) {
        const ConvexBody body = P;
        RngStream er = eval_root;  // same substream roots every call
        return delta_j(body, ball, j, cfg, er);
    };
    res.objective = evaluate(res.best);
    res.trace.push_back({0, res.objective.value});

    const double sigma0 = 0.2 / std::sqrt(static_cast<double>(N_vertices));
    long accepted = 0;
    for (long step = 1; step <= budget; ++step) {
        const double sigma = sigma0 * std::pow(0.98, static_cast<double>(accepted));
        Polytope cand = res.best;
        Vec& v = cand.vertices[static_cast<std::size_t>((step - 1) % N_vertices)];
        for (double& c : v) c += sigma * mut_rng.normal();
        const McEstimate cand_obj = evaluate(cand);
        if (cand_obj.value < res.objective.value) {
            res.best = std::move(cand);
            res.objective = cand_obj;
            ++accepted;
            res.trace.push_back({step, cand_obj.value});
        }
    }
    return res;
}

std::vector<CheckRow> lemma_validation_suite(std::uint64_t seed, long samples) {
    if (samples < 100) throw param_error("lemma_validation_suite: need samples >= 100");
    RngStream master(seed);
    std::vector<CheckRow> rows;
    std::uint64_t tag = 0;

    const auto run = [&](const std::string& name, double threshold, auto&& body) {
        CheckRow row;
        row.name = name;
        row.threshold = threshold;
        RngStream rng = master.substream(kRowTag, tag++);
        try {
            row.statistic = body(rng);
            row.pass = row.statistic <= threshold;
        } catch (const std::exception& e) {
            row.statistic = std::numeric_limits<double>::infinity();
            row.pass = false;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    };

    // cap mass against direct sampling, worst z-score over an h grid
    for (const auto& [n, beta] : std::vector<std::pair<int, double>>{
             {2, 0.0}, {3, 0.0}, {3, 1.0}, {3, -1.0}}) {
        run(name_nb("cap probability", n, beta), 3.0, [&, n = n, beta = beta](RngStream& rng) {
            const double hs[] = {0.1, 0.35, 0.6};
            long cnt[3] = {0, 0, 0};
            for (long i = 0; i < samples; ++i) {
                const Vec x =
                    beta == -1.0 ? sample_sphere(n, rng) : sample_beta(n, beta, rng);
                for (int k = 0; k < 3; ++k)
                    if (x[static_cast<std::size_t>(n - 1)] >= hs[k]) ++cnt[k];
            }
            double worst = 0.0;
            for (int k = 0; k < 3; ++k) {
                const double p = cap_probability(n, beta, hs[k]);
                const double sigma = std::sqrt(p * (1.0 - p) / samples);
                worst = std::max(worst,
                                 std::fabs(static_cast<double>(cnt[k]) / samples - p) / sigma);
            }
            return worst;
        });
    }

    for (const auto& [n, j, beta] : std::vector<std::tuple<int, int, double>>{
             {3, 1, -1.0}, {2, 1, 0.0}, {3, 2, 0.5}}) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "projection law ks n=%d j=%d beta=%g", n, j, beta);
        run(buf, 1.0, [&, n = n, j = j, beta = beta](RngStream& rng) {
            const KsCheck kc = projection_law_check(n, j, beta, samples, rng);
            return kc.statistic / kc.critical;
        });
    }

    // squared simplex volume of n points in the (n-1)-ball
    for (const auto& [n, beta] : std::vector<std::pair<int, double>>{
             {2, 0.0}, {3, 0.0}, {2, 1.0}}) {
        run(name_nb("simplex second moment", n, beta), 0.02,
            [&, n = n, beta = beta](RngStream& rng) {
                Accum acc;
                std::vector<Vec> verts(static_cast<std::size_t>(n));
                for (long i = 0; i < samples; ++i) {
                    for (auto& v : verts) v = sample_beta(n - 1, beta, rng);
                    const double vol = simplex_volume(verts);
                    acc.add(vol * vol);
                }
                const double closed = simplex_second_moment(n, beta);
                return std::fabs(acc.mean() - closed) / closed;
            });
    }

    for (const auto& [n, beta, h] : std::vector<std::tuple<int, double, double>>{
             {2, 0.0, 0.0}, {3, 0.0, 0.5}}) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "weighted slice moment n=%d beta=%g h=%g", n, beta, h);
        run(buf, 0.05, [&, n = n, beta = beta, h = h](RngStream& rng) {
            return weighted_slice_moment_check(n, beta, h, samples, rng);
        });
    }

    for (const auto& [n, beta, h] : std::vector<std::tuple<int, double, double>>{
             {2, 0.0, 0.4}, {3, 1.0, 0.2}}) {
        run(name_nb("cap derivative fd", n, beta), 1e-6,
            [n = n, beta = beta, h = h](RngStream&) {
                const double eps = 1e-5;
                const double fd =
                    (cap_probability(n, beta, h + eps) - cap_probability(n, beta, h - eps)) /
                    (2.0 * eps);
                const double exact = cap_derivative(n, beta, h);
                return std::fabs(fd - exact) / std::fabs(exact);
            });
    }

    run("cap monotone grid", 0.0, [](RngStream&) {
        double worst = 0.0;
        for (const auto& [n, beta] : std::vector<std::pair<int, double>>{
                 {2, 0.0}, {3, 1.0}, {4, -1.0}, {5, 2.5}}) {
            double prev = cap_probability(n, beta, -0.95);
            for (double h = -0.90; h <= 0.951; h += 0.05) {
                const double cur = cap_probability(n, beta, h);
                worst = std::max(worst, cur - prev);
                worst = std::max(worst, cap_derivative(n, beta, h));
                prev = cur;
            }
        }
        return std::max(worst, 0.0);
    });

    run("cap sandwich grid", 0.0, [](RngStream&) {
        double fails = 0.0;
        for (int n : {2, 3, 4, 6})
            for (double beta : {-0.5, 0.0, 1.0, 2.5})
                for (double r : {0.05, 0.2, 0.4, 0.6, 0.74})
                    if (!cap_bounds_check(n, beta, r).ok) fails += 1.0;
        return fails;
    });

    run("cap constant dual forms", 0.0, [](RngStream&) {
        double fails = 0.0;
        for (int n = 1; n <= 200; n = n < 20 ? n + 1 : n * 2)
            for (double beta : {-0.99, -0.5, 0.0, 0.5, 1.0, 3.0, 7.5}) {
                try {
                    d_const(n, beta);
                } catch (const std::exception&) {
                    fails += 1.0;
                }
            }
        return fails;
    });

    run("flag coefficient dual forms", 0.0, [](RngStream&) {
        double fails = 0.0;
        for (int n = 1; n <= 300; n = n < 20 ? n + 1 : n + 35)
            for (int j : {1, n / 2, n - 1, n}) {
                if (j < 1 || j > n) continue;
                try {
                    flag_coefficient(n, j);
                } catch (const std::exception&) {
                    fails += 1.0;
                }
            }
        return fails;
    });

    // |cos angle| moments of a Haar line against the axis subspace
    for (const auto& [n, ell] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}}) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "projection angle moment mc n=%d l=%d", n, ell);
        run(buf, 0.01, [n = n, ell = ell](RngStream& rng) {
            Accum acc;
            for (long i = 0; i < 1000000; ++i) {
                const Frame f = haar_subspace(n, 1, rng);
                const double c = std::fabs(f.at(0, 0));
                acc.add(ell == 1 ? c : c * c);
            }
            const double exact = chern_constant(n, 1, ell);
            return std::fabs(acc.mean() - exact) / exact;
        });
    }

    run("density normalization n=3 beta=0.7", 3.0, [&](RngStream& rng) {
        const int n = 3;
        const double beta = 0.7;
        const double logc = log_beta_normalizer(n, beta);
        Accum acc;
        for (long i = 0; i < samples; ++i) {
            const double r = std::pow(rng.uniform01(), 1.0 / n);
            acc.add(std::exp(logc + beta * std::log1p(-r * r)));
        }
        const double ball = std::exp(log_ball_volume(n));
        return std::fabs(ball * acc.mean() - 1.0) / (ball * acc.sem());
    });

    run("rotation invariance ks n=3 beta=0.5", 1.0, [&](RngStream& rng) {
        const double c = std::cos(0.7), s = std::sin(0.7);
        const double c2 = std::cos(1.1), s2 = std::sin(1.1);
        Mat q(3, 3);
        // Rz(0.7) composed with Rx(1.1)
        q(0, 0) = c;      q(0, 1) = -s;      q(0, 2) = 0.0;
        q(1, 0) = c2 * s; q(1, 1) = c2 * c;  q(1, 2) = -s2;
        q(2, 0) = s2 * s; q(2, 1) = s2 * c;  q(2, 2) = c2;
        Vec u = {1.0, 2.0, -1.0};
        u = vscale(std::move(u), 1.0 / norm(u));
        std::vector<double> a, b;
        a.reserve(samples);
        b.reserve(samples);
        for (long i = 0; i < samples; ++i) a.push_back(dot(u, sample_beta(3, 0.5, rng)));
        for (long i = 0; i < samples; ++i)
            b.push_back(dot(u, matvec(q, sample_beta(3, 0.5, rng))));
        const double stat = ks_statistic_two_sample(std::move(a), std::move(b));
        return stat / ks_critical_two_sample(samples, samples, 0.01);
    });

    run("cdf inverse round trip", 1e-10, [](RngStream&) {
        double worst = 0.0;
        for (double beta : {-0.5, 0.0, 0.5, 1.0, 2.0})
            for (double h = -0.9; h <= 0.901; h += 0.1)
                worst = std::max(worst,
                                 std::fabs(inverse_cdf_F1(beta, cdf_F1(beta, h)) - h));
        return worst;
    });

    run("hull length quadrature vs closed form", 1e-8, [](RngStream&) {
        double worst = 0.0;
        for (long N = 1; N <= 200; ++N)
            worst = std::max(worst, std::fabs(appendixB_quadrature(N, 0.0) -
                                              2.0 * (N - 1.0) / (N + 1.0)));
        return worst;
    });

    run("annulus envelope fitted constants n=10..200", 10.0, [](RngStream&) {
        // smallest c1, c2 with 1/2 - c1/(n+2) <= ratio <= 1/2 + c2 ln(n(n+1))/n
        double c1 = 0.0, c2 = 0.0;
        for (int n = 10; n <= 200; ++n) {
            const double ratio =
                affentranger_A(n, -0.5) / std::exp(log_sphere_surface(n));
            c1 = std::max(c1, (0.5 - ratio) * (n + 2.0));
            c2 = std::max(c2, (ratio - 0.5) * n /
                                  std::log(static_cast<double>(n) * (n + 1.0)));
        }
        return std::max(c1, c2);
    });

    run("annulus ratio trend constant", 10.0, [](RngStream&) {
        double worst = 0.0;
        for (int n = 1; n <= 200; ++n) {
            const double ratio =
                affentranger_A(n, -0.5) / std::exp(log_sphere_surface(n));
            worst = std::max(worst, std::fabs(ratio - 0.5) * n / std::log(n + 2.0));
        }
        return worst;
    });

    run("missed volume rate n=2 beta=0", 0.10, [](RngStream& rng) {
        const long N = 2000;
        const McEstimate est = missed_volume_empirical(2, N, 0.0, 2000, 1, rng);
        const double target = affentranger_A(2, 0.0);
        return std::fabs(std::pow(static_cast<double>(N), 2.0 / 3.0) * est.value - target) /
               target;
    });

    run("empirical shrink factor n=1 beta=0", 1.0, [](RngStream& rng) {
        double worst = 0.0;
        std::uint64_t k = 0;
        for (long N : {5L, 20L, 100L}) {
            RngStream sub = rng.substream(k++);
            const McEstimate t = scaling_factor_empirical(1, N, 0.0, 100000, 1, sub);
            const double dev = std::fabs((1.0 - t.value) - 2.0 / (N + 1.0));
            worst = std::max(worst, dev / (3.0 * t.std_error));
        }
        return worst;
    });

    return rows;
}

}  // namespace ivm
