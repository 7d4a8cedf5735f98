// Acceptance gate. Eight criteria, each printed as one [PASS]/[FAIL] line
// with supporting numbers; the exit code is the number of failures. Every
// criterion has a fixed seed and a wall-clock budget that is part of the
// verdict.

#include "beta.hpp"
#include "caps.hpp"
#include "commands.hpp"
#include "experiments.hpp"
#include "geometry.hpp"
#include "metrics.hpp"
#include "rng.hpp"
#include "specfun.hpp"
#include "stats.hpp"
#include "table.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

using namespace ivm;

namespace {

constexpr std::uint64_t kSeed = 101;
constexpr double kPi = 3.141592653589793238462643383279502884;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void note(const char* fmt, ...) __attribute__((format(printf, 2, 3)));
    void require(bool ok, const char* fmt, ...)
        __attribute__((format(printf, 3, 4)));
};

std::string vformat(const char* fmt, va_list ap) {
    char buf[512];
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    return buf;
}

void Outcome::note(const char* fmt, ...) {
    va_list ap;
    va_start(ap, fmt);
    details.push_back(vformat(fmt, ap));
    va_end(ap);
}

void Outcome::require(bool ok, const char* fmt, ...) {
    va_list ap;
    va_start(ap, fmt);
    std::string msg = vformat(fmt, ap);
    va_end(ap);
    if (!ok) {
        pass = false;
        details.push_back("VIOLATION: " + msg);
    } else {
        details.push_back(msg);
    }
}

Polytope random_polytope(int n, int points, bool include_origin, RngStream& rng) {
    Polytope P;
    for (int i = 0; i < points; ++i) P.vertices.push_back(sample_beta(n, 0.0, rng));
    if (include_origin) P.vertices.push_back(Vec(static_cast<std::size_t>(n), 0.0));
    return P;
}

// ---------------------------------------------------------------- criterion 1
Outcome criterion1() {
    Outcome out;
    double worst_closed = 0.0;
    for (long N = 1; N <= 200; ++N) {
        const double closed = 2.0 * (N - 1.0) / (N + 1.0);
        worst_closed = std::max(worst_closed,
                                std::fabs(appendixB_expectation(N, 0.0) - closed));
        worst_closed = std::max(worst_closed,
                                std::fabs(appendixB_quadrature(N, 0.0) - closed));
    }
    out.require(worst_closed <= 1e-8,
                "hull length beta=0, N=1..200: max |value - 2(N-1)/(N+1)| = %.3g "
                "(tol 1e-8)",
                worst_closed);

    RngStream rng = RngStream(kSeed).substream(1);
    for (long N : {5L, 20L, 100L}) {
        RngStream sub = rng.substream(0x31646e, static_cast<std::uint64_t>(N));
        const McEstimate t = scaling_factor_empirical(1, N, 0.0, 100000, 0, sub);
        const double want = 1.0 - 2.0 / (N + 1.0);
        const double z = std::fabs(t.value - want) / t.std_error;
        out.require(z <= 3.0,
                    "empirical shrink n=1, N=%ld: t=%.6f vs %.6f, |z| = %.2f "
                    "(limit 3)",
                    N, t.value, want, z);
    }
    return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome criterion2() {
    Outcome out;
    RngStream rng = RngStream(kSeed).substream(2);
    const long m = 100000;

    // cap mass on an h-grid, z-scored against the closed form
    const std::vector<std::pair<int, double>> cap_cfgs{
        {2, 0.0}, {3, 0.0}, {3, 1.0}, {3, -1.0}};
    for (std::size_t c = 0; c < cap_cfgs.size(); ++c) {
        const auto [n, beta] = cap_cfgs[c];
        RngStream sub = rng.substream(0x636170, c);
        std::vector<Vec> pts;
        pts.reserve(m);
        for (long i = 0; i < m; ++i)
            pts.push_back(beta == -1.0 ? sample_sphere(n, sub)
                                       : sample_beta(n, beta, sub));
        double worst = 0.0;
        for (double h : {0.1, 0.35, 0.6}) {
            const double p = cap_probability(n, beta, h);
            long hits = 0;
            for (const Vec& x : pts) hits += x[0] >= h ? 1 : 0;
            const double phat = static_cast<double>(hits) / m;
            const double sd = std::sqrt(p * (1.0 - p) / m);
            worst = std::max(worst, std::fabs(phat - p) / sd);
        }
        out.require(worst <= 3.0, "cap mass (n=%d, beta=%g): worst |z| = %.2f over "
                                  "h in {0.1,0.35,0.6} (limit 3)",
                    n, beta, worst);
    }

    // projection law, KS at alpha = 0.01
    {
        RngStream s1 = rng.substream(0x70726f, 0);
        const KsCheck sphere = projection_law_check(3, 1, -1.0, m, s1);
        out.require(sphere.pass, "projection law sphere n=3 -> j=1: KS %.4f vs "
                                 "critical %.4f",
                    sphere.statistic, sphere.critical);
        RngStream s2 = rng.substream(0x70726f, 1);
        const KsCheck disk = projection_law_check(2, 1, 0.0, m, s2);
        out.require(disk.pass, "projection law disk n=2 -> j=1: KS %.4f vs "
                               "critical %.4f",
                    disk.statistic, disk.critical);
    }

    // simplex second moment within 2%
    const std::vector<std::pair<int, double>> simplex_cfgs{
        {2, 0.0}, {3, 0.0}, {2, 1.0}};
    for (std::size_t c = 0; c < simplex_cfgs.size(); ++c) {
        const auto [n, beta] = simplex_cfgs[c];
        RngStream sub = rng.substream(0x73696d, c);
        Accum acc;
        for (long i = 0; i < m; ++i) {
            std::vector<Vec> pts;
            pts.reserve(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) pts.push_back(sample_beta(n - 1, beta, sub));
            const double v = simplex_volume(pts);
            acc.add(v * v);
        }
        const double want = simplex_second_moment(n, beta);
        const double rel = std::fabs(acc.mean() - want) / want;
        out.require(rel <= 0.02,
                    "simplex second moment (n=%d, beta=%g): mc %.6g vs %.6g, "
                    "rel err %.4f (limit 0.02)",
                    n, beta, acc.mean(), want, rel);
    }

    // weighted slice moment within 5% at both heights
    for (const auto& [n, beta] : std::vector<std::pair<int, double>>{{2, 0.0},
                                                                     {3, 0.0}})
        for (double h : {0.0, 0.5}) {
            RngStream sub = rng.substream(0x736c63,
                                          static_cast<std::uint64_t>(n * 4 + h * 2));
            const double rel = weighted_slice_moment_check(n, beta, h, m, sub);
            out.require(rel <= 0.05,
                        "weighted slice moment (n=%d, beta=%g, h=%g): rel err "
                        "%.4f (limit 0.05)",
                        n, beta, h, rel);
        }
    return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome criterion3() {
    Outcome out;
    RngStream rng = RngStream(kSeed).substream(3);

    out.require(std::fabs(d_const(1, 0.0) - 4.0) <= 1e-12,
                "d(1,0) = %.15f (want 4 to 1e-12)", d_const(1, 0.0));

    // both closed forms of d and of the flag coefficients agree to 1e-12 on a
    // grid (the library cross-checks internally and throws on disagreement)
    long d_evals = 0, flag_evals = 0;
    bool grids_ok = true;
    for (int n = 1; n <= 200 && grids_ok; n = n < 24 ? n + 1 : n * 2)
        for (double beta : {-0.99, -0.5, 0.0, 0.5, 1.0, 3.0, 7.5}) {
            try {
                d_const(n, beta);
                ++d_evals;
            } catch (const std::exception&) {
                grids_ok = false;
                break;
            }
        }
    for (int n = 1; n <= 300 && grids_ok; n = n < 24 ? n + 1 : n + 34)
        for (int j = 1; j <= n; j = j < 4 ? j + 1 : j * 2 + 1) {
            try {
                flag_coefficient(n, j);
                ++flag_evals;
            } catch (const std::exception&) {
                grids_ok = false;
                break;
            }
        }
    out.require(grids_ok,
                "dual-form agreement grids: %ld d evaluations, %ld flag "
                "evaluations, all within 1e-12",
                d_evals, flag_evals);

    // first absolute moment of a Haar line's direction cosine
    {
        RngStream sub = rng.substream(0x616e67);
        Accum acc;
        for (long i = 0; i < 1000000; ++i) {
            const Frame f = haar_subspace(2, 1, sub);
            acc.add(std::fabs(f.at(0, 0)));
        }
        const double want = chern_constant(2, 1, 1);
        const double rel = std::fabs(acc.mean() - want) / want;
        out.require(rel <= 0.01,
                    "projection factor moment c(2,1,1): mc %.6f vs %.6f "
                    "(2/pi), rel err %.4f (limit 0.01)",
                    acc.mean(), want, rel);
    }

    out.require(std::fabs(affentranger_A(1, 0.0) - 4.0) <= 1e-12,
                "A(1,0) = %.15f (want 4 exactly)", affentranger_A(1, 0.0));

    // missed-volume limit at n=2: N^{2/3} E[vol(B \ P)] -> A(2,0)
    {
        RngStream sub = rng.substream(0x6d697373);
        const long N = 2000, reps = 2000;
        const McEstimate miss = missed_volume_empirical(2, N, 0.0, reps, 0, sub);
        const double scale = std::pow(static_cast<double>(N), 2.0 / 3.0);
        const double got = scale * miss.value;
        const double want = affentranger_A(2, 0.0);
        const double rel = std::fabs(got - want) / want;
        out.require(rel <= 0.10,
                    "missed volume n=2, N=2000, %ld reps: N^{2/3} E = %.4f vs "
                    "A(2,0) = %.4f, rel dev %.4f (limit 0.10)",
                    reps, got, want, rel);
    }
    return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome criterion4() {
    Outcome out;
    RngStream rng = RngStream(kSeed).substream(4);
    MetricConfig cfg;
    cfg.subspace_samples = 400;
    cfg.volume_samples = 2048;

    const auto combined = [](const McEstimate& a, const McEstimate& b,
                             const McEstimate& c) {
        return std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error +
                         c.std_error * c.std_error);
    };

    // triangle inequality over 50 triples
    double worst_tri = -1e300;
    for (int i = 0; i < 50; ++i) {
        RngStream gen = rng.substream(0x747269, static_cast<std::uint64_t>(i));
        const ConvexBody K = random_polytope(3, 12, false, gen);
        const ConvexBody L = random_polytope(3, 12, false, gen);
        const ConvexBody M = random_polytope(3, 12, false, gen);
        RngStream e1 = gen.substream(1), e2 = gen.substream(2),
                  e3 = gen.substream(3);
        const McEstimate km = delta_j(K, M, 2, cfg, e1);
        const McEstimate kl = delta_j(K, L, 2, cfg, e2);
        const McEstimate lm = delta_j(L, M, 2, cfg, e3);
        const double sigma = combined(km, kl, lm);
        const double excess = (km.value - kl.value - lm.value) / sigma;
        worst_tri = std::max(worst_tri, excess);
    }
    out.require(worst_tri <= 3.0,
                "triangle inequality, 50 triples: worst normalized excess "
                "%.2f (limit 3)",
                worst_tri);

    // rigid-motion invariance on 10 pairs
    Mat rot(3, 3);
    {
        const double a = 0.7, b = 1.1;
        Mat rz = identity_mat(3), rx = identity_mat(3);
        rz(0, 0) = std::cos(a);
        rz(0, 1) = -std::sin(a);
        rz(1, 0) = std::sin(a);
        rz(1, 1) = std::cos(a);
        rx(1, 1) = std::cos(b);
        rx(1, 2) = -std::sin(b);
        rx(2, 1) = std::sin(b);
        rx(2, 2) = std::cos(b);
        rot = matmul(rz, rx);
    }
    const Vec shift{0.2, -0.4, 0.3};
    double worst_rigid = 0.0;
    for (int i = 0; i < 10; ++i) {
        RngStream gen = rng.substream(0x726f74, static_cast<std::uint64_t>(i));
        const ConvexBody K = random_polytope(3, 12, false, gen);
        const ConvexBody L = random_polytope(3, 12, false, gen);
        RngStream e1 = gen.substream(1), e2 = gen.substream(2);
        const McEstimate base = delta_j(K, L, 2, cfg, e1);
        const McEstimate moved = delta_j(apply_rigid_motion(K, rot, shift),
                                         apply_rigid_motion(L, rot, shift), 2,
                                         cfg, e2);
        const double z = std::fabs(moved.value - base.value) /
                         std::hypot(moved.std_error, base.std_error);
        worst_rigid = std::max(worst_rigid, z);
    }
    out.require(worst_rigid <= 3.0,
                "rigid-motion invariance, 10 pairs: worst |z| = %.2f (limit 3)",
                worst_rigid);

    // degree-j homogeneity; common random numbers make the exact-path scaling
    // relation hold per subspace, so the z is essentially rounding error
    double worst_hom = 0.0;
    for (int i = 0; i < 10; ++i) {
        RngStream gen = rng.substream(0x686f6d, static_cast<std::uint64_t>(i));
        const ConvexBody K = random_polytope(3, 12, false, gen);
        const ConvexBody L = random_polytope(3, 12, false, gen);
        for (double t : {0.5, 2.0}) {
            RngStream e1 = gen.substream(1), e2 = gen.substream(1);
            const McEstimate base = delta_j(K, L, 2, cfg, e1);
            const McEstimate scaled =
                delta_j(scale_body(K, t), scale_body(L, t), 2, cfg, e2);
            const double sd = std::sqrt(scaled.std_error * scaled.std_error +
                                        std::pow(t * t * base.std_error, 2));
            worst_hom =
                std::max(worst_hom, std::fabs(scaled.value - t * t * base.value) / sd);
        }
    }
    out.require(worst_hom <= 3.0,
                "t^j homogeneity, t in {0.5,2}, 10 pairs: worst |z| = %.3f "
                "(limit 3)",
                worst_hom);

    // nested concentric balls: delta_j = (R^j - r^j) V_j(B_3), exactly
    double worst_ball = 0.0;
    for (const auto& [r, R] : std::vector<std::pair<double, double>>{
             {0.5, 1.0}, {1.0, 2.0}, {0.3, 0.9}})
        for (int j = 1; j <= 3; ++j) {
            RngStream e = rng.substream(0x62616c, j);
            const McEstimate d =
                delta_j(make_ball(3, r), make_ball(3, R), j, cfg, e);
            const double want =
                (std::pow(R, j) - std::pow(r, j)) * ball_intrinsic_volume(3, j);
            worst_ball = std::max(worst_ball, std::fabs(d.value - want));
        }
    out.require(worst_ball <= 1e-12,
                "nested-ball identity: max abs error %.3g (tol 1e-12)", worst_ball);

    // bounds: |V_j(K) - V_j(L)| <= delta_j <= min(rho_j, Delta_j)
    MetricConfig dev_cfg = cfg;
    dev_cfg.subspace_samples = 64;
    dev_cfg.volume_samples = 256;
    double worst_upper = -1e300, worst_lower = -1e300;
    for (int i = 0; i < 50; ++i) {
        RngStream gen = rng.substream(0x626e64, static_cast<std::uint64_t>(i));
        const Polytope P = random_polytope(3, 12, true, gen);
        const Polytope Q = random_polytope(3, 12, true, gen);
        RngStream e1 = gen.substream(1), e2 = gen.substream(2),
                  e3 = gen.substream(3), e4 = gen.substream(4);
        const McEstimate d = delta_j(P, Q, 2, cfg, e1);
        const McEstimate D = deviation_Delta_j(P, Q, 2, dev_cfg, e2);
        const McEstimate r = deviation_rho_j(P, Q, 2, cfg, e3);
        const McEstimate vP = intrinsic_volume(P, 2, cfg, e4);
        const McEstimate vQ = intrinsic_volume(Q, 2, cfg, e4);
        worst_upper = std::max(
            worst_upper, (d.value - D.value) / std::hypot(d.std_error, D.std_error));
        worst_upper = std::max(
            worst_upper, (d.value - r.value) / std::hypot(d.std_error, r.std_error));
        const double gap = std::fabs(vP.value - vQ.value) - d.value;
        const double sd = std::sqrt(vP.std_error * vP.std_error +
                                    vQ.std_error * vQ.std_error +
                                    d.std_error * d.std_error);
        worst_lower = std::max(worst_lower, gap / sd);
    }
    out.require(worst_upper <= 3.0,
                "upper bounds delta <= min(rho, Delta), 50 pairs: worst "
                "normalized excess %.2f (limit 3)",
                worst_upper);
    out.require(worst_lower <= 3.0,
                "lower bound |V_j(K)-V_j(L)| <= delta, 50 pairs: worst "
                "normalized excess %.2f (limit 3)",
                worst_lower);
    return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome criterion5() {
    Outcome out;
    RngStream rng = RngStream(kSeed).substream(5);
    MetricConfig cfg;
    cfg.subspace_samples = 400;

    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        RngStream gen = rng.substream(0x616d62, static_cast<std::uint64_t>(i));
        const ConvexBody K = random_polytope(3, 12, false, gen);
        const ConvexBody L = random_polytope(3, 12, false, gen);
        RngStream e3 = gen.substream(3), e4 = gen.substream(4),
                  e5 = gen.substream(5);
        const McEstimate d3 = delta_j(K, L, 2, cfg, e3);
        const McEstimate d4 = delta_j(embed(K, 1), embed(L, 1), 2, cfg, e4);
        const McEstimate d5 = delta_j(embed(K, 2), embed(L, 2), 2, cfg, e5);
        worst = std::max(worst, std::fabs(d4.value - d3.value) /
                                    std::hypot(d4.std_error, d3.std_error));
        worst = std::max(worst, std::fabs(d5.value - d3.value) /
                                    std::hypot(d5.std_error, d3.std_error));
    }
    out.require(worst <= 3.0,
                "ambient independence R^3 vs R^4/R^5, 20 pairs: worst |z| = "
                "%.2f (limit 3)",
                worst);
    return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome criterion6() {
    Outcome out;
    const std::vector<std::pair<int, int>> configs{{3, 1}, {3, 3}, {4, 2}, {4, 4}};
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const auto [n, j] = configs[c];
        ExperimentSpec spec;
        spec.n = n;
        spec.j = j;
        spec.N_grid = {50, 100, 200, 400, 800};
        spec.reps = 100;
        spec.seed = mix64(kSeed ^ mix64(0x726174 + c));
        spec.cfg.subspace_samples = 192;
        spec.cfg.volume_samples = 2048;

        spec.scaling = ScalingMode::asymptotic;
        const ExperimentResult scaled = theorem1_run(spec);
        spec.scaling = ScalingMode::none;
        const ExperimentResult plain = theorem1_run(spec);

        const double target = -2.0 / (n - 1);
        const double dev = std::fabs(scaled.slope - target) / std::fabs(target);
        out.require(dev <= 0.15,
                    "(n=%d, j=%d): slope %.4f +/- %.4f vs target %.4f, rel dev "
                    "%.3f (limit 0.15)",
                    n, j, scaled.slope, scaled.slope_std_error, target, dev);

        // paired common-random-numbers comparison: scaling must strictly help
        double min_t = 1e300;
        for (std::size_t iN = 0; iN < spec.N_grid.size(); ++iN) {
            if (spec.N_grid[iN] < 200) continue;
            Accum diff;
            for (int r = 0; r < spec.reps; ++r)
                diff.add(plain.rep_values[iN][r] - scaled.rep_values[iN][r]);
            const double t = diff.mean() / diff.sem();
            min_t = std::min(min_t, t);
        }
        out.require(min_t >= 3.0,
                    "(n=%d, j=%d): paired improvement (none - scaled), worst "
                    "t over N>=200: %.2f (need >= 3)",
                    n, j, min_t);

        std::string ratios;
        for (const auto& row : scaled.rows) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%s%ld:%.3f", ratios.empty() ? "" : " ",
                          row.N, row.ratio);
            ratios += buf;
        }
        out.note("(n=%d, j=%d): ratio to bound by N -> %s (reported, not asserted)",
                 n, j, ratios.c_str());
    }
    return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome criterion7() {
    Outcome out;
    double lo = 1e300, hi = -1e300, trend = 0.0;
    int enter = 0;
    bool stays_after_entry = true;
    std::vector<double> ratios(201, 0.0);
    for (int n = 1; n <= 200; ++n) {
        const double ratio =
            affentranger_A(n, -0.5) / std::exp(log_sphere_surface(n));
        ratios[n] = ratio;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        trend = std::max(trend, std::fabs(ratio - 0.5) * n / std::log(n + 2.0));
        const bool inside = ratio >= 0.4 && ratio <= 0.65;
        if (inside && enter == 0) enter = n;
        if (!inside && enter != 0) stays_after_entry = false;
    }
    out.require(lo >= 0.4 && hi <= 0.65,
                "A(n,-1/2)/omega_n for n<=200 in [%.4f, %.4f] (need within "
                "[0.4, 0.65])",
                lo, hi);
    out.require(trend <= 10.0,
                "max_n |ratio - 1/2| n / ln(n+2) = %.3f (need <= 10)", trend);
    // the exact sequence starts far above the window: the ratio is pi^2 at
    // n=1 (cross-checked against the arcsine extreme-value limit
    // N^2 E[missed] -> 2 pi^2) and decays like 1/2 + O(log n / n)
    out.note("ratio(1)=%.6f (pi^2=%.6f), ratio(2)=%.4f, ratio(10)=%.4f, "
             "ratio(200)=%.4f",
             ratios[1], kPi * kPi, ratios[2], ratios[10], ratios[200]);
    out.note("window [0.4, 0.65]: first entered at n=%d, %s through n=200; "
             "the fixed window cannot hold below that, the log-trend bound is "
             "the clause that carries the decay claim",
             enter, stays_after_entry ? "stays inside" : "exits again");
    return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome criterion8() {
    Outcome out;
    const std::vector<std::pair<std::string, std::string>> jobs{
        {"appendixB", "N=1,5,25\n"},
        {"constants", "mc_samples=20000\nnmax=60\n"},
        {"validate", "samples=4000\n"},
        {"theorem1", "n=2\nj=2\nN=20,40,80\nreps=4\nsubspaces=16\nvol_samples=256\n"},
        {"rate",
         "pairs=2:1,2:2\nN=20,40,80\nreps=3\nsubspaces=16\nvol_samples=256\n"},
        {"optimize", "n=2\nj=2\nvertices=5\nbudget=30\nsubspaces=16\nvol_samples=128\n"},
    };
    for (const auto& [command, config] : jobs) {
        setenv("INTRINSIC_METRICS_THREADS", "1", 1);
        const std::string first = run_command(command, config).csv();
        setenv("INTRINSIC_METRICS_THREADS", "8", 1);
        const std::string second = run_command(command, config).csv();
        const std::string third = run_command(command, config).csv();
        unsetenv("INTRINSIC_METRICS_THREADS");
        out.require(first == second && second == third,
                    "%s: CSV byte-identical across reruns and thread counts "
                    "{1,8} (%zu bytes)",
                    command.c_str(), first.size());
    }
    return out;
}

struct Entry {
    const char* name;
    Outcome (*fn)();
    double budget_seconds;
};

}  // namespace

int main() {
    const Entry entries[] = {
        {"1. exact one-dimensional chain", criterion1, 60},
        {"2. lemma suite at 1e5 samples", criterion2, 300},
        {"3. constants and missed-volume limit", criterion3, 600},
        {"4. metric axioms and bounds", criterion4, 600},
        {"5. ambient independence", criterion5, 300},
        {"6. convergence rate and scaling gain", criterion6, 1800},
        {"7. annulus constant trend", criterion7, 1},
        {"8. determinism across thread counts", criterion8, 0},
    };

    int failures = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const Entry& e : entries) {
        const auto c0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = e.fn();
        } catch (const std::exception& ex) {
            out.pass = false;
            out.details.push_back(std::string("exception: ") + ex.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - c0)
                .count();
        if (e.budget_seconds > 0 && secs > e.budget_seconds) {
            out.pass = false;
            out.details.push_back("runtime budget exceeded");
        }
        std::printf("[%s] %s (%.1f s%s)\n", out.pass ? "PASS" : "FAIL", e.name,
                    secs,
                    e.budget_seconds > 0
                        ? (", budget " + std::to_string(static_cast<int>(
                                             e.budget_seconds)) + " s")
                              .c_str()
                        : "");
        for (const std::string& d : out.details)
            std::printf("       %s\n", d.c_str());
        if (!out.pass) ++failures;
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/8 criteria passed in %.1f s\n", 8 - failures, total);
    return failures;
}
