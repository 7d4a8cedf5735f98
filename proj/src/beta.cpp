#include "beta.hpp"
#include "errors.hpp"
#include "specfun.hpp"
#include "stats.hpp"

#include <cmath>

namespace ivm {

namespace {
constexpr double kLogPi = 1.1447298858494001741434273513530587;
}

double log_beta_normalizer(int n, double beta) {
    if (n < 1) throw param_error("log_beta_normalizer: n must be >= 1");
    if (!(beta > -1.0)) throw param_error("log_beta_normalizer: beta must be > -1");
    return std::lgamma(0.5 * n + beta + 1.0) - 0.5 * n * kLogPi - std::lgamma(beta + 1.0);
}

double beta_normalizer(int n, double beta) { return std::exp(log_beta_normalizer(n, beta)); }

Vec sample_sphere(int n, RngStream& rng) {
    if (n < 1) throw param_error("sample_sphere: n must be >= 1");
    for (;;) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = rng.normal();
        const double len = norm(x);
        if (len > 1e-12) return vscale(std::move(x), 1.0 / len);
    }
}

Vec sample_beta(int n, double beta, RngStream& rng) {
    if (n < 1) throw param_error("sample_beta: n must be >= 1");
    if (!(beta > -1.0)) throw param_error("sample_beta: beta must be > -1");
    Vec x = sample_sphere(n, rng);
    const double s = rng.beta_variate(0.5 * n, beta + 1.0);
    return vscale(std::move(x), std::sqrt(s));
}

double cdf_F1(double beta, double h, bool* clamped) {
    if (!(beta > -1.0)) throw param_error("cdf_F1: beta must be > -1");
    bool c = false;
    if (h < -1.0) {
        h = -1.0;
        c = true;
    } else if (h > 1.0) {
        h = 1.0;
        c = true;
    }
    if (clamped) *clamped = c;
    // substitution u = (1+x)/2 turns the weight into u^beta (1-u)^beta
    return regularized_incomplete_beta(beta + 1.0, beta + 1.0, 0.5 * (1.0 + h));
}

double inverse_cdf_F1(double beta, double p) {
    if (!(beta > -1.0)) throw param_error("inverse_cdf_F1: beta must be > -1");
    if (!(p >= 0.0 && p <= 1.0)) throw param_error("inverse_cdf_F1: p must be in [0,1]");
    if (p == 0.0) return -1.0;
    if (p == 1.0) return 1.0;
    const double log_c = log_beta_normalizer(1, beta);
    double lo = -1.0, hi = 1.0;
    double h = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double f = cdf_F1(beta, h) - p;
        if (std::fabs(f) < 1e-14) return h;
        if (f > 0.0)
            hi = h;
        else
            lo = h;
        double next = h;
        const double one_m_h2 = (1.0 - h) * (1.0 + h);
        if (one_m_h2 > 0.0) {
            const double density = std::exp(log_c + beta * std::log(one_m_h2));
            if (density > 1e-300 && std::isfinite(density)) next = h - f / density;
        }
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - h) < 1e-15 && std::fabs(f) < 1e-12) return next;
        h = next;
        if (hi - lo < 1e-15) break;
    }
    return h;
}

KsCheck projection_law_check(int n, int j, double beta, long samples, RngStream& rng) {
    if (n < 1 || j < 1 || j > n) throw param_error("projection_law_check: need 1 <= j <= n");
    if (!(beta >= -1.0)) throw param_error("projection_law_check: beta must be >= -1");
    if (samples < 10) throw param_error("projection_law_check: too few samples");

    const bool sphere = beta == -1.0;
    const double b = beta + 0.5 * (n - j) + 1.0;
    std::vector<double> sq(samples);
    for (long i = 0; i < samples; ++i) {
        const Vec x = sphere ? sample_sphere(n, rng) : sample_beta(n, beta, rng);
        double s = 0.0;
        for (int r = 0; r < j; ++r) s += x[r] * x[r];
        sq[i] = s;
    }

    KsCheck out;
    if (b <= 0.0) {
        // identity projection of the sphere: squared radius is the constant 1
        double dev = 0.0;
        for (double s : sq) dev = std::max(dev, std::fabs(s - 1.0));
        out.statistic = dev;
        out.critical = ks_critical(static_cast<std::size_t>(samples), 0.01);
        out.pass = dev < 1e-9;
        return out;
    }
    const double a = 0.5 * j;
    out.statistic = ks_statistic(
        std::move(sq), [&](double s) { return regularized_incomplete_beta(a, b, s); });
    out.critical = ks_critical(static_cast<std::size_t>(samples), 0.01);
    out.pass = out.statistic < out.critical;
    return out;
}

}  // namespace ivm
