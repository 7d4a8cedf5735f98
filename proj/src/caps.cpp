#include "caps.hpp"
#include "beta.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "specfun.hpp"
#include "stats.hpp"

#include <cmath>

namespace ivm {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double cap_probability(int n, double beta, double h) {
    if (n < 1) throw param_error("cap_probability: n must be >= 1");
    if (!(beta >= -1.0)) throw param_error("cap_probability: beta must be >= -1");
    if (!(h >= -1.0 && h <= 1.0)) throw param_error("cap_probability: h must be in [-1,1]");
    const double gamma = beta + 0.5 * (n - 1);
    if (!(gamma > -1.0))
        throw param_error("cap_probability: degenerate marginal (beta + (n-1)/2 <= -1)");
    // upper tail of the symmetric marginal, evaluated directly so tiny caps
    // keep full relative precision (1 - cdf would cancel near h = 1)
    return regularized_incomplete_beta(gamma + 1.0, gamma + 1.0, 0.5 * (1.0 - h));
}

double cap_derivative(int n, double beta, double h) {
    if (n < 1) throw param_error("cap_derivative: n must be >= 1");
    if (!(beta >= -1.0)) throw param_error("cap_derivative: beta must be >= -1");
    if (!(h >= -1.0 && h <= 1.0)) throw param_error("cap_derivative: h must be in [-1,1]");
    const double gamma = beta + 0.5 * (n - 1);
    if (!(gamma > -1.0))
        throw param_error("cap_derivative: degenerate marginal (beta + (n-1)/2 <= -1)");
    const double one_m_h2 = (1.0 - h) * (1.0 + h);
    return -beta_normalizer(1, gamma) * std::pow(one_m_h2, gamma);
}

SandwichCheck cap_bounds_check(int n, double beta, double r) {
    if (n < 1) throw param_error("cap_bounds_check: n must be >= 1");
    if (!(beta > -1.0)) throw param_error("cap_bounds_check: beta must be > -1");
    if (!(r > 0.0 && r < 0.75))
        throw param_error("cap_bounds_check: r out of range, need 0 < r < 3/4");
    const double h = std::sqrt(1.0 - r * r);
    SandwichCheck out;
    out.value = d_const(n, beta) * cap_probability(n, beta, h);
    out.lower = std::pow(r, n + 2.0 * beta + 1.0);
    out.upper = out.lower * (1.0 + r * r);
    const double slack = 1e-12 * out.upper;
    out.ok = out.lower <= out.value + slack && out.value <= out.upper + slack;
    return out;
}

double d_const(int n, double beta) {
    if (n < 1) throw param_error("d_const: n must be >= 1");
    if (!(beta >= -1.0)) throw param_error("d_const: beta must be >= -1");
    if (!(0.5 * n + beta + 1.0 > 0.0)) throw param_error("d_const: n + 2 beta + 2 must be > 0");
    const double gamma_form =
        2.0 * kPi / std::exp(log_beta_fn(0.5, 0.5 * n + beta + 1.0));
    const double gamma = beta + 0.5 * (n - 1);
    if (gamma > -1.0 && n + 2.0 * beta + 1.0 > 0.0) {
        const double ratio_form = (n + 2.0 * beta + 1.0) / beta_normalizer(1, gamma);
        if (std::fabs(ratio_form / gamma_form - 1.0) > 1e-12)
            throw numeric_error("d_const: the two closed forms disagree");
    }
    return gamma_form;
}

double affentranger_A(int n, double beta) {
    if (n < 1) throw param_error("affentranger_A: n must be >= 1");
    if (!(beta >= -1.0)) throw param_error("affentranger_A: beta must be >= -1");
    const double q = n + 2.0 * beta + 1.0;
    if (!(q > 0.0)) throw param_error("affentranger_A: n + 2 beta + 1 must be > 0");
    const double log_a = log_sphere_surface(n) - std::log(2.0) + std::log(q / (q + 2.0)) +
                         std::lgamma(n + 1.0 + 2.0 / q) - std::lgamma(n + 1.0) +
                         (2.0 / q) * std::log(d_const(n, beta));
    return std::exp(log_a);
}

double simplex_second_moment(int n, double beta) {
    if (n < 2) throw param_error("simplex_second_moment: n must be >= 2");
    if (!(beta > -1.0)) throw param_error("simplex_second_moment: beta must be > -1");
    return std::exp(std::log(static_cast<double>(n)) - std::lgamma(static_cast<double>(n)) -
                    (n - 1.0) * std::log(n + 2.0 * beta + 1.0));
}

double weighted_slice_moment_check(int n, double beta, double h, long samples,
                                   RngStream& rng) {
    if (n < 2) throw param_error("weighted_slice_moment_check: n must be >= 2");
    if (!(beta > -1.0)) throw param_error("weighted_slice_moment_check: beta must be > -1");
    if (!(h > -1.0 && h < 1.0))
        throw param_error("weighted_slice_moment_check: h must be in (-1,1)");
    if (samples < 10) throw param_error("weighted_slice_moment_check: too few samples");

    const double log_rho2 = std::log1p(-h * h);
    // un-normalized mass of the slice at height h
    const double log_mass = log_beta_normalizer(n, beta) - log_beta_normalizer(n - 1, beta) +
                            (beta + 0.5 * (n - 1)) * log_rho2;

    Accum sq;
    std::vector<Vec> pts(n);
    for (long i = 0; i < samples; ++i) {
        for (int v = 0; v < n; ++v) pts[v] = sample_beta(n - 1, beta, rng);
        const double vol = simplex_volume(pts);
        sq.add(vol * vol);
    }
    const double estimate = std::exp(n * log_mass + (n - 1.0) * log_rho2) * sq.mean();

    const double closed =
        std::exp(n * (log_beta_normalizer(n, beta) - log_beta_normalizer(n - 1, beta)) +
                 (n * beta + 0.5 * (n - 1.0) * (n + 2.0)) * log_rho2) *
        simplex_second_moment(n, beta);
    return std::fabs(estimate - closed) / closed;
}

double log_flag_coefficient(int n, int j) {
    if (n < 1 || j < 0 || j > n) throw param_error("flag_coefficient: need 0 <= j <= n");
    const double form1 =
        log_binomial(n, j) + log_ball_volume(n) - log_ball_volume(j) - log_ball_volume(n - j);
    const double form2 = -std::log(2.0) + log_sphere_surface(j + 1) +
                         log_sphere_surface(n - j + 1) - log_sphere_surface(n + 1);
    if (std::fabs(form1 - form2) > 1e-12)
        throw numeric_error("flag_coefficient: the two closed forms disagree");
    return form2;
}

double flag_coefficient(int n, int j) { return std::exp(log_flag_coefficient(n, j)); }

double log_omega_bar(int p) {
    if (p < 0) throw param_error("log_omega_bar: p must be >= 0");
    double s = 0.0;
    for (int k = 1; k <= p; ++k) s += log_sphere_surface(k);
    return s;
}

double chern_constant(int n, int j, int ell) {
    if (n < 1 || j < 1 || j > n) throw param_error("chern_constant: need 1 <= j <= n");
    if (ell < 0) throw param_error("chern_constant: ell must be >= 0");
    const double log_c = log_omega_bar(n + ell) + log_omega_bar(ell) + log_omega_bar(j) +
                         log_omega_bar(n - j) - log_omega_bar(n) - log_omega_bar(ell + j) -
                         log_omega_bar(n - j + ell);
    return std::exp(log_c);
}

}  // namespace ivm
