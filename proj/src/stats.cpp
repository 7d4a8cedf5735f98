#include "stats.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cmath>

namespace ivm {

void Accum::add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / n_;
    m2_ += d * (x - mean_);
}

double Accum::variance() const { return n_ > 1 ? m2_ / (n_ - 1) : 0.0; }

double Accum::sem() const { return n_ > 0 ? std::sqrt(variance() / n_) : 0.0; }

double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
    if (xs.empty()) throw param_error("ks_statistic: empty sample");
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::fabs((i + 1) / n - f));
        d = std::max(d, std::fabs(f - i / n));
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw param_error("ks_statistic_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::fabs(i / na - j / nb));
    }
    return d;
}

namespace {
double ks_scale(double alpha) {
    // K_alpha with P(sup |B(t)| > K) = alpha for the Brownian bridge
    if (alpha == 0.1) return 1.22385;
    if (alpha == 0.05) return 1.35810;
    if (alpha == 0.01) return 1.62762;
    if (alpha == 0.001) return 1.94947;
    throw param_error("ks_critical: unsupported alpha");
}
}  // namespace

double ks_critical(std::size_t n, double alpha) {
    if (n == 0) throw param_error("ks_critical: n must be positive");
    return ks_scale(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(std::size_t n, std::size_t m, double alpha) {
    if (n == 0 || m == 0) throw param_error("ks_critical_two_sample: sizes must be positive");
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    return ks_scale(alpha) * std::sqrt((nn + mm) / (nn * mm));
}

LineFit weighted_line_fit(const std::vector<double>& x, const std::vector<double>& y,
                          const std::vector<double>& w) {
    if (x.size() != y.size() || x.size() != w.size())
        throw param_error("weighted_line_fit: size mismatch");
    if (x.size() < 3) throw param_error("weighted_line_fit: need at least 3 points");
    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(w[i] > 0.0)) throw param_error("weighted_line_fit: weights must be positive");
        sw += w[i];
        swx += w[i] * x[i];
        swy += w[i] * y[i];
    }
    const double xbar = swx / sw;
    const double ybar = swy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += w[i] * (x[i] - xbar) * (x[i] - xbar);
        sxy += w[i] * (x[i] - xbar) * (y[i] - ybar);
    }
    if (!(sxx > 0.0)) throw param_error("weighted_line_fit: degenerate abscissae");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ybar - fit.slope * xbar;
    fit.slope_se = std::sqrt(1.0 / sxx);
    return fit;
}

}  // namespace ivm
