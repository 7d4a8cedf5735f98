#pragma once
#include <cstdint>
#include <functional>
#include <vector>

namespace ivm {

// Monte Carlo estimate with a standard error; std_error == 0 only on exact paths.
struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
};

// Welford accumulator
class Accum {
public:
    void add(double x);
    long count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const;   // sample variance (n-1)
    double sem() const;        // standard error of the mean

private:
    long n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

// One-sample Kolmogorov-Smirnov distance against a continuous CDF (sorts xs).
double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf);
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic critical values; supported alpha: 0.1, 0.05, 0.01, 0.001.
double ks_critical(std::size_t n, double alpha);
double ks_critical_two_sample(std::size_t n, std::size_t m, double alpha);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
};

// Weighted least squares line fit, weights w_i = 1/var(y_i).
LineFit weighted_line_fit(const std::vector<double>& x, const std::vector<double>& y,
                          const std::vector<double>& w);

}  // namespace ivm
