#include <doctest.h>

#include "beta.hpp"
#include "errors.hpp"
#include "stats.hpp"

#include <cmath>

using namespace ivm;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("beta normalizer closed forms") {
    // c_{n,beta} = Gamma(n/2 + beta + 1) / (pi^{n/2} Gamma(beta + 1))
    CHECK(beta_normalizer(1, 0.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(beta_normalizer(2, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-13));
    CHECK(beta_normalizer(1, -0.5) == doctest::Approx(1.0 / kPi).epsilon(1e-13));
    CHECK(beta_normalizer(1, 0.5) == doctest::Approx(2.0 / kPi).epsilon(1e-13));
    CHECK(beta_normalizer(1, 1.0) == doctest::Approx(0.75).epsilon(1e-13));
    CHECK_THROWS_AS(beta_normalizer(2, -1.0), param_error);
}

TEST_CASE("marginal cdf closed forms") {
    for (double h : {-0.9, -0.5, -0.1, 0.0, 0.3, 0.8}) {
        CHECK(cdf_F1(0.0, h) == doctest::Approx((1.0 + h) / 2.0).epsilon(1e-12));
        CHECK(cdf_F1(-0.5, h) ==
              doctest::Approx(0.5 + std::asin(h) / kPi).epsilon(1e-12));
        CHECK(cdf_F1(0.5, h) ==
              doctest::Approx(0.5 + (h * std::sqrt(1.0 - h * h) + std::asin(h)) / kPi)
                  .epsilon(1e-12));
        CHECK(cdf_F1(1.0, h) ==
              doctest::Approx(0.5 + (3.0 * h - h * h * h) / 4.0).epsilon(1e-12));
    }
    CHECK(cdf_F1(2.0, -1.0) == doctest::Approx(0.0));
    CHECK(cdf_F1(2.0, 1.0) == doctest::Approx(1.0));
    bool clamped = false;
    CHECK(cdf_F1(0.0, 1.5, &clamped) == doctest::Approx(1.0));
    CHECK(clamped);
}

TEST_CASE("inverse cdf round trip") {
    for (double beta : {-0.5, 0.0, 0.7, 2.0})
        for (double p : {0.001, 0.1, 0.5, 0.77, 0.999}) {
            const double h = inverse_cdf_F1(beta, p);
            CHECK(std::fabs(cdf_F1(beta, h) - p) < 1e-10);
        }
}

TEST_CASE("beta body samples: radial moment") {
    // |X|^2 ~ Beta(n/2, beta+1), so E|X|^2 = n / (n + 2 beta + 2)
    RngStream rng(11);
    for (const auto& [n, beta] : std::vector<std::pair<int, double>>{
             {2, 0.0}, {3, 1.0}, {4, -0.5}}) {
        Accum acc;
        for (int i = 0; i < 40000; ++i) {
            const Vec x = sample_beta(n, beta, rng);
            REQUIRE(static_cast<int>(x.size()) == n);
            const double r2 = dot(x, x);
            REQUIRE(r2 <= 1.0 + 1e-12);
            acc.add(r2);
        }
        const double want = n / (n + 2.0 * beta + 2.0);
        CHECK(std::fabs(acc.mean() - want) < 4.0 * acc.sem());
    }
}

TEST_CASE("sphere samples live on the sphere with zero mean") {
    RngStream rng(12);
    Accum first;
    for (int i = 0; i < 20000; ++i) {
        const Vec u = sample_sphere(3, rng);
        CHECK(norm(u) == doctest::Approx(1.0).epsilon(1e-12));
        first.add(u[0]);
    }
    CHECK(std::fabs(first.mean()) < 4.0 * first.sem());
}

TEST_CASE("projection law matches the predicted marginal") {
    RngStream rng(13);
    SUBCASE("ball to line") {
        const KsCheck k = projection_law_check(2, 1, 0.0, 20000, rng);
        CHECK(k.pass);
        CHECK(k.statistic < k.critical);
    }
    SUBCASE("sphere to line") {
        const KsCheck k = projection_law_check(3, 1, -1.0, 20000, rng);
        CHECK(k.pass);
    }
    SUBCASE("ball to plane, fractional beta") {
        RngStream local(14);
        const KsCheck k = projection_law_check(3, 2, 0.5, 20000, local);
        CHECK(k.pass);
    }
}
