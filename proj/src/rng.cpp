#include "rng.hpp"
#include "errors.hpp"

#include <cmath>

namespace ivm {

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}
}  // namespace

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : root_(seed) {
    std::uint64_t z = seed;
    for (auto& w : s_) w = mix64(z++);
}

RngStream RngStream::substream(std::uint64_t tag) const {
    return RngStream(mix64(root_ ^ mix64(0xd1b54a32d192ed03ull + tag)));
}

RngStream RngStream::substream(std::uint64_t tag, std::uint64_t index) const {
    return RngStream(mix64(mix64(root_ ^ mix64(0xd1b54a32d192ed03ull + tag)) + index));
}

std::uint64_t RngStream::bits() {
    // xoshiro256++
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(bits() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
    return a + (b - a) * uniform01();
}

double RngStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

double RngStream::gamma_variate(double shape) {
    if (!(shape > 0.0)) throw param_error("gamma_variate: shape must be positive");
    // Marsaglia-Tsang squeeze; shape < 1 boosted through shape + 1
    if (shape < 1.0) {
        const double u = std::max(uniform01(), 1e-300);
        return gamma_variate(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = 0.0, v = 0.0;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double RngStream::beta_variate(double a, double b) {
    const double x = gamma_variate(a);
    const double y = gamma_variate(b);
    const double s = x + y;
    if (s <= 0.0) return 0.5;  // underflow of both gammas; essentially impossible
    return x / s;
}

}  // namespace ivm
