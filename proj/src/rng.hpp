#pragma once
#include <cstdint>

namespace ivm {

std::uint64_t mix64(std::uint64_t x);

// Seeded random stream (xoshiro256++) with cheap derived substreams.
//
// A substream is a pure function of the root seed and the tag/index, never of
// how much the parent has been consumed.  Splitting work across threads or
// reordering loops therefore reproduces bit-identical results as long as each
// unit of work draws from its own substream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    RngStream substream(std::uint64_t tag) const;
    RngStream substream(std::uint64_t tag, std::uint64_t index) const;

    std::uint64_t bits();
    double uniform01();                  // [0, 1)
    double uniform(double a, double b);
    double normal();                     // standard normal, Box-Muller
    double gamma_variate(double shape);  // unit scale, shape > 0
    double beta_variate(double a, double b);

private:
    std::uint64_t root_;
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ivm
