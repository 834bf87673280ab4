#pragma once

#include <cstdint>

// Seeded, portable random number generation. Output is a pure function of
// the seed and the draw index, so pattern and measurement files regenerate
// bit-exactly. Engine: xoshiro256++ seeded through splitmix64.
//
// Draw order contracts used by callers:
//   * bernoulli(p) and uniform01() consume exactly one engine step,
//   * gaussian() consumes exactly two (Box-Muller, cosine branch only).

namespace gi {

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01();

    bool bernoulli(double p) { return uniform01() < p; }

    // Standard normal deviate.
    double gaussian();

private:
    std::uint64_t state_[4];
};

} // namespace gi
