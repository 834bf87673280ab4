#pragma once

#include <cstdint>

#include "gi/core.hpp"

// Forward model: random binary speckle patterns and the simulated
// single-pixel (bucket) measurement y[m] = <pattern m, object>, with
// optional additive Gaussian detector noise on the bucket values.

namespace gi {

struct NoiseModel {
    enum class Kind { none, additive_gaussian };

    Kind kind = Kind::none;
    double sigma = 0.0; // standard deviation in bucket-value units

    static NoiseModel none() { return {Kind::none, 0.0}; }
    static NoiseModel gaussian(double sigma);

    void validate() const;
};

// M independent patterns; each pixel is 1 with probability `density`.
// Stream order: pattern-major, then row-major pixel order, one uniform
// draw per pixel.
PatternStack generate_patterns(int rows, int cols, int count, double density,
                               std::uint64_t seed);

// Bucket values, one per pattern. Noise deviates are drawn in measurement
// order (two uniform draws each); the seed is unused for NoiseModel::none.
MeasurementVector measure(const PatternStack& patterns, const Image& object,
                          const NoiseModel& noise, std::uint64_t seed);

} // namespace gi
