#pragma once

#include "gi/core.hpp"

// Edge-preserving guided filter. Within every square window w_k (side
// 2*radius+1, truncated at the borders, |w_k| = actual pixel count) the
// output is modelled as q = a_k * I + b_k with
//
//   a_k = (mean(I*x) - mean(I) mean(x)) / (var(I) + epsilon)
//   b_k = mean(x) - a_k mean(I)
//
// and the per-pixel result averages all windows covering the pixel:
// q_i = abar_i * I_i + bbar_i. The slope map abar doubles as a global edge
// response: self-guided, a_k = var_k / (var_k + epsilon), close to 1 in
// textured windows and close to 0 in flat ones.
//
// All window means use running box sums, O(1) per pixel per pass.

namespace gi {

struct GuidedFilterParams {
    int radius = 2;
    double epsilon = 1e-4; // on the [0,1] intensity scale

    void validate() const;
};

// Per-window linear coefficients before averaging, indexed by window center.
struct WindowCoefficients {
    Image a;
    Image b;
};

struct GuidedFilterOutput {
    Image q;   // filtered image, q_i = abar_i * I_i + bbar_i
    EdgeMap a; // window-averaged slope abar_i
    Image b;   // window-averaged intercept bbar_i
};

WindowCoefficients window_coefficients(const Image& guidance, const Image& input,
                                       const GuidedFilterParams& params);

GuidedFilterOutput guided_filter(const Image& guidance, const Image& input,
                                 const GuidedFilterParams& params);

// Edge response with the image as its own guidance:
// guided_filter(x, x, params).a
EdgeMap edge_response_selfguided(const Image& x, const GuidedFilterParams& params);

namespace detail {

// Sums over truncated windows [i-radius, i+radius] x [j-radius, j+radius].
std::vector<double> box_sum(const std::vector<double>& src, int rows, int cols,
                            int radius);

// Pixel count of the truncated window centred at each pixel.
std::vector<double> window_counts(int rows, int cols, int radius);

} // namespace detail

} // namespace gi
