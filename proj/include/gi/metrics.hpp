#pragma once

#include <cstdint>
#include <vector>

#include "gi/core.hpp"

// Quantitative evaluation:
//
//   SNR  = (mean(edge region) - mean(background)) / sqrt(popvar(background))
//   MSE  = (1/(r*c)) sum (ref - cand)^2
//   PSNR = 10 log10(max_val^2 / MSE), +inf for identical inputs
//
// plus Sobel-based ground-truth edge extraction for grading edge maps.

namespace gi {

enum class RegionLabel : std::uint8_t { edge, background, ignore };

class RegionMask {
public:
    RegionMask(int rows, int cols, std::vector<RegionLabel> labels);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RegionLabel operator()(int r, int c) const {
        return labels_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const std::vector<RegionLabel>& labels() const { return labels_; }

    int edge_count() const;
    int background_count() const;

private:
    int rows_;
    int cols_;
    std::vector<RegionLabel> labels_;
};

// Population (divide-by-N) variance in the denominator. Throws
// NumericalError when the background is constant.
double snr(const Image& result, const RegionMask& mask);
double snr(const EdgeMap& result, const RegionMask& mask);

double psnr(const Image& reference, const Image& candidate, double max_val = 1.0);

// Gradient magnitude from the standard 3x3 Sobel kernels, replicated
// borders.
Image sobel_magnitude(const Image& img);

struct GroundTruthEdge {
    RegionMask mask;  // edge where normalized magnitude > threshold
    Image edge_image; // same set as a binary {0,1} raster
};

GroundTruthEdge ground_truth_edge(const Image& object, double threshold = 0.25);

// Build a mask straight from a graded/binary edge image: edge where the
// pixel value is above threshold.
RegionMask mask_from_edge_image(const Image& edge_image, double threshold);

} // namespace gi
