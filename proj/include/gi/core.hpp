#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gi/errors.hpp"

// Core domain types. All of them validate their invariants on construction
// and are immutable afterwards, so instances can be shared freely across
// threads.
//
// Conventions fixed here and relied on everywhere else:
//   * pixel intensities are doubles in [0,1] (integer rasters are divided
//     by their declared maximum on load),
//   * rasters are stored row-major, and flattening an r x c raster yields a
//     length K = r*c vector with element (i,j) at index i*c + j.

namespace gi {

class Image {
public:
    Image(int rows, int cols, std::vector<double> pixels);

    static Image zeros(int rows, int cols);
    static Image constant(int rows, int cols, double value);

    // Linear map from an integer raster with the given maximum value
    // (255 for 8-bit PGM, 65535 for 16-bit) onto [0,1].
    static Image from_raster(int rows, int cols, std::span<const std::uint16_t> raw,
                             std::uint16_t max_value);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return rows_ * cols_; }

    double operator()(int r, int c) const { return pixels_[static_cast<std::size_t>(r) * cols_ + c]; }
    double at(int r, int c) const;

    const std::vector<double>& pixels() const { return pixels_; }

    double min() const;
    double max() const;

    bool same_shape(const Image& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const Image&, const Image&) = default;

private:
    int rows_;
    int cols_;
    std::vector<double> pixels_;
};

// M speckle patterns of identical shape, stored contiguously pattern-major.
// The contiguous buffer is exactly the row-major M x K sensing matrix of the
// forward model (row m = pattern m flattened).
class PatternStack {
public:
    PatternStack(int rows, int cols, int count, std::vector<double> data);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int count() const { return count_; }
    int pixel_count() const { return rows_ * cols_; }

    std::span<const double> pattern(int m) const;
    Image pattern_image(int m) const;

    // Row-major M x K sensing matrix, row m = pattern(m).
    const std::vector<double>& flatten() const { return data_; }

    // True when every value is exactly 0 or 1 (generated binary stacks).
    bool is_binary() const;

private:
    int rows_;
    int cols_;
    int count_;
    std::vector<double> data_;
};

// Bucket values recorded by the single-pixel detector, one per pattern.
class MeasurementVector {
public:
    explicit MeasurementVector(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int m) const { return values_[static_cast<std::size_t>(m)]; }
    const std::vector<double>& values() const { return values_; }

    friend bool operator==(const MeasurementVector&, const MeasurementVector&) = default;

private:
    std::vector<double> values_;
};

// Per-pixel edge coefficient map (the window-averaged slope of the guided
// filter's local linear model). Raw values are kept; normalized() produces
// the min-max scaled [0,1] raster used for display and PSNR grading.
class EdgeMap {
public:
    EdgeMap(int rows, int cols, std::vector<double> coefficients);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return rows_ * cols_; }

    double operator()(int r, int c) const {
        return coefficients_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const std::vector<double>& coefficients() const { return coefficients_; }

    Image normalized() const;

    friend bool operator==(const EdgeMap&, const EdgeMap&) = default;

private:
    int rows_;
    int cols_;
    std::vector<double> coefficients_;
};

// Output of an iterative reconstruction: the whole image, the edge map of
// the same shape, and the per-iteration data-misfit norms ||y - A x_t||_2
// (one entry per iteration actually run).
struct ReconstructionResult {
    Image image;
    EdgeMap edge;
    int iterations_run = 0;
    std::vector<double> residual_history;
};

// Row-major flattening; index (i,j) -> i*cols + j.
std::vector<double> image_to_vector(const Image& img);

// Inverse of image_to_vector. Throws ShapeError when the length disagrees.
Image vector_to_image(const std::vector<double>& v, int rows, int cols);

// (raster - min) / (max - min); an all-constant raster maps to all zeros.
Image minmax_normalized(const Image& img);

} // namespace gi
