#pragma once

#include <filesystem>
#include <string>

#include "gi/core.hpp"

// Bit-exact file formats.
//
// GIPT (pattern stack):
//   magic "GIPT", u8 version = 1, u8 dtype (0 = packed bits, 1 = f32),
//   LE u32 count, u32 rows, u32 cols, then the payload. Packed bits store
//   each pattern padded to a byte boundary, row-major pixels, most
//   significant bit first. f32 payload is row-major pattern-major.
//
// GIMS (measurement vector):
//   magic "GIMS", u8 version = 1, LE u32 count, then count LE f64 values.
//
// Images are binary PGM (P5), 8- or 16-bit; 16-bit samples are big-endian
// per the PNM convention. Loading divides by the declared maximum value,
// writing multiplies and rounds.

namespace gi {

Image read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const Image& img, int bits = 16);

PatternStack read_patterns(const std::filesystem::path& path);

// Binary stacks are written packed (dtype 0); anything else as f32.
void write_patterns(const std::filesystem::path& path, const PatternStack& patterns);

MeasurementVector read_measurements(const std::filesystem::path& path);
void write_measurements(const std::filesystem::path& path, const MeasurementVector& y);

} // namespace gi
