#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gi/jigi.hpp"
#include "gi/sensing.hpp"

// Run configuration parsed from a flat dotted-key text file:
//
//   # comment
//   seed = 7
//   pattern.density = 0.5
//   sweep.m_values = 100, 150, 200
//   plir.omega = 1.0
//   filter.radius = 2
//
// Unknown keys are rejected. Values are numbers, booleans (true/false),
// method names, integer lists (comma or space separated) or paths.

namespace gi {

struct RunConfig {
    std::uint64_t seed = 0;

    // sensing
    int pattern_rows = 0; // 0 = take shape from the object image
    int pattern_cols = 0;
    double pattern_density = 0.5;
    double noise_sigma = 0.0;

    // reconstruction
    std::string method = "jigi"; // cgi | plir | jigi
    JigiConfig jigi;

    // metrics
    double edge_threshold = 0.25;

    // sweep
    std::vector<int> sweep_m_values;

    // paths (optional; CLI flags take precedence)
    std::string object_path;
    std::string out_dir;

    void validate() const;

    static RunConfig parse_string(const std::string& text);
    static RunConfig parse_file(const std::filesystem::path& path);
};

} // namespace gi
