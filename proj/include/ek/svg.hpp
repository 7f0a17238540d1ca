#pragma once

#include "ek/io.hpp"

#include <string>

namespace ek {

struct PlotOptions {
    bool labels = false;
    int digits = 12;
};

// Standalone SVG: the square (l1), rotated square (linf) or unit circle
// (l2) outline, candidate dots with labels and voter dots. Coordinates come
// from to_float_points; output is deterministic.
std::string render_svg(const EmbeddingFile& file, const PlotOptions& opts = {});

}  // namespace ek
