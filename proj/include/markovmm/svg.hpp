// svg.hpp -- deterministic SVG rendering of the graph of a multi-map.

#pragma once

#include "markovmm/multimap.hpp"

#include <string>

namespace markovmm {

struct RenderOptions {
    int size = 640;        // canvas edge in pixels
    bool grid = true;      // dotted gridlines at partition points
    bool labels = false;   // symbol ids next to their graph pieces
    int stroke = 3;        // stroke width for segments and verticals
};

// Plots every graph piece: thick segments and verticals, filled dots for
// point symbols, monomial branches as sampled polylines. All coordinates are
// fixed-decimal strings derived from exact rationals, so the output is
// byte-stable across runs and platforms.
std::string render_svg(const MarkovMultiMap& m, const RenderOptions& options = {});

}  // namespace markovmm
