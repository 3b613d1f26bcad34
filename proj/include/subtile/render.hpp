#pragma once

#include "subtile/core.hpp"

namespace subtile {

enum class RenderFormat { svg, ascii };

struct RenderSpec {
    RenderFormat format = RenderFormat::svg;
    int cell_size = 24;
    std::uint64_t palette_seed = 0;
};

// Deterministic picture of a valid tiling: one <rect> per rectangular
// placement (a cell path otherwise), colored by piece class, with dashed
// vertical lines at the fault positions. Throws on an invalid tiling.
std::string render_svg(const Library& lib, const Tiling& t, const RenderSpec& spec);

// Letter grid, top row first, one letter per placement (cycling a-z), with a
// trailing fault summary line when faults exist.
std::string render_ascii(const Library& lib, const Tiling& t);

std::string render(const Library& lib, const Tiling& t, const RenderSpec& spec);

}  // namespace subtile
