#include "subtile/render.hpp"

#include <algorithm>
#include <sstream>

namespace subtile {
namespace {

// splitmix64; stable across platforms so output stays byte-identical.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::string piece_color(std::uint64_t seed, int piece) {
    const std::uint64_t h = mix(seed * 1315423911ull + static_cast<std::uint64_t>(piece) + 1);
    const unsigned hue = static_cast<unsigned>(h % 360);
    const unsigned sat = 55 + static_cast<unsigned>((h >> 16) % 25);
    const unsigned light = 62 + static_cast<unsigned>((h >> 32) % 18);
    std::ostringstream s;
    s << "hsl(" << hue << "," << sat << "%," << light << "%)";
    return s.str();
}

}  // namespace

std::string render_svg(const Library& lib, const Tiling& t, const RenderSpec& spec) {
    if (!validate_tiling(lib, t).ok()) throw std::invalid_argument("render: invalid tiling");
    const int cs = spec.cell_size;
    const int w = t.m * cs, h = t.n * cs;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h << "\" width=\"" << w
        << "\" height=\"" << h << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    for (const Placement& pl : t.placements) {
        const Polyomino shape = transformed(lib.pieces.at(static_cast<size_t>(pl.piece)), pl.transform);
        const std::string fill = piece_color(spec.palette_seed, pl.piece);
        if (shape.is_rectangle()) {
            const int x = pl.at.x * cs;
            const int y = (t.n - pl.at.y - shape.height()) * cs;  // board y grows upward, svg y downward
            svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << shape.width() * cs << "\" height=\""
                << shape.height() * cs << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
        } else {
            svg << "  <path d=\"";
            for (Cell c : shape.cells()) {
                const int x = (pl.at.x + c.x) * cs;
                const int y = (t.n - pl.at.y - c.y - 1) * cs;
                svg << "M" << x << " " << y << "h" << cs << "v" << cs << "h-" << cs << "z";
            }
            svg << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
        }
    }
    for (int x : vertical_faults(lib, t))
        svg << "  <line x1=\"" << x * cs << "\" y1=\"0\" x2=\"" << x * cs << "\" y2=\"" << h
            << "\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string render_ascii(const Library& lib, const Tiling& t) {
    if (!validate_tiling(lib, t).ok()) throw std::invalid_argument("render: invalid tiling");
    std::vector<std::string> grid(static_cast<size_t>(t.n), std::string(static_cast<size_t>(t.m), '.'));
    for (size_t i = 0; i < t.placements.size(); ++i) {
        const char letter = static_cast<char>('a' + i % 26);
        for (Cell c : placed_cells(lib, t.placements[i]))
            grid[static_cast<size_t>(c.y)][static_cast<size_t>(c.x)] = letter;
    }
    std::ostringstream out;
    for (int y = t.n - 1; y >= 0; --y) out << grid[static_cast<size_t>(y)] << '\n';
    const std::vector<int> faults = vertical_faults(lib, t);
    if (!faults.empty()) {
        out << "faults at x =";
        for (int x : faults) out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

std::string render(const Library& lib, const Tiling& t, const RenderSpec& spec) {
    return spec.format == RenderFormat::svg ? render_svg(lib, t, spec) : render_ascii(lib, t);
}

}  // namespace subtile
