#include "subtile/core.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace subtile {

Polyomino::Polyomino(std::vector<Cell> cells) {
    if (cells.empty()) throw std::invalid_argument("polyomino: empty cell set");
    int min_x = std::numeric_limits<int>::max(), min_y = min_x;
    int max_x = std::numeric_limits<int>::min(), max_y = max_x;
    for (const Cell& c : cells) {
        min_x = std::min(min_x, c.x);
        min_y = std::min(min_y, c.y);
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
    }
    for (Cell& c : cells) {
        c.x -= min_x;
        c.y -= min_y;
    }
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw std::invalid_argument("polyomino: duplicate cell");

    width_ = max_x - min_x + 1;
    height_ = max_y - min_y + 1;
    cells_ = std::move(cells);

    // Edge connectivity via flood fill from the first cell.
    std::set<Cell> todo(cells_.begin(), cells_.end());
    std::vector<Cell> stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
            auto it = todo.find(nb);
            if (it != todo.end()) {
                stack.push_back(*it);
                todo.erase(it);
            }
        }
    }
    if (!todo.empty()) throw std::invalid_argument("polyomino: disconnected cell set");

    is_rectangle_ = area() == width_ * height_;
}

Polyomino Polyomino::rect(int height, int width) {
    if (height < 1 || width < 1) throw std::invalid_argument("rect: dimensions must be positive");
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(height) * width);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) cells.push_back({x, y});
    return Polyomino(std::move(cells));
}

bool Polyomino::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

Cell transform_cell(Cell c, int transform) {
    if (transform < 0 || transform >= kTransformCount) throw std::invalid_argument("transform id out of range");
    Cell r = c;
    switch (transform & 3) {
        case 0: break;
        case 1: r = {-c.y, c.x}; break;
        case 2: r = {-c.x, -c.y}; break;
        case 3: r = {c.y, -c.x}; break;
    }
    if (transform & 4) r.x = -r.x;
    return r;
}

Polyomino transformed(const Polyomino& p, int transform) {
    if ((transform & 3) != 0 && p.is_rectangle() && (transform & 1) == 0) {
        // 180-degree turn of a rectangle is itself.
        return p;
    }
    std::vector<Cell> cells;
    cells.reserve(p.cells().size());
    for (Cell c : p.cells()) cells.push_back(transform_cell(c, transform));
    return Polyomino(std::move(cells));
}

const std::vector<int>& mode_transforms(TransformMode mode) {
    static const std::vector<int> fixed{0};
    static const std::vector<int> vrefl{0, 4};
    static const std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
    switch (mode) {
        case TransformMode::fixed: return fixed;
        case TransformMode::vertical_reflections: return vrefl;
        case TransformMode::rotations_and_reflections: return all;
    }
    throw std::invalid_argument("unknown transform mode");
}

std::vector<Polyomino> transforms(const Polyomino& p, TransformMode mode) {
    std::set<Polyomino> orbit;
    for (int t : mode_transforms(mode)) orbit.insert(transformed(p, t));
    return {orbit.begin(), orbit.end()};
}

const std::vector<int>& symmetry_transforms(Symmetry sym) {
    static const std::vector<int> translation{0};
    static const std::vector<int> vrefl{0, 4};
    static const std::vector<int> quarter{0, 1, 2, 3};
    static const std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
    switch (sym) {
        case Symmetry::translation: return translation;
        case Symmetry::vertical_reflection: return vrefl;
        case Symmetry::quarter_turns: return quarter;
        case Symmetry::dihedral: return all;
    }
    throw std::invalid_argument("unknown symmetry");
}

Symmetry mode_symmetry(TransformMode mode) {
    switch (mode) {
        case TransformMode::fixed: return Symmetry::translation;
        case TransformMode::vertical_reflections: return Symmetry::vertical_reflection;
        case TransformMode::rotations_and_reflections: return Symmetry::dihedral;
    }
    throw std::invalid_argument("unknown transform mode");
}

Symmetry join_quarter_turns(Symmetry sym) {
    switch (sym) {
        case Symmetry::translation: return Symmetry::quarter_turns;
        case Symmetry::quarter_turns: return Symmetry::quarter_turns;
        default: return Symmetry::dihedral;  // any reflection plus C4 generates D4
    }
}

Symmetry join_reflections(Symmetry sym) {
    switch (sym) {
        case Symmetry::translation: return Symmetry::vertical_reflection;
        case Symmetry::vertical_reflection: return Symmetry::vertical_reflection;
        default: return Symmetry::dihedral;
    }
}

Polyomino canonical_shape(const Polyomino& p, Symmetry sym) {
    const Polyomino* best = nullptr;
    std::vector<Polyomino> orbit;
    orbit.reserve(symmetry_transforms(sym).size());
    for (int t : symmetry_transforms(sym)) {
        orbit.push_back(transformed(p, t));
        if (!best || orbit.back() < *best) best = &orbit.back();
    }
    return *best;
}

Library make_library(std::vector<Polyomino> pieces, TransformMode mode) {
    Library lib;
    lib.mode = mode;
    std::set<Polyomino> seen;
    for (Polyomino& p : pieces)
        if (seen.insert(p).second) lib.pieces.push_back(std::move(p));
    return lib;
}

Library close_library(Library lib) {
    std::set<Polyomino> seen(lib.pieces.begin(), lib.pieces.end());
    const size_t original = lib.pieces.size();
    for (size_t i = 0; i < original; ++i)
        for (const Polyomino& q : transforms(lib.pieces[i], lib.mode))
            if (seen.insert(q).second) lib.pieces.push_back(q);
    return lib;
}

std::vector<Cell> placed_cells(const Library& lib, const Placement& pl) {
    if (pl.piece < 0 || pl.piece >= static_cast<int>(lib.pieces.size()))
        throw std::out_of_range("placement: piece index out of range");
    Polyomino shape = transformed(lib.pieces[pl.piece], pl.transform);
    std::vector<Cell> cells = shape.cells();
    for (Cell& c : cells) {
        c.x += pl.at.x;
        c.y += pl.at.y;
    }
    return cells;
}

TilingViolations validate_tiling(const Library& lib, const Tiling& t) {
    if (t.n < 1 || t.m < 0) throw std::invalid_argument("tiling: board must have n >= 1, m >= 0");
    TilingViolations v;
    std::vector<int> cover(static_cast<size_t>(t.n) * static_cast<size_t>(std::max(t.m, 0)), 0);
    for (const Placement& pl : t.placements) {
        for (Cell c : placed_cells(lib, pl)) {
            if (c.x < 0 || c.x >= t.m || c.y < 0 || c.y >= t.n) {
                v.out_of_bounds.push_back(c);
                continue;
            }
            ++cover[static_cast<size_t>(c.x) * t.n + c.y];
        }
    }
    for (int x = 0; x < t.m; ++x) {
        for (int y = 0; y < t.n; ++y) {
            int k = cover[static_cast<size_t>(x) * t.n + y];
            if (k == 0) v.uncovered.push_back({x, y});
            if (k > 1) v.overlapped.push_back({x, y});
        }
    }
    std::sort(v.uncovered.begin(), v.uncovered.end());
    std::sort(v.overlapped.begin(), v.overlapped.end());
    std::sort(v.out_of_bounds.begin(), v.out_of_bounds.end());
    return v;
}

long long PieceMultiset::total_area() const {
    long long a = 0;
    for (const auto& [shape, k] : counts) a += k * shape.area();
    return a;
}

long long PieceMultiset::piece_count() const {
    long long a = 0;
    for (const auto& [shape, k] : counts) a += k;
    return a;
}

void PieceMultiset::add(const Polyomino& shape, long long k) {
    if (k == 0) return;
    long long& slot = counts[shape];
    slot += k;
    if (slot < 0) throw std::invalid_argument("multiset: negative count");
    if (slot == 0) counts.erase(shape);
}

PieceMultiset coarsen(const PieceMultiset& ms, Symmetry sym) {
    PieceMultiset out;
    for (const auto& [shape, k] : ms.counts) out.add(canonical_shape(shape, sym), k);
    return out;
}

PieceMultiset multiset_of(const Library& lib, const Tiling& t) {
    if (!validate_tiling(lib, t).ok()) throw std::invalid_argument("multiset_of: invalid tiling");
    const Symmetry sym = mode_symmetry(lib.mode);
    PieceMultiset ms;
    for (const Placement& pl : t.placements)
        ms.add(canonical_shape(transformed(lib.pieces[pl.piece], pl.transform), sym));
    return ms;
}

std::vector<int> vertical_faults(const Library& lib, const Tiling& t) {
    if (!validate_tiling(lib, t).ok()) throw std::invalid_argument("vertical_faults: invalid tiling");
    // A connected piece spanning columns [c0, c1] crosses the line at x iff
    // c0 < x <= c1.
    std::vector<bool> crossed(static_cast<size_t>(std::max(t.m, 1)), false);
    for (const Placement& pl : t.placements) {
        int c0 = std::numeric_limits<int>::max(), c1 = std::numeric_limits<int>::min();
        for (Cell c : placed_cells(lib, pl)) {
            c0 = std::min(c0, c.x);
            c1 = std::max(c1, c.x);
        }
        for (int x = c0 + 1; x <= c1; ++x) crossed[static_cast<size_t>(x)] = true;
    }
    std::vector<int> faults;
    for (int x = 1; x < t.m; ++x)
        if (!crossed[static_cast<size_t>(x)]) faults.push_back(x);
    return faults;
}

Tiling juxtapose(const Tiling& left, const Tiling& right) {
    if (left.n != right.n) throw std::invalid_argument("juxtapose: height mismatch");
    Tiling out = left;
    out.m = left.m + right.m;
    for (Placement pl : right.placements) {
        pl.at.x += left.m;
        out.placements.push_back(pl);
    }
    return out;
}

}  // namespace subtile
