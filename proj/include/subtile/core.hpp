#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subtile {

// Unit-square grid cell. x is the column, y is the row; (0,0) is the
// bottom-left corner of a board.
struct Cell {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(const Cell&, const Cell&) = default;
    // Row-major: by row, then by column.
    friend constexpr auto operator<=>(const Cell& a, const Cell& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

// An edge-connected, non-empty set of unit cells, stored translated so that
// min x = min y = 0, sorted row-major. Rectangles keep the same cell-set
// interface but are flagged so callers can take the (height, width) fast path.
class Polyomino {
public:
    // Normalizes and validates. Throws std::invalid_argument on an empty,
    // duplicated, or disconnected cell set.
    explicit Polyomino(std::vector<Cell> cells);

    static Polyomino rect(int height, int width);

    const std::vector<Cell>& cells() const { return cells_; }
    int height() const { return height_; }
    int width() const { return width_; }
    int area() const { return static_cast<int>(cells_.size()); }
    bool is_rectangle() const { return is_rectangle_; }
    bool contains(Cell c) const;

    friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.cells_ == b.cells_; }
    friend auto operator<=>(const Polyomino& a, const Polyomino& b) { return a.cells_ <=> b.cells_; }

private:
    std::vector<Cell> cells_;
    int height_ = 0;
    int width_ = 0;
    bool is_rectangle_ = false;
};

// Spec-facing alias for the normalizing constructor.
inline Polyomino normalize(std::vector<Cell> cells) { return Polyomino(std::move(cells)); }

// Transform group allowed when closing a library. Ordered by permissiveness.
enum class TransformMode {
    fixed = 0,
    vertical_reflections = 1,
    rotations_and_reflections = 2,
};

// D4 element ids. Bits 0-1: number of 90-degree counterclockwise quarter
// turns; bit 2: reflection across a vertical line, applied after the turns.
inline constexpr int kTransformCount = 8;

Cell transform_cell(Cell c, int transform);
Polyomino transformed(const Polyomino& p, int transform);

// Transform ids permitted by a mode: {0}, {0,4}, or all of D4.
const std::vector<int>& mode_transforms(TransformMode mode);

// Orbit of p under the mode's group, normalized, deduplicated, sorted.
std::vector<Polyomino> transforms(const Polyomino& p, TransformMode mode);

// Shape-equivalence used for multiset class identity.
enum class Symmetry {
    translation = 0,          // shapes equal as placed
    vertical_reflection = 1,  // {id, reflect across a vertical line}
    quarter_turns = 2,        // C4
    dihedral = 3,             // full D4
};

const std::vector<int>& symmetry_transforms(Symmetry sym);
Symmetry mode_symmetry(TransformMode mode);
Symmetry join_quarter_turns(Symmetry sym);
Symmetry join_reflections(Symmetry sym);

// Lexicographically smallest representative of p's orbit under sym.
Polyomino canonical_shape(const Polyomino& p, Symmetry sym);

struct Library {
    std::vector<Polyomino> pieces;
    TransformMode mode = TransformMode::fixed;
};

// Deduplicates translation-equivalent entries, keeping first occurrences.
Library make_library(std::vector<Polyomino> pieces, TransformMode mode);

// Extends the piece list with all transforms under the mode, deduplicated up
// to translation. Idempotent; original entries keep their positions.
Library close_library(Library lib);

// One placed piece: pieces[piece] transformed by `transform`, then translated
// so the bottom-left corner of its bounding box sits at `at`.
struct Placement {
    int piece = 0;
    int transform = 0;
    Cell at;
};

struct Tiling {
    int n = 0;  // height
    int m = 0;  // width
    std::vector<Placement> placements;
};

// Absolute cells covered by a placement. Throws on an out-of-range piece
// index or transform id.
std::vector<Cell> placed_cells(const Library& lib, const Placement& pl);

struct TilingViolations {
    std::vector<Cell> uncovered;
    std::vector<Cell> overlapped;
    std::vector<Cell> out_of_bounds;

    bool ok() const { return uncovered.empty() && overlapped.empty() && out_of_bounds.empty(); }
};

// Empty result iff the placements exactly partition the n x m grid.
TilingViolations validate_tiling(const Library& lib, const Tiling& t);

// Counts of canonical shapes. Keys are canonical under the symmetry chosen by
// whoever built the multiset; values are >= 1.
struct PieceMultiset {
    std::map<Polyomino, long long> counts;

    long long total_area() const;
    long long piece_count() const;
    void add(const Polyomino& shape, long long k = 1);

    friend bool operator==(const PieceMultiset&, const PieceMultiset&) = default;
    friend auto operator<=>(const PieceMultiset& a, const PieceMultiset& b) { return a.counts <=> b.counts; }
};

// Re-keys every entry by its canonical shape under sym, merging classes.
PieceMultiset coarsen(const PieceMultiset& ms, Symmetry sym);

// Multiset of placed shapes, classed under the library mode's symmetry.
// Throws if the tiling is invalid.
PieceMultiset multiset_of(const Library& lib, const Tiling& t);

// All x in 1..m-1 where the vertical grid line at x crosses no placement's
// interior. Throws if the tiling is invalid.
std::vector<int> vertical_faults(const Library& lib, const Tiling& t);

// Right tiling shifted by left.m and appended; the seam leaves a fault.
Tiling juxtapose(const Tiling& left, const Tiling& right);

}  // namespace subtile
