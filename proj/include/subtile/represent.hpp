#pragma once

#include "subtile/search.hpp"

namespace subtile {

// Contiguous run of rows inside [1, n], 1-based.
struct RowInterval {
    int start = 1;
    int len = 1;

    int end() const { return start + len - 1; }  // inclusive
    bool covers(int row) const { return start <= row && row <= end(); }
    friend bool operator==(const RowInterval&, const RowInterval&) = default;
    friend auto operator<=>(const RowInterval&, const RowInterval&) = default;
};

// Rectangular piece pinned to the rows it must span; height == rows.len.
struct RowAssignedPiece {
    int height = 1;
    int width = 1;
    RowInterval rows;

    friend bool operator==(const RowAssignedPiece&, const RowAssignedPiece&) = default;
    friend auto operator<=>(const RowAssignedPiece&, const RowAssignedPiece&) = default;
};

using RowAssignment = std::vector<RowAssignedPiece>;

// Throws unless every piece has positive dimensions, height == rows.len, and
// rows within [1, n].
void check_row_assignment(const RowAssignment& pieces, int n);

// The unique board width m with total area n*m and every row's assigned
// widths summing to m, or nothing if the sums disagree.
std::optional<int> check_rep_equations(const RowAssignment& pieces, int n);

// Exhaustive search for a tiling of R_{n x m} in which every piece spans
// exactly its assigned rows. Requires check_rep_equations(pieces, n) == m.
// The tiling indexes row_assignment_library(pieces).
TilingResult tile_with_row_assignments(const RowAssignment& pieces, int n, int m, SearchBudget& budget);

// Distinct rectangles of the assignment, as a fixed library.
Library row_assignment_library(const RowAssignment& pieces);

// Subregion of a board whose intersection with each row is one contiguous
// segment: row i (1-based) covers columns [x0[i-1], x0[i-1] + width[i-1]).
struct RowConvexRegion {
    int n = 0;
    std::vector<int> x0;
    std::vector<int> width;  // 0 = empty row

    long long area() const;
    bool contains(Cell c) const;
};

struct RegionTiling {
    RowConvexRegion region;
    Library pieces;
    std::vector<Placement> placements;
};

// Constructive tiler behind the row-convex lemma: places each row's
// unit-height pieces left to right (sorted by width, then input order).
// Throws if some row's assigned widths do not sum to that row's width.
RegionTiling tile_row_convex(const RowConvexRegion& region, const RowAssignment& pieces);

// Exact-cover check of a region tiling; empty result iff exact.
TilingViolations validate_region_tiling(const RegionTiling& rt);

enum class RepRule {
    n_at_most_3,             // every rectangular set is n-representable for n <= 3
    heights_unit_or_near_n,  // all heights in {1} or >= n-1
    n4_equal_width_height2,  // n == 4 and all height-2 pieces share one width
};

struct RepJustification {
    RepRule rule;
    std::string detail;
};

// Which sufficient condition for n-representability applies, if any.
// std::nullopt is inconclusive, not a refutation. Rectangles only.
std::optional<RepJustification> rep_sufficient(const Library& lib, int n);

struct RepCounterexample {
    RowAssignment pieces;
    int m = 0;
};

struct RepCounterexampleResult {
    SearchStatus status = SearchStatus::no;  // yes = counterexample found
    std::optional<RepCounterexample> found;
};

// Searches assignments over the library's rectangles (heights <= n) that
// satisfy the representability equations yet admit no row-respecting tiling.
// Scans m = 1..m_max in order (increasing total area), assignments in
// lexicographic count order, at most count_max pieces.
RepCounterexampleResult find_rep_counterexample(const Library& lib, int n, int m_max, long long count_max,
                                                SearchBudget& budget);

struct StaircaseArrangement {
    Library pieces;
    std::vector<Placement> placements;
    RowConvexRegion leftover;
};

// The block arrangement from the representability proof: height-n blocks,
// then height-(n-1) bottom blocks from the left, height-(n-1) top blocks
// flush right (or, for n = 4, the two equal-width height-2 layouts). The
// untiled leftover is row-convex. Throws on an unsupported height profile.
StaircaseArrangement staircase_arrangement(const RowAssignment& tall_pieces, int n, int m);

}  // namespace subtile
