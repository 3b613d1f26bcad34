#pragma once

#include "subtile/subtiling.hpp"

namespace subtile {

struct RectPackVerdict {
    bool tiles = false;
    bool divisibility_ok = false;                       // a | n or a | m, and b | n or b | m
    std::optional<std::pair<int, int>> n_combo;         // n = a*x + b*y with x, y >= 0
    std::optional<std::pair<int, int>> m_combo;         // m = a*x + b*y with x, y >= 0
};

// Klarner-de Bruijn criterion: an a x b rectangle tiles R_{n x m} (with
// rotations) iff the divisibility condition holds and both n and m are
// nonnegative integer combinations of a and b.
RectPackVerdict rect_tiles(int a, int b, int n, int m);

// Block-decomposition witness (strips of height/width a and b); present iff
// rect_tiles(a, b, n, m).tiles. Placements reference a one-piece library
// {rect(a, b)} with rotations.
std::optional<Tiling> rect_tiling_witness(int a, int b, int n, int m);

enum class SingleRectCase {
    divides_neither,       // paper value 2ab
    divides_exactly_one,   // paper value 2 * (the other side)
    ab_divides_n,          // left open by the paper
    both_divide_ab_does_not,  // not covered by the paper's case split
};

struct SingleRectBetaReport {
    int a = 0, b = 0, n = 0;
    SingleRectCase kase = SingleRectCase::divides_neither;
    std::optional<long long> paper_value;
    int m_max = 0;
    int empirical_value = 0;  // largest counterexample width found
    bool exhaustive = true;
    bool agreement = false;   // paper_value && empirical_value == *paper_value
};

// Classifies n against the single-rectangle proof cases and reports both the
// paper's stated beta value (where stated) and an independently computed
// empirical value (rotations-mode search to m_max; default 2ab). The two are
// reported side by side, never merged.
SingleRectBetaReport single_rect_beta(int a, int b, int n, SearchBudget& budget, int m_max = 0);

struct TallProfile {
    std::vector<Polyomino> tall;           // height > n/2, sorted by descending height
    std::optional<Polyomino> unit_piece;   // the at-most-one unit-height filler
    long long widths_gcd = 0;              // gcd of tall widths
    int max_tall_width = 0;
};

// Hypotheses of the tall-rectangle theorem: rectangles only, every piece of
// height > n/2 (and <= n) except at most one unit-height piece whose width
// divides the gcd of the tall widths. std::nullopt when they fail.
std::optional<TallProfile> tall_precondition(const Library& lib, int n);

// The proof's rearrangement: tall blocks by descending height from the left,
// unit-height fill above and beside them. Requires the profile hypotheses
// and that T exactly tiles R_{n x m} (throws otherwise). The output is a
// valid tiling with the same multiset.
Tiling tall_rearrange(const PieceMultiset& T, const Library& lib, int n, int m);

// beta_n for a tall library: the largest tall-piece width.
int tall_beta(const Library& lib, int n);

}  // namespace subtile
