#pragma once

#include "subtile/search.hpp"

namespace subtile {

// TRANS-ST rearranges by translations only; GEN-ST additionally lets every
// piece copy use quarter-turn rotations, each copy independently.
enum class RearrangeMode { translations, rotations };

// Group of shape moves available to a rearrangement: the library mode's own
// group, joined with quarter turns for rotations queries and, optionally,
// reflections (a no-op for rectangles; explicit extension otherwise).
Symmetry effective_symmetry(TransformMode lib_mode, RearrangeMode mode, bool allow_reflections = false);

struct SubtilingWitness {
    int split_width = 0;     // m'
    Library classes;         // canonical class shapes; left/right index into this
    Tiling left;             // tiling of R_{n x m'}
    Tiling right;            // tiling of R_{n x (m - m')}
    PieceMultiset left_multiset;
    PieceMultiset right_multiset;
};

struct SubtilingOutcome {
    SearchStatus status = SearchStatus::no;  // yes = witness, no = certified none
    std::optional<SubtilingWitness> witness;
};

// Decides whether T = T1 (+) T2 with T1 tiling R_{n x m'} and T2 tiling
// R_{n x m''}, m' + m'' = m, m', m'' >= 1, under the given symmetry. The
// multiset must tile R_{n x m} (std::invalid_argument otherwise). A "no" is
// an exhaustive certificate over all (m', split) pairs.
SubtilingOutcome has_subtiling(const PieceMultiset& T, int n, int m, Symmetry sym, SearchBudget& budget);

// Convenience wrapper: extracts the tiling's multiset first.
SubtilingOutcome has_subtiling(const Library& lib, const Tiling& t, RearrangeMode mode, SearchBudget& budget,
                               bool allow_reflections = false);

struct BetaReport {
    int n = 0;
    RearrangeMode mode = RearrangeMode::translations;
    int m_max = 0;
    int largest_counterexample_m = 0;  // 0 = every searched width splits
    std::optional<PieceMultiset> counterexample;
    std::vector<int> counterexample_widths;
    std::vector<int> budget_exceeded_widths;
    bool exhaustive = true;
};

// Tests every multiset that tiles R_{n x m} for each m <= m_max and reports
// the largest width with a no-subtiling counterexample. Lower-bound semantics
// only: a finite search cannot certify that beta is finite.
BetaReport beta_empirical(const Library& lib, int n, int m_max, RearrangeMode mode, SearchBudget& budget,
                          bool allow_reflections = false);

// The three pieces whose vertical-reflection closure admits arbitrarily wide
// fault-free tilings of R_{2 x W}: two L-trominoes capping an S-tetromino
// staircase. Closed library of six shapes.
Library staircase_library();

// The staircase tiling of R_{2 x W}; constructible widths are the odd W >= 3
// (left cap + k S-pieces + right cap, W = 2k + 3). Throws otherwise.
Tiling staircase_tiling(int width);

struct StaircaseCertificate {
    Library lib;
    Tiling tiling;
    PieceMultiset multiset;
    SubtilingOutcome subtiling;  // rotations-mode search; expected status no
};

// Builds the width-W staircase and runs the rotations-mode subtiling search
// (full dihedral freedom, since the library is reflection-closed).
StaircaseCertificate certify_staircase_family(int width, SearchBudget& budget);

}  // namespace subtile
