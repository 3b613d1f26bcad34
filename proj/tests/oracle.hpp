#pragma once

// Naive reference implementations, kept independent of the library's sweep
// kernel on purpose: plain bool grids, row-major scans, no bitmasks, no
// memoization. Test-only.

#include <vector>

#include "subtile/core.hpp"

namespace oracle {

// Every distinct shape reachable from the library's pieces under its mode.
std::vector<subtile::Polyomino> expand_shapes(const subtile::Library& lib);

long long count_tilings(const std::vector<subtile::Polyomino>& shapes, int n, int m);

bool can_tile(const std::vector<subtile::Polyomino>& shapes, int n, int m);

// Direct two-sided search: for every m' enumerate the tilings of R_{n x m'}
// drawing at most the multiset's counts, then try to finish R_{n x m''} with
// the remainder.
bool has_subtiling(const subtile::PieceMultiset& T, int n, int m, subtile::Symmetry sym);

}  // namespace oracle
