#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>

#include "subtile/core.hpp"

namespace subtile {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultSearchNodes = 50'000'000;

// Node-count cap shared across the calls of one logical operation. Running
// out is a distinct third outcome, never reported as "no".
struct SearchBudget {
    std::uint64_t limit = kDefaultSearchNodes;
    std::uint64_t used = 0;

    SearchBudget() = default;
    explicit SearchBudget(std::uint64_t limit) : limit(limit) {}
    bool spend() { return ++used <= limit; }
    bool exhausted() const { return used > limit; }
};

enum class SearchStatus { yes, no, budget_exceeded };

// True iff some multiset over the library tiles R_{n x m}, with each piece
// allowed the transforms of the library's mode.
SearchStatus can_tile(const Library& lib, int n, int m, SearchBudget& budget);

struct CountResult {
    SearchStatus status = SearchStatus::no;
    BigInt count;
};

// Number of distinct placement-level tilings of R_{n x m}. Two tilings are
// equal iff they cover the board with the same placed shapes at the same
// positions. count > 0 iff can_tile; m = 0 counts the empty tiling once.
CountResult count_tilings(const Library& lib, int n, int m, SearchBudget& budget);

struct TilingResult {
    SearchStatus status = SearchStatus::no;
    std::optional<Tiling> tiling;
};

// Deterministic witness for can_tile. Placements reference the given
// library's piece indices and mode transforms.
TilingResult find_tiling(const Library& lib, int n, int m, SearchBudget& budget);

// Pieces of a class multiset in key order, as a fixed-mode library; tilings
// returned by the exact-count searches index into this.
Library multiset_class_library(const PieceMultiset& ms);

// A tiling of R_{n x m} using exactly the given shape counts, where every
// copy may independently use any orientation in its class orbit under sym.
// Returns no immediately when the total area differs from n*m.
TilingResult tile_with_counts(const PieceMultiset& ms, int n, int m, Symmetry sym, SearchBudget& budget);

// Visits every exact-count tiling once, in canonical sweep order. The visitor
// returns false to stop early. Result: no = enumeration completed, yes =
// stopped by the visitor.
SearchStatus enumerate_tilings_with_counts(const PieceMultiset& ms, int n, int m, Symmetry sym,
                                           SearchBudget& budget, const std::function<bool(const Tiling&)>& visit);

// Visits every multiset that tiles R_{n x m} exactly once, keyed by shape
// class under the library mode's symmetry, in descending lexicographic
// count-vector order over the sorted class shapes.
SearchStatus enumerate_multisets(const Library& lib, int n, int m, SearchBudget& budget,
                                 const std::function<bool(const PieceMultiset&)>& visit);

}  // namespace subtile
