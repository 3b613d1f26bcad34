#pragma once

#include "subtile/subtiling.hpp"

namespace subtile {

struct PartitionInstance {
    std::vector<long long> values;  // positive integers

    long long sum() const;
    bool even_sum() const { return sum() % 2 == 0; }
    long long half() const { return sum() / 2; }
};

struct PartitionWitness {
    std::vector<long long> s1, s2;  // equal-sum halves
};

struct PartitionResult {
    SearchStatus status = SearchStatus::no;  // yes = partition found
    std::optional<PartitionWitness> witness;
};

// Subset enumeration over all 2^|M| splits; |M| may not exceed max_elements.
PartitionResult partition_brute(const PartitionInstance& inst, int max_elements = 24);

// PARTITION -> subtiling instance: board R_{(2N+2) x 2N} tiled by one
// (2N+1) x m_i piece per element plus two 1 x N pieces in the top row.
struct ReductionInstance {
    PartitionInstance source;
    long long N = 0;
    Library lib;
    int board_n = 0;  // 2N + 2
    int board_m = 0;  // 2N
    Tiling canonical;
    PieceMultiset multiset;
};

// std::nullopt when the sum is odd (no partition is possible). Requires a
// non-empty multiset of positive integers.
std::optional<ReductionInstance> reduce_partition(const PartitionInstance& inst);

// Decides PARTITION by composing the reduction with the GEN-ST search.
PartitionResult solve_partition_via_tiling(const PartitionInstance& inst, SearchBudget& budget);

// Projects a subtiling witness back to the equal-sum split of M by reading
// the tall-piece widths on each side.
PartitionWitness partition_from_witness(const ReductionInstance& inst, const SubtilingWitness& w);

// Exhaustive GEN-ST enumeration over the instance's rearrangements: yes iff
// no rearrangement places a quarter-turned piece.
SearchStatus rotation_rigidity_check(const ReductionInstance& inst, SearchBudget& budget);

}  // namespace subtile
