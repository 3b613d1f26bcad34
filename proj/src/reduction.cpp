#include "subtile/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace subtile {

long long PartitionInstance::sum() const { return std::accumulate(values.begin(), values.end(), 0ll); }

PartitionResult partition_brute(const PartitionInstance& inst, int max_elements) {
    for (long long v : inst.values)
        if (v < 1) throw std::invalid_argument("partition: elements must be positive");
    const int k = static_cast<int>(inst.values.size());
    if (k > max_elements) return {SearchStatus::budget_exceeded, std::nullopt};
    if (!inst.even_sum()) return {SearchStatus::no, std::nullopt};
    const long long target = inst.half();
    for (std::uint64_t mask = 1; mask + 1 < (1ull << k); ++mask) {
        long long s = 0;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) s += inst.values[static_cast<size_t>(i)];
        if (s == target) {
            PartitionWitness w;
            for (int i = 0; i < k; ++i)
                (mask >> i & 1 ? w.s1 : w.s2).push_back(inst.values[static_cast<size_t>(i)]);
            return {SearchStatus::yes, std::move(w)};
        }
    }
    return {SearchStatus::no, std::nullopt};
}

std::optional<ReductionInstance> reduce_partition(const PartitionInstance& inst) {
    if (inst.values.empty()) throw std::invalid_argument("reduce_partition: empty multiset");
    for (long long v : inst.values)
        if (v < 1) throw std::invalid_argument("reduce_partition: elements must be positive");
    if (!inst.even_sum()) return std::nullopt;

    ReductionInstance out;
    out.source = inst;
    out.N = inst.half();
    const int tall_h = static_cast<int>(2 * out.N + 1);
    out.board_n = static_cast<int>(2 * out.N + 2);
    out.board_m = static_cast<int>(2 * out.N);

    std::vector<Polyomino> pieces;
    for (long long v : inst.values) pieces.push_back(Polyomino::rect(tall_h, static_cast<int>(v)));
    const Polyomino unit = Polyomino::rect(1, static_cast<int>(out.N));
    pieces.push_back(unit);
    out.lib = make_library(std::move(pieces), TransformMode::fixed);

    const auto index_of = [&](const Polyomino& p) {
        return static_cast<int>(std::find(out.lib.pieces.begin(), out.lib.pieces.end(), p) - out.lib.pieces.begin());
    };

    out.canonical.n = out.board_n;
    out.canonical.m = out.board_m;
    int x = 0;
    for (long long v : inst.values) {
        out.canonical.placements.push_back({index_of(Polyomino::rect(tall_h, static_cast<int>(v))), 0, {x, 0}});
        x += static_cast<int>(v);
    }
    // The leftover unit strip above the tall rows holds the two 1 x N pieces.
    out.canonical.placements.push_back({index_of(unit), 0, {0, tall_h}});
    out.canonical.placements.push_back({index_of(unit), 0, {static_cast<int>(out.N), tall_h}});

    out.multiset = multiset_of(out.lib, out.canonical);
    return out;
}

PartitionResult solve_partition_via_tiling(const PartitionInstance& inst, SearchBudget& budget) {
    std::optional<ReductionInstance> red = reduce_partition(inst);
    if (!red) return {SearchStatus::no, std::nullopt};
    SubtilingOutcome out = has_subtiling(red->multiset, red->board_n, red->board_m,
                                         effective_symmetry(red->lib.mode, RearrangeMode::rotations), budget);
    if (out.status == SearchStatus::budget_exceeded) return {SearchStatus::budget_exceeded, std::nullopt};
    if (out.status == SearchStatus::no) return {SearchStatus::no, std::nullopt};
    return {SearchStatus::yes, partition_from_witness(*red, *out.witness)};
}

PartitionWitness partition_from_witness(const ReductionInstance& inst, const SubtilingWitness& w) {
    PartitionWitness p;
    const int tall_h = static_cast<int>(2 * inst.N + 1);
    const auto collect = [&](const PieceMultiset& side, std::vector<long long>& sink) {
        for (const auto& [shape, k] : side.counts) {
            // Class keys are canonical under rotations, so a tall piece may be
            // keyed by its turned orientation; read whichever side is 2N+1.
            long long value = 0;
            if (shape.height() == tall_h)
                value = shape.width();
            else if (shape.width() == tall_h)
                value = shape.height();
            else
                continue;  // the 1 x N class
            for (long long i = 0; i < k; ++i) sink.push_back(value);
        }
        std::sort(sink.begin(), sink.end());
    };
    collect(w.left_multiset, p.s1);
    collect(w.right_multiset, p.s2);
    return p;
}

SearchStatus rotation_rigidity_check(const ReductionInstance& inst, SearchBudget& budget) {
    const Symmetry sym = effective_symmetry(inst.lib.mode, RearrangeMode::rotations);
    bool rotated_seen = false;
    SearchStatus status = enumerate_tilings_with_counts(
        inst.multiset, inst.board_n, inst.board_m, sym, budget, [&](const Tiling& t) {
            for (const Placement& pl : t.placements)
                if (pl.transform & 1) {  // quarter turn; half turns dedupe to identity
                    rotated_seen = true;
                    return false;
                }
            return true;
        });
    if (status == SearchStatus::budget_exceeded) return status;
    return rotated_seen ? SearchStatus::no : SearchStatus::yes;
}

}  // namespace subtile
