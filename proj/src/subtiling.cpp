#include "subtile/subtiling.hpp"

#include <algorithm>
#include <set>

namespace subtile {

Symmetry effective_symmetry(TransformMode lib_mode, RearrangeMode mode, bool allow_reflections) {
    Symmetry sym = mode_symmetry(lib_mode);
    if (mode == RearrangeMode::rotations) sym = join_quarter_turns(sym);
    if (allow_reflections) sym = join_reflections(sym);
    return sym;
}

namespace {

// Remaps a tiling returned against `part`'s own class library so its piece
// indices refer to the full class library instead.
Tiling remap_classes(Tiling t, const PieceMultiset& part, const Library& full_classes) {
    const Library part_lib = multiset_class_library(part);
    std::vector<int> to_full(part_lib.pieces.size(), -1);
    for (size_t i = 0; i < part_lib.pieces.size(); ++i) {
        auto it = std::find(full_classes.pieces.begin(), full_classes.pieces.end(), part_lib.pieces[i]);
        to_full[i] = static_cast<int>(it - full_classes.pieces.begin());
    }
    for (Placement& pl : t.placements) pl.piece = to_full[static_cast<size_t>(pl.piece)];
    return t;
}

struct SplitSearch {
    const std::vector<Polyomino>* classes;
    const std::vector<long long>* total;
    int n;
    Symmetry sym;
    SearchBudget* budget;

    std::vector<long long> left_counts;

    PieceMultiset to_multiset(const std::vector<long long>& v) const {
        PieceMultiset ms;
        for (size_t i = 0; i < v.size(); ++i) ms.add((*classes)[i], v[i]);
        return ms;
    }

    // Enumerates sub-multisets of the given area in ascending lexicographic
    // count-vector order; returns a witness split or nothing. A budget hit
    // surfaces as SearchStatus::budget_exceeded through *status.
    std::optional<std::pair<PieceMultiset, PieceMultiset>> find_split(size_t idx, long long area_left,
                                                                      long long area_right, int m_left, int m_right,
                                                                      SearchStatus* status) {
        if (idx == classes->size()) {
            if (area_left != 0) return std::nullopt;
            PieceMultiset t1 = to_multiset(left_counts);
            TilingResult left = tile_with_counts(t1, n, m_left, sym, *budget);
            if (left.status == SearchStatus::budget_exceeded) {
                *status = SearchStatus::budget_exceeded;
                return std::nullopt;
            }
            if (left.status != SearchStatus::yes) return std::nullopt;
            std::vector<long long> rest(total->size());
            for (size_t i = 0; i < rest.size(); ++i) rest[i] = (*total)[i] - left_counts[i];
            PieceMultiset t2 = to_multiset(rest);
            TilingResult right = tile_with_counts(t2, n, m_right, sym, *budget);
            if (right.status == SearchStatus::budget_exceeded) {
                *status = SearchStatus::budget_exceeded;
                return std::nullopt;
            }
            if (right.status != SearchStatus::yes) return std::nullopt;
            return std::make_pair(std::move(t1), std::move(t2));
        }
        const long long area = (*classes)[idx].area();
        const long long hi = std::min((*total)[idx], area_left / area);
        for (long long c = 0; c <= hi; ++c) {
            left_counts[idx] = c;
            if (auto split = find_split(idx + 1, area_left - c * area, area_right, m_left, m_right, status))
                return split;
            if (*status == SearchStatus::budget_exceeded) return std::nullopt;
        }
        left_counts[idx] = 0;
        return std::nullopt;
    }
};

SubtilingOutcome has_subtiling_impl(const PieceMultiset& T, int n, int m, Symmetry sym, SearchBudget& budget,
                                    bool check_feasibility) {
    if (n < 1 || m < 1) throw std::invalid_argument("has_subtiling: board must have n, m >= 1");
    const PieceMultiset canon = coarsen(T, sym);
    if (check_feasibility) {
        TilingResult whole = tile_with_counts(canon, n, m, sym, budget);
        if (whole.status == SearchStatus::budget_exceeded) return {SearchStatus::budget_exceeded, std::nullopt};
        if (whole.status != SearchStatus::yes)
            throw std::invalid_argument("has_subtiling: multiset does not tile the rectangle");
    }

    std::vector<Polyomino> classes;
    std::vector<long long> total;
    for (const auto& [shape, k] : canon.counts) {
        classes.push_back(shape);
        total.push_back(k);
    }

    SplitSearch search;
    search.classes = &classes;
    search.total = &total;
    search.n = n;
    search.sym = sym;
    search.budget = &budget;
    search.left_counts.assign(classes.size(), 0);

    const Library class_lib = multiset_class_library(canon);
    for (int m_left = 1; m_left <= m / 2; ++m_left) {
        const int m_right = m - m_left;
        SearchStatus status = SearchStatus::no;
        auto split = search.find_split(0, static_cast<long long>(n) * m_left,
                                       static_cast<long long>(n) * m_right, m_left, m_right, &status);
        if (status == SearchStatus::budget_exceeded) return {SearchStatus::budget_exceeded, std::nullopt};
        if (!split) continue;

        SubtilingWitness w;
        w.split_width = m_left;
        w.classes = class_lib;
        w.left_multiset = split->first;
        w.right_multiset = split->second;
        // Re-run the two feasible sides to materialize witness tilings.
        TilingResult left = tile_with_counts(split->first, n, m_left, sym, budget);
        TilingResult right = tile_with_counts(split->second, n, m_right, sym, budget);
        if (left.status != SearchStatus::yes || right.status != SearchStatus::yes)
            return {SearchStatus::budget_exceeded, std::nullopt};
        w.left = remap_classes(*left.tiling, split->first, class_lib);
        w.right = remap_classes(*right.tiling, split->second, class_lib);
        return {SearchStatus::yes, std::move(w)};
    }
    return {SearchStatus::no, std::nullopt};
}

}  // namespace

SubtilingOutcome has_subtiling(const PieceMultiset& T, int n, int m, Symmetry sym, SearchBudget& budget) {
    return has_subtiling_impl(T, n, m, sym, budget, true);
}

SubtilingOutcome has_subtiling(const Library& lib, const Tiling& t, RearrangeMode mode, SearchBudget& budget,
                               bool allow_reflections) {
    const PieceMultiset ms = multiset_of(lib, t);
    return has_subtiling(ms, t.n, t.m, effective_symmetry(lib.mode, mode, allow_reflections), budget);
}

BetaReport beta_empirical(const Library& lib, int n, int m_max, RearrangeMode mode, SearchBudget& budget,
                          bool allow_reflections) {
    if (n < 1 || m_max < 1) throw std::invalid_argument("beta_empirical: need n >= 1 and m_max >= 1");
    BetaReport report;
    report.n = n;
    report.mode = mode;
    report.m_max = m_max;
    const Symmetry eff = effective_symmetry(lib.mode, mode, allow_reflections);
    const Library closed = close_library(lib);

    for (int m = 1; m <= m_max; ++m) {
        std::set<PieceMultiset> candidates;
        SearchStatus enum_status =
            enumerate_multisets(closed, n, m, budget, [&](const PieceMultiset& ms) {
                candidates.insert(coarsen(ms, eff));
                return true;
            });
        if (enum_status == SearchStatus::budget_exceeded) {
            for (int rest = m; rest <= m_max; ++rest) report.budget_exceeded_widths.push_back(rest);
            report.exhaustive = false;
            return report;
        }
        for (const PieceMultiset& ms : candidates) {
            SubtilingOutcome out = has_subtiling_impl(ms, n, m, eff, budget, false);
            if (out.status == SearchStatus::budget_exceeded) {
                for (int rest = m; rest <= m_max; ++rest) report.budget_exceeded_widths.push_back(rest);
                report.exhaustive = false;
                return report;
            }
            if (out.status == SearchStatus::no) {
                report.counterexample_widths.push_back(m);
                report.largest_counterexample_m = m;
                report.counterexample = ms;
                break;
            }
        }
    }
    return report;
}

Library staircase_library() {
    const Polyomino cap_left({{0, 0}, {0, 1}, {1, 1}});   // XX over X.
    const Polyomino cap_right({{0, 0}, {1, 0}, {1, 1}});  // .X over XX
    const Polyomino step({{0, 0}, {1, 0}, {1, 1}, {2, 1}});  // S-tetromino
    return close_library(make_library({cap_left, cap_right, step}, TransformMode::vertical_reflections));
}

Tiling staircase_tiling(int width) {
    if (width < 3 || width % 2 == 0)
        throw std::invalid_argument("staircase_tiling: constructible widths are odd and >= 3");
    Tiling t;
    t.n = 2;
    t.m = width;
    t.placements.push_back({0, 0, {0, 0}});  // left cap
    for (int x = 1; x + 3 <= width; x += 2) t.placements.push_back({2, 0, {x, 0}});
    t.placements.push_back({1, 0, {width - 2, 0}});  // right cap
    return t;
}

StaircaseCertificate certify_staircase_family(int width, SearchBudget& budget) {
    StaircaseCertificate cert;
    cert.lib = staircase_library();
    cert.tiling = staircase_tiling(width);
    cert.multiset = multiset_of(cert.lib, cert.tiling);
    cert.subtiling = has_subtiling(cert.lib, cert.tiling, RearrangeMode::rotations, budget);
    return cert;
}

}  // namespace subtile
