#include <doctest.h>

#include "oracle.hpp"
#include "subtile/subtiling.hpp"

using namespace subtile;

namespace {

PieceMultiset rect_counts(std::initializer_list<std::pair<Polyomino, long long>> entries) {
    PieceMultiset ms;
    for (const auto& [shape, k] : entries) ms.add(shape, k);
    return ms;
}

void check_witness_invariants(const PieceMultiset& T, const SubtilingWitness& w, int n, int m, Symmetry sym) {
    CHECK(w.split_width >= 1);
    CHECK(w.split_width <= m - 1);
    CHECK(w.left.n == n);
    CHECK(w.left.m == w.split_width);
    CHECK(w.right.m == m - w.split_width);
    CHECK(validate_tiling(w.classes, w.left).ok());
    CHECK(validate_tiling(w.classes, w.right).ok());

    const Tiling joined = juxtapose(w.left, w.right);
    CHECK(validate_tiling(w.classes, joined).ok());
    const std::vector<int> faults = vertical_faults(w.classes, joined);
    CHECK(std::find(faults.begin(), faults.end(), w.split_width) != faults.end());

    PieceMultiset combined = w.left_multiset;
    for (const auto& [shape, k] : w.right_multiset.counts) combined.add(shape, k);
    CHECK(coarsen(combined, sym) == coarsen(T, sym));
}

}  // namespace

TEST_CASE("has_subtiling finds the trivial domino split") {
    SearchBudget budget;
    const PieceMultiset T = rect_counts({{Polyomino::rect(1, 2), 2}});
    const SubtilingOutcome out = has_subtiling(T, 1, 4, Symmetry::translation, budget);
    REQUIRE(out.status == SearchStatus::yes);
    CHECK(out.witness->split_width == 2);
    check_witness_invariants(T, *out.witness, 1, 4, Symmetry::translation);
}

TEST_CASE("width one admits no split") {
    SearchBudget budget;
    const PieceMultiset T = rect_counts({{Polyomino::rect(1, 1), 1}});
    CHECK(has_subtiling(T, 1, 1, Symmetry::translation, budget).status == SearchStatus::no);
}

TEST_CASE("a multiset that does not tile the rectangle is an error") {
    SearchBudget budget;
    const PieceMultiset T = rect_counts({{Polyomino::rect(1, 2), 1}});
    CHECK_THROWS_AS(has_subtiling(T, 1, 3, Symmetry::translation, budget), std::invalid_argument);
}

TEST_CASE("staircase family: valid, fault-free, and subtiling-free even with rotations") {
    const Library lib = staircase_library();
    CHECK(lib.pieces.size() == 6);

    for (int w : {3, 5, 7}) {
        CAPTURE(w);
        SearchBudget budget;
        const StaircaseCertificate cert = certify_staircase_family(w, budget);
        CHECK(validate_tiling(cert.lib, cert.tiling).ok());
        CHECK(vertical_faults(cert.lib, cert.tiling).empty());
        CHECK(cert.subtiling.status == SearchStatus::no);
    }

    CHECK_THROWS_AS(staircase_tiling(1), std::invalid_argument);
    CHECK_THROWS_AS(staircase_tiling(4), std::invalid_argument);
}

TEST_CASE("translations witness implies rotations witness (beta_n >= beta_n^R)") {
    const Library dom = make_library({Polyomino::rect(1, 2), Polyomino::rect(2, 1)}, TransformMode::fixed);
    for (int n = 1; n <= 3; ++n)
        for (int m = 2; m <= 4; ++m) {
            SearchBudget budget;
            std::vector<PieceMultiset> multisets;
            enumerate_multisets(dom, n, m, budget, [&](const PieceMultiset& ms) {
                multisets.push_back(ms);
                return true;
            });
            for (const PieceMultiset& ms : multisets) {
                SearchBudget b1, b2;
                const SubtilingOutcome trans = has_subtiling(ms, n, m, Symmetry::translation, b1);
                const SubtilingOutcome gen = has_subtiling(ms, n, m, Symmetry::quarter_turns, b2);
                if (trans.status == SearchStatus::yes) CHECK(gen.status == SearchStatus::yes);
            }
        }
}

TEST_CASE("has_subtiling agrees with the naive two-sided oracle") {
    const std::vector<std::pair<Library, Symmetry>> corpus = {
        {make_library({Polyomino::rect(1, 2), Polyomino::rect(2, 1)}, TransformMode::fixed), Symmetry::translation},
        {make_library({Polyomino::rect(1, 2)}, TransformMode::fixed), Symmetry::quarter_turns},
        {make_library({Polyomino({{0, 0}, {0, 1}, {1, 1}}), Polyomino::rect(1, 1)}, TransformMode::vertical_reflections),
         Symmetry::dihedral},
        {make_library({Polyomino::rect(2, 2), Polyomino::rect(1, 1)}, TransformMode::fixed), Symmetry::translation},
    };
    for (const auto& [lib, sym] : corpus) {
        for (int n = 1; n <= 3; ++n)
            for (int m = 2; m <= 8 / n; ++m) {
                SearchBudget budget;
                std::vector<PieceMultiset> multisets;
                enumerate_multisets(lib, n, m, budget, [&](const PieceMultiset& ms) {
                    multisets.push_back(ms);
                    return true;
                });
                for (const PieceMultiset& ms : multisets) {
                    CAPTURE(n);
                    CAPTURE(m);
                    SearchBudget b;
                    const SubtilingOutcome got = has_subtiling(ms, n, m, sym, b);
                    REQUIRE(got.status != SearchStatus::budget_exceeded);
                    CHECK((got.status == SearchStatus::yes) == oracle::has_subtiling(ms, n, m, sym));
                    if (got.witness) check_witness_invariants(ms, *got.witness, n, m, sym);
                }
            }
    }
}

TEST_CASE("beta_empirical on the single horizontal domino") {
    const Library dom = make_library({Polyomino::rect(1, 2)}, TransformMode::fixed);
    SearchBudget budget;
    const BetaReport r = beta_empirical(dom, 1, 8, RearrangeMode::translations, budget);
    CHECK(r.exhaustive);
    CHECK(r.largest_counterexample_m == 2);
    CHECK(r.counterexample_widths == std::vector<int>{2});
}

TEST_CASE("beta_empirical on the unit square is one") {
    const Library unit = make_library({Polyomino::rect(1, 1)}, TransformMode::fixed);
    SearchBudget budget;
    const BetaReport r = beta_empirical(unit, 1, 6, RearrangeMode::translations, budget);
    CHECK(r.largest_counterexample_m == 1);
}

TEST_CASE("beta_empirical on the staircase library finds the odd-width family") {
    SearchBudget budget;
    const BetaReport r = beta_empirical(staircase_library(), 2, 10, RearrangeMode::rotations, budget);
    REQUIRE(r.exhaustive);
    CHECK(r.largest_counterexample_m == 9);
    CHECK(r.counterexample_widths == std::vector<int>{3, 5, 7, 9});
}

TEST_CASE("beta_empirical reports budget exhaustion per width") {
    const Library dom = make_library({Polyomino::rect(1, 2)}, TransformMode::fixed);
    SearchBudget tiny(5);
    const BetaReport r = beta_empirical(dom, 1, 8, RearrangeMode::translations, tiny);
    CHECK_FALSE(r.exhaustive);
    CHECK_FALSE(r.budget_exceeded_widths.empty());
}

TEST_CASE("tiling-level wrapper extracts the multiset first") {
    const Library lib = staircase_library();
    const Tiling t = staircase_tiling(5);
    SearchBudget budget;
    const SubtilingOutcome out = has_subtiling(lib, t, RearrangeMode::rotations, budget);
    CHECK(out.status == SearchStatus::no);
}
