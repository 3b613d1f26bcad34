#include <doctest.h>

#include <random>

#include "subtile/represent.hpp"

using namespace subtile;

namespace {

// The not-5-representable assignment: two 1x3 pinned to the outer rows,
// three 3x1 verticals, one 1x1, two 1x2.
RowAssignment not_rep_example() {
    return {
        {1, 3, {1, 1}}, {1, 3, {5, 1}}, {3, 1, {1, 3}}, {3, 1, {2, 3}},
        {3, 1, {3, 3}}, {1, 1, {3, 1}}, {1, 2, {2, 1}}, {1, 2, {4, 1}},
    };
}

Library not_rep_library() {
    return make_library({Polyomino::rect(1, 3), Polyomino::rect(1, 2), Polyomino::rect(1, 1), Polyomino::rect(3, 1)},
                        TransformMode::fixed);
}

}  // namespace

TEST_CASE("check_rep_equations") {
    CHECK(check_rep_equations(not_rep_example(), 5) == 4);
    CHECK(check_rep_equations({}, 3) == 0);
    CHECK(check_rep_equations({{1, 2, {1, 1}}}, 2) == std::nullopt);  // row 2 sums to 0

    CHECK_THROWS_AS(check_rep_equations({{2, 1, {1, 1}}}, 2), std::invalid_argument);  // len != height
    CHECK_THROWS_AS(check_rep_equations({{2, 1, {2, 2}}}, 2), std::invalid_argument);  // interval leaves [1, n]
}

TEST_CASE("tile_with_row_assignments") {
    SearchBudget budget;

    SUBCASE("the 8-piece example admits no row-respecting tiling of R_{5x4}") {
        const TilingResult r = tile_with_row_assignments(not_rep_example(), 5, 4, budget);
        CHECK(r.status == SearchStatus::no);
    }

    SUBCASE("unit-height assignments always tile") {
        const RowAssignment rows = {{1, 2, {1, 1}}, {1, 1, {1, 1}}, {1, 3, {2, 1}}};
        const TilingResult r = tile_with_row_assignments(rows, 2, 3, budget);
        REQUIRE(r.status == SearchStatus::yes);
        CHECK(validate_tiling(row_assignment_library(rows), *r.tiling).ok());
    }

    SUBCASE("mixed-height success case") {
        const RowAssignment p = {{2, 1, {1, 2}}, {1, 1, {1, 1}}, {1, 1, {2, 1}}};
        const TilingResult r = tile_with_row_assignments(p, 2, 2, budget);
        REQUIRE(r.status == SearchStatus::yes);
        const Library lib = row_assignment_library(p);
        REQUIRE(validate_tiling(lib, *r.tiling).ok());
        // Every placement spans exactly its assigned interval.
        for (const Placement& pl : r.tiling->placements) {
            const Polyomino& shape = lib.pieces[static_cast<size_t>(pl.piece)];
            bool matches = false;
            for (const RowAssignedPiece& a : p)
                if (a.height == shape.height() && a.width == shape.width() && a.rows.start - 1 == pl.at.y)
                    matches = true;
            CHECK(matches);
        }
    }

    SUBCASE("precondition violations are errors") {
        CHECK_THROWS_AS(tile_with_row_assignments({{1, 2, {1, 1}}}, 2, 2, budget), std::invalid_argument);
    }
}

TEST_CASE("tile_row_convex") {
    SUBCASE("rectangle rows") {
        RowConvexRegion region{2, {0, 0}, {4, 4}};
        const RowAssignment p = {{1, 2, {1, 1}}, {1, 2, {1, 1}}, {1, 4, {2, 1}}};
        const RegionTiling rt = tile_row_convex(region, p);
        CHECK(validate_region_tiling(rt).ok());
    }
    SUBCASE("staircase region") {
        RowConvexRegion region{2, {0, 1}, {2, 3}};
        const RowAssignment p = {{1, 2, {1, 1}}, {1, 1, {2, 1}}, {1, 2, {2, 1}}};
        const RegionTiling rt = tile_row_convex(region, p);
        CHECK(validate_region_tiling(rt).ok());
    }
    SUBCASE("width mismatch is an error") {
        RowConvexRegion region{1, {0}, {3}};
        CHECK_THROWS_AS(tile_row_convex(region, {{1, 2, {1, 1}}}), std::invalid_argument);
    }
    SUBCASE("non-unit heights are rejected") {
        RowConvexRegion region{2, {0, 0}, {1, 1}};
        CHECK_THROWS_AS(tile_row_convex(region, {{2, 1, {1, 2}}}), std::invalid_argument);
    }
}

TEST_CASE("tile_row_convex succeeds on randomized width-matched regions") {
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        RowConvexRegion region;
        region.n = n;
        RowAssignment pieces;
        for (int r = 0; r < n; ++r) {
            const int width = static_cast<int>(rng() % 9);  // empty rows allowed
            const int offset = static_cast<int>(rng() % 5);
            region.x0.push_back(offset);
            region.width.push_back(width);
            int left = width;
            while (left > 0) {
                const int w = 1 + static_cast<int>(rng() % static_cast<unsigned>(left));
                pieces.push_back({1, w, {r + 1, 1}});
                left -= w;
            }
        }
        std::shuffle(pieces.begin(), pieces.end(), rng);
        const RegionTiling rt = tile_row_convex(region, pieces);
        CAPTURE(trial);
        CHECK(validate_region_tiling(rt).ok());
    }
}

TEST_CASE("rep_sufficient") {
    SUBCASE("n at most 3") {
        const auto j = rep_sufficient(not_rep_library(), 3);
        REQUIRE(j.has_value());
        CHECK(j->rule == RepRule::n_at_most_3);
    }
    SUBCASE("heights 1 or at least n-1") {
        const Library lib =
            make_library({Polyomino::rect(1, 3), Polyomino::rect(4, 2), Polyomino::rect(5, 1)}, TransformMode::fixed);
        const auto j = rep_sufficient(lib, 5);
        REQUIRE(j.has_value());
        CHECK(j->rule == RepRule::heights_unit_or_near_n);
    }
    SUBCASE("n=4 equal-width height-2 pieces") {
        const Library lib =
            make_library({Polyomino::rect(2, 2), Polyomino::rect(1, 5), Polyomino::rect(4, 7)}, TransformMode::fixed);
        const auto j = rep_sufficient(lib, 4);
        REQUIRE(j.has_value());
        CHECK(j->rule == RepRule::n4_equal_width_height2);
    }
    SUBCASE("inconclusive is not a refutation") {
        CHECK_FALSE(rep_sufficient(not_rep_library(), 5).has_value());
        const Library lib = make_library({Polyomino::rect(2, 2), Polyomino::rect(2, 3)}, TransformMode::fixed);
        CHECK_FALSE(rep_sufficient(lib, 4).has_value());
    }
    SUBCASE("non-rectangles are rejected") {
        const Library lib = make_library({Polyomino({{0, 0}, {0, 1}, {1, 1}})}, TransformMode::fixed);
        CHECK_THROWS_AS(rep_sufficient(lib, 3), std::invalid_argument);
    }
}

TEST_CASE("find_rep_counterexample") {
    SUBCASE("recovers a witness for the not-5-representable library") {
        SearchBudget budget(200'000'000);
        const RepCounterexampleResult r = find_rep_counterexample(not_rep_library(), 5, 4, 10, budget);
        REQUIRE(r.status == SearchStatus::yes);
        CHECK(r.found->m == 4);
        CHECK(check_rep_equations(r.found->pieces, 5) == r.found->m);
        SearchBudget b2;
        CHECK(tile_with_row_assignments(r.found->pieces, 5, r.found->m, b2).status == SearchStatus::no);
    }
    SUBCASE("unit-height libraries have none at any cap") {
        const Library lib = make_library({Polyomino::rect(1, 1), Polyomino::rect(1, 2)}, TransformMode::fixed);
        SearchBudget budget;
        CHECK(find_rep_counterexample(lib, 4, 3, 8, budget).status == SearchStatus::no);
    }
    SUBCASE("n = 2 has none at small caps") {
        SearchBudget budget;
        CHECK(find_rep_counterexample(not_rep_library(), 2, 3, 6, budget).status == SearchStatus::no);
    }
}

TEST_CASE("staircase_arrangement") {
    SUBCASE("near-n heights leave a row-convex gap") {
        const RowAssignment tall = {{5, 2, {1, 5}}, {4, 1, {1, 4}}, {4, 3, {2, 4}}};
        const StaircaseArrangement a = staircase_arrangement(tall, 5, 9);
        CHECK(a.leftover.n == 5);
        long long covered = 0;
        for (const RowAssignedPiece& p : tall) covered += static_cast<long long>(p.height) * p.width;
        CHECK(a.leftover.area() == 45 - covered);
    }
    SUBCASE("n=4 first layout (bottom excess)") {
        const RowAssignment tall = {{2, 2, {1, 2}}, {2, 2, {1, 2}}, {2, 2, {3, 2}}, {3, 1, {1, 3}},
                                    {2, 2, {2, 2}}, {3, 2, {2, 3}}};
        const StaircaseArrangement a = staircase_arrangement(tall, 4, 9);
        CHECK(a.leftover.area() == 36 - 25);
    }
    SUBCASE("n=4 second layout (top excess)") {
        const RowAssignment tall = {{2, 2, {3, 2}}, {2, 2, {3, 2}}, {2, 2, {1, 2}}, {3, 1, {2, 3}}};
        const StaircaseArrangement a = staircase_arrangement(tall, 4, 6);
        CHECK(a.leftover.area() == 24 - 15);
    }
    SUBCASE("empty arrangement leaves the whole rectangle") {
        const StaircaseArrangement a = staircase_arrangement({}, 3, 4);
        CHECK(a.leftover.area() == 12);
        for (int r = 0; r < 3; ++r) {
            CHECK(a.leftover.x0[static_cast<size_t>(r)] == 0);
            CHECK(a.leftover.width[static_cast<size_t>(r)] == 4);
        }
    }
    SUBCASE("unsupported height profiles are rejected") {
        CHECK_THROWS_AS(staircase_arrangement({{3, 1, {1, 3}}}, 5, 4), std::invalid_argument);
        CHECK_THROWS_AS(staircase_arrangement({{1, 2, {1, 1}}}, 3, 4), std::invalid_argument);
    }
    SUBCASE("n=4 layout requires equal height-2 widths") {
        CHECK_THROWS_AS(staircase_arrangement({{2, 2, {1, 2}}, {2, 3, {2, 2}}}, 4, 8), std::invalid_argument);
    }
}

TEST_CASE("whenever rep_sufficient justifies, the counterexample search comes up empty") {
    const std::vector<std::pair<Library, int>> corpus = {
        {make_library({Polyomino::rect(1, 2), Polyomino::rect(2, 1), Polyomino::rect(2, 2)}, TransformMode::fixed), 2},
        {make_library({Polyomino::rect(1, 1), Polyomino::rect(1, 3)}, TransformMode::fixed), 4},
        {make_library({Polyomino::rect(3, 1), Polyomino::rect(4, 2), Polyomino::rect(1, 2)}, TransformMode::fixed), 4},
    };
    for (const auto& [lib, n] : corpus) {
        REQUIRE(rep_sufficient(lib, n).has_value());
        SearchBudget budget(200'000'000);
        const RepCounterexampleResult r = find_rep_counterexample(lib, n, 3, 6, budget);
        CHECK(r.status == SearchStatus::no);
    }
}
