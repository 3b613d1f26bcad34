#include <doctest.h>

#include <set>

#include "subtile/core.hpp"

using namespace subtile;

TEST_CASE("normalize translates to the origin and sorts row-major") {
    const Polyomino single({{3, 5}});
    CHECK(single.cells() == std::vector<Cell>{{0, 0}});
    CHECK(single.width() == 1);
    CHECK(single.height() == 1);
    CHECK(single.is_rectangle());

    const Polyomino tromino({{1, 1}, {2, 1}, {1, 0}});
    CHECK(tromino.cells() == std::vector<Cell>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(tromino.area() == 3);
    CHECK_FALSE(tromino.is_rectangle());
}

TEST_CASE("normalize rejects empty, duplicated, and disconnected cell sets") {
    CHECK_THROWS_AS(Polyomino(std::vector<Cell>{}), std::invalid_argument);
    CHECK_THROWS_AS(Polyomino({{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Polyomino({{0, 0}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Polyomino({{0, 0}, {1, 1}}), std::invalid_argument);  // diagonal contact only
}

TEST_CASE("normalize is idempotent") {
    const Polyomino p({{4, 2}, {4, 3}, {5, 3}, {6, 3}});
    CHECK(Polyomino(p.cells()) == p);
}

TEST_CASE("transform orbits") {
    const Polyomino r23 = Polyomino::rect(2, 3);
    const auto orbit = transforms(r23, TransformMode::rotations_and_reflections);
    CHECK(orbit.size() == 2);
    CHECK(std::set<Polyomino>(orbit.begin(), orbit.end()) ==
          std::set<Polyomino>{Polyomino::rect(2, 3), Polyomino::rect(3, 2)});

    const Polyomino ltromino({{0, 0}, {0, 1}, {1, 1}});
    CHECK(transforms(ltromino, TransformMode::vertical_reflections).size() == 2);
    CHECK(transforms(ltromino, TransformMode::fixed).size() == 1);
    CHECK(transforms(ltromino, TransformMode::rotations_and_reflections).size() == 4);

    const Polyomino unit = Polyomino::rect(1, 1);
    for (TransformMode mode :
         {TransformMode::fixed, TransformMode::vertical_reflections, TransformMode::rotations_and_reflections})
        CHECK(transforms(unit, mode).size() == 1);
}

TEST_CASE("orbit closure: transforming an orbit adds nothing new") {
    const Polyomino s({{0, 0}, {1, 0}, {1, 1}, {2, 1}});
    for (TransformMode mode : {TransformMode::vertical_reflections, TransformMode::rotations_and_reflections}) {
        const auto orbit = transforms(s, mode);
        std::set<Polyomino> closure(orbit.begin(), orbit.end());
        for (const Polyomino& q : orbit)
            for (const Polyomino& r : transforms(q, mode)) CHECK(closure.contains(r));
    }
}

TEST_CASE("canonical_shape is constant on an orbit") {
    const Polyomino l({{0, 0}, {0, 1}, {0, 2}, {1, 0}});
    const Polyomino expect = canonical_shape(l, Symmetry::dihedral);
    for (int t = 0; t < kTransformCount; ++t) CHECK(canonical_shape(transformed(l, t), Symmetry::dihedral) == expect);
}

TEST_CASE("close_library") {
    const Library fixed = close_library(make_library({Polyomino::rect(1, 2)}, TransformMode::fixed));
    CHECK(fixed.pieces.size() == 1);

    const Library rot = close_library(make_library({Polyomino::rect(1, 2)}, TransformMode::rotations_and_reflections));
    CHECK(rot.pieces.size() == 2);

    SUBCASE("idempotent") {
        const Library again = close_library(rot);
        CHECK(again.pieces == rot.pieces);
    }

    SUBCASE("monotone in mode permissiveness") {
        const Polyomino l({{0, 0}, {0, 1}, {1, 1}});
        std::set<Polyomino> prev;
        for (TransformMode mode :
             {TransformMode::fixed, TransformMode::vertical_reflections, TransformMode::rotations_and_reflections}) {
            const Library c = close_library(make_library({l}, mode));
            std::set<Polyomino> cur(c.pieces.begin(), c.pieces.end());
            for (const Polyomino& p : prev) CHECK(cur.contains(p));
            prev = cur;
        }
    }
}

TEST_CASE("make_library deduplicates translation-equal entries") {
    const Library lib = make_library({Polyomino({{0, 0}}), Polyomino({{7, 7}})}, TransformMode::fixed);
    CHECK(lib.pieces.size() == 1);
}

TEST_CASE("validate_tiling") {
    const Library dom = make_library({Polyomino::rect(1, 2), Polyomino::rect(1, 1)}, TransformMode::fixed);

    Tiling good{1, 2, {{0, 0, {0, 0}}}};
    CHECK(validate_tiling(dom, good).ok());

    Tiling bad{1, 2, {{1, 0, {0, 0}}, {1, 0, {0, 0}}}};
    const TilingViolations v = validate_tiling(dom, bad);
    CHECK(v.overlapped == std::vector<Cell>{{0, 0}});
    CHECK(v.uncovered == std::vector<Cell>{{1, 0}});

    Tiling outside{1, 2, {{0, 0, {1, 0}}}};
    CHECK(validate_tiling(dom, outside).out_of_bounds == std::vector<Cell>{{2, 0}});

    Tiling bad_index{1, 2, {{5, 0, {0, 0}}}};
    CHECK_THROWS_AS(validate_tiling(dom, bad_index), std::out_of_range);
}

TEST_CASE("multiset_of counts shape classes under the library mode") {
    const Library units = make_library({Polyomino::rect(1, 1)}, TransformMode::fixed);
    Tiling four{2, 2, {{0, 0, {0, 0}}, {0, 0, {1, 0}}, {0, 0, {0, 1}}, {0, 0, {1, 1}}}};
    PieceMultiset ms = multiset_of(units, four);
    CHECK(ms.counts.at(Polyomino::rect(1, 1)) == 4);
    CHECK(ms.total_area() == 4);

    const Library dom = make_library({Polyomino::rect(1, 2)}, TransformMode::fixed);
    Tiling stacked{2, 2, {{0, 0, {0, 0}}, {0, 0, {0, 1}}}};
    CHECK(multiset_of(dom, stacked).counts.at(Polyomino::rect(1, 2)) == 2);

    SUBCASE("rotation-closed libraries merge turned copies into one class") {
        const Library rot = close_library(make_library({Polyomino::rect(1, 2)}, TransformMode::rotations_and_reflections));
        Tiling vertical{2, 2, {{1, 0, {0, 0}}, {1, 0, {1, 0}}}};  // two 2x1 pieces
        PieceMultiset vms = multiset_of(rot, vertical);
        CHECK(vms.counts.size() == 1);
        CHECK(vms.piece_count() == 2);
        CHECK(vms == multiset_of(rot, Tiling{2, 2, {{0, 0, {0, 0}}, {0, 0, {0, 1}}}}));
    }

    SUBCASE("invalid tiling is an error") {
        Tiling hole{2, 2, {{0, 0, {0, 0}}}};
        CHECK_THROWS_AS(multiset_of(dom, hole), std::invalid_argument);
    }
}

TEST_CASE("area of every valid tiling matches the board") {
    const Library dom = make_library({Polyomino::rect(1, 2), Polyomino::rect(2, 1)}, TransformMode::fixed);
    Tiling t{2, 3, {{0, 0, {0, 0}}, {0, 0, {0, 1}}, {1, 0, {2, 0}}}};
    REQUIRE(validate_tiling(dom, t).ok());
    CHECK(multiset_of(dom, t).total_area() == 6);
}

TEST_CASE("vertical_faults") {
    const Library dom = make_library({Polyomino::rect(1, 2)}, TransformMode::fixed);
    Tiling two{1, 4, {{0, 0, {0, 0}}, {0, 0, {2, 0}}}};
    CHECK(vertical_faults(dom, two) == std::vector<int>{2});

    Tiling one{1, 2, {{0, 0, {0, 0}}}};
    CHECK(vertical_faults(dom, one) == std::vector<int>{});
}

TEST_CASE("juxtapose shifts the right tiling and leaves a seam fault") {
    const Library dom = make_library({Polyomino::rect(1, 2)}, TransformMode::fixed);
    Tiling left{1, 2, {{0, 0, {0, 0}}}};
    Tiling joined = juxtapose(left, left);
    CHECK(joined.m == 4);
    REQUIRE(validate_tiling(dom, joined).ok());
    CHECK(vertical_faults(dom, joined) == std::vector<int>{2});
}

TEST_CASE("coarsen merges multiset classes") {
    PieceMultiset ms;
    ms.add(Polyomino::rect(1, 3), 2);
    ms.add(Polyomino::rect(3, 1), 1);
    CHECK(ms.counts.size() == 2);
    const PieceMultiset merged = coarsen(ms, Symmetry::quarter_turns);
    CHECK(merged.counts.size() == 1);
    CHECK(merged.piece_count() == 3);
}
