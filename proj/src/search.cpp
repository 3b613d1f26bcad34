#include "subtile/search.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <set>
#include <unordered_map>

namespace subtile {
namespace {

struct budget_blown {};

// One usable orientation of a piece, preprocessed for the sweep. The sweep
// fills the first empty cell in column-major order (index x*n + y), so a
// shape is anchored at the lowest cell of its leftmost column: that is the
// only cell of the shape that can land on the sweep position.
struct Oriented {
    int piece = 0;      // library piece index or multiset class index
    int transform = 0;  // D4 id that produced this shape
    int cls = 0;        // count bucket
    int width = 0;
    int anchor_y = 0;                 // anchor cell's y within the shape's bounding box
    std::vector<Cell> rel;            // cells relative to the anchor; rel[0] == {0,0}
};

Oriented make_oriented(const Polyomino& shape, int piece, int transform, int cls) {
    std::vector<Cell> cells = shape.cells();
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;  // column-major
    });
    Oriented o;
    o.piece = piece;
    o.transform = transform;
    o.cls = cls;
    o.width = shape.width();
    o.anchor_y = cells.front().y;
    o.rel.reserve(cells.size());
    for (Cell c : cells) o.rel.push_back({c.x, c.y - o.anchor_y});
    return o;
}

// Orientations of the library's pieces under its mode, deduplicated by
// resulting shape (first producing (piece, transform) wins).
std::vector<Oriented> library_orientations(const Library& lib, int n, int m) {
    std::vector<Oriented> out;
    std::set<Polyomino> seen;
    for (size_t i = 0; i < lib.pieces.size(); ++i) {
        for (int t : mode_transforms(lib.mode)) {
            Polyomino shape = transformed(lib.pieces[i], t);
            if (shape.height() > n || shape.width() > m) continue;
            if (seen.insert(shape).second) out.push_back(make_oriented(shape, static_cast<int>(i), t, 0));
        }
    }
    return out;
}

// Orientations of class shapes under a symmetry. Classes must be canonical
// under the same symmetry, which keeps their orbits disjoint.
std::vector<Oriented> class_orientations(const std::vector<Polyomino>& classes, Symmetry sym, int n, int m) {
    std::vector<Oriented> out;
    for (size_t k = 0; k < classes.size(); ++k) {
        std::set<Polyomino> seen;
        for (int t : symmetry_transforms(sym)) {
            Polyomino shape = transformed(classes[k], t);
            if (shape.height() > n || shape.width() > m) continue;
            if (seen.insert(shape).second)
                out.push_back(make_oriented(shape, static_cast<int>(k), t, static_cast<int>(k)));
        }
    }
    return out;
}

using Key = std::vector<std::uint64_t>;

struct KeyHash {
    size_t operator()(const Key& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : k) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

constexpr int kMaxWindowBits = 512;

struct Searcher {
    int n = 1, m = 0;
    int total = 0;
    std::vector<Oriented> orients;
    std::vector<char> grid;  // index x*n + y
    SearchBudget* budget = nullptr;

    std::vector<long long> counts;  // residual per class; empty = unlimited
    bool use_counts = false;

    bool memo_on = false;
    int window_cells = 0;

    std::unordered_map<Key, char, KeyHash> dead;
    std::unordered_map<Key, BigInt, KeyHash> count_memo;

    std::vector<Placement> trail;

    Searcher(const Library* lib, const PieceMultiset* ms, Symmetry sym, int n_, int m_, SearchBudget& b) {
        n = n_;
        m = m_;
        if (n < 1 || m < 0) throw std::invalid_argument("search: board must have n >= 1, m >= 0");
        total = n * m;
        budget = &b;
        if (lib) {
            orients = library_orientations(*lib, n, m);
        } else {
            std::vector<Polyomino> classes;
            for (const auto& [shape, k] : ms->counts) {
                classes.push_back(shape);
                counts.push_back(k);
            }
            use_counts = true;
            orients = class_orientations(classes, sym, n, m);
        }
        grid.assign(static_cast<size_t>(total), 0);
        int wmax = 1;
        for (const Oriented& o : orients) wmax = std::max(wmax, o.width);
        window_cells = n * std::min(wmax, std::max(m, 1));
        memo_on = window_cells <= kMaxWindowBits;
    }

    bool fits(const Oriented& o, int x, int y) const {
        for (Cell r : o.rel) {
            int cx = x + r.x, cy = y + r.y;
            if (cx >= m || cy < 0 || cy >= n) return false;
            if (grid[static_cast<size_t>(cx) * n + cy]) return false;
        }
        return true;
    }

    void set_cells(const Oriented& o, int x, int y, char v) {
        for (Cell r : o.rel) grid[static_cast<size_t>(x + r.x) * n + (y + r.y)] = v;
    }

    int advance(int pos) const {
        while (pos < total && grid[static_cast<size_t>(pos)]) ++pos;
        return pos;
    }

    Key make_key(int pos) const {
        Key k;
        k.reserve(2 + window_cells / 64 + counts.size());
        k.push_back(static_cast<std::uint64_t>(pos));
        std::uint64_t word = 0;
        int bit = 0;
        for (int q = pos + 1; q < std::min(pos + 1 + window_cells, total); ++q) {
            if (grid[static_cast<size_t>(q)]) word |= 1ull << bit;
            if (++bit == 64) {
                k.push_back(word);
                word = 0;
                bit = 0;
            }
        }
        if (bit) k.push_back(word);
        for (long long c : counts) k.push_back(static_cast<std::uint64_t>(c));
        return k;
    }

    void spend() {
        if (!budget->spend()) throw budget_blown{};
    }

    // Existence search; fills `trail` with a witness on success.
    bool exists(int pos) {
        pos = advance(pos);
        if (pos == total) return true;
        spend();
        Key k;
        if (memo_on) {
            k = make_key(pos);
            if (dead.contains(k)) return false;
        }
        const int x = pos / n, y = pos % n;
        for (const Oriented& o : orients) {
            if (use_counts && counts[static_cast<size_t>(o.cls)] == 0) continue;
            if (!fits(o, x, y)) continue;
            set_cells(o, x, y, 1);
            if (use_counts) --counts[static_cast<size_t>(o.cls)];
            trail.push_back({o.piece, o.transform, {x, y - o.anchor_y}});
            if (exists(pos + 1)) return true;
            trail.pop_back();
            if (use_counts) ++counts[static_cast<size_t>(o.cls)];
            set_cells(o, x, y, 0);
        }
        if (memo_on) dead.emplace(std::move(k), 1);
        return false;
    }

    BigInt count(int pos) {
        pos = advance(pos);
        if (pos == total) return 1;
        spend();
        Key k;
        if (memo_on) {
            k = make_key(pos);
            auto it = count_memo.find(k);
            if (it != count_memo.end()) return it->second;
        }
        const int x = pos / n, y = pos % n;
        BigInt sum = 0;
        for (const Oriented& o : orients) {
            if (!fits(o, x, y)) continue;
            set_cells(o, x, y, 1);
            sum += count(pos + 1);
            set_cells(o, x, y, 0);
        }
        if (memo_on) count_memo.emplace(std::move(k), sum);
        return sum;
    }

    // Visits every completion once; returns false if the visitor stopped.
    bool enumerate(int pos, const std::function<bool(const Tiling&)>& visit) {
        pos = advance(pos);
        if (pos == total) {
            Tiling t;
            t.n = n;
            t.m = m;
            t.placements = trail;
            return visit(t);
        }
        spend();
        const int x = pos / n, y = pos % n;
        for (const Oriented& o : orients) {
            if (use_counts && counts[static_cast<size_t>(o.cls)] == 0) continue;
            if (!fits(o, x, y)) continue;
            set_cells(o, x, y, 1);
            if (use_counts) --counts[static_cast<size_t>(o.cls)];
            trail.push_back({o.piece, o.transform, {x, y - o.anchor_y}});
            bool keep_going = enumerate(pos + 1, visit);
            trail.pop_back();
            if (use_counts) ++counts[static_cast<size_t>(o.cls)];
            set_cells(o, x, y, 0);
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

SearchStatus can_tile(const Library& lib, int n, int m, SearchBudget& budget) {
    try {
        Searcher s(&lib, nullptr, Symmetry::translation, n, m, budget);
        return s.exists(0) ? SearchStatus::yes : SearchStatus::no;
    } catch (const budget_blown&) {
        return SearchStatus::budget_exceeded;
    }
}

CountResult count_tilings(const Library& lib, int n, int m, SearchBudget& budget) {
    try {
        Searcher s(&lib, nullptr, Symmetry::translation, n, m, budget);
        return {SearchStatus::yes, s.count(0)};
    } catch (const budget_blown&) {
        return {SearchStatus::budget_exceeded, 0};
    }
}

TilingResult find_tiling(const Library& lib, int n, int m, SearchBudget& budget) {
    try {
        Searcher s(&lib, nullptr, Symmetry::translation, n, m, budget);
        if (!s.exists(0)) return {SearchStatus::no, std::nullopt};
        Tiling t;
        t.n = n;
        t.m = m;
        t.placements = std::move(s.trail);
        return {SearchStatus::yes, std::move(t)};
    } catch (const budget_blown&) {
        return {SearchStatus::budget_exceeded, std::nullopt};
    }
}

Library multiset_class_library(const PieceMultiset& ms) {
    std::vector<Polyomino> pieces;
    pieces.reserve(ms.counts.size());
    for (const auto& [shape, k] : ms.counts) pieces.push_back(shape);
    return make_library(std::move(pieces), TransformMode::fixed);
}

TilingResult tile_with_counts(const PieceMultiset& ms, int n, int m, Symmetry sym, SearchBudget& budget) {
    const PieceMultiset canon = coarsen(ms, sym);
    if (canon.total_area() != static_cast<long long>(n) * m) return {SearchStatus::no, std::nullopt};
    try {
        Searcher s(nullptr, &canon, sym, n, m, budget);
        if (!s.exists(0)) return {SearchStatus::no, std::nullopt};
        Tiling t;
        t.n = n;
        t.m = m;
        t.placements = std::move(s.trail);
        return {SearchStatus::yes, std::move(t)};
    } catch (const budget_blown&) {
        return {SearchStatus::budget_exceeded, std::nullopt};
    }
}

SearchStatus enumerate_tilings_with_counts(const PieceMultiset& ms, int n, int m, Symmetry sym,
                                           SearchBudget& budget, const std::function<bool(const Tiling&)>& visit) {
    const PieceMultiset canon = coarsen(ms, sym);
    if (canon.total_area() != static_cast<long long>(n) * m) return SearchStatus::no;
    try {
        Searcher s(nullptr, &canon, sym, n, m, budget);
        return s.enumerate(0, visit) ? SearchStatus::no : SearchStatus::yes;
    } catch (const budget_blown&) {
        return SearchStatus::budget_exceeded;
    }
}

namespace {

bool emit_multisets(const std::vector<Polyomino>& classes, const std::vector<long long>& caps, size_t idx,
                    long long remaining_area, PieceMultiset& current, const Library& closed, int n, int m,
                    SearchBudget& budget, const std::function<bool(const PieceMultiset&)>& visit, bool& stopped) {
    if (idx == classes.size()) {
        if (remaining_area != 0) return true;
        TilingResult r = tile_with_counts(current, n, m, mode_symmetry(closed.mode), budget);
        if (r.status == SearchStatus::budget_exceeded) throw budget_blown{};
        if (r.status == SearchStatus::yes && !visit(current)) {
            stopped = true;
            return false;
        }
        return true;
    }
    const long long area = classes[idx].area();
    long long hi = std::min(caps[idx], remaining_area / area);
    for (long long c = hi; c >= 0; --c) {
        if (c > 0) current.add(classes[idx], c);
        bool keep_going = emit_multisets(classes, caps, idx + 1, remaining_area - c * area, current, closed, n, m,
                                         budget, visit, stopped);
        if (c > 0) current.add(classes[idx], -c);
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

SearchStatus enumerate_multisets(const Library& lib, int n, int m, SearchBudget& budget,
                                 const std::function<bool(const PieceMultiset&)>& visit) {
    if (n < 1 || m < 0) throw std::invalid_argument("enumerate_multisets: board must have n >= 1, m >= 0");
    const Library closed = close_library(lib);
    const Symmetry sym = mode_symmetry(closed.mode);
    std::set<Polyomino> class_set;
    for (const Polyomino& p : closed.pieces) class_set.insert(canonical_shape(p, sym));
    std::vector<Polyomino> classes(class_set.begin(), class_set.end());

    const long long board = static_cast<long long>(n) * m;
    std::vector<long long> caps(classes.size(), 0);
    for (size_t k = 0; k < classes.size(); ++k) {
        bool usable = false;
        for (int t : symmetry_transforms(sym)) {
            Polyomino shape = transformed(classes[k], t);
            if (shape.height() <= n && shape.width() <= m) usable = true;
        }
        caps[k] = usable ? board / classes[k].area() : 0;
    }

    PieceMultiset current;
    bool stopped = false;
    try {
        emit_multisets(classes, caps, 0, board, current, closed, n, m, budget, visit, stopped);
    } catch (const budget_blown&) {
        return SearchStatus::budget_exceeded;
    }
    return stopped ? SearchStatus::yes : SearchStatus::no;
}

}  // namespace subtile
