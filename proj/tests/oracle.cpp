#include "oracle.hpp"

#include <algorithm>
#include <set>

namespace oracle {

using subtile::Cell;
using subtile::Library;
using subtile::PieceMultiset;
using subtile::Polyomino;
using subtile::Symmetry;

namespace {

using Grid = std::vector<std::vector<bool>>;  // grid[y][x]

// Shape cells re-anchored at the shape's first cell in row-major order, so a
// placement is pinned by the first empty board cell it covers.
std::vector<std::vector<Cell>> anchored(const std::vector<Polyomino>& shapes) {
    std::vector<std::vector<Cell>> out;
    for (const Polyomino& s : shapes) {
        std::vector<Cell> cells = s.cells();  // already row-major sorted
        const Cell base = cells.front();
        for (Cell& c : cells) c = {c.x - base.x, c.y - base.y};
        out.push_back(std::move(cells));
    }
    return out;
}

bool find_first_empty(const Grid& g, int n, int m, int* fx, int* fy) {
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < m; ++x)
            if (!g[static_cast<size_t>(y)][static_cast<size_t>(x)]) {
                *fx = x;
                *fy = y;
                return true;
            }
    return false;
}

bool try_place(Grid& g, int n, int m, const std::vector<Cell>& rel, int x, int y, bool value) {
    if (!value) {
        for (Cell c : rel) g[static_cast<size_t>(y + c.y)][static_cast<size_t>(x + c.x)] = false;
        return true;
    }
    for (Cell c : rel) {
        const int cx = x + c.x, cy = y + c.y;
        if (cx < 0 || cx >= m || cy < 0 || cy >= n) return false;
        if (g[static_cast<size_t>(cy)][static_cast<size_t>(cx)]) return false;
    }
    for (Cell c : rel) g[static_cast<size_t>(y + c.y)][static_cast<size_t>(x + c.x)] = true;
    return true;
}

long long count_rec(Grid& g, int n, int m, const std::vector<std::vector<Cell>>& rel) {
    int x, y;
    if (!find_first_empty(g, n, m, &x, &y)) return 1;
    long long total = 0;
    for (const std::vector<Cell>& r : rel) {
        if (!try_place(g, n, m, r, x, y, true)) continue;
        total += count_rec(g, n, m, rel);
        try_place(g, n, m, r, x, y, false);
    }
    return total;
}

bool fill_rec(Grid& g, int n, int m, const std::vector<std::vector<Cell>>& rel, std::vector<long long>* caps,
              const std::vector<int>& cls) {
    int x, y;
    if (!find_first_empty(g, n, m, &x, &y)) return true;
    for (size_t i = 0; i < rel.size(); ++i) {
        if (caps && (*caps)[static_cast<size_t>(cls[i])] == 0) continue;
        if (!try_place(g, n, m, rel[i], x, y, true)) continue;
        if (caps) --(*caps)[static_cast<size_t>(cls[i])];
        if (fill_rec(g, n, m, rel, caps, cls)) return true;
        if (caps) ++(*caps)[static_cast<size_t>(cls[i])];
        try_place(g, n, m, rel[i], x, y, false);
    }
    return false;
}

// Enumerates complete left-side fills, reporting the class usage of each.
template <typename Fn>
bool left_fills(Grid& g, int n, int m, const std::vector<std::vector<Cell>>& rel, std::vector<long long>& caps,
                const std::vector<int>& cls, std::vector<long long>& used, Fn&& done) {
    int x, y;
    if (!find_first_empty(g, n, m, &x, &y)) return done(used);
    for (size_t i = 0; i < rel.size(); ++i) {
        const int k = cls[i];
        if (caps[static_cast<size_t>(k)] == 0) continue;
        if (!try_place(g, n, m, rel[i], x, y, true)) continue;
        --caps[static_cast<size_t>(k)];
        ++used[static_cast<size_t>(k)];
        const bool keep_going = left_fills(g, n, m, rel, caps, cls, used, done);
        --used[static_cast<size_t>(k)];
        ++caps[static_cast<size_t>(k)];
        try_place(g, n, m, rel[i], x, y, false);
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

std::vector<Polyomino> expand_shapes(const Library& lib) {
    std::set<Polyomino> all;
    for (const Polyomino& p : lib.pieces)
        for (const Polyomino& q : subtile::transforms(p, lib.mode)) all.insert(q);
    return {all.begin(), all.end()};
}

long long count_tilings(const std::vector<Polyomino>& shapes, int n, int m) {
    std::vector<Polyomino> fitting;
    for (const Polyomino& s : shapes)
        if (s.height() <= n && s.width() <= m) fitting.push_back(s);
    Grid g(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(m), false));
    return count_rec(g, n, m, anchored(fitting));
}

bool can_tile(const std::vector<Polyomino>& shapes, int n, int m) {
    std::vector<Polyomino> fitting;
    for (const Polyomino& s : shapes)
        if (s.height() <= n && s.width() <= m) fitting.push_back(s);
    Grid g(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(m), false));
    const auto rel = anchored(fitting);
    std::vector<int> cls(rel.size(), 0);
    return fill_rec(g, n, m, rel, nullptr, cls);
}

bool has_subtiling(const PieceMultiset& T, int n, int m, Symmetry sym) {
    const PieceMultiset canon = subtile::coarsen(T, sym);
    std::vector<Polyomino> class_shapes;
    std::vector<long long> counts;
    for (const auto& [shape, k] : canon.counts) {
        class_shapes.push_back(shape);
        counts.push_back(k);
    }
    std::vector<Polyomino> shapes;
    std::vector<int> cls;
    for (size_t k = 0; k < class_shapes.size(); ++k) {
        std::set<Polyomino> orbit;
        for (int t : subtile::symmetry_transforms(sym)) orbit.insert(subtile::transformed(class_shapes[k], t));
        for (const Polyomino& s : orbit) {
            shapes.push_back(s);
            cls.push_back(static_cast<int>(k));
        }
    }
    const auto rel = anchored(shapes);

    for (int m_left = 1; m_left < m; ++m_left) {
        Grid left(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(m_left), false));
        std::vector<long long> caps = counts;
        std::vector<long long> used(counts.size(), 0);
        bool found = false;
        left_fills(left, n, m_left, rel, caps, cls, used, [&](const std::vector<long long>& u) {
            std::vector<long long> rest(counts.size());
            for (size_t i = 0; i < rest.size(); ++i) rest[i] = counts[i] - u[static_cast<size_t>(i)];
            Grid right(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(m - m_left), false));
            if (fill_rec(right, n, m - m_left, rel, &rest, cls)) {
                found = true;
                return false;  // stop enumerating
            }
            return true;
        });
        if (found) return true;
    }
    return false;
}

}  // namespace oracle
