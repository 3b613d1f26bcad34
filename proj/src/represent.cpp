#include "subtile/represent.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace subtile {
namespace {

struct budget_blown {};

}  // namespace

void check_row_assignment(const RowAssignment& pieces, int n) {
    if (n < 1) throw std::invalid_argument("row assignment: n must be >= 1");
    for (const RowAssignedPiece& p : pieces) {
        if (p.height < 1 || p.width < 1) throw std::invalid_argument("row assignment: piece dimensions must be positive");
        if (p.rows.len != p.height) throw std::invalid_argument("row assignment: interval length must equal piece height");
        if (p.rows.start < 1 || p.rows.end() > n) throw std::invalid_argument("row assignment: interval outside [1, n]");
    }
}

std::optional<int> check_rep_equations(const RowAssignment& pieces, int n) {
    check_row_assignment(pieces, n);
    std::vector<long long> row_sum(static_cast<size_t>(n), 0);
    long long area = 0;
    for (const RowAssignedPiece& p : pieces) {
        area += static_cast<long long>(p.height) * p.width;
        for (int r = p.rows.start; r <= p.rows.end(); ++r) row_sum[static_cast<size_t>(r - 1)] += p.width;
    }
    const long long m = row_sum[0];
    for (long long s : row_sum)
        if (s != m) return std::nullopt;
    if (area != m * n) return std::nullopt;  // implied by equal rows; kept as a guard
    return static_cast<int>(m);
}

Library row_assignment_library(const RowAssignment& pieces) {
    std::vector<Polyomino> rects;
    for (const RowAssignedPiece& p : pieces) rects.push_back(Polyomino::rect(p.height, p.width));
    return make_library(std::move(rects), TransformMode::fixed);
}

namespace {

// Identical row-assigned pieces collapsed into one branching group.
struct AssignGroup {
    RowAssignedPiece piece;
    int lib_index = 0;
    long long count = 0;
};

struct RowAssignSearcher {
    int n = 1, m = 0;
    std::vector<AssignGroup> groups;
    std::vector<char> grid;  // x*n + y
    SearchBudget* budget = nullptr;
    std::vector<Placement> trail;

    bool fits(const AssignGroup& g, int x) const {
        if (x + g.piece.width > m) return false;
        for (int cx = x; cx < x + g.piece.width; ++cx)
            for (int cy = g.piece.rows.start - 1; cy <= g.piece.rows.end() - 1; ++cy)
                if (grid[static_cast<size_t>(cx) * n + cy]) return false;
        return true;
    }

    void set_cells(const AssignGroup& g, int x, char v) {
        for (int cx = x; cx < x + g.piece.width; ++cx)
            for (int cy = g.piece.rows.start - 1; cy <= g.piece.rows.end() - 1; ++cy)
                grid[static_cast<size_t>(cx) * n + cy] = v;
    }

    bool fill(int pos) {
        const int total = n * m;
        while (pos < total && grid[static_cast<size_t>(pos)]) ++pos;
        if (pos == total) return true;
        if (!budget->spend()) throw budget_blown{};
        const int x = pos / n, y = pos % n;
        for (AssignGroup& g : groups) {
            if (g.count == 0) continue;
            if (g.piece.rows.start - 1 != y) continue;  // piece's bottom row must land on the sweep cell
            if (!fits(g, x)) continue;
            set_cells(g, x, 1);
            --g.count;
            trail.push_back({g.lib_index, 0, {x, y}});
            if (fill(pos + 1)) return true;
            trail.pop_back();
            ++g.count;
            set_cells(g, x, 0);
        }
        return false;
    }
};

}  // namespace

TilingResult tile_with_row_assignments(const RowAssignment& pieces, int n, int m, SearchBudget& budget) {
    std::optional<int> expect = check_rep_equations(pieces, n);
    if (!expect || *expect != m)
        throw std::invalid_argument("tile_with_row_assignments: assignment does not satisfy the width equations for m");

    const Library lib = row_assignment_library(pieces);
    RowAssignSearcher s;
    s.n = n;
    s.m = m;
    s.budget = &budget;
    s.grid.assign(static_cast<size_t>(n) * m, 0);
    std::map<RowAssignedPiece, long long> grouped;
    for (const RowAssignedPiece& p : pieces) ++grouped[p];
    for (const auto& [p, k] : grouped) {
        AssignGroup g;
        g.piece = p;
        g.count = k;
        const Polyomino rect = Polyomino::rect(p.height, p.width);
        g.lib_index = static_cast<int>(std::find(lib.pieces.begin(), lib.pieces.end(), rect) - lib.pieces.begin());
        s.groups.push_back(g);
    }

    try {
        if (!s.fill(0)) return {SearchStatus::no, std::nullopt};
    } catch (const budget_blown&) {
        return {SearchStatus::budget_exceeded, std::nullopt};
    }
    Tiling t;
    t.n = n;
    t.m = m;
    t.placements = std::move(s.trail);
    return {SearchStatus::yes, std::move(t)};
}

long long RowConvexRegion::area() const {
    return std::accumulate(width.begin(), width.end(), 0ll);
}

bool RowConvexRegion::contains(Cell c) const {
    if (c.y < 0 || c.y >= n) return false;
    return c.x >= x0[static_cast<size_t>(c.y)] && c.x < x0[static_cast<size_t>(c.y)] + width[static_cast<size_t>(c.y)];
}

RegionTiling tile_row_convex(const RowConvexRegion& region, const RowAssignment& pieces) {
    if (region.n < 1 || region.x0.size() != static_cast<size_t>(region.n) ||
        region.width.size() != static_cast<size_t>(region.n))
        throw std::invalid_argument("tile_row_convex: malformed region");
    check_row_assignment(pieces, region.n);

    std::vector<std::vector<int>> per_row(static_cast<size_t>(region.n));
    for (const RowAssignedPiece& p : pieces) {
        if (p.height != 1) throw std::invalid_argument("tile_row_convex: pieces must have unit height");
        per_row[static_cast<size_t>(p.rows.start - 1)].push_back(p.width);
    }
    for (int r = 0; r < region.n; ++r) {
        long long sum = std::accumulate(per_row[static_cast<size_t>(r)].begin(), per_row[static_cast<size_t>(r)].end(), 0ll);
        if (sum != region.width[static_cast<size_t>(r)])
            throw std::invalid_argument("tile_row_convex: row " + std::to_string(r + 1) + " widths sum to " +
                                        std::to_string(sum) + ", region row has width " +
                                        std::to_string(region.width[static_cast<size_t>(r)]));
    }

    RegionTiling out;
    out.region = region;
    std::vector<Polyomino> rects;
    for (const RowAssignedPiece& p : pieces) rects.push_back(Polyomino::rect(1, p.width));
    out.pieces = make_library(std::move(rects), TransformMode::fixed);
    for (int r = 0; r < region.n; ++r) {
        std::vector<int>& widths = per_row[static_cast<size_t>(r)];
        std::sort(widths.begin(), widths.end());
        int x = region.x0[static_cast<size_t>(r)];
        for (int w : widths) {
            const Polyomino rect = Polyomino::rect(1, w);
            int idx = static_cast<int>(std::find(out.pieces.pieces.begin(), out.pieces.pieces.end(), rect) -
                                       out.pieces.pieces.begin());
            out.placements.push_back({idx, 0, {x, r}});
            x += w;
        }
    }
    return out;
}

TilingViolations validate_region_tiling(const RegionTiling& rt) {
    TilingViolations v;
    std::map<Cell, int> cover;
    for (const Placement& pl : rt.placements)
        for (Cell c : placed_cells(rt.pieces, pl)) {
            if (!rt.region.contains(c)) {
                v.out_of_bounds.push_back(c);
                continue;
            }
            ++cover[c];
        }
    for (int r = 0; r < rt.region.n; ++r)
        for (int x = rt.region.x0[static_cast<size_t>(r)];
             x < rt.region.x0[static_cast<size_t>(r)] + rt.region.width[static_cast<size_t>(r)]; ++x) {
            auto it = cover.find({x, r});
            if (it == cover.end())
                v.uncovered.push_back({x, r});
            else if (it->second > 1)
                v.overlapped.push_back({x, r});
        }
    return v;
}

std::optional<RepJustification> rep_sufficient(const Library& lib, int n) {
    if (n < 1) throw std::invalid_argument("rep_sufficient: n must be >= 1");
    for (const Polyomino& p : lib.pieces)
        if (!p.is_rectangle()) throw std::invalid_argument("rep_sufficient: library must contain rectangles only");

    if (n <= 3) return RepJustification{RepRule::n_at_most_3, "every set of rectangles is n-representable for n <= 3"};

    bool heights_ok = true;
    for (const Polyomino& p : lib.pieces)
        if (p.height() != 1 && p.height() < n - 1) heights_ok = false;
    if (heights_ok)
        return RepJustification{RepRule::heights_unit_or_near_n, "all piece heights are 1 or at least n-1"};

    if (n == 4) {
        std::set<int> widths2;
        for (const Polyomino& p : lib.pieces)
            if (p.height() == 2) widths2.insert(p.width());
        if (widths2.size() <= 1)
            return RepJustification{RepRule::n4_equal_width_height2, "n = 4 and all height-2 pieces share one width"};
    }
    return std::nullopt;
}

namespace {

struct Generator {
    RowAssignedPiece piece;
    long long cap = 0;
};

struct CounterexampleSearch {
    int n = 1, m = 0;
    long long count_max = 0;
    std::vector<Generator> gens;
    std::vector<int> suffix_rows;  // bitmask of rows coverable by gens[idx..]
    SearchBudget* budget = nullptr;

    std::vector<long long> chosen;
    std::vector<long long> row_sum;

    std::optional<RepCounterexample> run(size_t idx, long long pieces_left) {
        if (!budget->spend()) throw budget_blown{};
        // Rows no later generator can touch must already be full.
        const int reachable = idx < gens.size() ? suffix_rows[idx] : 0;
        for (int r = 0; r < n; ++r)
            if (row_sum[static_cast<size_t>(r)] < m && !(reachable >> r & 1)) return std::nullopt;
        if (idx == gens.size()) {
            RowAssignment pieces;
            for (size_t i = 0; i < gens.size(); ++i)
                for (long long c = 0; c < chosen[i]; ++c) pieces.push_back(gens[i].piece);
            TilingResult r = tile_with_row_assignments(pieces, n, m, *budget);
            if (r.status == SearchStatus::budget_exceeded) throw budget_blown{};
            if (r.status == SearchStatus::no) return RepCounterexample{std::move(pieces), m};
            return std::nullopt;
        }
        const Generator& g = gens[idx];
        long long hi = std::min({g.cap, pieces_left});
        for (int r = g.piece.rows.start; r <= g.piece.rows.end(); ++r)
            hi = std::min(hi, (m - row_sum[static_cast<size_t>(r - 1)]) / g.piece.width);
        for (long long c = 0; c <= hi; ++c) {
            if (c > 0)
                for (int r = g.piece.rows.start; r <= g.piece.rows.end(); ++r)
                    row_sum[static_cast<size_t>(r - 1)] += g.piece.width;
            chosen[idx] = c;
            if (auto found = run(idx + 1, pieces_left - c)) return found;
        }
        for (int r = g.piece.rows.start; r <= g.piece.rows.end(); ++r)
            row_sum[static_cast<size_t>(r - 1)] -= hi * g.piece.width;
        chosen[idx] = 0;
        return std::nullopt;
    }
};

}  // namespace

RepCounterexampleResult find_rep_counterexample(const Library& lib, int n, int m_max, long long count_max,
                                                SearchBudget& budget) {
    if (n < 1 || m_max < 1 || count_max < 1)
        throw std::invalid_argument("find_rep_counterexample: n, m_max, count_max must be >= 1");
    std::vector<Polyomino> rects;
    std::set<Polyomino> seen;
    for (const Polyomino& p : lib.pieces) {
        if (!p.is_rectangle()) throw std::invalid_argument("find_rep_counterexample: rectangles only");
        if (p.height() <= n && seen.insert(p).second) rects.push_back(p);
    }

    for (int m = 1; m <= m_max; ++m) {
        CounterexampleSearch cs;
        cs.n = n;
        cs.m = m;
        cs.count_max = count_max;
        cs.budget = &budget;
        for (const Polyomino& p : rects) {
            if (p.width() > m) continue;
            for (int start = 1; start + p.height() - 1 <= n; ++start) {
                Generator g;
                g.piece = {p.height(), p.width(), {start, p.height()}};
                g.cap = count_max;
                cs.gens.push_back(g);
            }
        }
        cs.suffix_rows.assign(cs.gens.size(), 0);
        int mask = 0;
        for (size_t i = cs.gens.size(); i-- > 0;) {
            for (int r = cs.gens[i].piece.rows.start; r <= cs.gens[i].piece.rows.end(); ++r) mask |= 1 << (r - 1);
            cs.suffix_rows[i] = mask;
        }
        cs.chosen.assign(cs.gens.size(), 0);
        cs.row_sum.assign(static_cast<size_t>(n), 0);
        try {
            if (auto found = cs.run(0, count_max)) return {SearchStatus::yes, std::move(found)};
        } catch (const budget_blown&) {
            return {SearchStatus::budget_exceeded, std::nullopt};
        }
    }
    return {SearchStatus::no, std::nullopt};
}

namespace {

// Places `piece` with its left edge at x, bottom row rows.start; appends to
// placements and paints the coverage map, throwing on overlap/overflow.
struct ArrangementBuilder {
    int n, m;
    Library lib;
    std::vector<Placement> placements;
    std::vector<char> cover;  // x*n + y

    ArrangementBuilder(const RowAssignment& pieces, int n_, int m_) : n(n_), m(m_) {
        lib = row_assignment_library(pieces);
        cover.assign(static_cast<size_t>(n) * std::max(m, 1), 0);
    }

    void place(const RowAssignedPiece& p, int x) {
        if (x < 0 || x + p.width > m) throw std::invalid_argument("staircase_arrangement: pieces do not fit in the width");
        const Polyomino rect = Polyomino::rect(p.height, p.width);
        int idx = static_cast<int>(std::find(lib.pieces.begin(), lib.pieces.end(), rect) - lib.pieces.begin());
        placements.push_back({idx, 0, {x, p.rows.start - 1}});
        for (int cx = x; cx < x + p.width; ++cx)
            for (int cy = p.rows.start - 1; cy <= p.rows.end() - 1; ++cy) {
                char& cell = cover[static_cast<size_t>(cx) * n + cy];
                if (cell) throw std::invalid_argument("staircase_arrangement: pieces do not fit (overlap)");
                cell = 1;
            }
    }

    RowConvexRegion leftover() const {
        RowConvexRegion region;
        region.n = n;
        region.x0.assign(static_cast<size_t>(n), 0);
        region.width.assign(static_cast<size_t>(n), 0);
        for (int y = 0; y < n; ++y) {
            int first = -1, last = -1;
            int free_cells = 0;
            for (int x = 0; x < m; ++x)
                if (!cover[static_cast<size_t>(x) * n + y]) {
                    if (first < 0) first = x;
                    last = x;
                    ++free_cells;
                }
            if (first < 0) continue;
            if (free_cells != last - first + 1)
                throw std::logic_error("staircase_arrangement: leftover row is not contiguous");
            region.x0[static_cast<size_t>(y)] = first;
            region.width[static_cast<size_t>(y)] = free_cells;
        }
        return region;
    }
};

}  // namespace

StaircaseArrangement staircase_arrangement(const RowAssignment& tall_pieces, int n, int m) {
    check_row_assignment(tall_pieces, n);
    if (m < 0) throw std::invalid_argument("staircase_arrangement: m must be >= 0");
    for (const RowAssignedPiece& p : tall_pieces)
        if (p.height < 2) throw std::invalid_argument("staircase_arrangement: unit-height pieces belong to the filler");

    bool near_n = true;
    for (const RowAssignedPiece& p : tall_pieces)
        if (p.height < n - 1) near_n = false;

    ArrangementBuilder b(tall_pieces, n, m);

    if (near_n) {
        // Height-n block, height-(n-1) bottom block, height-(n-1) top block
        // flush right; the gap between them is the row-convex leftover.
        std::vector<RowAssignedPiece> full, bottom, top;
        for (const RowAssignedPiece& p : tall_pieces)
            (p.height == n ? full : (p.rows.start == 1 ? bottom : top)).push_back(p);
        int x = 0;
        for (const RowAssignedPiece& p : full) {
            b.place(p, x);
            x += p.width;
        }
        for (const RowAssignedPiece& p : bottom) {
            b.place(p, x);
            x += p.width;
        }
        int r = m;
        for (const RowAssignedPiece& p : top) {
            r -= p.width;
            b.place(p, r);
        }
        StaircaseArrangement out;
        out.pieces = b.lib;
        out.placements = std::move(b.placements);
        out.leftover = b.leftover();
        return out;
    }

    if (n != 4) throw std::invalid_argument("staircase_arrangement: unsupported height profile");
    std::vector<RowAssignedPiece> g4, g3b, g3t, g2b, g2m, g2t;
    std::set<int> w2;
    for (const RowAssignedPiece& p : tall_pieces) {
        if (p.height == 4) g4.push_back(p);
        else if (p.height == 3) (p.rows.start == 1 ? g3b : g3t).push_back(p);
        else if (p.height == 2) {
            w2.insert(p.width);
            if (p.rows.start == 1) g2b.push_back(p);
            else if (p.rows.start == 2) g2m.push_back(p);
            else g2t.push_back(p);
        } else {
            throw std::invalid_argument("staircase_arrangement: unsupported height profile");
        }
    }
    if (w2.size() > 1)
        throw std::invalid_argument("staircase_arrangement: n = 4 layout needs equal-width height-2 pieces");

    // Both pictured n=4 layouts share the left prefix (full blocks, stacked
    // bottom/top pairs, height-3 bottom block); they differ in whether the
    // excess height-2 pieces sit bottom-left or top-right.
    const size_t pairs = std::min(g2b.size(), g2t.size());
    int x = 0;
    for (const RowAssignedPiece& p : g4) {
        b.place(p, x);
        x += p.width;
    }
    for (size_t i = 0; i < pairs; ++i) {
        b.place(g2b[i], x);
        b.place(g2t[i], x);
        x += g2b[i].width;
    }
    for (const RowAssignedPiece& p : g3b) {
        b.place(p, x);
        x += p.width;
    }
    int r = m;
    for (const RowAssignedPiece& p : g3t) {
        r -= p.width;
        b.place(p, r);
    }
    if (g2b.size() >= g2t.size()) {
        // First layout: leftover bottom pieces continue the left run, middle
        // pieces sit right, just before the top height-3 block.
        for (size_t i = pairs; i < g2b.size(); ++i) {
            b.place(g2b[i], x);
            x += g2b[i].width;
        }
        for (const RowAssignedPiece& p : g2m) {
            r -= p.width;
            b.place(p, r);
        }
    } else {
        // Second layout: middle pieces continue the left run, excess top
        // pieces sit right, just before the top height-3 block.
        for (const RowAssignedPiece& p : g2m) {
            b.place(p, x);
            x += p.width;
        }
        for (size_t i = pairs; i < g2t.size(); ++i) {
            r -= g2t[i].width;
            b.place(g2t[i], r);
        }
    }

    StaircaseArrangement out;
    out.pieces = b.lib;
    out.placements = std::move(b.placements);
    out.leftover = b.leftover();
    return out;
}

}  // namespace subtile
