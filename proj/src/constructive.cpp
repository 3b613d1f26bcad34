#include "subtile/constructive.hpp"

#include <algorithm>
#include <numeric>

namespace subtile {
namespace {

std::optional<std::pair<int, int>> nonneg_combo(int target, int a, int b) {
    for (int x = 0; x * a <= target; ++x)
        if ((target - x * a) % b == 0) return std::make_pair(x, (target - x * a) / b);
    return std::nullopt;
}

}  // namespace

RectPackVerdict rect_tiles(int a, int b, int n, int m) {
    if (a < 1 || b < 1 || n < 1 || m < 1) throw std::invalid_argument("rect_tiles: all dimensions must be >= 1");
    RectPackVerdict v;
    v.divisibility_ok = (n % a == 0 || m % a == 0) && (n % b == 0 || m % b == 0);
    v.n_combo = nonneg_combo(n, a, b);
    v.m_combo = nonneg_combo(m, a, b);
    v.tiles = v.divisibility_ok && v.n_combo && v.m_combo;
    return v;
}

std::optional<Tiling> rect_tiling_witness(int a, int b, int n, int m) {
    const RectPackVerdict v = rect_tiles(a, b, n, m);
    if (!v.tiles) return std::nullopt;
    Tiling t;
    t.n = n;
    t.m = m;
    // transform 0 places the piece a tall, b wide; transform 1 swaps.
    const auto upright = [&](int x, int y) { t.placements.push_back({0, 0, {x, y}}); };
    const auto turned = [&](int x, int y) { t.placements.push_back({0, 1, {x, y}}); };

    if (n % a == 0 && m % b == 0) {
        for (int y = 0; y < n; y += a)
            for (int x = 0; x < m; x += b) upright(x, y);
    } else if (n % b == 0 && m % a == 0) {
        for (int y = 0; y < n; y += b)
            for (int x = 0; x < m; x += a) turned(x, y);
    } else if (n % a == 0 && n % b == 0) {
        // Column strips of widths a and b from the combination m = a*x + b*y.
        int x = 0;
        for (int i = 0; i < v.m_combo->first; ++i, x += a)
            for (int y = 0; y < n; y += b) turned(x, y);
        for (int i = 0; i < v.m_combo->second; ++i, x += b)
            for (int y = 0; y < n; y += a) upright(x, y);
    } else {
        // Row strips of heights a and b from n = a*x + b*y.
        int y = 0;
        for (int i = 0; i < v.n_combo->first; ++i, y += a)
            for (int x = 0; x < m; x += b) upright(x, y);
        for (int i = 0; i < v.n_combo->second; ++i, y += b)
            for (int x = 0; x < m; x += a) turned(x, y);
    }
    return t;
}

SingleRectBetaReport single_rect_beta(int a, int b, int n, SearchBudget& budget, int m_max) {
    if (a < 1 || b < 1 || n < 1) throw std::invalid_argument("single_rect_beta: a, b, n must be >= 1");
    SingleRectBetaReport report;
    report.a = a;
    report.b = b;
    report.n = n;
    const bool da = n % a == 0, db = n % b == 0;
    if (!da && !db) {
        report.kase = SingleRectCase::divides_neither;
        report.paper_value = 2ll * a * b;
    } else if (da != db) {
        report.kase = SingleRectCase::divides_exactly_one;
        report.paper_value = 2ll * (da ? b : a);
    } else if (n % (a * b) == 0) {
        report.kase = SingleRectCase::ab_divides_n;
    } else {
        report.kase = SingleRectCase::both_divide_ab_does_not;
    }

    report.m_max = m_max > 0 ? m_max : 2 * a * b;
    const Library lib = make_library({Polyomino::rect(a, b)}, TransformMode::rotations_and_reflections);
    BetaReport beta = beta_empirical(lib, n, report.m_max, RearrangeMode::rotations, budget);
    report.empirical_value = beta.largest_counterexample_m;
    report.exhaustive = beta.exhaustive;
    report.agreement = report.paper_value.has_value() && *report.paper_value == report.empirical_value;
    return report;
}

std::optional<TallProfile> tall_precondition(const Library& lib, int n) {
    if (n < 1) throw std::invalid_argument("tall_precondition: n must be >= 1");
    for (const Polyomino& p : lib.pieces)
        if (!p.is_rectangle()) throw std::invalid_argument("tall_precondition: rectangles only");
    if (lib.pieces.empty()) return std::nullopt;

    TallProfile profile;
    std::vector<Polyomino> units;
    for (const Polyomino& p : lib.pieces) {
        if (2 * p.height() > n && p.height() <= n)
            profile.tall.push_back(p);
        else if (p.height() == 1)
            units.push_back(p);
        else
            return std::nullopt;
    }
    if (units.size() > 1) return std::nullopt;
    if (profile.tall.empty()) return std::nullopt;

    profile.widths_gcd = 0;
    for (const Polyomino& p : profile.tall) {
        profile.widths_gcd = std::gcd(profile.widths_gcd, static_cast<long long>(p.width()));
        profile.max_tall_width = std::max(profile.max_tall_width, p.width());
    }
    if (!units.empty()) {
        if (profile.widths_gcd % units.front().width() != 0) return std::nullopt;
        profile.unit_piece = units.front();
    }
    std::sort(profile.tall.begin(), profile.tall.end(), [](const Polyomino& x, const Polyomino& y) {
        return x.height() != y.height() ? x.height() > y.height() : x < y;
    });
    return profile;
}

Tiling tall_rearrange(const PieceMultiset& T, const Library& lib, int n, int m) {
    std::optional<TallProfile> profile = tall_precondition(lib, n);
    if (!profile) throw std::invalid_argument("tall_rearrange: library fails the tall-rectangle hypotheses");
    if (m < 0) throw std::invalid_argument("tall_rearrange: m must be >= 0");

    const Symmetry sym = mode_symmetry(lib.mode);
    const auto lib_index = [&](const Polyomino& shape) {
        for (size_t i = 0; i < lib.pieces.size(); ++i)
            if (lib.pieces[i] == shape) return static_cast<int>(i);
        throw std::logic_error("tall_rearrange: shape missing from library");
    };

    // Map multiset classes back onto the library's own orientations.
    std::vector<std::pair<Polyomino, long long>> tall_counts;
    long long unit_count = 0;
    for (const auto& [key, k] : coarsen(T, sym).counts) {
        bool matched = false;
        for (const Polyomino& p : profile->tall)
            if (canonical_shape(p, sym) == key) {
                tall_counts.emplace_back(p, k);
                matched = true;
                break;
            }
        if (matched) continue;
        if (profile->unit_piece && canonical_shape(*profile->unit_piece, sym) == key) {
            unit_count = k;
            continue;
        }
        throw std::invalid_argument("tall_rearrange: multiset uses a piece outside the library");
    }
    std::sort(tall_counts.begin(), tall_counts.end(), [](const auto& x, const auto& y) {
        return x.first.height() != y.first.height() ? x.first.height() > y.first.height() : x.first < y.first;
    });

    Tiling t;
    t.n = n;
    t.m = m;

    // Tall blocks by descending height from the left; no two talls can share
    // a column, so their widths must fit inside m.
    long long tall_width = 0;
    for (const auto& [p, k] : tall_counts) tall_width += k * p.width();
    if (tall_width > m) throw std::invalid_argument("tall_rearrange: multiset does not tile the rectangle");
    int x = 0;
    for (const auto& [p, k] : tall_counts)
        for (long long i = 0; i < k; ++i) {
            t.placements.push_back({lib_index(p), 0, {x, 0}});
            x += p.width();
        }

    // Unit-height fill: for each row, the columns not reached by the tall
    // prefix form one segment whose width the unit width divides.
    const int unit_w = profile->unit_piece ? profile->unit_piece->width() : 0;
    long long fill_used = 0;
    for (int y = 0; y < n; ++y) {
        int cum = 0;  // prefix of talls with height > y; heights descend with x
        for (const auto& [p, k] : tall_counts)
            if (p.height() > y) cum += static_cast<int>(k) * p.width();
        const int free_w = m - cum;
        if (free_w == 0) continue;
        if (unit_w == 0 || free_w % unit_w != 0)
            throw std::invalid_argument("tall_rearrange: multiset does not tile the rectangle");
        for (int fx = cum; fx < m; fx += unit_w) {
            t.placements.push_back({lib_index(*profile->unit_piece), 0, {fx, y}});
            ++fill_used;
        }
    }
    if (fill_used != unit_count)
        throw std::invalid_argument("tall_rearrange: multiset does not tile the rectangle");
    return t;
}

int tall_beta(const Library& lib, int n) {
    std::optional<TallProfile> profile = tall_precondition(lib, n);
    if (!profile) throw std::invalid_argument("tall_beta: library fails the tall-rectangle hypotheses");
    return profile->max_tall_width;
}

}  // namespace subtile
