#include "subtile/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace subtile {

using boost::multiprecision::cpp_int;

BoundInputs bound_inputs(const Library& lib, int n) {
    if (n < 1) throw std::invalid_argument("bound_inputs: n must be >= 1");
    BoundInputs in;
    in.all_unit_height = true;
    for (const Polyomino& p : lib.pieces) {
        if (!p.is_rectangle()) throw std::invalid_argument("bounds: rectangles only");
        in.max_width = std::max(in.max_width, p.width());
        if (p.height() == 1)
            in.unit_widths.push_back(p.width());
        else
            in.all_unit_height = false;
        if (p.height() <= n) {
            ++in.at_height[p.height()];
            in.max_area = std::max(in.max_area, static_cast<long long>(p.area()));
        }
    }
    for (const auto& [h, k] : in.at_height) in.heights.push_back(h);
    std::sort(in.unit_widths.begin(), in.unit_widths.end());
    return in;
}

Rational bound_general(const Library& lib, int n) {
    const BoundInputs in = bound_inputs(lib, n);
    cpp_int dim_sum = 0;
    for (const auto& [h, k] : in.at_height) dim_sum += cpp_int(n - h + 1) * k;
    cpp_int a_pow = 1;
    for (int i = 1; i < n; ++i) a_pow *= std::max(in.max_area, 1ll);
    Rational value = Rational(3, 4) * a_pow * dim_sum;
    return std::max(value, Rational(2));
}

Rational bound_unit_height(const Library& lib, int n) {
    const BoundInputs in = bound_inputs(lib, n);
    if (!in.all_unit_height || lib.pieces.empty())
        throw std::invalid_argument("bound_unit_height: every piece must have height 1");
    cpp_int omega_pow = 1;
    for (int i = 0; i < n; ++i) omega_pow *= in.max_width;
    cpp_int lcm = 1;
    for (long long w : in.unit_widths) lcm = boost::multiprecision::lcm(lcm, cpp_int(w));
    Rational value = Rational(3, 8) * omega_pow * lcm * lcm;
    return std::max(value, Rational(2));
}

cpp_int rational_ceil(const Rational& r) {
    cpp_int q = numerator(r) / denominator(r);
    if (numerator(r) % denominator(r) != 0 && r > 0) ++q;
    return q;
}

long long width_lcm(const Library& lib) {
    long long l = 1;
    for (const Polyomino& p : lib.pieces) l = std::lcm(l, static_cast<long long>(p.width()));
    return l;
}

BoundVsEmpirical bound_vs_empirical(const Library& lib, int n, int m_max, SearchBudget& budget) {
    BoundVsEmpirical out;
    out.n = n;
    out.m_max = m_max;
    const Library closed = close_library(lib);

    out.representability = rep_sufficient(closed, n);
    out.general.applicable = true;
    out.general.bound = bound_general(closed, n);
    out.general.bound_ceil = rational_ceil(out.general.bound);

    const BoundInputs in = bound_inputs(closed, n);
    if (in.all_unit_height && !closed.pieces.empty()) {
        out.unit_height.applicable = true;
        out.unit_height.bound = bound_unit_height(closed, n);
        out.unit_height.bound_ceil = rational_ceil(out.unit_height.bound);
    }

    out.beta = beta_empirical(closed, n, m_max, RearrangeMode::translations, budget);
    const cpp_int empirical = out.beta.largest_counterexample_m;
    if (out.general.applicable && empirical > out.general.bound_ceil) out.sound = false;
    if (out.unit_height.applicable && empirical > out.unit_height.bound_ceil) out.sound = false;
    return out;
}

}  // namespace subtile
