#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "subtile/represent.hpp"
#include "subtile/subtiling.hpp"

namespace subtile {

using Rational = boost::multiprecision::cpp_rational;

struct BoundInputs {
    std::vector<int> heights;            // distinct piece heights <= n, ascending
    std::map<int, long long> at_height;  // height -> number of library entries
    long long max_area = 0;              // max area among pieces of height <= n
    int max_width = 0;
    std::vector<long long> unit_widths;  // widths of height-1 pieces, ascending
    bool all_unit_height = false;
};

// Derived quantities for the closed-form bounds. Rectangles only.
BoundInputs bound_inputs(const Library& lib, int n);

// max(2, 3/4 * A^(n-1) * sum over heights i <= n of (n-i+1)*|L(i)|), exact.
// Meaningful for n-representable libraries; rep_sufficient advises.
Rational bound_general(const Library& lib, int n);

// max(2, 3/8 * w^n * lcm(widths)^2) for unit-height libraries, exact.
// Refuses (throws) when any piece has height > 1.
Rational bound_unit_height(const Library& lib, int n);

// Smallest integer >= r.
boost::multiprecision::cpp_int rational_ceil(const Rational& r);

// The paper's easy lower bound (lcm of piece widths), informational only.
long long width_lcm(const Library& lib);

struct BoundCheck {
    bool applicable = false;
    Rational bound;
    boost::multiprecision::cpp_int bound_ceil;
};

struct BoundVsEmpirical {
    int n = 0;
    int m_max = 0;
    BoundCheck general;
    BoundCheck unit_height;
    std::optional<RepJustification> representability;  // advisory for the general bound
    BetaReport beta;
    bool sound = true;  // empirical beta <= ceil(bound) for every applicable bound
};

// Closes the library, evaluates every applicable bound, runs the
// translations-mode beta search, and flags any empirical width exceeding an
// applicable bound as a fatal inconsistency.
BoundVsEmpirical bound_vs_empirical(const Library& lib, int n, int m_max, SearchBudget& budget);

}  // namespace subtile
