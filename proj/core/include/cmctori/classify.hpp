#pragma once

#include <vector>

#include "cmctori/errors.hpp"

namespace cmct {

/// One classified embedded torus: the unique member of the rotational family
/// at mean curvature H whose angular period equals 2 pi / m.
struct TorusSpec {
    double H = 0.0;
    int m = 0;       ///< maximal discrete symmetry order, m >= 2
    double C = 0.0;  ///< solved family parameter
    double K = 0.0;  ///< achieved period, |K - 2 pi / m| <= 1e-9
};

struct ClassificationReport {
    double H = 0.0;
    double clifford_radius = 0.0;
    std::vector<TorusSpec> tori;  ///< sorted by m, at most one entry per m
    bool rigid = false;           ///< true iff tori is empty
};

/// All integers m >= 2 with 2 arccot(H) < 2 pi / m < limit_K_at_lower(H),
/// strict on both sides. Equivalently cot(pi/m) < H < (m^2-2)/(2 sqrt(m^2-1)).
std::vector<int> admissible_m(double H);

/// Solves K(H, C) = 2 pi / m by bisection on the monotone period.
/// Throws NotAdmissible when m is outside the admissible window and
/// BracketFailure when bracketing or convergence fails.
TorusSpec solve_C_for_m(double H, int m);

/// Radius r in (0, 1/sqrt(2)] of the Clifford torus with mean curvature H
/// under the H >= 0 orientation: the smaller root of
/// 4(1+H^2) r^4 - 4(1+H^2) r^2 + 1 = 0.
double clifford_radius(double H);

/// Full classification at mean curvature H >= 0 (negative H is handled by the
/// caller through an orientation flip).
ClassificationReport classify(double H);

namespace detail {
/// Bisection core with an explicit initial bracket; exposed so independence of
/// the solved C from the bracket choice can be exercised directly.
TorusSpec solve_C_for_m_bracketed(double H, int m, double c_lo, double c_hi);
}  // namespace detail

}  // namespace cmct
