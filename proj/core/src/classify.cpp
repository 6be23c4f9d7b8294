#include "cmctori/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cmctori/period.hpp"

namespace cmct {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPeriodTol = 1e-9;

bool is_admissible(double H, int m) {
    const double target = kTwoPi / m;
    return limit_K_at_infinity(H) < target && target < limit_K_at_lower(H);
}

}  // namespace

std::vector<int> admissible_m(double H) {
    if (!std::isfinite(H) || H < 0.0)
        throw std::invalid_argument("admissible_m: H must be finite and >= 0");
    const double lo = limit_K_at_infinity(H);   // infimum of K
    const double hi = limit_K_at_lower(H);      // supremum of K
    // 2 pi / m < hi forces m > 2 pi / hi; 2 pi / m > lo forces m < 2 pi / lo.
    const int m_first = std::max(2, static_cast<int>(std::floor(kTwoPi / hi)));
    const int m_last = static_cast<int>(std::ceil(kTwoPi / lo)) + 1;
    std::vector<int> out;
    for (int m = m_first; m <= m_last; ++m)
        if (m >= 2 && is_admissible(H, m)) out.push_back(m);
    return out;
}

namespace detail {

TorusSpec solve_C_for_m_bracketed(double H, int m, double c_lo, double c_hi) {
    const double target = kTwoPi / m;
    double k_lo = period_K(H, c_lo).value;
    double k_hi = period_K(H, c_hi).value;
    if (!(k_lo > target && k_hi < target))
        throw BracketFailure("period bracket does not straddle 2 pi / m");

    // The period is strictly decreasing in C, so bisection is unconditionally
    // convergent. Iterate until the bracket pins C itself, not just K; the C
    // tolerance is what makes independently bracketed solves agree.
    double c_mid = 0.5 * (c_lo + c_hi);
    double k_mid = 0.0;
    for (int it = 0; it < 400; ++it) {
        c_mid = 0.5 * (c_lo + c_hi);
        k_mid = period_K(H, c_mid).value;
        const bool k_converged = std::fabs(k_mid - target) <= kPeriodTol;
        const bool c_converged = (c_hi - c_lo) <= 1e-11 * std::max(1.0, c_mid);
        if (k_converged && c_converged) return {H, m, c_mid, k_mid};
        if (k_mid > target)
            c_lo = c_mid;
        else
            c_hi = c_mid;
    }
    throw BracketFailure("period bisection failed to converge");
}

}  // namespace detail

TorusSpec solve_C_for_m(double H, int m) {
    if (!is_admissible(H, m))
        throw NotAdmissible("no embedded torus with m = " + std::to_string(m) +
                            " at H = " + std::to_string(H));
    const double a = lower_bound_C(H);
    const double target = kTwoPi / m;

    double eps = 1e-10;
    double c_lo = a * (1.0 + eps);
    while (period_K(H, c_lo).value <= target) {
        eps *= 0.01;
        if (eps < 1e-15)
            throw BracketFailure("lower bracket endpoint failed at H = " + std::to_string(H));
        c_lo = a * (1.0 + eps);
    }

    double c_hi = a + 1.0;
    while (period_K(H, c_hi).value >= target) {
        c_hi *= 2.0;
        if (c_hi > 1e12)
            throw BracketFailure("upper bracket exceeded 1e12 at H = " + std::to_string(H));
    }
    return detail::solve_C_for_m_bracketed(H, m, c_lo, c_hi);
}

double clifford_radius(double H) {
    if (!std::isfinite(H) || H < 0.0)
        throw std::invalid_argument("clifford_radius: H must be finite and >= 0");
    return std::sqrt(0.5 * (1.0 - H / std::sqrt(1.0 + H * H)));
}

ClassificationReport classify(double H) {
    ClassificationReport report;
    report.H = H;
    report.clifford_radius = clifford_radius(H);
    for (int m : admissible_m(H)) report.tori.push_back(solve_C_for_m(H, m));
    std::sort(report.tori.begin(), report.tori.end(),
              [](const TorusSpec& a, const TorusSpec& b) { return a.m < b.m; });
    report.rigid = report.tori.empty();
    return report;
}

}  // namespace cmct
