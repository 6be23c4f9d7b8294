#include "cmctori/period.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cmctori/quadrature.hpp"

namespace cmct {

namespace {

struct Endpoints {
    double x1, x2;
    double half_width;      // (x2 - x1) / 2
    double one_minus_x2;    // computed without cancellation
};

void validate_domain(double H, double C) {
    if (!std::isfinite(H) || H < 0.0)
        throw std::invalid_argument("period: H must be finite and >= 0");
    if (!std::isfinite(C)) throw std::invalid_argument("period: C must be finite");
    if (!(C > lower_bound_C(H)))
        throw DegenerateParams("C = " + std::to_string(C) +
                               " is at or below the Clifford limit " +
                               std::to_string(lower_bound_C(H)));
}

Endpoints integration_endpoints(double H, double C) {
    const double s = std::sqrt(1.0 + H * H);
    const double one_h2 = 1.0 + H * H;
    const double sd = std::sqrt((C - 2.0 * (H + s)) * (C - 2.0 * (H - s)));
    const double t2s = (C - 2.0 * H + sd) / (2.0 * one_h2);
    const double t1s = 1.0 / (one_h2 * t2s);
    Endpoints ep;
    ep.x1 = t1s / C;
    ep.x2 = t2s / C;
    ep.half_width = sd / (2.0 * one_h2 * C);
    // 1 - x2 = 2 (CH+1)^2 / (C (C + 2H + 2CH^2 + sqrt(disc)))
    const double ch1 = C * H + 1.0;
    ep.one_minus_x2 = 2.0 * ch1 * ch1 / (C * (C + 2.0 * H + 2.0 * C * H * H + sd));
    return ep;
}

}  // namespace

double lower_bound_C(double H) {
    if (!std::isfinite(H) || H < 0.0)
        throw std::invalid_argument("lower_bound_C: H must be finite and >= 0");
    return 2.0 * (H + std::sqrt(1.0 + H * H));
}

double limit_K_at_lower(double H) {
    if (!std::isfinite(H) || H < 0.0)
        throw std::invalid_argument("limit_K_at_lower: H must be finite and >= 0");
    const double s = std::sqrt(1.0 + H * H);
    return std::numbers::sqrt2 * std::numbers::pi / (std::pow(1.0 + H * H, 0.25) * std::sqrt(H + s));
}

double limit_K_at_infinity(double H) {
    if (!std::isfinite(H) || H < 0.0)
        throw std::invalid_argument("limit_K_at_infinity: H must be finite and >= 0");
    return 2.0 * (0.5 * std::numbers::pi - std::atan(H));
}

PeriodEval period_K(double H, double C, double abs_tol) {
    validate_domain(H, C);
    const Endpoints ep = integration_endpoints(H, C);
    const double a = 1.0 / C;
    const double sqrt_one_h2 = std::sqrt(1.0 + H * H);
    const double quarter_pi = 0.25 * std::numbers::pi;

    const auto integrand = [&](double phi) {
        const double sp = std::sin(quarter_pi + 0.5 * phi);
        const double sm = std::sin(quarter_pi - 0.5 * phi);
        const double u_minus_x1 = 2.0 * ep.half_width * sp * sp;
        const double x2_minus_u = 2.0 * ep.half_width * sm * sm;
        const double u = ep.x1 + u_minus_x1;
        const double one_minus_u = ep.one_minus_x2 + x2_minus_u;
        return (H * u + a) / (std::sqrt(u) * one_minus_u * sqrt_one_h2);
    };

    const QuadResult q =
        integrate_adaptive(integrand, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, abs_tol);

    PeriodEval out;
    out.H = H;
    out.C = C;
    out.x1 = ep.x1;
    out.x2 = ep.x2;
    out.value = q.value;
    // Error reporting floor: near the degenerate limit the transformed
    // integrand is benign but x2 - x1 conditions the endpoint arithmetic.
    const double eps = std::numeric_limits<double>::epsilon();
    out.error_estimate = std::max(q.error, eps * std::fabs(q.value) / (ep.x2 - ep.x1));
    return out;
}

double monotonicity_witness(double H, double C, double rel_tol) {
    validate_domain(H, C);
    const Endpoints ep = integration_endpoints(H, C);
    const double one_h2 = 1.0 + H * H;

    const auto integrand = [&](double s) {
        if (s <= 0.0 || s >= 1.0) return 0.0;
        const double t = s / (1.0 - s);
        const double base = one_h2 * t * (ep.x1 + t) * (ep.x2 + t);
        const double ds = 1.0 / ((1.0 - s) * (1.0 - s));
        return t * t / (base * std::sqrt(base)) * ds;
    };

    // Two passes: a coarse run sets the scale for the relative tolerance.
    const QuadResult coarse = integrate_adaptive(integrand, 0.0, 1.0, 1e-4);
    const double scale = std::max(std::fabs(coarse.value), 1e-12);
    const QuadResult fine = integrate_adaptive(integrand, 0.0, 1.0, rel_tol * scale);
    return fine.value;
}

}  // namespace cmct
