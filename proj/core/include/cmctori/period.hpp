#pragma once

#include "cmctori/errors.hpp"

namespace cmct {

/// One evaluation of the period integral K(H, C).
struct PeriodEval {
    double H = 0.0;
    double C = 0.0;
    double x1 = 0.0;  ///< lower integration endpoint t1^2 / C, in (0, 1)
    double x2 = 0.0;  ///< upper integration endpoint t2^2 / C, in (x1, 1)
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Lower boundary of the admissible C range, 2(H + sqrt(1+H^2)).
double lower_bound_C(double H);

/// Supremum of K(H, .), attained in the limit C -> lower_bound_C(H):
/// sqrt(2) pi / ((1+H^2)^{1/4} (H + sqrt(1+H^2))^{1/2}).
double limit_K_at_lower(double H);

/// Infimum of K(H, .), the limit C -> infinity: 2 arccot(H), with
/// arccot(H) = pi/2 - arctan(H) on H >= 0.
double limit_K_at_infinity(double H);

/// The period integral
///   K(H,C) = int_{x1}^{x2} (H u + 1/C) /
///            [ sqrt(u) (1-u) sqrt((1+H^2)(u - x1)(x2 - u)) ] du.
/// The endpoint square roots are removed exactly by
/// u = (x1+x2)/2 + (x2-x1)/2 sin(phi); the remaining integrand is evaluated
/// through cancellation-free expressions for u - x1, x2 - u and 1 - u, so the
/// near-pole at u = 1 stays resolvable for C up to ~1e12.
/// Throws DegenerateParams when C <= lower_bound_C(H).
PeriodEval period_K(double H, double C, double abs_tol = 1e-10);

/// The strictly positive derivative integral d/da K(H, 1/a) at a = 1/C:
///   int_0^infty t^2 / [ (1+H^2) t (x1+t)(x2+t) ]^{3/2} dt,
/// evaluated after the compactification t = s/(1-s). Positivity of this value
/// witnesses strict monotonicity of K in C.
double monotonicity_witness(double H, double C, double rel_tol = 1e-8);

}  // namespace cmct
