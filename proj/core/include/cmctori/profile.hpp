#pragma once

#include "cmctori/errors.hpp"

namespace cmct {

/// Parameters selecting one member of the rotational CMC family in S^3:
/// mean curvature H >= 0 and the first-integral constant C.
/// Admissible iff C > 2(H + sqrt(1+H^2)) strictly.
struct TorusParams {
    double H = 0.0;
    double C = 0.0;
};

struct RootPair {
    double t1 = 0.0;  ///< lower profile extreme, 0 < t1 < t2
    double t2 = 0.0;
};

struct ProfilePoint {
    double g;        ///< profile value, g in [t1, t2]
    double r;        ///< orbit radius g / sqrt(C)
    double r_prime;  ///< d r / d u
    double mu;       ///< g^{-2} > 0, the traceless part of the curvature
    double lambda1;  ///< H + mu
    double lambda2;  ///< H - mu
};

/// Signed residuals of the identities every profile solution satisfies.
struct ProfileResiduals {
    double first_integral;  ///< (g')^2 + g^{-2} + (1+H^2) g^2 + 2H - C
    double unit_speed;      ///< (r')^2 + r^2 (1 + lambda1^2) - 1
    double simons;          ///< g''/g - g^{-4} + H^2 + 1
};

/// Roots of xi(s) = C s^2 - 1 - (1+H^2) s^4 - 2 H s^2.
/// Throws DegenerateParams at or below the Clifford limit (double root).
RootPair coefficient_roots(const TorusParams& params);

/// Period of the profile, pi / sqrt(1 + H^2).
double profile_period(double H);

/// Closed-form profile of a rotational CMC torus. All evaluators are pure;
/// instances are immutable and freely shareable across threads.
class ProfileSolution {
public:
    explicit ProfileSolution(TorusParams params);

    const TorusParams& params() const { return params_; }
    double t1() const { return t1_; }
    double t2() const { return t2_; }
    double period() const { return period_; }

    double g(double u) const;
    double g_prime(double u) const;
    double g_second(double u) const;  // from the sine form, not the first integral
    double one_minus_r_squared(double u) const;
    ProfilePoint eval(double u) const;

    /// Angular advance theta(u) = int_0^u r lambda1 / (1 - r^2), quadrature
    /// with absolute tolerance abs_tol.
    double theta(double u, double abs_tol = 1e-12) const;

    ProfileResiduals residuals(double u) const;

private:
    double g_squared(double u) const;

    TorusParams params_;
    double sqrt_disc_;   // sqrt((C-2H)^2 - 4(1+H^2)), via stable factorization
    double omega_;       // 2 sqrt(1+H^2)
    double t1_, t2_;
    double period_;
};

ProfilePoint profile_eval(const TorusParams& params, double u);
double theta(const TorusParams& params, double u, double abs_tol = 1e-12);
ProfileResiduals first_integral_residuals(const TorusParams& params, double u);

}  // namespace cmct
