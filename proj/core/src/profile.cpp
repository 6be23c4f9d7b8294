#include "cmctori/profile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cmctori/quadrature.hpp"

namespace cmct {

namespace {

void validate(const TorusParams& p) {
    if (!std::isfinite(p.H) || p.H < 0.0)
        throw std::invalid_argument("TorusParams: H must be finite and >= 0");
    if (!std::isfinite(p.C)) throw std::invalid_argument("TorusParams: C must be finite");
    const double lower = 2.0 * (p.H + std::sqrt(1.0 + p.H * p.H));
    if (!(p.C > lower))
        throw DegenerateParams("C = " + std::to_string(p.C) +
                               " is at or below the Clifford limit 2(H+sqrt(1+H^2)) = " +
                               std::to_string(lower));
}

// sqrt(C^2 - 4HC - 4) through the factorization (C - a+)(C - a-) with
// a+- = 2(H +- sqrt(1+H^2)); avoids cancellation near the Clifford limit.
double stable_sqrt_disc(double H, double C) {
    const double s = std::sqrt(1.0 + H * H);
    return std::sqrt((C - 2.0 * (H + s)) * (C - 2.0 * (H - s)));
}

}  // namespace

RootPair coefficient_roots(const TorusParams& params) {
    validate(params);
    const double H = params.H, C = params.C;
    const double one_h2 = 1.0 + H * H;
    const double sd = stable_sqrt_disc(H, C);
    const double t2s = (C - 2.0 * H + sd) / (2.0 * one_h2);
    const double t1s = 1.0 / (one_h2 * t2s);  // product of the squared roots is 1/(1+H^2)
    return {std::sqrt(t1s), std::sqrt(t2s)};
}

double profile_period(double H) {
    if (!std::isfinite(H) || H < 0.0)
        throw std::invalid_argument("profile_period: H must be finite and >= 0");
    return std::numbers::pi / std::sqrt(1.0 + H * H);
}

ProfileSolution::ProfileSolution(TorusParams params) : params_(params) {
    validate(params_);
    const double H = params_.H;
    sqrt_disc_ = stable_sqrt_disc(H, params_.C);
    omega_ = 2.0 * std::sqrt(1.0 + H * H);
    const RootPair roots = coefficient_roots(params_);
    t1_ = roots.t1;
    t2_ = roots.t2;
    period_ = profile_period(H);
}

double ProfileSolution::g_squared(double u) const {
    const double H = params_.H;
    return (params_.C - 2.0 * H + sqrt_disc_ * std::sin(omega_ * u)) / (2.0 * (1.0 + H * H));
}

double ProfileSolution::g(double u) const { return std::sqrt(g_squared(u)); }

double ProfileSolution::g_prime(double u) const {
    return sqrt_disc_ * std::cos(omega_ * u) / (omega_ * g(u));
}

double ProfileSolution::g_second(double u) const {
    const double gp = g_prime(u);
    return -(sqrt_disc_ * std::sin(omega_ * u) + gp * gp) / g(u);
}

double ProfileSolution::one_minus_r_squared(double u) const {
    // 1 - g^2/C = [ (S - D) + D (1 - sin(omega u)) ] / (C P) with
    // S = C (1+2H^2) + 2H, P = 2(1+H^2) and S - D = 4 (1+H^2)(CH+1)^2 / (S + D),
    // which stays accurate when the orbit radius approaches 1.
    const double H = params_.H, C = params_.C;
    const double one_h2 = 1.0 + H * H;
    const double S = C * (1.0 + 2.0 * H * H) + 2.0 * H;
    const double s_minus_d = 4.0 * one_h2 * (C * H + 1.0) * (C * H + 1.0) / (S + sqrt_disc_);
    const double half_angle = 0.25 * std::numbers::pi - 0.5 * omega_ * u;
    const double sh = std::sin(half_angle);
    const double one_minus_sin = 2.0 * sh * sh;
    return (s_minus_d + sqrt_disc_ * one_minus_sin) / (C * 2.0 * one_h2);
}

ProfilePoint ProfileSolution::eval(double u) const {
    const double H = params_.H, C = params_.C;
    const double gv = g(u);
    const double gp = g_prime(u);
    const double mu = 1.0 / (gv * gv);
    const double sqrtC = std::sqrt(C);
    return {gv, gv / sqrtC, gp / sqrtC, mu, H + mu, H - mu};
}

double ProfileSolution::theta(double u, double abs_tol) const {
    if (u == 0.0) return 0.0;
    const auto integrand = [this](double tau) {
        const double gv = g(tau);
        const double mu = 1.0 / (gv * gv);
        const double lambda1 = params_.H + mu;
        const double r = gv / std::sqrt(params_.C);
        return r * lambda1 / one_minus_r_squared(tau);
    };
    const QuadResult q = integrate_adaptive(integrand, 0.0, u, abs_tol);
    return q.value;
}

ProfileResiduals ProfileSolution::residuals(double u) const {
    const double H = params_.H, C = params_.C;
    const ProfilePoint p = eval(u);
    const double one_h2 = 1.0 + H * H;
    const double first =
        p.r_prime * p.r_prime * C + p.mu + one_h2 * p.g * p.g + 2.0 * H - C;
    const double unit =
        p.r_prime * p.r_prime + p.r * p.r * (1.0 + p.lambda1 * p.lambda1) - 1.0;
    const double simons = g_second(u) / p.g - p.mu * p.mu + H * H + 1.0;
    return {first, unit, simons};
}

ProfilePoint profile_eval(const TorusParams& params, double u) {
    return ProfileSolution(params).eval(u);
}

double theta(const TorusParams& params, double u, double abs_tol) {
    return ProfileSolution(params).theta(u, abs_tol);
}

ProfileResiduals first_integral_residuals(const TorusParams& params, double u) {
    return ProfileSolution(params).residuals(u);
}

}  // namespace cmct
