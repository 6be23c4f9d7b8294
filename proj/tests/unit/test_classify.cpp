#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cmctori/classify.hpp"
#include "cmctori/period.hpp"
#include "cmctori/s3geom.hpp"

using namespace cmct;

namespace {

constexpr double kPi = std::numbers::pi;

// The admissibility window written through cotangents; the implementation
// compares 2 pi / m against the period limits, so this is a second route.
bool window_cot_form(double H, int m) {
    const double lo = 1.0 / std::tan(kPi / m);
    const double hi = (static_cast<double>(m) * m - 2.0) / (2.0 * std::sqrt(m * m - 1.0));
    return lo < H && H < hi;
}

}  // namespace

TEST_CASE("admissible symmetry orders at the rigidity points and H = 1") {
    CHECK(admissible_m(0.0).empty());
    CHECK(admissible_m(1.0 / std::numbers::sqrt3).empty());
    const std::vector<int> at_one = admissible_m(1.0);
    REQUIRE(at_one.size() == 1);
    CHECK(at_one[0] == 3);
}

TEST_CASE("the two window forms agree across an H sweep") {
    for (double H = 0.0; H <= 6.0; H += 0.013) {
        const std::vector<int> got = admissible_m(H);
        std::vector<int> expected;
        for (int m = 2; m <= 10000; ++m)
            if (window_cot_form(H, m)) expected.push_back(m);
        CHECK(got == expected);
    }
}

TEST_CASE("solved torus at (H, m) = (1, 3)") {
    const TorusSpec spec = solve_C_for_m(1.0, 3);
    CHECK(std::fabs(spec.K - 2.0 * kPi / 3.0) <= 1e-9);
    CHECK(spec.C > lower_bound_C(1.0));
    // Independently computed root of K(1, C) = 2 pi / 3, 20 significant digits.
    CHECK(spec.C == doctest::Approx(9.908469426660855437).epsilon(2e-9));
    // Consistency: re-evaluating the period at the solved C reproduces the target.
    CHECK(std::fabs(period_K(1.0, spec.C).value - 2.0 * kPi / 3.0) <= 2e-9);
}

TEST_CASE("solved C does not depend on the bracket") {
    const TorusSpec spec = solve_C_for_m(1.0, 3);
    const double a = lower_bound_C(1.0);
    const TorusSpec again = detail::solve_C_for_m_bracketed(1.0, 3, a * (1.0 + 1e-5), 64.0);
    CHECK(std::fabs(again.C - spec.C) <= 1e-9);
}

TEST_CASE("inadmissible requests are refused") {
    CHECK_THROWS_AS(solve_C_for_m(0.0, 2), NotAdmissible);
    CHECK_THROWS_AS(solve_C_for_m(1.0, 4), NotAdmissible);
}

TEST_CASE("clifford radius closed form and curvature round trip") {
    CHECK(clifford_radius(0.0) == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));
    CHECK(clifford_radius(1.0 / std::numbers::sqrt3) == doctest::Approx(0.5).epsilon(1e-14));
    for (double H : {0.0, 0.25, 1.0 / std::numbers::sqrt3, 1.0, 3.0}) {
        const double r = clifford_radius(H);
        CHECK(r > 0.0);
        CHECK(r <= 1.0 / std::numbers::sqrt2 + 1e-15);
        const double rho = std::sqrt(1.0 - r * r);
        const auto immersion = [r, rho](double u, double v) -> Vec4 {
            return {r * std::cos(v), r * std::sin(v), rho * std::cos(u), rho * std::sin(u)};
        };
        const PrincipalCurvatures pc = principal_curvatures(immersion, 0.9, 0.4, 1e-4);
        CHECK(std::fabs(pc.mean - H) < 1e-8);
    }
}

TEST_CASE("classification reports") {
    const ClassificationReport rigid0 = classify(0.0);
    CHECK(rigid0.rigid);
    CHECK(rigid0.tori.empty());
    CHECK(rigid0.clifford_radius == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));

    CHECK(classify(1.0 / std::numbers::sqrt3).rigid);

    const ClassificationReport at_one = classify(1.0);
    CHECK_FALSE(at_one.rigid);
    REQUIRE(at_one.tori.size() == 1);
    CHECK(at_one.tori[0].m == 3);
    const TorusSpec& s = at_one.tori[0];
    CHECK(window_cot_form(s.H, s.m));
    CHECK(std::fabs(s.K - 2.0 * kPi / 3.0) <= 1e-9);
}
