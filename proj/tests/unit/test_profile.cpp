#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cmctori/errors.hpp"
#include "cmctori/profile.hpp"

using namespace cmct;

namespace {

constexpr double kPi = std::numbers::pi;

double xi(double H, double C, double s) {
    const double s2 = s * s;
    return C * s2 - 1.0 - (1.0 + H * H) * s2 * s2 - 2.0 * H * s2;
}

// Random admissible parameters, spanning near-degenerate to wide orbits.
TorusParams random_params(std::mt19937_64& rng) {
    const auto uni = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    const double H = 3.0 * uni();
    const double a = 2.0 * (H + std::sqrt(1.0 + H * H));
    const double expo = -6.0 + 9.0 * uni();  // C - a from 1e-6 a to 1e3 a
    return {H, a * (1.0 + std::pow(10.0, expo))};
}

}  // namespace

TEST_CASE("roots for H = 0, C = 5/2 are 1/sqrt(2) and sqrt(2)") {
    const RootPair roots = coefficient_roots({0.0, 2.5});
    CHECK(roots.t1 == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));
    CHECK(roots.t2 == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
    CHECK(roots.t1 * roots.t1 / 2.5 == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(roots.t2 * roots.t2 / 2.5 == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(coefficient_roots({0.0, 2.0}), DegenerateParams);
    CHECK_THROWS_AS(coefficient_roots({1.0 / std::numbers::sqrt3, 2.0 * std::numbers::sqrt3}),
                    DegenerateParams);
    CHECK_THROWS_AS(profile_eval({0.0, 1.9}, 0.0), DegenerateParams);
    CHECK_THROWS_AS(ProfileSolution({2.0, 1.0}), DegenerateParams);
}

TEST_CASE("roots annihilate the quartic and multiply to 1/sqrt(1+H^2)") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const TorusParams p = random_params(rng);
        const RootPair roots = coefficient_roots(p);
        CHECK(0.0 < roots.t1);
        CHECK(roots.t1 < roots.t2);
        const double scale = 1.0 + p.C * p.C;
        CHECK(std::fabs(xi(p.H, p.C, roots.t1)) < 1e-13 * scale);
        CHECK(std::fabs(xi(p.H, p.C, roots.t2)) < 1e-13 * scale);
        CHECK(roots.t1 * roots.t2 ==
              doctest::Approx(1.0 / std::sqrt(1.0 + p.H * p.H)).epsilon(1e-13));
    }
}

TEST_CASE("profile period") {
    CHECK(profile_period(0.0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(profile_period(1.0) == doctest::Approx(kPi / std::numbers::sqrt2).epsilon(1e-15));
    CHECK(profile_period(std::numbers::sqrt3) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
}

TEST_CASE("profile values at the phase anchors") {
    const ProfileSolution prof({0.0, 2.5});
    CHECK(prof.g(0.0) == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
    CHECK(prof.g(prof.period() / 4.0) == doctest::Approx(prof.t2()).epsilon(1e-14));
    CHECK(prof.g(-prof.period() / 4.0) == doctest::Approx(prof.t1()).epsilon(1e-14));
}

TEST_CASE("first integral and related identities hold along the orbit") {
    const TorusParams cases[] = {{0.0, 2.5}, {1.0, 6.0}, {1.0 / std::numbers::sqrt3, 4.0}};
    std::mt19937_64 rng(23);
    const auto uni = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    for (const TorusParams& p : cases) {
        const ProfileSolution prof(p);
        for (int i = 0; i < 1000; ++i) {
            const double u = (uni() - 0.5) * 40.0;
            const ProfileResiduals res = prof.residuals(u);
            CHECK(std::fabs(res.first_integral) < 1e-12);
            CHECK(std::fabs(res.unit_speed) < 1e-12);
            CHECK(std::fabs(res.simons) < 1e-10);
        }
    }
}

TEST_CASE("(g')^2 equals xi(g)/g^2") {
    std::mt19937_64 rng(37);
    const auto uni = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 100; ++i) {
        const TorusParams p = random_params(rng);
        const ProfileSolution prof(p);
        for (int j = 0; j < 10; ++j) {
            const double u = (uni() - 0.5) * 20.0;
            const double g = prof.g(u);
            const double gp = prof.g_prime(u);
            const double rhs = xi(p.H, p.C, g) / (g * g);
            CHECK(gp * gp == doctest::Approx(rhs).epsilon(1e-9));
            CHECK(std::fabs(gp * gp - rhs) < 1e-11 * (1.0 + p.C * p.C));
        }
    }
}

TEST_CASE("orbit stays inside [t1, t2] and curvatures straddle H") {
    std::mt19937_64 rng(41);
    const auto uni = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    for (int i = 0; i < 50; ++i) {
        const TorusParams p = random_params(rng);
        const ProfileSolution prof(p);
        for (int j = 0; j < 40; ++j) {
            const double u = (uni() - 0.5) * 20.0;
            const ProfilePoint pt = prof.eval(u);
            CHECK(pt.g >= prof.t1() * (1.0 - 1e-12));
            CHECK(pt.g <= prof.t2() * (1.0 + 1e-12));
            CHECK(pt.mu > 0.0);
            CHECK(pt.lambda2 < p.H);
            CHECK(p.H < pt.lambda1);
            CHECK(pt.r == doctest::Approx(pt.g / std::sqrt(p.C)).epsilon(1e-15));
        }
    }
}

TEST_CASE("theta: base point, period additivity") {
    const ProfileSolution prof({1.0, 6.0});
    CHECK(prof.theta(0.0) == 0.0);
    const double T = prof.period();
    const double advance = prof.theta(T) - prof.theta(0.0);
    for (double u0 : {0.0, 0.3, 1.1}) {
        const double d = prof.theta(u0 + T) - prof.theta(u0);
        CHECK(std::fabs(d - advance) < 1e-10);
    }
}

TEST_CASE("approach to the Clifford limit collapses the orbit") {
    for (double H : {0.0, 0.5, 1.0, 2.0}) {
        const double a = 2.0 * (H + std::sqrt(1.0 + H * H));
        const RootPair roots = coefficient_roots({H, a + 1e-7});
        CHECK(roots.t2 - roots.t1 < 1e-3);
        CHECK(roots.t2 - roots.t1 > 0.0);
    }
}

TEST_CASE("g'' from the sine form matches a central difference") {
    const ProfileSolution prof({0.7, 5.0});
    const double h = 1e-5;
    for (double u : {0.1, 0.9, 2.3}) {
        const double fd = (prof.g(u + h) - 2.0 * prof.g(u) + prof.g(u - h)) / (h * h);
        CHECK(prof.g_second(u) == doctest::Approx(fd).epsilon(1e-5));
    }
}
