#include "cmctori/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "cmctori/classify.hpp"
#include "cmctori/errors.hpp"
#include "cmctori/period.hpp"
#include "cmctori/profile.hpp"
#include "cmctori/s3geom.hpp"
#include "cmctori/surface_io.hpp"

namespace cmct::selftest {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

std::string num(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double ratio = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(ratio * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

void criterion_limits_h0(Check& c) {
    const double k_inf = period_K(0.0, 1e8).value;
    c.require(std::fabs(k_inf - kPi) <= 1e-3,
              "K(0, 1e8) = " + num(k_inf) + " not within 1e-3 of pi");
    const double c_low = 2.0 * (1.0 + 1e-8);
    const double k_low = period_K(0.0, c_low).value;
    const double sqrt2pi = std::numbers::sqrt2 * kPi;
    c.require(std::fabs(k_low - sqrt2pi) <= 1e-3,
              "K(0, 2(1+1e-8)) = " + num(k_low) + " not within 1e-3 of sqrt(2) pi");
    int violations = 0;
    for (double C : geometric_grid(c_low, 1e8, 200)) {
        const double k = period_K(0.0, C).value;
        if (!(kPi < k && k < sqrt2pi)) ++violations;
    }
    c.require(violations == 0, std::to_string(violations) + " grid values left (pi, sqrt2 pi)");
    c.note("K(0,1e8)-pi=" + num(k_inf - kPi) + ", K(0,2+)-sqrt2pi=" + num(k_low - sqrt2pi));
}

void criterion_rigidity(Check& c) {
    const double h = 1.0 / std::numbers::sqrt3;
    const double c_low = lower_bound_C(h) * (1.0 + 1e-8);
    int violations = 0;
    for (double C : geometric_grid(c_low, 1e8, 200)) {
        const double k = period_K(h, C).value;
        if (!(2.0 * kPi / 3.0 < k && k < kPi)) ++violations;
    }
    c.require(violations == 0,
              std::to_string(violations) + " grid values left (2pi/3, pi) at H=1/sqrt(3)");
    c.require(classify(h).rigid, "classify(1/sqrt(3)) not rigid");
    c.require(classify(0.0).rigid, "classify(0) not rigid");
}

void criterion_monotonicity(Check& c) {
    const double hs[] = {0.0, 0.3, 1.0 / std::numbers::sqrt3, 1.0, 2.0};
    double worst_rel = 0.0;
    for (double H : hs) {
        const double a0 = lower_bound_C(H);
        const auto grid = geometric_grid(a0 * (1.0 + 1e-4), a0 * 1000.0, 100);
        double prev = std::numeric_limits<double>::infinity();
        int mono_violations = 0, sign_violations = 0;
        for (double C : grid) {
            const double k = period_K(H, C).value;
            if (!(k < prev)) ++mono_violations;
            prev = k;
            if (!(monotonicity_witness(H, C) > 0.0)) ++sign_violations;
        }
        c.require(mono_violations == 0, "H=" + num(H) + ": " +
                                            std::to_string(mono_violations) +
                                            " monotonicity violations");
        c.require(sign_violations == 0,
                  "H=" + num(H) + ": witness not positive everywhere");
        for (int idx : {20, 40, 60, 80}) {
            const double C = grid[idx];
            const double a = 1.0 / C;
            const double h = 1e-5;
            const double wit = monotonicity_witness(H, C);
            const double fd = (period_K(H, 1.0 / (a + h), 1e-12).value -
                               period_K(H, 1.0 / (a - h), 1e-12).value) /
                              (2.0 * h);
            const double rel = std::fabs(fd - wit) / wit;
            worst_rel = std::max(worst_rel, rel);
            c.require(rel <= 1e-4, "H=" + num(H) + ", C=" + num(C) +
                                       ": |dK/da - witness|/witness = " + num(rel));
        }
    }
    c.note("worst fd/witness rel. dev. " + num(worst_rel));
}

void criterion_existence_uniqueness(Check& c) {
    for (int m = 2; m <= 6; ++m) {
        const double lo = 1.0 / std::tan(kPi / m);
        const double hi = (m * m - 2.0) / (2.0 * std::sqrt(m * m - 1.0));
        const double H = 0.5 * (lo + hi);
        const ClassificationReport rep = classify(H);
        bool found = false;
        for (const TorusSpec& s : rep.tori) found = found || s.m == m;
        c.require(found, "classify(" + num(H) + ") misses m=" + std::to_string(m));

        const TorusSpec spec = solve_C_for_m(H, m);
        c.require(std::fabs(spec.K - kTwoPi / m) <= 1e-9,
                  "m=" + std::to_string(m) + ": |K - 2pi/m| = " +
                      num(std::fabs(spec.K - kTwoPi / m)));

        // Re-solve from an unrelated bracket; the root must be bracket-independent.
        const double a0 = lower_bound_C(H);
        const TorusSpec again =
            detail::solve_C_for_m_bracketed(H, m, a0 * (1.0 + 1e-6), 2.0 * spec.C + 5.0);
        c.require(std::fabs(again.C - spec.C) <= 1e-9,
                  "m=" + std::to_string(m) +
                      ": bracket dependence |dC| = " + num(std::fabs(again.C - spec.C)));
    }
}

void criterion_oracle_equivalence(Check& c) {
    const double hs[] = {0.0, 0.3, 1.0 / std::numbers::sqrt3, 1.0, 2.0};
    double worst = 0.0;
    for (double H : hs) {
        const double a0 = lower_bound_C(H);
        for (double C : geometric_grid(a0 * 1.001, a0 * 1000.0, 10)) {
            const ProfileSolution prof({H, C});
            const double via_theta = prof.theta(prof.period(), 1e-12);
            const double via_period = period_K(H, C, 1e-11).value;
            worst = std::max(worst, std::fabs(via_theta - via_period));
            c.require(std::fabs(via_theta - via_period) <= 1e-8,
                      "H=" + num(H) + ", C=" + num(C) +
                          ": |theta(T) - K| = " + num(std::fabs(via_theta - via_period)));
        }
    }
    c.note("worst |theta(T) - K| = " + num(worst));
}

void criterion_surface_fidelity(Check& c) {
    const TorusSpec spec = solve_C_for_m(1.0, 3);
    const SurfaceMesh mesh = generate_torus(1.0, spec.C, 3, 384, 256);

    double worst_unit = 0.0;
    for (const SpherePoint& sp : mesh.points)
        worst_unit = std::max(worst_unit, std::fabs(norm(sp.position) - 1.0));
    c.require(worst_unit <= 1e-12, "max ||F|-1| = " + num(worst_unit));

    const ProfileSolution prof({1.0, spec.C});
    const auto immersion = [&prof](double u, double v) -> Vec4 {
        const ProfilePoint p = prof.eval(u);
        const double rho = std::sqrt(prof.one_minus_r_squared(u));
        const double th = prof.theta(u, 1e-12);
        return {p.r * std::cos(v), p.r * std::sin(v), rho * std::cos(th), rho * std::sin(th)};
    };
    std::mt19937_64 rng(0xf1de5ULL);
    double worst_h = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double u = mesh.u(static_cast<int>(rng() % mesh.nu));
        const double v = mesh.v(static_cast<int>(rng() % mesh.nv));
        const PrincipalCurvatures pc = principal_curvatures(immersion, u, v, 1e-4);
        worst_h = std::max(worst_h, std::fabs(pc.mean - 1.0));
    }
    c.require(worst_h <= 1e-5, "max |H_fd - 1| = " + num(worst_h));

    const VerificationReport rep = verify_mesh(mesh, 1.0, 1000000);
    c.require(rep.max_first_integral_residual <= 1e-10,
              "first integral residual " + num(rep.max_first_integral_residual));
    c.require(rep.max_simons_residual <= 1e-9,
              "Simons residual " + num(rep.max_simons_residual));
    c.require(rep.theta_closure_residual <= 1e-8,
              "theta closure " + num(rep.theta_closure_residual));
    c.note("|H_fd-1|=" + num(worst_h) + ", simons=" + num(rep.max_simons_residual) +
           ", closure=" + num(rep.theta_closure_residual));
}

void criterion_ball_curvature(Check& c) {
    struct Case {
        std::string name;
        SurfaceMesh mesh;
        double H;
    };
    std::vector<Case> cases;
    const TorusSpec spec = solve_C_for_m(1.0, 3);
    cases.push_back({"torus(H=1,m=3)", generate_torus(1.0, spec.C, 3, 384, 256), 1.0});
    cases.push_back({"clifford(1/sqrt2)", generate_clifford(1.0 / std::numbers::sqrt2, 256, 256),
                     0.0});
    cases.push_back({"clifford(1/2)", generate_clifford(0.5, 256, 256),
                     1.0 / std::numbers::sqrt3});

    std::mt19937_64 rng(0xba11ULL);
    for (const Case& cs : cases) {
        const VerificationReport rep = verify_mesh(cs.mesh, cs.H, 1000000);
        c.require(rep.min_z >= -1e-6, cs.name + ": min Z = " + num(rep.min_z));
        double worst_gap = 0.0;
        for (int i = 0; i < 50; ++i) {
            const std::size_t k = rng() % cs.mesh.size();
            const double phi_bar = interior_ball_curvature(cs.mesh, k);
            worst_gap = std::max(worst_gap, phi_bar - cs.mesh.lambda1[k]);
        }
        c.require(worst_gap <= 5e-3, cs.name + ": ball curvature gap " + num(worst_gap));
        c.note(cs.name + ": minZ=" + num(rep.min_z) + " gap=" + num(worst_gap));
    }
}

void criterion_negative_controls(Check& c) {
    SurfaceMesh mesh = generate_clifford(1.0 / std::numbers::sqrt2, 128, 128);
    for (std::size_t k = 0; k < mesh.size(); ++k)
        mesh.points[k].position += 1e-3 * mesh.points[k].normal;
    const VerificationReport rep = verify_mesh(mesh, 0.0, 200000);
    c.require(rep.max_mean_curvature_residual > 1e-3,
              "perturbed mesh mean-curvature residual only " +
                  num(rep.max_mean_curvature_residual));
    c.require(!rep.passed, "perturbed mesh unexpectedly passed verification");

    bool threw = false;
    try {
        solve_C_for_m(0.0, 2);
    } catch (const NotAdmissible&) {
        threw = true;
    }
    c.require(threw, "solve_C_for_m(0, 2) did not raise NotAdmissible");

    threw = false;
    try {
        period_K(0.5, lower_bound_C(0.5));
    } catch (const DegenerateParams&) {
        threw = true;
    }
    c.require(threw, "period_K at C = a(H) did not raise DegenerateParams");

    threw = false;
    try {
        coefficient_roots({0.0, 2.0});
    } catch (const DegenerateParams&) {
        threw = true;
    }
    c.require(threw, "coefficient_roots at the Clifford limit did not raise DegenerateParams");
}

}  // namespace

std::vector<CriterionResult> run_all() {
    struct Entry {
        int id;
        const char* name;
        void (*fn)(Check&);
        double budget_seconds;
    };
    const Entry entries[] = {
        {1, "period limits at H = 0", criterion_limits_h0, 5.0},
        {2, "rigidity at H = 1/sqrt(3)", criterion_rigidity, 5.0},
        {3, "monotonicity of the period", criterion_monotonicity, 30.0},
        {4, "existence and uniqueness for m = 2..6", criterion_existence_uniqueness, 30.0},
        {5, "oracle equivalence theta(T) = K", criterion_oracle_equivalence, 10.0},
        {6, "surface fidelity of the solved (H=1, m=3) torus", criterion_surface_fidelity, 60.0},
        {7, "interior ball curvature equals lambda1", criterion_ball_curvature, 60.0},
        {8, "negative controls", criterion_negative_controls, 60.0},
    };

    std::vector<CriterionResult> results;
    for (const Entry& e : entries) {
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            e.fn(check);
        } catch (const std::exception& ex) {
            check.require(false, std::string("exception: ") + ex.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > e.budget_seconds)
            check.require(false, "runtime " + num(r.seconds) + "s exceeds " +
                                     num(e.budget_seconds) + "s");
        r.passed = check.ok;
        r.detail = check.detail.str();
        results.push_back(std::move(r));
    }
    return results;
}

int run_and_report(std::ostream& os) {
    int failures = 0;
    for (const CriterionResult& r : run_all()) {
        char line[160];
        std::snprintf(line, sizeof(line), "%s  criterion %d: %s (%.2fs)",
                      r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
        os << line;
        if (!r.detail.empty()) os << "  [" << r.detail << "]";
        os << "\n";
        if (!r.passed) ++failures;
    }
    os.flush();
    return failures == 0 ? 0 : 1;
}

}  // namespace cmct::selftest
