// Command-line interface: classification, mesh generation, period tables,
// mesh verification, and the built-in acceptance suite.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmctori/classify.hpp"
#include "cmctori/config.hpp"
#include "cmctori/errors.hpp"
#include "cmctori/period.hpp"
#include "cmctori/selftest.hpp"
#include "cmctori/surface_io.hpp"

namespace {

using nlohmann::ordered_json;

double json_safe(double x) {
    if (std::isfinite(x)) return x;
    return x > 0 ? 1e308 : -1e308;
}

cmct::Tolerances load_config_file(const std::string& path) {
    std::ifstream ifs(path);
    if (!ifs) throw std::invalid_argument("cannot open config file " + path);
    nlohmann::json j;
    ifs >> j;
    cmct::Tolerances tol;
    tol.geometric = j.value("geometric", tol.geometric);
    tol.simons = j.value("simons", tol.simons);
    tol.closure = j.value("closure", tol.closure);
    tol.finite_difference = j.value("finite_difference", tol.finite_difference);
    tol.z_scan = j.value("z_scan", tol.z_scan);
    return tol;
}

int run_classify(double H, bool as_json) {
    const cmct::ClassificationReport rep = cmct::classify(H);
    if (as_json) {
        ordered_json j;
        j["H"] = rep.H;
        j["cliffordRadius"] = rep.clifford_radius;
        j["rigid"] = rep.rigid;
        j["tori"] = ordered_json::array();
        for (const cmct::TorusSpec& s : rep.tori)
            j["tori"].push_back(ordered_json{{"m", s.m}, {"C", s.C}, {"K", s.K}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("H = %.12g\n", rep.H);
        std::printf("clifford radius = %.12g\n", rep.clifford_radius);
        if (rep.rigid) {
            std::printf("rigid: the Clifford torus is the only embedded CMC torus here\n");
        } else {
            for (const cmct::TorusSpec& s : rep.tori)
                std::printf("m = %d:  C = %.12g  K = %.12g\n", s.m, s.C, s.K);
        }
    }
    return 0;
}

int run_generate(double H, int m, int nu, int nv, const std::string& out,
                 const std::string& format, const cmct::Tolerances& tol) {
    const cmct::TorusSpec spec = cmct::solve_C_for_m(H, m);
    if (nu <= 0) nu = 128 * m;
    if (nv <= 0) nv = 256;
    const cmct::SurfaceMesh mesh =
        cmct::generate_torus(H, spec.C, m, nu, nv, tol.closure);
    cmct::export_mesh(mesh,
                      format == "obj" ? cmct::MeshFormat::obj_stereographic
                                      : cmct::MeshFormat::csv,
                      out);
    std::fprintf(stderr, "solved C = %.15g (K = %.15g), wrote %s\n", spec.C, spec.K,
                 out.c_str());
    return 0;
}

int run_period_table(double H, double cmin, double cmax, int steps, const std::string& out) {
    if (steps < 2) throw std::invalid_argument("period-table: steps must be >= 2");
    if (!(cmin > cmct::lower_bound_C(H)))
        throw std::invalid_argument("period-table: cmin must exceed the lower bound " +
                                    std::to_string(cmct::lower_bound_C(H)));
    if (!(cmax > cmin)) throw std::invalid_argument("period-table: cmax must exceed cmin");

    std::ofstream ofs(out, std::ios::binary);
    if (!ofs) throw std::runtime_error("period-table: cannot open " + out);
    ofs << "H,C,K,err\n";
    int violations = 0;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < steps; ++i) {
        const double C = cmin + (cmax - cmin) * i / (steps - 1);
        const cmct::PeriodEval pe = cmct::period_K(H, C);
        if (!(pe.value < prev)) ++violations;
        prev = pe.value;
        char line[160];
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.3e\n", H, C, pe.value,
                      pe.error_estimate);
        ofs << line;
    }
    ordered_json j;
    j["H"] = H;
    j["cmin"] = cmin;
    j["cmax"] = cmax;
    j["steps"] = steps;
    j["limitAtLowerBound"] = cmct::limit_K_at_lower(H);
    j["limitAtInfinity"] = cmct::limit_K_at_infinity(H);
    j["monotonicityViolations"] = violations;
    std::cout << j.dump(2) << "\n";
    return violations == 0 ? 0 : 1;
}

int run_verify(const std::string& in, double H, long long pairs,
               const cmct::Tolerances& tol) {
    const cmct::SurfaceMesh mesh = cmct::import_mesh_csv(in);
    const cmct::VerificationReport rep = cmct::verify_mesh(mesh, H, pairs, tol);
    ordered_json j;
    j["maxUnitNormResidual"] = json_safe(rep.max_unit_norm_residual);
    j["maxMeanCurvatureResidual"] = json_safe(rep.max_mean_curvature_residual);
    j["minMu"] = json_safe(rep.min_mu);
    j["maxFirstIntegralResidual"] = json_safe(rep.max_first_integral_residual);
    j["maxSimonsResidual"] = json_safe(rep.max_simons_residual);
    j["thetaClosureResidual"] = json_safe(rep.theta_closure_residual);
    j["minZ"] = json_safe(rep.min_z);
    j["minPairDistance"] = json_safe(rep.min_pair_distance);
    j["passed"] = rep.passed;
    std::cout << j.dump(2) << "\n";
    return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Embedded constant-mean-curvature tori in the unit 3-sphere: "
                 "classification, construction, and numerical verification"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON file with tolerance overrides")
        ->expected(1);
    const double unset = std::numeric_limits<double>::quiet_NaN();
    cmct::Tolerances flag_tol{unset, unset, unset, unset, unset};
    app.add_option("--geometric-tol", flag_tol.geometric, "geometric identity tolerance")
        ->envname("CMCT_GEOMETRIC_TOL");
    app.add_option("--simons-tol", flag_tol.simons, "Simons residual tolerance")
        ->envname("CMCT_SIMONS_TOL");
    app.add_option("--closure-tol", flag_tol.closure, "theta closure tolerance")
        ->envname("CMCT_CLOSURE_TOL");
    app.add_option("--fd-tol", flag_tol.finite_difference,
                   "finite-difference curvature tolerance")
        ->envname("CMCT_FD_TOL");
    app.add_option("--zscan-tol", flag_tol.z_scan, "lower bound for the Z scan minimum")
        ->envname("CMCT_ZSCAN_TOL");

    auto* cmd_classify = app.add_subcommand("classify", "classify embedded CMC tori at H");
    double H = 0.0;
    bool as_json = false;
    cmd_classify->add_option("--H", H, "mean curvature, H >= 0")->required();
    cmd_classify->add_flag("--json", as_json, "machine-readable output");

    auto* cmd_generate = app.add_subcommand("generate", "solve for C and sample the torus");
    double gen_H = 0.0;
    int gen_m = 0, gen_nu = 0, gen_nv = 0;
    std::string gen_out, gen_format = "csv";
    cmd_generate->add_option("--H", gen_H, "mean curvature")->required();
    cmd_generate->add_option("--m", gen_m, "discrete symmetry order, m >= 2")->required();
    cmd_generate->add_option("--nu", gen_nu, "profile samples (default 128 m)");
    cmd_generate->add_option("--nv", gen_nv, "rotation samples (default 256)");
    cmd_generate->add_option("--out", gen_out, "output path")->required();
    cmd_generate->add_option("--format", gen_format, "csv or obj")
        ->check(CLI::IsMember({"csv", "obj"}));

    auto* cmd_table = app.add_subcommand("period-table", "tabulate K(H, C) over a C range");
    double tab_H = 0.0, tab_cmin = 0.0, tab_cmax = 0.0;
    int tab_steps = 50;
    std::string tab_out;
    cmd_table->add_option("--H", tab_H, "mean curvature")->required();
    cmd_table->add_option("--cmin", tab_cmin, "first C value")->required();
    cmd_table->add_option("--cmax", tab_cmax, "last C value")->required();
    cmd_table->add_option("--steps", tab_steps, "number of C samples");
    cmd_table->add_option("--out", tab_out, "CSV output path")->required();

    auto* cmd_verify = app.add_subcommand("verify", "verify a mesh CSV against expected H");
    std::string ver_in;
    double ver_H = 0.0;
    long long ver_pairs = 1000000;
    cmd_verify->add_option("--in", ver_in, "mesh CSV path")->required();
    cmd_verify->add_option("--H", ver_H, "expected mean curvature")->required();
    cmd_verify->add_option("--pairs", ver_pairs, "Z-scan pair budget");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cmct::Tolerances tol;
        if (!config_path.empty()) tol = load_config_file(config_path);
        if (!std::isnan(flag_tol.geometric)) tol.geometric = flag_tol.geometric;
        if (!std::isnan(flag_tol.simons)) tol.simons = flag_tol.simons;
        if (!std::isnan(flag_tol.closure)) tol.closure = flag_tol.closure;
        if (!std::isnan(flag_tol.finite_difference))
            tol.finite_difference = flag_tol.finite_difference;
        if (!std::isnan(flag_tol.z_scan)) tol.z_scan = flag_tol.z_scan;

        if (cmd_classify->parsed()) return run_classify(H, as_json);
        if (cmd_generate->parsed())
            return run_generate(gen_H, gen_m, gen_nu, gen_nv, gen_out, gen_format, tol);
        if (cmd_table->parsed())
            return run_period_table(tab_H, tab_cmin, tab_cmax, tab_steps, tab_out);
        if (cmd_verify->parsed()) return run_verify(ver_in, ver_H, ver_pairs, tol);
        if (cmd_selftest->parsed()) return cmct::selftest::run_and_report(std::cout);
    } catch (const cmct::QuadratureFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const cmct::ClosureFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
