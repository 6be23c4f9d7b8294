#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include "cmctori/classify.hpp"
#include "cmctori/errors.hpp"
#include "cmctori/period.hpp"
#include "cmctori/surface_io.hpp"
#include "support/oracles.hpp"

using namespace cmct;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("clifford meshes carry the exact product-torus data") {
    const SurfaceMesh minimal = generate_clifford(1.0 / std::numbers::sqrt2, 32, 32);
    CHECK(minimal.closed_u);
    CHECK(minimal.closed_v);
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        CHECK(std::fabs(norm(minimal.points[k].position) - 1.0) < 1e-15);
        CHECK(minimal.lambda1[k] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(minimal.lambda2[k] == doctest::Approx(-1.0).epsilon(1e-14));
    }

    const SurfaceMesh half = generate_clifford(0.5, 16, 16);
    CHECK(0.5 * (half.lambda1[0] + half.lambda2[0]) ==
          doctest::Approx(1.0 / std::numbers::sqrt3).epsilon(1e-14));

    CHECK_THROWS_AS(generate_clifford(0.0, 16, 16), std::invalid_argument);
    CHECK_THROWS_AS(generate_clifford(1.0, 16, 16), std::invalid_argument);
}

TEST_CASE("generated torus closes only at the solved parameter") {
    const TorusSpec spec = solve_C_for_m(1.0, 3);
    const SurfaceMesh mesh = generate_torus(1.0, spec.C, 3, 96, 64);
    CHECK(mesh.closed_u);
    CHECK(mesh.closed_v);

    CHECK_THROWS_AS(generate_torus(1.0, spec.C + 0.3, 2, 96, 64), ClosureFailure);
    const SurfaceMesh open =
        generate_torus(1.0, spec.C + 0.3, 2, 96, 64, 1e-8, ClosurePolicy::allow_open);
    CHECK_FALSE(open.closed_u);

    CHECK_THROWS_AS(generate_torus(1.0, lower_bound_C(1.0), 3, 96, 64), DegenerateParams);
    CHECK_THROWS_AS(generate_torus(1.0, spec.C, 3, 4, 64), std::invalid_argument);
}

TEST_CASE("mesh nodes satisfy the sphere-point invariants") {
    const TorusSpec spec = solve_C_for_m(1.0, 3);
    const SurfaceMesh mesh = generate_torus(1.0, spec.C, 3, 96, 64);
    double worst = 0.0;
    for (const SpherePoint& sp : mesh.points) {
        worst = std::max(worst, std::fabs(norm(sp.position) - 1.0));
        worst = std::max(worst, std::fabs(norm(sp.normal) - 1.0));
        worst = std::max(worst, std::fabs(dot(sp.position, sp.normal)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("rotational and discrete symmetries of the generated mesh") {
    const TorusSpec spec = solve_C_for_m(1.0, 3);
    const SurfaceMesh mesh = generate_torus(1.0, spec.C, 3, 96, 64);

    // Rotation by one v step in the (x1, x2)-plane permutes the nodes.
    const double dv = mesh.v_extent / mesh.nv;
    const double c = std::cos(dv), s = std::sin(dv);
    for (int iu = 0; iu < mesh.nu; iu += 13) {
        for (int iv = 0; iv < mesh.nv; iv += 7) {
            const Vec4& p = mesh.at(iu, iv).position;
            const Vec4 rotated{c * p[0] - s * p[1], s * p[0] + c * p[1], p[2], p[3]};
            const Vec4& q = mesh.at(iu, (iv + 1) % mesh.nv).position;
            CHECK(norm(rotated - q) < 1e-12);
        }
    }

    // u-shift by one profile period combined with rotation by 2 pi / m in the
    // (x3, x4)-plane maps the node set to itself.
    const int shift = mesh.nu / 3;
    const double ang = kTwoPi / 3.0;
    const double cm = std::cos(ang), sm = std::sin(ang);
    for (int iu = 0; iu < mesh.nu - shift; iu += 11) {
        for (int iv = 0; iv < mesh.nv; iv += 17) {
            const Vec4& p = mesh.at(iu, iv).position;
            const Vec4 rotated{p[0], p[1], cm * p[2] - sm * p[3], sm * p[2] + cm * p[3]};
            const Vec4& q = mesh.at(iu + shift, iv).position;
            CHECK(norm(rotated - q) < 1e-8);
        }
    }
}

TEST_CASE("verification passes on generated surfaces and fails on perturbed ones") {
    const TorusSpec spec = solve_C_for_m(1.0, 3);
    const SurfaceMesh mesh = generate_torus(1.0, spec.C, 3, 192, 128);
    const VerificationReport rep = verify_mesh(mesh, 1.0, 200000);
    CHECK(rep.passed);
    CHECK(rep.max_unit_norm_residual < 1e-12);
    CHECK(rep.max_first_integral_residual < 1e-10);
    CHECK(rep.max_simons_residual < 1e-9);
    CHECK(rep.theta_closure_residual < 1e-8);
    CHECK(rep.min_mu > 0.0);
    CHECK(rep.min_z >= -1e-6);
    CHECK(rep.min_pair_distance > 0.0);

    const SurfaceMesh clifford = generate_clifford(1.0 / std::numbers::sqrt2, 128, 128);
    const VerificationReport crep = verify_mesh(clifford, 0.0, 200000);
    CHECK(crep.passed);
    CHECK(crep.min_z >= -1e-9);

    SurfaceMesh broken = generate_clifford(1.0 / std::numbers::sqrt2, 128, 128);
    for (std::size_t k = 0; k < broken.size(); ++k)
        broken.points[k].position += 1e-3 * broken.points[k].normal;
    const VerificationReport brep = verify_mesh(broken, 0.0, 100000);
    CHECK(brep.max_mean_curvature_residual > 1e-3);
    CHECK_FALSE(brep.passed);
}

TEST_CASE("residuals do not grow when the resolution doubles") {
    const TorusSpec spec = solve_C_for_m(1.0, 3);
    const VerificationReport lo = verify_mesh(generate_torus(1.0, spec.C, 3, 96, 64), 1.0, 50000);
    const VerificationReport hi =
        verify_mesh(generate_torus(1.0, spec.C, 3, 192, 128), 1.0, 50000);
    const auto bounded = [](double coarse, double fine) {
        return std::max(fine, 1e-13) <= 2.0 * std::max(coarse, 1e-13);
    };
    CHECK(bounded(lo.max_unit_norm_residual, hi.max_unit_norm_residual));
    CHECK(bounded(lo.max_mean_curvature_residual, hi.max_mean_curvature_residual));
    CHECK(bounded(lo.max_first_integral_residual, hi.max_first_integral_residual));
    CHECK(bounded(lo.max_simons_residual, hi.max_simons_residual));
    CHECK(bounded(lo.theta_closure_residual, hi.theta_closure_residual));
}

TEST_CASE("CSV export round-trips bit-exactly") {
    const SurfaceMesh mesh = generate_clifford(0.5, 24, 16);
    const std::string path = temp_path("cmctori_roundtrip.csv");
    export_mesh(mesh, MeshFormat::csv, path);
    const SurfaceMesh back = import_mesh_csv(path);
    REQUIRE(back.nu == mesh.nu);
    REQUIRE(back.nv == mesh.nv);
    CHECK(back.closed_u == mesh.closed_u);
    CHECK(back.closed_v == mesh.closed_v);
    CHECK(back.u_extent == doctest::Approx(mesh.u_extent).epsilon(1e-14));
    for (std::size_t k = 0; k < mesh.size(); ++k) {
        for (int c = 0; c < 4; ++c) {
            CHECK(back.points[k].position[c] == mesh.points[k].position[c]);
            CHECK(back.points[k].normal[c] == mesh.points[k].normal[c]);
        }
        CHECK(back.lambda1[k] == mesh.lambda1[k]);
        CHECK(back.lambda2[k] == mesh.lambda2[k]);
    }
    std::remove(path.c_str());
}

TEST_CASE("OBJ export: counts, determinism, and the projected profile circles") {
    const SurfaceMesh mesh = generate_clifford(1.0 / std::numbers::sqrt2, 48, 48);
    const std::string path = temp_path("cmctori_export.obj");
    export_mesh(mesh, MeshFormat::obj_stereographic, path);

    std::size_t vcount = 0, fcount = 0;
    std::vector<std::array<double, 3>> verts;
    {
        std::ifstream ifs(path);
        std::string line;
        while (std::getline(ifs, line)) {
            if (line.rfind("v ", 0) == 0) {
                ++vcount;
                std::array<double, 3> v{};
                std::sscanf(line.c_str(), "v %lf %lf %lf", &v[0], &v[1], &v[2]);
                verts.push_back(v);
            } else if (line.rfind("f ", 0) == 0) {
                ++fcount;
            }
        }
    }
    CHECK(vcount == mesh.size());
    CHECK(fcount == 2 * mesh.size());

    // Deterministic output for fixed input.
    const std::string path2 = temp_path("cmctori_export_again.obj");
    export_mesh(mesh, MeshFormat::obj_stereographic, path2);
    std::ifstream a(path, std::ios::binary), b(path2, std::ios::binary);
    const std::string bytes_a((std::istreambuf_iterator<char>(a)), {});
    const std::string bytes_b((std::istreambuf_iterator<char>(b)), {});
    CHECK(bytes_a == bytes_b);
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("projection of the square torus from a coordinate pole is a torus of revolution") {
    const SurfaceMesh mesh = generate_clifford(1.0 / std::numbers::sqrt2, 48, 48);
    const ProjectedMesh pm = stereographic_project(mesh, {0.0, 0.0, 0.0, 1.0});
    // The image is rotationally symmetric about the third axis; every profile
    // section (distance to the axis, height) must land on one circle.
    std::vector<std::array<double, 2>> profile;
    for (const auto& v : pm.vertices)
        profile.push_back({std::hypot(v[0], v[1]), v[2]});
    const auto fit = oracles::fit_circle(profile);
    CHECK(fit.max_residual < 1e-6);
}

TEST_CASE("csv import rejects malformed files") {
    const std::string path = temp_path("cmctori_bad.csv");
    {
        std::ofstream ofs(path);
        ofs << "u,v,x1,x2,x3,x4,n1,n2,n3,n4,lambda1,lambda2\n";
        ofs << "0,0,1,0,0\n";
    }
    CHECK_THROWS(import_mesh_csv(path));
    std::remove(path.c_str());
    CHECK_THROWS(import_mesh_csv(temp_path("cmctori_missing_file.csv")));
}
