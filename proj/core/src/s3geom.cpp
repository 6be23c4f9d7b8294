#include "cmctori/s3geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cmct {

double interior_ball_curvature(const SurfaceMesh& mesh, std::size_t node_index) {
    if (node_index >= mesh.size())
        throw std::out_of_range("interior_ball_curvature: node index out of range");
    const SpherePoint& x = mesh.points[node_index];
    const double h = mesh.spacing();
    const double exclusion = (2.0 * h) * (2.0 * h);

    double sup = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t j = 0; j < mesh.size(); ++j) {
        if (j == node_index) continue;
        const SpherePoint& y = mesh.points[j];
        const double gap = 1.0 - dot(x.position, y.position);
        if (gap < exclusion) continue;
        any = true;
        sup = std::max(sup, -dot(y.position, x.normal) / gap);
    }
    if (!any)
        throw DegenerateMesh("interior_ball_curvature: every node lies in the exclusion "
                             "neighbourhood; refine the mesh");
    return std::max(mesh.lambda1[node_index], sup);
}

PrincipalCurvatures principal_curvatures(const std::function<Vec4(double, double)>& immersion,
                                         double u, double v, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("principal_curvatures: step must be > 0");
    const double h = step;

    const Vec4 f00 = immersion(u, v);
    if (std::fabs(norm(f00) - 1.0) >= h * h)
        throw std::invalid_argument("principal_curvatures: immersion does not map into the "
                                    "unit sphere at the requested accuracy");

    const Vec4 fpu = immersion(u + h, v), fmu = immersion(u - h, v);
    const Vec4 fpv = immersion(u, v + h), fmv = immersion(u, v - h);
    const Vec4 fpp = immersion(u + h, v + h), fpm = immersion(u + h, v - h);
    const Vec4 fmp = immersion(u - h, v + h), fmm = immersion(u - h, v - h);

    const Vec4 fu = (fpu - fmu) * (0.5 / h);
    const Vec4 fv = (fpv - fmv) * (0.5 / h);
    const Vec4 fuu = (fpu - 2.0 * f00 + fmu) * (1.0 / (h * h));
    const Vec4 fvv = (fpv - 2.0 * f00 + fmv) * (1.0 / (h * h));
    const Vec4 fuv = (fpp - fpm - fmp + fmm) * (0.25 / (h * h));

    const double E = dot(fu, fu);
    const double F = dot(fu, fv);
    const double G = dot(fv, fv);
    const double W = E * G - F * F;
    if (!(W > 1e-12 * (E + G) * (E + G)))
        throw DegenerateImmersion("principal_curvatures: first fundamental form singular");

    Vec4 nu = cross4(f00, fu, fv);
    const double nn = norm(nu);
    if (!(nn > 0.0))
        throw DegenerateImmersion("principal_curvatures: normal direction undefined");
    nu *= 1.0 / nn;

    const double e = dot(fuu, nu);
    const double f2 = dot(fuv, nu);
    const double g2 = dot(fvv, nu);

    double trace = (e * G - 2.0 * f2 * F + g2 * E) / W;
    const double det = (e * g2 - f2 * f2) / W;
    // Flipping the normal negates both eigenvalues and leaves det unchanged,
    // so taking |trace| realizes the mean-curvature >= 0 convention.
    trace = std::fabs(trace);
    const double s = std::sqrt(std::max(0.25 * trace * trace - det, 0.0));
    return {0.5 * trace + s, 0.5 * trace - s, 0.5 * trace};
}

ProjectedMesh stereographic_project(const SurfaceMesh& mesh, const Vec4& pole) {
    const Vec4 p = normalized(pole);
    const double cos_min_angle = std::cos(1e-3);

    // Deterministic orthonormal basis of the pole's orthogonal complement:
    // drop the standard axis most aligned with the pole, Gram-Schmidt the rest.
    std::size_t drop = 0;
    for (std::size_t k = 1; k < 4; ++k)
        if (std::fabs(p[k]) > std::fabs(p[drop])) drop = k;
    std::array<Vec4, 3> basis;
    std::size_t nb = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (k == drop) continue;
        Vec4 b;
        b[k] = 1.0;
        b -= dot(b, p) * p;
        for (std::size_t i = 0; i < nb; ++i) b -= dot(b, basis[i]) * basis[i];
        basis[nb++] = normalized(b);
    }

    ProjectedMesh out;
    out.vertices.reserve(mesh.size());
    for (const SpherePoint& sp : mesh.points) {
        const double c = dot(sp.position, p);
        if (c > cos_min_angle)
            throw PoleOnSurface("stereographic_project: pole within angular distance 1e-3 "
                                "of a mesh node");
        const double inv = 1.0 / (1.0 - c);
        out.vertices.push_back({dot(sp.position, basis[0]) * inv,
                                dot(sp.position, basis[1]) * inv,
                                dot(sp.position, basis[2]) * inv});
    }

    const int iu_max = mesh.closed_u ? mesh.nu : mesh.nu - 1;
    const int iv_max = mesh.closed_v ? mesh.nv : mesh.nv - 1;
    for (int iu = 0; iu < iu_max; ++iu) {
        const int iu1 = (iu + 1) % mesh.nu;
        for (int iv = 0; iv < iv_max; ++iv) {
            const int iv1 = (iv + 1) % mesh.nv;
            const int a = static_cast<int>(mesh.index(iu, iv));
            const int b = static_cast<int>(mesh.index(iu1, iv));
            const int c = static_cast<int>(mesh.index(iu1, iv1));
            const int d = static_cast<int>(mesh.index(iu, iv1));
            out.triangles.push_back({a, b, c});
            out.triangles.push_back({a, c, d});
        }
    }
    return out;
}

}  // namespace cmct
