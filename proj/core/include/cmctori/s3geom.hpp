#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "cmctori/errors.hpp"
#include "cmctori/vec4.hpp"

namespace cmct {

/// A surface sample: position on the unit 3-sphere and the unit normal,
/// tangent to S^3 at the position (|F| = 1, |nu| = 1, F . nu = 0).
struct SpherePoint {
    Vec4 position;
    Vec4 normal;
};

/// Regular parameter grid over a surface patch or closed surface in S^3,
/// row-major with the u index outermost. The grid is half-open: node (i, j)
/// sits at (i * u_extent / nu, j * v_extent / nv).
struct SurfaceMesh {
    int nu = 0;
    int nv = 0;
    double u_extent = 0.0;
    double v_extent = 0.0;
    bool closed_u = false;
    bool closed_v = false;
    std::vector<SpherePoint> points;
    std::vector<double> lambda1;  ///< larger principal curvature per node
    std::vector<double> lambda2;

    std::size_t index(int iu, int iv) const {
        return static_cast<std::size_t>(iu) * static_cast<std::size_t>(nv) +
               static_cast<std::size_t>(iv);
    }
    const SpherePoint& at(int iu, int iv) const { return points[index(iu, iv)]; }
    SpherePoint& at(int iu, int iv) { return points[index(iu, iv)]; }
    double u(int iu) const { return u_extent * iu / nu; }
    double v(int iv) const { return v_extent * iv / nv; }
    double du() const { return u_extent / nu; }
    double dv() const { return v_extent / nv; }
    /// Parameter-space grid spacing, the larger of the two steps.
    double spacing() const { return du() > dv() ? du() : dv(); }
    std::size_t size() const { return points.size(); }
};

/// Z(phi, x, y) = phi (1 - F(x).F(y)) + F(y).nu(x).
/// Nonnegativity over all y is equivalent to an enclosed ball of boundary
/// curvature phi touching the surface at x. Not symmetric in (x, y).
inline double z_value(double phi, const SpherePoint& x, const SpherePoint& y) {
    return phi * (1.0 - dot(x.position, y.position)) + dot(y.position, x.normal);
}

/// Sampled interior ball curvature at one node:
///   max( lambda1(x), sup_y -F(y).nu(x) / (1 - F(x).F(y)) )
/// over mesh nodes y outside the exclusion neighbourhood
/// 1 - F(x).F(y) >= (2 * spacing)^2; near the diagonal the quotient is a 0/0
/// form whose limit is a normal curvature, and lambda1 stands in for it.
/// Throws DegenerateMesh when every y is excluded.
double interior_ball_curvature(const SurfaceMesh& mesh, std::size_t node_index);

struct PrincipalCurvatures {
    double lambda1;  ///< larger principal curvature
    double lambda2;
    double mean;     ///< (lambda1 + lambda2) / 2
};

/// Principal curvatures of an immersion (u,v) -> S^3 by second-order central
/// differences of step `step`. The normal is the unit 4-vector orthogonal to
/// F, F_u and F_v, with the sign fixed so the mean curvature is >= 0.
/// Throws DegenerateImmersion when the first fundamental form is singular.
PrincipalCurvatures principal_curvatures(const std::function<Vec4(double, double)>& immersion,
                                         double u, double v, double step);

struct ProjectedMesh {
    std::vector<std::array<double, 3>> vertices;  ///< one per mesh node, same order
    std::vector<std::array<int, 3>> triangles;    ///< grid quads split in two
};

/// Stereographic projection of the mesh from `pole` (a unit 4-vector) onto
/// R^3, using a deterministic orthonormal basis of the pole's complement.
/// Throws PoleOnSurface if any node is within angular distance 1e-3 of pole.
ProjectedMesh stereographic_project(const SurfaceMesh& mesh, const Vec4& pole);

}  // namespace cmct
