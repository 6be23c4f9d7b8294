#pragma once

#include <stdexcept>

namespace cmct {

/// (H, C) outside the admissible parameter region C > 2(H + sqrt(1+H^2)).
/// Equality is the degenerate limit where the rotational family collapses
/// onto the Clifford torus.
struct DegenerateParams : std::domain_error {
    using std::domain_error::domain_error;
};

/// An integral could not be evaluated to the requested tolerance.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested symmetry order m has no solution at this mean curvature.
struct NotAdmissible : std::domain_error {
    using std::domain_error::domain_error;
};

/// Root bracketing for the period equation failed.
struct BracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mesh too small or too clustered for the requested scan.
struct DegenerateMesh : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// First fundamental form singular at the sample point.
struct DegenerateImmersion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Projection pole coincides with (or is too close to) a surface point.
struct PoleOnSurface : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Angular profile fails to close up after the requested number of periods.
struct ClosureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cmct
