#pragma once

namespace cmct {

/// Verification tolerances. Defaults match config/tolerances.json; every field
/// can be overridden per call (library) or per run (CLI flags, CMCT_* env).
struct Tolerances {
    double geometric = 1e-10;          ///< unit norms, orthogonality, first integrals
    double simons = 1e-9;              ///< Simons-identity residual
    double closure = 1e-8;             ///< |theta(m T) - 2 pi|
    double finite_difference = 1e-5;   ///< mean-curvature comparisons
    double z_scan = -1e-6;             ///< admissible lower bound for the Z minimum
};

}  // namespace cmct
