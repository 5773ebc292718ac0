#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "diskrep/geometry.hpp"
#include "diskrep/report.hpp"

namespace diskrep {

/*
 * Nested midpoint rule for truncated integrals against the invariant measure
 * dlambda = dA/(1-|z|^2)^2. In the coordinate u = 1/(1 - |z|^2) the measure
 * is dlambda = du dtheta/(2 pi); levels are uniform in log u, so schedule
 * prefixes are exact partial sums of one fixed discretization (no
 * inter-shell jitter in the trend) and deep schedules cost O(log u) levels.
 * Angular samples get a golden-ratio offset per level so fine angular
 * structure near the rim is equidistributed rather than aliased.
 */
struct LambdaGridParams {
    double dx = 0.01;        // step in log u
    int angular_nodes = 256; // base angular count (innermost levels)
    double rel_tol = 1e-3;   // forwarded to the trend classifier
    // Angular structure near the rim lives at scale 1/u, so levels deepen
    // their angular grids proportionally, up to the cap.
    bool adaptive_angular = true;
    int max_angular = 8192;
};

/// Truncated \int_{|z|<=rho} field(z) dlambda(z) for every rho in the
/// schedule, classified. The field must be pointwise >= 0.
SeminormReport lambda_profile_report(const std::function<double(Complex)>& field,
                                     const std::vector<double>& rho_schedule,
                                     const LambdaGridParams& params = {});

/// Running sup of the field over {|z| <= rho}; the origin is always probed.
SeminormReport sup_profile_report(const std::function<double(Complex)>& field,
                                  const std::vector<double>& rho_schedule,
                                  const LambdaGridParams& params = {});

/// True when the running-sup trace grows by less than growth_tol over its
/// last three shells (a bounded sup-seminorm profile).
bool bounded_profile(const SeminormReport& sup_report, double growth_tol = 0.05);

/// Radius-cache comparator for radial fields: grid points on one level agree
/// in |z|^2 only up to rounding, while adjacent levels differ by far more.
inline bool same_radius_key(double a, double b) {
    return std::abs(a - b) <= 1e-13 * (1.0 + std::abs(b));
}

} // namespace diskrep
