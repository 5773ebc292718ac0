#pragma once

#include <functional>
#include <vector>

#include "diskrep/geometry.hpp"

namespace diskrep {

struct GaussLegendre {
    std::vector<double> nodes;    // on (0, 1)
    std::vector<double> weights;  // sum to 1
};

/// Cached Gauss-Legendre rule with n nodes, mapped to [0, 1].
const GaussLegendre& gauss_legendre(int n);

enum class DiskWeight {
    area,           // dA, normalized so the unit disk has mass 1
    weighted_area,  // dA_alpha = (alpha + 1) (1 - |z|^2)^alpha dA, alpha > -1
    invariant       // dlambda = dA / (1 - |z|^2)^2
};

/*
 * Polar product rule. In t = |z|^2 the normalized area measure is
 * dA = dt dtheta / (2 pi); Gauss-Legendre handles the radial factor and the
 * uniform trapezoid rule is spectrally accurate in the periodic angle.
 * Truncation at rho < 1 is always explicit; divergence detection is the
 * caller's business.
 */
struct QuadratureScheme {
    int radial_nodes = 96;
    int angular_nodes = 256;
    double rho = 1.0 - 1e-9;
    double tol = 1e-9;
    double alpha = 0.0;  // exponent for DiskWeight::weighted_area
};

Complex integrate_disk(const std::function<Complex(Complex)>& f, DiskWeight weight,
                       const QuadratureScheme& scheme);

/// As integrate_disk, but re-runs at double resolution and raises
/// QuadratureError (carrying the refined estimate) if the results disagree
/// beyond scheme.tol.
Complex integrate_disk_checked(const std::function<Complex(Complex)>& f, DiskWeight weight,
                               const QuadratureScheme& scheme);

/// Integral of f over a Euclidean disk against normalized area measure.
Complex integrate_pseudo_disk(const std::function<Complex(Complex)>& f,
                              const EuclideanDisk& disk, const QuadratureScheme& scheme);

Complex integrate_pseudo_disk_checked(const std::function<Complex(Complex)>& f,
                                      const EuclideanDisk& disk, const QuadratureScheme& scheme);

/// Angular mean of |1 - tau e^{i theta}|^{-b} over a full turn, evaluated by
/// the hypergeometric series sum_k [(b/2)_k / k!]^2 tau^{2k}; free of the
/// aliasing a trapezoid rule suffers when tau -> 1.
double angular_mean_inv_power(double b, double tau);

/// \int |w|^{2k} (1 - |w|^2)^N dA = k! N! / (k + N + 1)!  (exact form).
double moment(int k, int N);

/// \int_0^1 t^{a-1} (1 - t)^{b-1} dt (Euler beta; a, b > 0).
double beta_moment(double a, double b);

} // namespace diskrep
