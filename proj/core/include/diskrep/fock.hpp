#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "diskrep/geometry.hpp"
#include "diskrep/report.hpp"

namespace diskrep {

struct PlaneAtom {
    Complex location;
    Complex weight;
};

enum class PlaneDensityFamily { constant, gaussian_monomial };

/// Densities against plane Lebesgue measure dv:
///   constant          c
///   gaussian_monomial c w^m (alpha_d/pi) e^{-alpha_d |w|^2}  (g dlambda_alpha forms)
struct PlaneDensity {
    PlaneDensityFamily family = PlaneDensityFamily::constant;
    Complex coefficient{1.0, 0.0};
    double alpha = 1.0;
    int m = 0;

    Complex operator()(Complex w) const;
    double abs(Complex w) const;
    bool abs_is_radial() const { return true; }
};

/// Complex Borel measure on C: atoms plus density summands, evaluated inside
/// a truncation radius.
class PlaneMeasure {
public:
    PlaneMeasure() = default;
    PlaneMeasure(std::vector<PlaneAtom> atoms, std::vector<PlaneDensity> densities,
                 double truncation_radius = 12.0);
    static PlaneMeasure from_atoms(std::vector<PlaneAtom> atoms);
    static PlaneMeasure from_density(PlaneDensity density, double truncation_radius = 12.0);

    const std::vector<PlaneAtom>& atoms() const { return atoms_; }
    const std::vector<PlaneDensity>& densities() const { return densities_; }
    double truncation_radius() const { return truncation_radius_; }
    bool empty() const { return atoms_.empty() && densities_.empty(); }

    Complex density_value(Complex w) const;
    double density_abs(Complex w) const;

private:
    std::vector<PlaneAtom> atoms_;
    std::vector<PlaneDensity> densities_;
    double truncation_radius_ = 12.0;
};

/// Square grid with the given nearest-neighbor spacing covering |z| <= extent.
struct PlaneLattice {
    double spacing = 1.0;
    double extent = 8.0;
    std::vector<Complex> centers;
};
PlaneLattice build_plane_lattice(double spacing, double extent);

/*
 * Entire function produced by the exponential kernel
 *   f(z) = \int e^{alpha z conj(w) - alpha |w|^2 / 2} d mu(w).
 * The Gaussian-weighted form f(z) e^{-alpha|z|^2/2} has integrand modulus
 * <= e^{-alpha(|z|-|w|)^2/2}, so everything is evaluated through it and
 * converted back only on demand (log-magnitude arithmetic, no overflow).
 */
class FockFunction {
public:
    FockFunction(PlaneMeasure mu, double alpha);

    Complex operator()(Complex z) const;         // f(z); may overflow for huge |z|
    Complex weighted(Complex z) const;           // f(z) e^{-alpha |z|^2 / 2}
    double weighted_abs(Complex z) const;
    double alpha() const { return alpha_; }
    const PlaneMeasure& measure() const { return mu_; }

private:
    PlaneMeasure mu_;
    double alpha_ = 1.0;
};

/// Checks the truncation radius by extending it 25% and comparing; raises
/// TruncationError when the tail moves the synthesis beyond tol.
FockFunction synth_fock(PlaneMeasure mu, double alpha, double tol = 1e-9);

struct PlaneGridParams {
    double ds = 0.02;        // step in s = |z|^2
    int angular_nodes = 64;
    double rel_tol = 1e-3;
};

/// Truncated \int_{|z|<=R} (|f| e^{-alpha|z|^2/2})^p dv over the schedule
/// (running sup for p = infinity).
SeminormReport fock_norm(const FockFunction& f, double p,
                         const std::vector<double>& radius_schedule,
                         const PlaneGridParams& params = {});
SeminormReport fock_norm(const std::function<Complex(Complex)>& f, double p, double alpha,
                         const std::vector<double>& radius_schedule,
                         const PlaneGridParams& params = {});

/// max |f(z) - \int e^{alpha z conj(w)} f(w) dlambda_alpha(w)| over probes.
double fock_reproduce_residual(const std::function<Complex(Complex)>& f, double alpha, double R,
                               const std::vector<Complex>& probes);

/// Truncated L^p(dv) trace of z -> |mu|(D(z, r)) with Euclidean disks
/// (p = 1 converges to pi r^2 |mu|(C) for finite measures).
SeminormReport fock_localized_lp(const PlaneMeasure& mu, double r, double p,
                                 const std::vector<double>& radius_schedule,
                                 const PlaneGridParams& params = {});

/// \int |w|^{2m} dlambda_alpha = m! / alpha^m.
double gaussian_moment(int m, double alpha);

} // namespace diskrep
