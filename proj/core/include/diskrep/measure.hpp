#pragma once

#include <optional>
#include <vector>

#include "diskrep/disk_integrals.hpp"
#include "diskrep/geometry.hpp"
#include "diskrep/lattice.hpp"
#include "diskrep/quadrature.hpp"
#include "diskrep/report.hpp"

namespace diskrep {

struct Atom {
    Complex location;
    Complex weight;
};

enum class DensityFamily { constant, power, monomial_power, bloch_log, log_weight };

/*
 * Named analytic densities against normalized area measure. Near-boundary
 * behavior drives everything here, so densities are closed forms rather than
 * grids:
 *   constant        c
 *   power           c (1-|w|^2)^a
 *   monomial_power  c w^m (1-|w|^2)^N            (m = -1 selects |w|/w)
 *   bloch_log       c (1-|w|^2)/|1-w|^2          ((1-|w|^2)|f'|^2, f = log 1/(1-w))
 *   log_weight      c log(1/(1-|w|^2)) (1-|w|^2)^a
 * Every family carries an extra (1-|w|^2)^extra_power factor so measures stay
 * closed under the (1-|w|^2)^e reweighting.
 */
struct Density {
    DensityFamily family = DensityFamily::constant;
    Complex coefficient{1.0, 0.0};
    double a = 0.0;
    int m = 0;
    int N = 0;
    double extra_power = 0.0;

    Complex operator()(Complex w) const;
    double abs(Complex w) const;
    bool abs_is_radial() const;
    double radial_abs(double t) const;  // |density| at |w|^2 = t, radial families only
    int angular_mode() const;           // e^{i m theta} mode; large sentinel when mixed
};

/// Complex Borel measure on the disk: finitely many atoms plus density summands.
class Measure {
public:
    Measure() = default;
    Measure(std::vector<Atom> atoms, std::vector<Density> densities);
    static Measure from_atoms(std::vector<Atom> atoms);
    static Measure from_density(Density density);
    static Measure unit_atom(Complex location);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Density>& densities() const { return densities_; }
    bool empty() const { return atoms_.empty() && densities_.empty(); }

    Complex density_value(Complex w) const;   // pointwise sum of density summands
    double density_abs(Complex w) const;      // |sum| (total-variation density)
    bool density_abs_is_radial() const;
    double density_radial_abs(double t) const;

    Measure scaled(Complex factor) const;
    Measure plus(const Measure& other) const;
    Measure weighted_by_power(double exponent) const;  // d mu -> (1-|w|^2)^e d mu

private:
    std::vector<Atom> atoms_;
    std::vector<Density> densities_;
};

/// Capture-disk index: atom a is inside D(z, r) exactly when z lies in the
/// Euclidean realization of D(a, r), so localized sums become point queries.
class CapturedAtomIndex {
public:
    CapturedAtomIndex() = default;
    CapturedAtomIndex(const std::vector<Atom>& atoms, double r, int grid = 512);
    double variation_at(Complex z) const;
    Complex value_at(Complex z) const;
    double support_radius() const { return support_radius_; }

private:
    struct Entry {
        Complex center;
        double radius = 0.0;
        Complex weight;
        double abs_weight = 0.0;
    };
    template <typename F> void scan(Complex z, F&& f) const;
    std::vector<Entry> entries_;
    std::vector<std::vector<std::uint32_t>> cells_;
    int grid_ = 0;
    double support_radius_ = 0.0;
};

inline QuadratureScheme pseudo_disk_scheme() {
    return QuadratureScheme{48, 96, 1.0 - 1e-9, 1e-8, 0.0};
}

/// mu(D(z, r)); atoms counted by strict pseudo-distance, densities integrated
/// over the Euclidean realization (tolerance-checked).
Complex localized(const Measure& mu, double r, Complex z,
                  const QuadratureScheme& scheme = pseudo_disk_scheme());
/// |mu|(D(z, r)).
double localized_variation(const Measure& mu, double r, Complex z,
                           const QuadratureScheme& scheme = pseudo_disk_scheme());
/// |mu|(D(z, r)) / (1 - |z|^2)^2.
double averaged(const Measure& mu, double r, Complex z,
                const QuadratureScheme& scheme = pseudo_disk_scheme());

struct BerezinParams {
    double rho = 1.0 - 1e-6;
    int radial_nodes = 240;
    int angular_nodes = 512;
    std::vector<double> mass_schedule;  // finiteness precheck; default is deep
};

/// Berezin transform integral of (1-|z|^2)^2 / |1 - z conj(w)|^4 against mu;
/// requires |mu|(D) < infinity (raises InfiniteMassError otherwise).
Complex berezin(const Measure& mu, Complex z, const BerezinParams& params = {});
double berezin_variation(const Measure& mu, Complex z, const BerezinParams& params = {});

/// Truncated |mu|({|z| <= rho}) per schedule entry with a convergence verdict.
SeminormReport total_mass(const Measure& mu, const std::vector<double>& rho_schedule);

std::vector<double> default_mass_schedule();

/// Truncated L^p(dlambda) trace of z -> |mu|(D(z, r)); p = infinity gives the
/// running sup. p = 1 uses the additive (per-atom / Fubini) route with exact
/// radial antiderivatives; other p use the nested invariant grid.
SeminormReport localized_lp_norm(const Measure& mu, double r, double p,
                                 const std::vector<double>& rho_schedule,
                                 const LambdaGridParams& grid = {});

struct SequenceLpReport {
    double norm = 0.0;                // l^p norm over centers (max for p = inf)
    std::vector<double> per_center;   // localized or averaged value at each z_n
    SeminormReport partial;           // ring-wise partial sums / running sup
};
SequenceLpReport sequence_lp(const Measure& mu, const Lattice& lattice, double p,
                             bool use_averaged,
                             const QuadratureScheme& scheme = pseudo_disk_scheme());

struct CarlesonReport {
    double constant = 0.0;
    std::vector<Complex> probes;
    std::vector<double> ratios;  // |mu|(D(z,r)) / (1-|z|^2)^t per probe
};
CarlesonReport carleson_constant(const Measure& mu, double t, double r,
                                 const std::vector<Complex>& probes,
                                 const QuadratureScheme& scheme = pseudo_disk_scheme());

/// Probe ladder: the given radii, each at `angles` equispaced angles
/// (the positive real axis is always included).
std::vector<Complex> carleson_probe_ladder(const std::vector<double>& radii, int angles);

/// Invariant mass of disk ∩ {|z| <= rho} via the exact radial antiderivative
/// of (1-s^2)^{-2}; only the angle is quadratured.
double lambda_clip(const EuclideanDisk& disk, double rho, int angular_nodes = 512);

} // namespace diskrep
