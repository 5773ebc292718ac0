#include "diskrep/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "diskrep/errors.hpp"

namespace diskrep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMixedModes = std::numeric_limits<int>::max();

double one_minus_t_pow(double t, double e) {
    if (e == 0.0) return 1.0;
    return std::pow(1.0 - t, e);
}

} // namespace

Complex Density::operator()(Complex w) const {
    const double t = std::norm(w);
    const double tail = one_minus_t_pow(t, extra_power);
    switch (family) {
        case DensityFamily::constant:
            return coefficient * tail;
        case DensityFamily::power:
            return coefficient * one_minus_t_pow(t, a) * tail;
        case DensityFamily::monomial_power: {
            const double shell = one_minus_t_pow(t, double(N)) * tail;
            if (m >= 0) {
                return coefficient * ipow(w, m) * shell;
            }
            // m = -1: the unimodular phase |w|/w = conj(w)/|w|.
            const double mod = std::abs(w);
            if (mod == 0.0) return 0.0;
            return coefficient * (std::conj(w) / mod) * shell;
        }
        case DensityFamily::bloch_log:
            return coefficient * (1.0 - t) / std::norm(1.0 - w) * tail;
        case DensityFamily::log_weight:
            return coefficient * std::log(1.0 / (1.0 - t)) * one_minus_t_pow(t, a) * tail;
    }
    return 0.0;
}

double Density::abs(Complex w) const {
    return std::abs((*this)(w));
}

bool Density::abs_is_radial() const {
    return family != DensityFamily::bloch_log;
}

double Density::radial_abs(double t) const {
    const double tail = one_minus_t_pow(t, extra_power);
    const double c = std::abs(coefficient);
    switch (family) {
        case DensityFamily::constant:
            return c * tail;
        case DensityFamily::power:
            return c * one_minus_t_pow(t, a) * tail;
        case DensityFamily::monomial_power: {
            const double shell = one_minus_t_pow(t, double(N)) * tail;
            const double radial = (m >= 0) ? std::pow(t, 0.5 * double(m)) : 1.0;
            return c * radial * shell;
        }
        case DensityFamily::log_weight:
            return c * std::log(1.0 / (1.0 - t)) * one_minus_t_pow(t, a) * tail;
        case DensityFamily::bloch_log:
            throw std::logic_error("radial_abs: bloch_log is not radial");
    }
    return 0.0;
}

int Density::angular_mode() const {
    switch (family) {
        case DensityFamily::constant:
        case DensityFamily::power:
        case DensityFamily::log_weight:
            return 0;
        case DensityFamily::monomial_power:
            return m;
        case DensityFamily::bloch_log:
            return kMixedModes;
    }
    return kMixedModes;
}

Measure::Measure(std::vector<Atom> atoms, std::vector<Density> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
    for (const auto& atom : atoms_) {
        require_in_unit_disk(atom.location, "Measure atom location");
    }
}

Measure Measure::from_atoms(std::vector<Atom> atoms) {
    return Measure(std::move(atoms), {});
}

Measure Measure::from_density(Density density) {
    return Measure({}, {std::move(density)});
}

Measure Measure::unit_atom(Complex location) {
    return from_atoms({Atom{location, Complex(1.0, 0.0)}});
}

Complex Measure::density_value(Complex w) const {
    Complex v = 0.0;
    for (const auto& d : densities_) v += d(w);
    return v;
}

double Measure::density_abs(Complex w) const {
    if (densities_.size() == 1) return densities_.front().abs(w);
    return std::abs(density_value(w));
}

bool Measure::density_abs_is_radial() const {
    if (densities_.empty()) return true;
    if (densities_.size() == 1) return densities_.front().abs_is_radial();
    // Summands sharing the angular mode 0 stay radial in modulus.
    for (const auto& d : densities_) {
        if (d.angular_mode() != 0) return false;
    }
    return true;
}

double Measure::density_radial_abs(double t) const {
    if (densities_.empty()) return 0.0;
    if (densities_.size() == 1) return densities_.front().radial_abs(t);
    double sum = 0.0;  // same-phase summands: modulus of the (real-coefficient) sum
    Complex acc = 0.0;
    const double s = std::sqrt(t);
    for (const auto& d : densities_) acc += d(Complex(s, 0.0));
    sum = std::abs(acc);
    return sum;
}

Measure Measure::scaled(Complex factor) const {
    Measure out = *this;
    for (auto& atom : out.atoms_) atom.weight *= factor;
    for (auto& d : out.densities_) d.coefficient *= factor;
    return out;
}

Measure Measure::plus(const Measure& other) const {
    Measure out = *this;
    out.atoms_.insert(out.atoms_.end(), other.atoms_.begin(), other.atoms_.end());
    out.densities_.insert(out.densities_.end(), other.densities_.begin(), other.densities_.end());
    return out;
}

Measure Measure::weighted_by_power(double exponent) const {
    Measure out;
    out.atoms_.reserve(atoms_.size());
    for (const auto& atom : atoms_) {
        const double t = std::norm(atom.location);
        out.atoms_.push_back(Atom{atom.location, atom.weight * std::pow(1.0 - t, exponent)});
    }
    out.densities_ = densities_;
    for (auto& d : out.densities_) d.extra_power += exponent;
    return out;
}

// ---------------------------------------------------------------------------
// CapturedAtomIndex

CapturedAtomIndex::CapturedAtomIndex(const std::vector<Atom>& atoms, double r, int grid)
    : grid_(grid) {
    entries_.reserve(atoms.size());
    for (const auto& atom : atoms) {
        const EuclideanDisk disk = pseudo_disk(atom.location, r);
        entries_.push_back(Entry{disk.center, disk.radius, atom.weight, std::abs(atom.weight)});
        support_radius_ = std::max(support_radius_, std::abs(disk.center) + disk.radius);
    }
    cells_.assign(std::size_t(grid_) * std::size_t(grid_), {});
    const double cell = 2.0 / double(grid_);
    for (std::uint32_t j = 0; j < entries_.size(); ++j) {
        const auto& e = entries_[j];
        const int x0 = std::clamp(int((e.center.real() - e.radius + 1.0) / cell), 0, grid_ - 1);
        const int x1 = std::clamp(int((e.center.real() + e.radius + 1.0) / cell), 0, grid_ - 1);
        const int y0 = std::clamp(int((e.center.imag() - e.radius + 1.0) / cell), 0, grid_ - 1);
        const int y1 = std::clamp(int((e.center.imag() + e.radius + 1.0) / cell), 0, grid_ - 1);
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                cells_[std::size_t(y) * grid_ + x].push_back(j);
            }
        }
    }
}

template <typename F>
void CapturedAtomIndex::scan(Complex z, F&& f) const {
    if (entries_.empty()) return;
    const double cell = 2.0 / double(grid_);
    const int x = std::clamp(int((z.real() + 1.0) / cell), 0, grid_ - 1);
    const int y = std::clamp(int((z.imag() + 1.0) / cell), 0, grid_ - 1);
    for (const std::uint32_t j : cells_[std::size_t(y) * grid_ + x]) {
        const auto& e = entries_[j];
        if (std::abs(z - e.center) < e.radius) f(e);
    }
}

double CapturedAtomIndex::variation_at(Complex z) const {
    double sum = 0.0;
    scan(z, [&](const Entry& e) { sum += e.abs_weight; });
    return sum;
}

Complex CapturedAtomIndex::value_at(Complex z) const {
    Complex sum = 0.0;
    scan(z, [&](const Entry& e) { sum += e.weight; });
    return sum;
}

// ---------------------------------------------------------------------------
// Localized / averaging functions

namespace {

void require_localized_args(double r, Complex z) {
    require_in_unit_disk(z, "localized: z");
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("localized: need 0 < r < 1");
}

} // namespace

Complex localized(const Measure& mu, double r, Complex z, const QuadratureScheme& scheme) {
    require_localized_args(r, z);
    Complex sum = 0.0;
    for (const auto& atom : mu.atoms()) {
        if (pseudo_distance(z, atom.location) < r) sum += atom.weight;
    }
    if (!mu.densities().empty()) {
        const EuclideanDisk disk = pseudo_disk(z, r);
        sum += integrate_pseudo_disk_checked([&](Complex w) { return mu.density_value(w); },
                                             disk, scheme);
    }
    return sum;
}

double localized_variation(const Measure& mu, double r, Complex z, const QuadratureScheme& scheme) {
    require_localized_args(r, z);
    double sum = 0.0;
    for (const auto& atom : mu.atoms()) {
        if (pseudo_distance(z, atom.location) < r) sum += std::abs(atom.weight);
    }
    if (!mu.densities().empty()) {
        const EuclideanDisk disk = pseudo_disk(z, r);
        sum += integrate_pseudo_disk_checked(
                   [&](Complex w) { return Complex(mu.density_abs(w), 0.0); }, disk, scheme)
                   .real();
    }
    return sum;
}

double averaged(const Measure& mu, double r, Complex z, const QuadratureScheme& scheme) {
    const double q = 1.0 - std::norm(z);
    return localized_variation(mu, r, z, scheme) / (q * q);
}

// ---------------------------------------------------------------------------
// Berezin transform

std::vector<double> default_mass_schedule() {
    return disk_rho_schedule(0.9, 1.0 - 1e-9, 14);
}

namespace {

void require_finite_mass(const Measure& mu, const std::vector<double>& schedule) {
    if (mu.densities().empty()) return;  // finite atom lists are always finite
    const auto report = total_mass(mu, schedule.empty() ? default_mass_schedule() : schedule);
    if (report.verdict != Verdict::converged) {
        throw InfiniteMassError(std::string("total variation did not converge (") +
                                to_string(report.verdict) + ")");
    }
}

Complex berezin_impl(const Measure& mu, Complex z, const BerezinParams& params, bool variation) {
    require_in_unit_disk(z, "berezin: z");
    require_finite_mass(mu, params.mass_schedule);
    const double q = 1.0 - std::norm(z);
    const double front = q * q;
    Complex sum = 0.0;
    for (const auto& atom : mu.atoms()) {
        const double kernel = front / std::pow(std::abs(1.0 - z * std::conj(atom.location)), 4.0);
        sum += kernel * (variation ? Complex(std::abs(atom.weight), 0.0) : atom.weight);
    }
    if (!mu.densities().empty()) {
        if (variation && mu.density_abs_is_radial()) {
            // Radial modulus: the angular mean of |1-z conj(w)|^{-4} has an
            // aliasing-free series, leaving a smooth radial integral.
            const auto& rule = gauss_legendre(params.radial_nodes);
            const double tmax = params.rho * params.rho;
            const double zr = std::abs(z);
            double acc = 0.0;
            for (int i = 0; i < params.radial_nodes; ++i) {
                const double t = tmax * rule.nodes[i];
                acc += rule.weights[i] * tmax * mu.density_radial_abs(t) *
                       angular_mean_inv_power(4.0, zr * std::sqrt(t));
            }
            sum += front * acc;
        } else {
            QuadratureScheme scheme;
            scheme.radial_nodes = params.radial_nodes;
            scheme.angular_nodes = params.angular_nodes;
            scheme.rho = params.rho;
            auto integrand = [&](Complex w) -> Complex {
                const double kernel = front / std::pow(std::abs(1.0 - z * std::conj(w)), 4.0);
                return variation ? Complex(mu.density_abs(w) * kernel, 0.0)
                                 : mu.density_value(w) * kernel;
            };
            sum += integrate_disk(integrand, DiskWeight::area, scheme);
        }
    }
    return sum;
}

} // namespace

Complex berezin(const Measure& mu, Complex z, const BerezinParams& params) {
    return berezin_impl(mu, z, params, false);
}

double berezin_variation(const Measure& mu, Complex z, const BerezinParams& params) {
    return berezin_impl(mu, z, params, true).real();
}

// ---------------------------------------------------------------------------
// Truncated total variation

SeminormReport total_mass(const Measure& mu, const std::vector<double>& rho_schedule) {
    if (rho_schedule.empty()) throw std::invalid_argument("total_mass: empty schedule");
    std::vector<double> values(rho_schedule.size(), 0.0);

    std::vector<double> atom_norms;
    atom_norms.reserve(mu.atoms().size());
    for (const auto& atom : mu.atoms()) atom_norms.push_back(std::abs(atom.location));

    const bool radial = mu.density_abs_is_radial();
    const int n_theta = 256;
    double prev_t = 0.0;
    double density_acc = 0.0;
    for (std::size_t i = 0; i < rho_schedule.size(); ++i) {
        const double rho = rho_schedule[i];
        double atoms_mass = 0.0;
        for (std::size_t j = 0; j < atom_norms.size(); ++j) {
            if (atom_norms[j] <= rho) atoms_mass += std::abs(mu.atoms()[j].weight);
        }
        if (!mu.densities().empty()) {
            const double t1 = rho * rho;
            const auto& rule = gauss_legendre(48);
            double shell = 0.0;
            for (int k = 0; k < 48; ++k) {
                const double t = prev_t + (t1 - prev_t) * rule.nodes[k];
                double mean;
                if (radial) {
                    mean = mu.density_radial_abs(t);
                } else {
                    mean = 0.0;
                    const double s = std::sqrt(t);
                    for (int j = 0; j < n_theta; ++j) {
                        const double theta = kTwoPi * (double(j) + 0.5) / double(n_theta);
                        mean += mu.density_abs(Complex(s * std::cos(theta), s * std::sin(theta)));
                    }
                    mean /= double(n_theta);
                }
                shell += rule.weights[k] * (t1 - prev_t) * mean;
            }
            density_acc += shell;
            prev_t = t1;
        }
        values[i] = atoms_mass + density_acc;
    }
    return classify_trend(rho_schedule, std::move(values), disk_growth_coordinate(rho_schedule));
}

// ---------------------------------------------------------------------------
// lambda_clip and the localized L^p trace

double lambda_clip(const EuclideanDisk& disk, double rho, int angular_nodes) {
    // Along the ray s e^{i theta} the set {s : |s e^{i theta} - c| < R} is an
    // interval with endpoints q +/- sqrt(q^2 - (|c|^2 - R^2)), q = Re(c e^{-i theta}),
    // and the radial factor s/(1-s^2)^2 integrates to (1/2)/(1-s^2) exactly.
    // Only the angular window actually subtended by the disk is sampled, so
    // tiny near-boundary disks are resolved as well as large ones.
    const double c = std::abs(disk.center);
    const double R = disk.radius;
    const double c2 = c * c;
    const double R2 = R * R;
    const double half_span = (c > R) ? std::asin(std::min(1.0, R / c)) : std::numbers::pi;
    const double span = 2.0 * half_span;
    double acc = 0.0;
    for (int j = 0; j < angular_nodes; ++j) {
        const double offset = -half_span + span * (double(j) + 0.5) / double(angular_nodes);
        const double q = c * std::cos(offset);
        const double disc = q * q - (c2 - R2);
        if (disc <= 0.0) continue;
        const double root = std::sqrt(disc);
        const double s0 = std::max(0.0, q - root);
        const double s1 = std::min(rho, q + root);
        if (s1 <= s0) continue;
        acc += 0.5 * (1.0 / (1.0 - s1 * s1) - 1.0 / (1.0 - s0 * s0));
    }
    // normalized measure: lambda = (1/pi) \iint s ds dtheta / (1-s^2)^2
    return acc * span / (std::numbers::pi * double(angular_nodes));
}

namespace {

// Additive route for p = 1: every atom contributes lambda(E_j ∩ B_rho) and the
// density contributes by the symmetric swap of integration order.
std::vector<double> localized_l1_values(const Measure& mu, double r,
                                        const std::vector<double>& schedule) {
    std::vector<double> values(schedule.size(), 0.0);
    std::vector<EuclideanDisk> capture;
    std::vector<double> weights;
    capture.reserve(mu.atoms().size());
    for (const auto& atom : mu.atoms()) {
        capture.push_back(pseudo_disk(atom.location, r));
        weights.push_back(std::abs(atom.weight));
    }
    const double full = r * r / (1.0 - r * r);  // lambda of a full pseudo-disk
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const double rho = schedule[i];
        double acc = 0.0;
        for (std::size_t j = 0; j < capture.size(); ++j) {
            const auto& disk = capture[j];
            const double reach = std::abs(disk.center) + disk.radius;
            acc += weights[j] * (reach <= rho ? full : lambda_clip(disk, rho));
        }
        if (!mu.densities().empty()) {
            // \int |mu|_r dlambda = \int |g|(w) lambda(D(w, r) ∩ B_rho) dA(w);
            // the clip weight depends only on |w|.
            const int radial_nodes = 320;
            const auto& rule = gauss_legendre(radial_nodes);
            const bool radial = mu.density_abs_is_radial();
            const int n_theta = 128;
            for (int k = 0; k < radial_nodes; ++k) {
                const double t = rule.nodes[k];
                const double s = std::sqrt(t);
                if (s >= 1.0 - kBoundaryMargin) continue;
                const EuclideanDisk dw = pseudo_disk(Complex(s, 0.0), r);
                if (std::abs(dw.center) - dw.radius >= rho) continue;
                const double reach = std::abs(dw.center) + dw.radius;
                const double clip = (reach <= rho) ? full : lambda_clip(dw, rho);
                double mean;
                if (radial) {
                    mean = mu.density_radial_abs(t);
                } else {
                    mean = 0.0;
                    for (int j = 0; j < n_theta; ++j) {
                        const double theta = kTwoPi * (double(j) + 0.5) / double(n_theta);
                        mean += mu.density_abs(Complex(s * std::cos(theta), s * std::sin(theta)));
                    }
                    mean /= double(n_theta);
                }
                acc += rule.weights[k] * mean * clip;
            }
        }
        values[i] = acc;
    }
    return values;
}

// Memoized per-radius density localized value for the grid engine (the grid
// visits one radius at a time, so a one-slot cache is enough).
struct RadialLocalizedCache {
    const Measure* mu;
    double r;
    QuadratureScheme scheme;
    double last_t = -1.0;
    double last_value = 0.0;

    double operator()(double t) {
        if (!same_radius_key(t, last_t)) {
            const double s = std::sqrt(t);
            const EuclideanDisk disk = pseudo_disk(Complex(s, 0.0), r);
            last_value = integrate_pseudo_disk(
                             [&](Complex w) { return Complex(mu->density_abs(w), 0.0); }, disk,
                             scheme)
                             .real();
            last_t = t;
        }
        return last_value;
    }
};

} // namespace

SeminormReport localized_lp_norm(const Measure& mu, double r, double p,
                                 const std::vector<double>& rho_schedule,
                                 const LambdaGridParams& grid) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("localized_lp_norm: need 0 < r < 1");
    if (!(p > 0.0)) throw std::domain_error("localized_lp_norm: need p > 0");

    const CapturedAtomIndex index(mu.atoms(), r);
    const bool has_density = !mu.densities().empty();
    const bool radial_density = has_density && mu.density_abs_is_radial();

    if (std::isinf(p)) {
        auto cache = std::make_shared<RadialLocalizedCache>();
        cache->mu = &mu;
        cache->r = r;
        cache->scheme = QuadratureScheme{32, 64, 1.0 - 1e-9, 1e-8, 0.0};
        auto field = [&mu, &index, has_density, radial_density, cache, r](Complex z) {
            double v = index.variation_at(z);
            if (has_density) {
                if (radial_density) {
                    v += (*cache)(std::norm(z));
                } else {
                    const EuclideanDisk disk = pseudo_disk(z, r);
                    v += integrate_pseudo_disk(
                             [&](Complex w) { return Complex(mu.density_abs(w), 0.0); }, disk,
                             cache->scheme)
                             .real();
                }
            }
            return v;
        };
        return sup_profile_report(field, rho_schedule, grid);
    }

    if (p == 1.0) {
        auto values = localized_l1_values(mu, r, rho_schedule);
        return classify_trend(rho_schedule, std::move(values),
                              disk_growth_coordinate(rho_schedule), grid.rel_tol);
    }

    auto cache = std::make_shared<RadialLocalizedCache>();
    cache->mu = &mu;
    cache->r = r;
    cache->scheme = QuadratureScheme{24, 48, 1.0 - 1e-9, 1e-8, 0.0};
    auto field = [&mu, &index, has_density, radial_density, cache, r, p](Complex z) {
        double v = index.variation_at(z);
        if (has_density) {
            if (radial_density) {
                v += (*cache)(std::norm(z));
            } else {
                const EuclideanDisk disk = pseudo_disk(z, r);
                v += integrate_pseudo_disk(
                         [&](Complex w) { return Complex(mu.density_abs(w), 0.0); }, disk,
                         cache->scheme)
                         .real();
            }
        }
        return v > 0.0 ? std::pow(v, p) : 0.0;
    };
    return lambda_profile_report(field, rho_schedule, grid);
}

// ---------------------------------------------------------------------------
// Lattice sequences and Carleson constants

SequenceLpReport sequence_lp(const Measure& mu, const Lattice& lattice, double p,
                             bool use_averaged, const QuadratureScheme& scheme) {
    if (!(p > 0.0)) throw std::domain_error("sequence_lp: need p > 0");
    SequenceLpReport report;
    const CapturedAtomIndex index(mu.atoms(), lattice.r());
    const bool has_density = !mu.densities().empty();
    report.per_center.reserve(lattice.size());
    for (const Complex zn : lattice.centers()) {
        double v = index.variation_at(zn);
        if (has_density) {
            const EuclideanDisk disk = pseudo_disk(zn, lattice.r());
            v += integrate_pseudo_disk(
                     [&](Complex w) { return Complex(mu.density_abs(w), 0.0); }, disk, scheme)
                     .real();
        }
        if (use_averaged) {
            const double q = 1.0 - std::norm(zn);
            v /= q * q;
        }
        report.per_center.push_back(v);
    }

    // Ring-wise partial sums (running max for p = infinity) give the
    // desk-scale finiteness trend of the sequence.
    std::vector<double> radii, partial;
    double acc = 0.0;
    for (const auto& ring : lattice.rings()) {
        for (std::size_t j = 0; j < ring.count; ++j) {
            const double v = report.per_center[ring.first + j];
            if (std::isinf(p)) {
                acc = std::max(acc, v);
            } else {
                acc += v > 0.0 ? std::pow(v, p) : 0.0;
            }
        }
        radii.push_back(ring.rho);
        partial.push_back(acc);
    }
    report.partial = classify_trend(radii, std::move(partial), disk_growth_coordinate(radii));
    report.norm = std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
    return report;
}

CarlesonReport carleson_constant(const Measure& mu, double t, double r,
                                 const std::vector<Complex>& probes,
                                 const QuadratureScheme& scheme) {
    if (!(t > 0.0)) throw std::domain_error("carleson_constant: need t > 0");
    CarlesonReport report;
    report.probes = probes;
    report.ratios.reserve(probes.size());
    for (const Complex z : probes) {
        const double value = localized_variation(mu, r, z, scheme);
        const double ratio = value / std::pow(1.0 - std::norm(z), t);
        report.ratios.push_back(ratio);
        report.constant = std::max(report.constant, ratio);
    }
    return report;
}

std::vector<Complex> carleson_probe_ladder(const std::vector<double>& radii, int angles) {
    std::vector<Complex> probes;
    for (const double rho : radii) {
        if (rho == 0.0) {
            probes.emplace_back(0.0, 0.0);
            continue;
        }
        for (int j = 0; j < angles; ++j) {
            const double theta = kTwoPi * double(j) / double(angles);
            probes.emplace_back(rho * std::cos(theta), rho * std::sin(theta));
        }
    }
    return probes;
}

} // namespace diskrep
