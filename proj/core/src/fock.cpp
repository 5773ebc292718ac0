#include "diskrep/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diskrep/errors.hpp"
#include "diskrep/quadrature.hpp"

namespace diskrep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

Complex PlaneDensity::operator()(Complex w) const {
    switch (family) {
        case PlaneDensityFamily::constant:
            return coefficient;
        case PlaneDensityFamily::gaussian_monomial:
            return coefficient * ipow(w, m) * (alpha / std::numbers::pi) *
                   std::exp(-alpha * std::norm(w));
    }
    return 0.0;
}

double PlaneDensity::abs(Complex w) const { return std::abs((*this)(w)); }

PlaneMeasure::PlaneMeasure(std::vector<PlaneAtom> atoms, std::vector<PlaneDensity> densities,
                           double truncation_radius)
    : atoms_(std::move(atoms)), densities_(std::move(densities)),
      truncation_radius_(truncation_radius) {
    if (!(truncation_radius_ > 0.0)) {
        throw std::invalid_argument("PlaneMeasure: truncation radius must be positive");
    }
}

PlaneMeasure PlaneMeasure::from_atoms(std::vector<PlaneAtom> atoms) {
    double reach = 12.0;
    for (const auto& a : atoms) reach = std::max(reach, std::abs(a.location) + 4.0);
    return PlaneMeasure(std::move(atoms), {}, reach);
}

PlaneMeasure PlaneMeasure::from_density(PlaneDensity density, double truncation_radius) {
    return PlaneMeasure({}, {std::move(density)}, truncation_radius);
}

Complex PlaneMeasure::density_value(Complex w) const {
    Complex v = 0.0;
    for (const auto& d : densities_) v += d(w);
    return v;
}

double PlaneMeasure::density_abs(Complex w) const {
    if (densities_.size() == 1) return densities_.front().abs(w);
    return std::abs(density_value(w));
}

PlaneLattice build_plane_lattice(double spacing, double extent) {
    if (!(spacing > 0.0) || !(extent > 0.0)) {
        throw std::invalid_argument("build_plane_lattice: spacing and extent must be positive");
    }
    PlaneLattice lat;
    lat.spacing = spacing;
    lat.extent = extent;
    const long n = long(std::floor(extent / spacing));
    for (long j = -n; j <= n; ++j) {
        for (long i = -n; i <= n; ++i) {
            const Complex z(double(i) * spacing, double(j) * spacing);
            if (std::abs(z) <= extent) lat.centers.push_back(z);
        }
    }
    return lat;
}

FockFunction::FockFunction(PlaneMeasure mu, double alpha) : mu_(std::move(mu)), alpha_(alpha) {
    if (!(alpha_ > 0.0)) throw std::invalid_argument("FockFunction: alpha must be positive");
}

Complex FockFunction::weighted(Complex z) const {
    // e^{alpha(z conj w - |w|^2/2 - |z|^2/2)} has modulus e^{-alpha(|z|-|w|)^2/2} <= 1.
    Complex sum = 0.0;
    const double z2 = std::norm(z);
    for (const auto& atom : mu_.atoms()) {
        const Complex expo =
            alpha_ * (z * std::conj(atom.location) - 0.5 * std::norm(atom.location) - 0.5 * z2);
        sum += atom.weight * std::exp(expo);
    }
    if (!mu_.densities().empty()) {
        const double R = mu_.truncation_radius();
        const double u_max = alpha_ * R * R;
        const int n_u = 160, n_theta = 256;
        const auto& rule = gauss_legendre(n_u);
        Complex total = 0.0;
        for (int i = 0; i < n_u; ++i) {
            const double u = u_max * rule.nodes[i];
            const double r = std::sqrt(u / alpha_);
            Complex ang = 0.0;
            for (int j = 0; j < n_theta; ++j) {
                const double theta = kTwoPi * double(j) / double(n_theta);
                const Complex w(r * std::cos(theta), r * std::sin(theta));
                const Complex expo = alpha_ * (z * std::conj(w)) - 0.5 * u - 0.5 * alpha_ * z2;
                ang += mu_.density_value(w) * std::exp(expo);
            }
            ang /= double(n_theta);
            // dv = r dr dtheta = du dtheta / (2 alpha); the full turn is 2 pi
            total += rule.weights[i] * u_max * ang * (std::numbers::pi / alpha_);
        }
        sum += total;
    }
    return sum;
}

double FockFunction::weighted_abs(Complex z) const { return std::abs(weighted(z)); }

Complex FockFunction::operator()(Complex z) const {
    return weighted(z) * std::exp(0.5 * alpha_ * std::norm(z));
}

FockFunction synth_fock(PlaneMeasure mu, double alpha, double tol) {
    FockFunction f(mu, alpha);
    if (!mu.densities().empty()) {
        PlaneMeasure wider(mu.atoms(), mu.densities(), mu.truncation_radius() * 1.25);
        FockFunction g(wider, alpha);
        const Complex probe(1.0, 0.5);
        for (const Complex z : {Complex(0.0, 0.0), probe, Complex(-2.0, 1.0)}) {
            const Complex a = f.weighted(z), b = g.weighted(z);
            if (std::abs(a - b) > tol * std::max(1.0, std::abs(b))) {
                throw TruncationError("synth_fock: truncation radius too small for tolerance");
            }
        }
    }
    return f;
}

namespace {

SeminormReport plane_profile(const std::function<double(Complex)>& field, double p,
                             const std::vector<double>& schedule, const PlaneGridParams& params,
                             bool sup_mode) {
    if (schedule.empty()) throw std::invalid_argument("fock profile: empty schedule");
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (!(schedule[i] > schedule[i - 1])) {
            throw std::invalid_argument("fock profile: schedule must increase");
        }
    }
    std::vector<double> edges(schedule.size());
    for (std::size_t i = 0; i < schedule.size(); ++i) edges[i] = schedule[i] * schedule[i];
    const double s_max = edges.back();
    const std::size_t levels = std::size_t(std::ceil(s_max / params.ds));
    constexpr double kGolden = 0.6180339887498949;

    std::vector<double> bins(schedule.size(), 0.0);
    if (sup_mode) bins[0] = field(Complex(0.0, 0.0));
    std::size_t bin = 0;
    for (std::size_t l = 0; l < levels; ++l) {
        const double s = (double(l) + 0.5) * params.ds;
        if (s > s_max) break;
        while (s > edges[bin]) ++bin;
        const double radius = std::sqrt(s);
        const double offset = std::fmod(double(l) * kGolden, 1.0);
        if (sup_mode) {
            for (int j = 0; j < params.angular_nodes; ++j) {
                const double theta = kTwoPi * (double(j) + offset) / double(params.angular_nodes);
                bins[bin] = std::max(bins[bin],
                                     field(Complex(radius * std::cos(theta), radius * std::sin(theta))));
            }
        } else {
            double level_sum = 0.0;
            for (int j = 0; j < params.angular_nodes; ++j) {
                const double theta = kTwoPi * (double(j) + offset) / double(params.angular_nodes);
                const double v = field(Complex(radius * std::cos(theta), radius * std::sin(theta)));
                level_sum += (p == 1.0) ? v : std::pow(v, p);
            }
            // dv = pi ds dtheta/(2 pi) summed over the level
            bins[bin] += level_sum * std::numbers::pi * params.ds / double(params.angular_nodes);
        }
    }
    std::vector<double> values(bins.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < bins.size(); ++i) {
        acc = sup_mode ? std::max(acc, bins[i]) : acc + bins[i];
        values[i] = acc;
    }
    return classify_trend(schedule, std::move(values), plane_growth_coordinate(schedule),
                          params.rel_tol);
}

} // namespace

SeminormReport fock_norm(const FockFunction& f, double p,
                         const std::vector<double>& radius_schedule,
                         const PlaneGridParams& params) {
    if (!(p > 0.0)) throw std::domain_error("fock_norm: need p > 0");
    auto field = [&f](Complex z) { return f.weighted_abs(z); };
    return plane_profile(field, p, radius_schedule, params, std::isinf(p));
}

SeminormReport fock_norm(const std::function<Complex(Complex)>& f, double p, double alpha,
                         const std::vector<double>& radius_schedule,
                         const PlaneGridParams& params) {
    if (!(p > 0.0)) throw std::domain_error("fock_norm: need p > 0");
    if (!(alpha > 0.0)) throw std::domain_error("fock_norm: need alpha > 0");
    auto field = [&f, alpha](Complex z) {
        return std::abs(f(z)) * std::exp(-0.5 * alpha * std::norm(z));
    };
    return plane_profile(field, p, radius_schedule, params, std::isinf(p));
}

double fock_reproduce_residual(const std::function<Complex(Complex)>& f, double alpha, double R,
                               const std::vector<Complex>& probes) {
    if (!(alpha > 0.0) || !(R > 0.0)) {
        throw std::domain_error("fock_reproduce_residual: need alpha, R > 0");
    }
    const double u_max = alpha * R * R;
    const int n_u = 192, n_theta = 256;
    const auto& rule = gauss_legendre(n_u);
    double worst = 0.0;
    for (const Complex z : probes) {
        Complex total = 0.0;
        for (int i = 0; i < n_u; ++i) {
            const double u = u_max * rule.nodes[i];
            const double r = std::sqrt(u / alpha);
            Complex ang = 0.0;
            for (int j = 0; j < n_theta; ++j) {
                const double theta = kTwoPi * double(j) / double(n_theta);
                const Complex w(r * std::cos(theta), r * std::sin(theta));
                ang += std::exp(alpha * z * std::conj(w) - u) * f(w);
            }
            ang /= double(n_theta);
            total += rule.weights[i] * u_max * ang;
        }
        // dlambda_alpha = (alpha/pi) e^{-alpha|w|^2} dv = e^{-u} du dtheta/(2 pi)
        worst = std::max(worst, std::abs(f(z) - total));
    }
    return worst;
}

SeminormReport fock_localized_lp(const PlaneMeasure& mu, double r, double p,
                                 const std::vector<double>& radius_schedule,
                                 const PlaneGridParams& params) {
    if (!(r > 0.0)) throw std::domain_error("fock_localized_lp: need r > 0");
    if (!(p > 0.0)) throw std::domain_error("fock_localized_lp: need p > 0");

    // |mu_atoms|(D(z, r)) = sum over atoms with |z - a| < r (Euclidean disks).
    std::vector<Complex> locs;
    std::vector<double> weights;
    for (const auto& a : mu.atoms()) {
        locs.push_back(a.location);
        weights.push_back(std::abs(a.weight));
    }
    const bool has_density = !mu.densities().empty();
    const double R_mu = mu.truncation_radius();

    // Radial profile of the density capture: |nu|(D(z, r)) depends only on |z|.
    auto density_capture = [&](double zr) {
        const int n_rad = 24, n_ang = 48;
        const auto& rule = gauss_legendre(n_rad);
        double acc = 0.0;
        for (int i = 0; i < n_rad; ++i) {
            const double s = r * std::sqrt(rule.nodes[i]);
            double ang = 0.0;
            for (int j = 0; j < n_ang; ++j) {
                const double theta = kTwoPi * (double(j) + 0.5) / double(n_ang);
                const Complex w = Complex(zr, 0.0) + Complex(s * std::cos(theta), s * std::sin(theta));
                if (std::abs(w) <= R_mu) ang += mu.density_abs(w);
            }
            acc += rule.weights[i] * ang / double(n_ang);
        }
        return acc * std::numbers::pi * r * r;  // dv over the disk of radius r
    };

    double cached_s = -1.0, cached_capture = 0.0;
    auto field = [&](Complex z) {
        double v = 0.0;
        for (std::size_t j = 0; j < locs.size(); ++j) {
            if (std::abs(z - locs[j]) < r) v += weights[j];
        }
        if (has_density) {
            const double s = std::norm(z);
            if (std::abs(s - cached_s) > 1e-13 * (1.0 + s)) {
                cached_s = s;
                cached_capture = density_capture(std::sqrt(s));
            }
            v += cached_capture;
        }
        return v;
    };
    return plane_profile(field, std::isinf(p) ? 1.0 : p, radius_schedule, params, std::isinf(p));
}

double gaussian_moment(int m, double alpha) {
    if (m < 0 || !(alpha > 0.0)) throw std::domain_error("gaussian_moment: need m >= 0, alpha > 0");
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= double(i);
    return fact / std::pow(alpha, double(m));
}

} // namespace diskrep
