#include "diskrep/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diskrep/errors.hpp"

#if defined(DISKREP_HAVE_EIGEN)
#include <Eigen/Dense>
#endif

namespace diskrep {

namespace {

double pochhammer(double b, int k) {
    double out = 1.0;
    for (int i = 0; i < k; ++i) out *= b + double(i);
    return out;
}

// (1 - z conj(w))^{-s}, principal branch; exact integer powers when possible.
Complex inv_base_pow(Complex base, double s) {
    const double rounded = std::round(s);
    if (s == rounded && s >= 0.0 && s <= 64.0) {
        Complex acc = 1.0;
        for (int i = 0; i < int(rounded); ++i) acc *= base;
        return 1.0 / acc;
    }
    return std::exp(-s * std::log(base));
}

void require_finite_measure(const Measure& mu, const char* who) {
    if (mu.densities().empty()) return;
    const auto report = total_mass(mu, default_mass_schedule());
    if (report.verdict != Verdict::converged) {
        throw InfiniteMassError(std::string(who) + ": measure total variation does not converge");
    }
}

} // namespace

KernelFunction::KernelFunction(KernelId id, Measure mu, KernelParams params,
                               QuadratureScheme scheme)
    : id_(id), mu_(std::move(mu)), params_(params), scheme_(scheme) {}

Complex KernelFunction::kernel_derivative(Complex z, Complex w, int k) const {
    const Complex base = 1.0 - z * std::conj(w);
    switch (id_) {
        case KernelId::mobius: {
            if (k == 0) return (z - w) / base;
            // d^k/dz^k (z-w)/(1-z conj w) = k! (1-|w|^2) conj(w)^{k-1} / (1-z conj w)^{k+1}
            double kfact = 1.0;
            for (int i = 2; i <= k; ++i) kfact *= double(i);
            return kfact * (1.0 - std::norm(w)) * ipow(std::conj(w), k - 1) *
                   inv_base_pow(base, double(k + 1));
        }
        case KernelId::mobius_derivative: {
            double fact = 1.0;
            for (int i = 2; i <= k + 1; ++i) fact *= double(i);
            return fact * (1.0 - std::norm(w)) * ipow(std::conj(w), k) *
                   inv_base_pow(base, double(k + 2));
        }
        case KernelId::power: {
            const double numerator = std::pow(1.0 - std::norm(w), params_.e);
            return pochhammer(params_.b, k) * ipow(std::conj(w), k) * numerator *
                   inv_base_pow(base, params_.b + double(k));
        }
    }
    return 0.0;
}

Complex KernelFunction::derivative(Complex z, int k) const {
    require_in_unit_disk(z, "KernelFunction: z");
    if (k < 0) throw std::domain_error("KernelFunction: derivative order must be >= 0");
    Complex sum = 0.0;
    for (const auto& atom : mu_.atoms()) {
        sum += atom.weight * kernel_derivative(z, atom.location, k);
    }
    if (!mu_.densities().empty()) {
        // Radial variable v = |w| (dA = 2 v dv dtheta / 2pi): the monomial and
        // phase densities then meet Gauss-Legendre with polynomial radial
        // content, which keeps the Lemma-6 style constants exact.
        const auto& rule = gauss_legendre(scheme_.radial_nodes);
        const double two_pi = 2.0 * std::numbers::pi;
        Complex total = 0.0;
        for (int i = 0; i < scheme_.radial_nodes; ++i) {
            const double v = scheme_.rho * rule.nodes[i];
            Complex ang = 0.0;
            for (int j = 0; j < scheme_.angular_nodes; ++j) {
                const double theta = two_pi * double(j) / double(scheme_.angular_nodes);
                const Complex w(v * std::cos(theta), v * std::sin(theta));
                ang += mu_.density_value(w) * kernel_derivative(z, w, k);
            }
            ang /= double(scheme_.angular_nodes);
            total += rule.weights[i] * scheme_.rho * 2.0 * v * ang;
        }
        sum += total;
    }
    return sum;
}

Complex KernelFunction::operator()(Complex z) const { return derivative(z, 0); }

KernelFunction synth_mobius(Measure mu, QuadratureScheme scheme) {
    require_finite_measure(mu, "synth_mobius");
    return KernelFunction(KernelId::mobius, std::move(mu), {}, scheme);
}

KernelFunction synth_mobius_derivative_kernel(Measure mu, QuadratureScheme scheme) {
    require_finite_measure(mu, "synth_mobius_derivative_kernel");
    return KernelFunction(KernelId::mobius_derivative, std::move(mu), {}, scheme);
}

Complex synth_mobius_derivative(const Measure& mu, int k, Complex z, QuadratureScheme scheme) {
    if (k < 1) throw std::domain_error("synth_mobius_derivative: need k >= 1");
    require_finite_measure(mu, "synth_mobius_derivative");
    return KernelFunction(KernelId::mobius, mu, {}, scheme).derivative(z, k);
}

KernelFunction synth_bergman(Measure mu, double b, double p, double alpha,
                             QuadratureScheme scheme) {
    const double bound = std::max(1.0, 1.0 / p) + (alpha + 1.0) / p;
    if (!(b > bound)) {
        throw std::invalid_argument("synth_bergman: requires b > max(1, 1/p) + (alpha+1)/p");
    }
    KernelParams params;
    params.b = b;
    params.p = p;
    params.alpha = alpha;
    params.e = (p * b - 2.0 - alpha) / p;
    return KernelFunction(KernelId::power, std::move(mu), params, scheme);
}

KernelFunction synth_lipschitz(Measure mu, double b, double t, QuadratureScheme scheme) {
    if (!(b + t > 1.0)) {
        throw std::invalid_argument("synth_lipschitz: requires b + t > 1");
    }
    const double rounded = std::round(b);
    if (b == rounded && b <= 0.0) {
        throw std::invalid_argument("synth_lipschitz: b must not be zero or a negative integer");
    }
    KernelParams params;
    params.b = b;
    params.t = t;
    params.e = b + t;
    return KernelFunction(KernelId::power, std::move(mu), params, scheme);
}

KernelFunction synth_power(Measure mu, double b, double numerator_exponent,
                           QuadratureScheme scheme) {
    KernelParams params;
    params.b = b;
    params.e = numerator_exponent;
    return KernelFunction(KernelId::power, std::move(mu), params, scheme);
}

Measure polynomial_measure(int m, int N) {
    if (m < 0 || N < 0) throw std::invalid_argument("polynomial_measure: need m, N >= 0");
    Density d;
    d.family = DensityFamily::monomial_power;
    d.N = N;
    if (m >= 1) {
        d.m = m - 1;
        d.coefficient = 1.0 / (moment(m - 1, N) - moment(m, N));
    } else {
        d.m = -1;
        d.coefficient = -1.0 / beta_moment(1.5, double(N) + 1.0);
    }
    return Measure::from_density(d);
}

int default_monomial_N(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("default_monomial_N: need p > 0");
    return int(std::ceil(2.0 / p)) + 2;
}

Measure polynomial_measure_for(std::span<const Complex> coefficients, int N) {
    Measure out;
    for (std::size_t m = 0; m < coefficients.size(); ++m) {
        if (coefficients[m] == Complex(0.0, 0.0)) continue;
        out = out.plus(polynomial_measure(int(m), N).scaled(coefficients[m]));
    }
    return out;
}

Measure lattice_atomic_measure(const Lattice& lattice, std::span<const Complex> coefficients,
                               int k) {
    if (k < 1) throw std::invalid_argument("lattice_atomic_measure: need k >= 1");
    if (coefficients.size() > lattice.size()) {
        throw std::invalid_argument("lattice_atomic_measure: more coefficients than centers");
    }
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= double(i);
    std::vector<Atom> atoms;
    atoms.reserve(coefficients.size());
    for (std::size_t n = 0; n < coefficients.size(); ++n) {
        const Complex zn = lattice.centers()[n];
        if (zn == Complex(0.0, 0.0)) {
            throw std::invalid_argument("lattice_atomic_measure: centers must avoid the origin");
        }
        if (coefficients[n] == Complex(0.0, 0.0)) continue;
        const Complex denom = kfact * ipow(std::conj(zn), k - 1);
        atoms.push_back(Atom{zn, coefficients[n] / denom});
    }
    return Measure::from_atoms(std::move(atoms));
}

KernelFunction theoremB_integrate(const KernelFunction& fprime, const Measure& constant_fix) {
    if (fprime.id() != KernelId::mobius_derivative) {
        throw std::invalid_argument(
            "theoremB_integrate: input must be a derivative-kernel representation");
    }
    Measure combined = fprime.measure().plus(constant_fix);
    require_finite_measure(combined, "theoremB_integrate");
    return KernelFunction(KernelId::mobius, std::move(combined), {}, fprime.scheme());
}

AtomicFit fit_atomic_coefficients(const std::function<Complex(Complex)>& f,
                                  const Lattice& lattice, double b, double numerator_exponent,
                                  std::span<const Complex> probes) {
#if defined(DISKREP_HAVE_EIGEN)
    const std::size_t n = lattice.size();
    const std::size_t m = probes.size();
    if (m < n) throw std::invalid_argument("fit_atomic_coefficients: need at least as many probes as atoms");
    Eigen::MatrixXcd A(m, n);
    Eigen::VectorXcd rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Complex z = probes[i];
        rhs(long(i)) = f(z);
        for (std::size_t j = 0; j < n; ++j) {
            const Complex zn = lattice.centers()[j];
            const Complex base = 1.0 - z * std::conj(zn);
            A(long(i), long(j)) = std::pow(1.0 - std::norm(zn), numerator_exponent) *
                                  std::exp(-b * std::log(base));
        }
    }
    const Eigen::VectorXcd x = A.colPivHouseholderQr().solve(rhs);
    const Eigen::VectorXcd r = A * x - rhs;
    AtomicFit fit;
    fit.coefficients.assign(x.data(), x.data() + x.size());
    fit.residual_max = r.cwiseAbs().maxCoeff();
    fit.residual_rms = std::sqrt(r.squaredNorm() / double(m));
    return fit;
#else
    (void)f;
    (void)lattice;
    (void)b;
    (void)numerator_exponent;
    (void)probes;
    throw std::runtime_error("fit_atomic_coefficients: built without Eigen support");
#endif
}

} // namespace diskrep
