#pragma once

#include <span>
#include <vector>

#include "diskrep/lattice.hpp"
#include "diskrep/measure.hpp"
#include "diskrep/quadrature.hpp"

namespace diskrep {

/*
 * Kernels integrated against a Measure:
 *   mobius             (z - w) / (1 - z conj(w))
 *   mobius_derivative  (1 - |w|^2) / (1 - z conj(w))^2
 *   power              (1 - |w|^2)^e / (1 - z conj(w))^b
 * The bergman and lipschitz factories derive e from their parameters and
 * enforce the admissibility constraints; `power` is the raw form. Non-integer
 * exponents use the principal branch, single-valued because 1 - z conj(w)
 * has positive real part on the disk.
 */
enum class KernelId { mobius, mobius_derivative, power };

struct KernelParams {
    double b = 1.0;   // pole order for the power kernel
    double e = 0.0;   // numerator exponent of (1 - |w|^2)
    double p = 1.0;   // recorded for bergman-style constructions
    double alpha = 0.0;
    double t = 0.0;
};

class KernelFunction {
public:
    KernelFunction(KernelId id, Measure mu, KernelParams params = {},
                   QuadratureScheme scheme = {});

    Complex operator()(Complex z) const;
    /// Exact k-th derivative (k = 0 returns the value).
    Complex derivative(Complex z, int k) const;

    KernelId id() const { return id_; }
    const Measure& measure() const { return mu_; }
    const KernelParams& params() const { return params_; }
    const QuadratureScheme& scheme() const { return scheme_; }

private:
    Complex kernel_derivative(Complex z, Complex w, int k) const;
    KernelId id_;
    Measure mu_;
    KernelParams params_;
    QuadratureScheme scheme_;
};

/// f(z) = \int (z - w)/(1 - z conj(w)) d mu(w); requires a convergent
/// total-variation trend (bounded output, |f| <= |mu|(D)).
KernelFunction synth_mobius(Measure mu, QuadratureScheme scheme = {});

/// The same measure driven through the derivative kernel
/// (1 - |w|^2)/(1 - z conj(w))^2; this is d/dz of synth_mobius.
KernelFunction synth_mobius_derivative_kernel(Measure mu, QuadratureScheme scheme = {});

/// k-th derivative of the mobius representation:
/// k! \int (1 - |w|^2) conj(w)^{k-1} / (1 - z conj(w))^{k+1} d mu(w).
Complex synth_mobius_derivative(const Measure& mu, int k, Complex z,
                                QuadratureScheme scheme = {});

/// Kernel (1-|w|^2)^{(p b - 2 - alpha)/p} / (1 - z conj(w))^b with the
/// admissibility constraint b > max(1, 1/p) + (alpha + 1)/p.
KernelFunction synth_bergman(Measure mu, double b, double p, double alpha,
                             QuadratureScheme scheme = {});

/// Kernel (1-|w|^2)^{b+t} / (1 - z conj(w))^b with b + t > 1 and b neither 0
/// nor a negative integer.
KernelFunction synth_lipschitz(Measure mu, double b, double t, QuadratureScheme scheme = {});

/// Raw power kernel without admissibility checks.
KernelFunction synth_power(Measure mu, double b, double numerator_exponent,
                           QuadratureScheme scheme = {});

/// Measure reproducing w -> w^m through the mobius kernel:
/// m >= 1 uses c w^{m-1}(1-|w|^2)^N dA with c = 1/(moment(m-1,N) - moment(m,N));
/// m = 0 uses c (|w|/w)(1-|w|^2)^N dA with c = -1/B(3/2, N+1).
Measure polynomial_measure(int m, int N);

/// Smallest N making the monomial measures admissible for exponent p.
int default_monomial_N(double p);

/// Measure for a polynomial sum_m a_m w^m via the same construction.
Measure polynomial_measure_for(std::span<const Complex> coefficients, int N);

/// Atomic measure sum_n c_n / (k! conj(z_n)^{k-1}) delta_{z_n} aligned with
/// the lattice centers.
Measure lattice_atomic_measure(const Lattice& lattice, std::span<const Complex> coefficients,
                               int k);

/// Antiderivative of a derivative-kernel representation, in mobius form, with
/// the integration constant supplied as an extra measure summand.
KernelFunction theoremB_integrate(const KernelFunction& fprime, const Measure& constant_fix);

struct AtomicFit {
    std::vector<Complex> coefficients;
    double residual_max = 0.0;
    double residual_rms = 0.0;
};

/// Desk-scale least-squares fit of atomic coefficients for the power-kernel
/// atom family anchored at the lattice centers.
AtomicFit fit_atomic_coefficients(const std::function<Complex(Complex)>& f,
                                  const Lattice& lattice, double b, double numerator_exponent,
                                  std::span<const Complex> probes);

} // namespace diskrep
