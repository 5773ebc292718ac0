#pragma once

#include <functional>

#include "diskrep/disk_integrals.hpp"
#include "diskrep/report.hpp"
#include "diskrep/synthesis.hpp"

namespace diskrep {

/// A holomorphic function with a derivative oracle: exact kernel formulas for
/// synthesized functions, Richardson-extrapolated central differences for
/// black-box callables (step scaled by the distance to the boundary).
struct AnalyticFunction {
    std::function<Complex(Complex)> value;
    std::function<Complex(Complex, int)> derivative;  // derivative(z, k), k >= 0
};

AnalyticFunction analytic_from_callable(std::function<Complex(Complex)> f);
AnalyticFunction analytic_from_kernel(KernelFunction kernel);

/// Richardson-extrapolated central difference of order k (k <= 4) with step
/// h = (1 - |z|) eps^{1/(k+4)}, balancing truncation against roundoff.
Complex richardson_derivative(const std::function<Complex(Complex)>& f, Complex z, int k);

enum class SpaceFamily { besov, lipschitz, bergman, bloch };

struct SpaceSpec {
    SpaceFamily family = SpaceFamily::besov;
    double p = 1.0;
    double t = 0.0;
    double alpha = 0.0;
    int k_override = -1;  // >= auto order when set

    /// Minimal admissible derivative order: pk > 1 for besov, k > t for
    /// lipschitz, pk + alpha > -1 for bergman, 1 for bloch.
    int derivative_order() const;
};

/// Truncated \int ((1-|z|^2)^k |f^(k)|)^p dlambda with verdict; k auto unless
/// overridden.
SeminormReport besov_seminorm(const AnalyticFunction& f, double p,
                              const std::vector<double>& rho_schedule, int k = -1,
                              const LambdaGridParams& grid = {});

/// Running sup of (1-|z|^2)^{k-t} |f^(k)| (sup-type trace).
SeminormReport lipschitz_seminorm(const AnalyticFunction& f, double t,
                                  const std::vector<double>& rho_schedule, int k = -1,
                                  const LambdaGridParams& grid = {});

/// Truncated \int ((1-|z|^2)^k |R^k f|)^p dA_alpha with R the radial
/// derivative z f'; alpha > -1 uses the normalized weight, alpha <= -1 the
/// plain (1-|z|^2)^alpha one.
SeminormReport bergman_norm(const AnalyticFunction& f, double p, double alpha,
                            const std::vector<double>& rho_schedule, int k = -1,
                            const LambdaGridParams& grid = {});

/// sup (1-|z|^2) |R f|; identical verdicts to lipschitz at t = 0.
SeminormReport bloch_seminorm(const AnalyticFunction& f,
                              const std::vector<double>& rho_schedule,
                              const LambdaGridParams& grid = {});

SeminormReport space_seminorm(const AnalyticFunction& f, const SpaceSpec& spec,
                              const std::vector<double>& rho_schedule,
                              const LambdaGridParams& grid = {});

/// Running sup of |f| itself (boundedness scan).
SeminormReport sup_abs_profile(const AnalyticFunction& f,
                               const std::vector<double>& rho_schedule,
                               const LambdaGridParams& grid = {});

enum class ForelliRudinGrowth { bounded, logarithmic, power };

/// Asymptotics of \int (1-|z|^2)^a / |1 - z conj(w)|^b dA(z) as |w| -> 1:
/// bounded for b < 2 + a, logarithmic at b = 2 + a, and
/// (1-|w|^2)^{2+a-b} growth beyond.
ForelliRudinGrowth forelli_rudin_growth(double a, double b);
double forelli_rudin_exponent(double a, double b);  // 2 + a - b (power case)

/// Numerical value of the integral (a > -1); composite radial rule with an
/// aliasing-free angular mean.
double forelli_rudin(double a, double b, Complex w);

} // namespace diskrep
