#include "diskrep/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "diskrep/errors.hpp"

namespace diskrep {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
    // Newton iteration on P_n, nodes mapped from [-1, 1] to [0, 1].
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
                p0 = p1;
                p1 = p2;
            }
            dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[n - 1 - i] = 0.5 * (x + 1.0);
        rule.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

} // namespace

const GaussLegendre& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    static std::map<int, GaussLegendre> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, compute_gauss_legendre(n)).first;
    }
    return it->second;
}

namespace {

double radial_weight(DiskWeight weight, double t, double alpha) {
    switch (weight) {
        case DiskWeight::area: return 1.0;
        case DiskWeight::weighted_area: return (alpha + 1.0) * std::pow(1.0 - t, alpha);
        case DiskWeight::invariant: {
            const double q = 1.0 - t;
            return 1.0 / (q * q);
        }
    }
    return 1.0;
}

Complex integrate_disk_impl(const std::function<Complex(Complex)>& f, DiskWeight weight,
                            const QuadratureScheme& s) {
    if (!(s.rho > 0.0 && s.rho < 1.0)) {
        throw std::domain_error("integrate_disk: truncation radius must satisfy 0 < rho < 1");
    }
    if (weight == DiskWeight::weighted_area && !(s.alpha > -1.0)) {
        throw std::domain_error("integrate_disk: weighted_area needs alpha > -1");
    }
    const auto& rule = gauss_legendre(s.radial_nodes);
    const double tmax = s.rho * s.rho;
    const double two_pi = 2.0 * std::numbers::pi;
    Complex total = 0.0;
    for (int i = 0; i < s.radial_nodes; ++i) {
        const double t = tmax * rule.nodes[i];
        const double radius = std::sqrt(t);
        Complex ang = 0.0;
        for (int j = 0; j < s.angular_nodes; ++j) {
            const double theta = two_pi * double(j) / double(s.angular_nodes);
            ang += f(Complex(radius * std::cos(theta), radius * std::sin(theta)));
        }
        ang /= double(s.angular_nodes);
        total += rule.weights[i] * tmax * radial_weight(weight, t, s.alpha) * ang;
    }
    return total;
}

} // namespace

Complex integrate_disk(const std::function<Complex(Complex)>& f, DiskWeight weight,
                       const QuadratureScheme& scheme) {
    return integrate_disk_impl(f, weight, scheme);
}

Complex integrate_disk_checked(const std::function<Complex(Complex)>& f, DiskWeight weight,
                               const QuadratureScheme& scheme) {
    const Complex coarse = integrate_disk_impl(f, weight, scheme);
    QuadratureScheme fine = scheme;
    fine.radial_nodes *= 2;
    fine.angular_nodes *= 2;
    const Complex refined = integrate_disk_impl(f, weight, fine);
    const double scale = std::max(std::abs(refined), 1.0);
    if (std::abs(refined - coarse) > scheme.tol * scale) {
        throw QuadratureError("disk quadrature did not reach tolerance", std::abs(refined));
    }
    return refined;
}

namespace {

Complex integrate_pseudo_disk_impl(const std::function<Complex(Complex)>& f,
                                   const EuclideanDisk& disk, const QuadratureScheme& s) {
    if (!(disk.radius > 0.0)) {
        throw std::domain_error("integrate_pseudo_disk: radius must be positive");
    }
    // Map onto the reference disk: z = c + R u, dA(z) = R^2 dA(u).
    const auto& rule = gauss_legendre(s.radial_nodes);
    const double two_pi = 2.0 * std::numbers::pi;
    Complex total = 0.0;
    for (int i = 0; i < s.radial_nodes; ++i) {
        const double radius = std::sqrt(rule.nodes[i]);
        Complex ang = 0.0;
        for (int j = 0; j < s.angular_nodes; ++j) {
            const double theta = two_pi * double(j) / double(s.angular_nodes);
            const Complex u(radius * std::cos(theta), radius * std::sin(theta));
            ang += f(disk.center + disk.radius * u);
        }
        total += rule.weights[i] * ang / double(s.angular_nodes);
    }
    return disk.radius * disk.radius * total;
}

} // namespace

Complex integrate_pseudo_disk(const std::function<Complex(Complex)>& f,
                              const EuclideanDisk& disk, const QuadratureScheme& scheme) {
    return integrate_pseudo_disk_impl(f, disk, scheme);
}

Complex integrate_pseudo_disk_checked(const std::function<Complex(Complex)>& f,
                                      const EuclideanDisk& disk, const QuadratureScheme& scheme) {
    const Complex coarse = integrate_pseudo_disk_impl(f, disk, scheme);
    QuadratureScheme fine = scheme;
    fine.radial_nodes *= 2;
    fine.angular_nodes *= 2;
    const Complex refined = integrate_pseudo_disk_impl(f, disk, fine);
    const double scale = std::max(std::abs(refined), 1.0);
    if (std::abs(refined - coarse) > scheme.tol * scale) {
        throw QuadratureError("pseudo-disk quadrature did not reach tolerance", std::abs(refined));
    }
    return refined;
}

double angular_mean_inv_power(double b, double tau) {
    if (!(tau >= 0.0 && tau < 1.0)) {
        throw std::domain_error("angular_mean_inv_power: need 0 <= tau < 1");
    }
    const double tau2 = tau * tau;
    const double half = 0.5 * b;
    double term = 1.0, sum = 1.0;
    for (long k = 0; k < 20000000; ++k) {
        const double factor = (half + double(k)) / (double(k) + 1.0);
        term *= factor * factor * tau2;
        sum += term;
        if (term < 1e-17 * sum && k > 8) break;
    }
    return sum;
}

double moment(int k, int N) {
    if (k < 0 || N < 0) throw std::domain_error("moment: need k, N >= 0");
    if (k + N + 1 <= 170) {
        // Exact in double precision through factorials.
        double num = 1.0;
        for (int i = 2; i <= k; ++i) num *= double(i);
        for (int i = 2; i <= N; ++i) num *= double(i);
        double den = 1.0;
        for (int i = 2; i <= k + N + 1; ++i) den *= double(i);
        return num / den;
    }
    return std::exp(std::lgamma(double(k) + 1.0) + std::lgamma(double(N) + 1.0) -
                    std::lgamma(double(k + N) + 2.0));
}

double beta_moment(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw std::domain_error("beta_moment: need a, b > 0");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

} // namespace diskrep
