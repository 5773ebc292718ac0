#include <doctest.h>

#include <cmath>

#include "diskrep/errors.hpp"
#include "diskrep/quadrature.hpp"

using namespace diskrep;

namespace {

// 1-D Gauss-Legendre on [0, 1], independent path for oracles.
double line_integral(const std::function<double(double)>& f, int n = 200) {
    const auto& rule = gauss_legendre(n);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

} // namespace

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto& rule = gauss_legendre(12);
    double acc = 0.0;
    for (int i = 0; i < 12; ++i) acc += rule.weights[i] * std::pow(rule.nodes[i], 7.0);
    CHECK(acc == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("integrate_disk: constant against dA gives rho^2") {
    QuadratureScheme s;
    s.rho = 0.8;
    const Complex v = integrate_disk([](Complex) { return Complex(1.0, 0.0); }, DiskWeight::area, s);
    CHECK(v.real() == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("integrate_disk: dA_alpha normalization tends to 1") {
    QuadratureScheme s;
    s.rho = 1.0 - 1e-10;
    s.alpha = 1.0;
    const Complex v =
        integrate_disk([](Complex) { return Complex(1.0, 0.0); }, DiskWeight::weighted_area, s);
    CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("integrate_disk: |z|^2 against dA") {
    // oracle: the radial line integral of t under the normalized polar measure
    const double oracle = line_integral([](double t) { return t; });
    QuadratureScheme s;
    s.rho = 1.0 - 1e-10;
    const Complex v =
        integrate_disk([](Complex z) { return Complex(std::norm(z), 0.0); }, DiskWeight::area, s);
    CHECK(v.real() == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(oracle == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("integrate_pseudo_disk examples") {
    QuadratureScheme s;
    const EuclideanDisk half = pseudo_disk(Complex(0.5, 0.0), 0.5);
    const Complex area =
        integrate_pseudo_disk([](Complex) { return Complex(1.0, 0.0); }, half, s);
    CHECK(area.real() == doctest::Approx(0.16).epsilon(1e-12));

    const EuclideanDisk centered = pseudo_disk(Complex(0.0, 0.0), 0.3);
    const Complex c2 =
        integrate_pseudo_disk([](Complex) { return Complex(1.0, 0.0); }, centered, s);
    CHECK(c2.real() == doctest::Approx(0.09).epsilon(1e-12));

    // mean value of the identity: \int_E w dA = center * radius^2
    const EuclideanDisk off{Complex(0.2, -0.3), 0.25};
    const Complex mean = integrate_pseudo_disk([](Complex w) { return w; }, off, s);
    CHECK(mean.real() == doctest::Approx(0.2 * 0.0625).epsilon(1e-10));
    CHECK(mean.imag() == doctest::Approx(-0.3 * 0.0625).epsilon(1e-10));
}

TEST_CASE("holomorphic mean value: centered monomials integrate to zero") {
    QuadratureScheme s;
    const EuclideanDisk disk{Complex(0.0, 0.0), 0.6};
    for (int k = 1; k <= 4; ++k) {
        const Complex v = integrate_pseudo_disk([k](Complex w) { return ipow(w, k); }, disk, s);
        CHECK(std::abs(v) < 1e-14);
    }
}

TEST_CASE("moment closed form vs quadrature") {
    CHECK(moment(0, 0) == doctest::Approx(1.0));
    CHECK(moment(1, 0) == doctest::Approx(0.5));
    CHECK(moment(1, 1) == doctest::Approx(1.0 / 6.0));
    // oracle for (1,1): \int_0^1 t (1 - t) dt
    CHECK(line_integral([](double t) { return t * (1.0 - t); }) ==
          doctest::Approx(moment(1, 1)).epsilon(1e-13));

    QuadratureScheme s;
    s.rho = 1.0 - 1e-8;
    s.radial_nodes = 128;
    for (int k = 0; k <= 6; ++k) {
        for (int N = 0; N <= 6; ++N) {
            const Complex q = integrate_disk(
                [k, N](Complex z) {
                    const double t = std::norm(z);
                    return Complex(std::pow(t, k) * std::pow(1.0 - t, N), 0.0);
                },
                DiskWeight::area, s);
            CHECK(q.real() == doctest::Approx(moment(k, N)).epsilon(1e-10));
        }
    }
}

TEST_CASE("beta_moment matches the half-integer radial oracle") {
    // \int |w| (1-|w|^2)^2 dA = \int_0^1 sqrt(t) (1-t)^2 dt = B(3/2, 3)
    const double oracle = line_integral([](double t) { return std::sqrt(t) * (1.0 - t) * (1.0 - t); }, 400);
    CHECK(beta_moment(1.5, 3.0) == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(beta_moment(1.5, 3.0) == doctest::Approx(16.0 / 105.0).epsilon(1e-12));
}

TEST_CASE("refinement stability on smooth integrands") {
    QuadratureScheme s;
    s.rho = 0.95;
    auto f = [](Complex z) { return std::exp(z) / (2.0 - z); };
    const Complex v = integrate_disk(f, DiskWeight::area, s);
    QuadratureScheme fine = s;
    fine.radial_nodes *= 2;
    fine.angular_nodes *= 2;
    const Complex w = integrate_disk(f, DiskWeight::area, fine);
    CHECK(std::abs(v - w) < s.tol);
    CHECK_NOTHROW(integrate_disk_checked(f, DiskWeight::area, s));
}

TEST_CASE("checked quadrature raises on unresolved integrands") {
    QuadratureScheme s;
    s.radial_nodes = 8;
    s.angular_nodes = 8;
    s.tol = 1e-12;
    auto nasty = [](Complex z) { return Complex(std::cos(355.0 * std::arg(z + 1e-30)), 0.0); };
    CHECK_THROWS_AS(integrate_disk_checked(nasty, DiskWeight::area, s), QuadratureError);
}

TEST_CASE("angular_mean_inv_power matches a brute trapezoid at moderate tau") {
    const double tau = 0.6, b = 3.4;
    double acc = 0.0;
    const int n = 4096;
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * 3.14159265358979323846 * double(j) / double(n);
        acc += std::pow(std::abs(1.0 - tau * Complex(std::cos(theta), std::sin(theta))), -b);
    }
    acc /= double(n);
    CHECK(angular_mean_inv_power(b, tau) == doctest::Approx(acc).epsilon(1e-10));
}
