#include <doctest.h>

#include <cmath>
#include <random>

#include "diskrep/errors.hpp"
#include "diskrep/membership.hpp"
#include "diskrep/synthesis.hpp"

using namespace diskrep;

namespace {

std::vector<Complex> probe_ring(double rho, int count) {
    std::vector<Complex> out;
    for (int j = 0; j < count; ++j) {
        const double theta = 2.0 * 3.14159265358979323846 * double(j) / double(count);
        out.emplace_back(rho * std::cos(theta), rho * std::sin(theta));
    }
    return out;
}

} // namespace

TEST_CASE("synth_mobius of a point mass is -phi_a") {
    const Complex a(0.4, -0.2);
    const KernelFunction f = synth_mobius(Measure::unit_atom(a));
    for (const Complex z : probe_ring(0.7, 16)) {
        CHECK(std::abs(f(z) - (-mobius_map(a, z))) < 1e-14);
    }
}

TEST_CASE("synth_mobius of the zero measure vanishes") {
    const KernelFunction f = synth_mobius(Measure());
    CHECK(std::abs(f(Complex(0.3, 0.3))) == 0.0);
}

TEST_CASE("synth_mobius is bounded by the total variation") {
    const Measure mu = Measure::from_atoms({Atom{Complex(0.2, 0.5), Complex(0.3, 0.4)},
                                            Atom{Complex(-0.7, 0.1), Complex(0.0, -1.2)}});
    const double mass = 0.5 + 1.2;
    const KernelFunction f = synth_mobius(mu);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double rho = 0.995 * std::sqrt(unit(rng));
        const double theta = 2.0 * 3.14159265358979323846 * unit(rng);
        CHECK(std::abs(f(Complex(rho * std::cos(theta), rho * std::sin(theta)))) <= mass);
    }
}

TEST_CASE("synth_mobius rejects divergent densities") {
    Density d;
    d.family = DensityFamily::power;
    d.a = -1.5;
    CHECK_THROWS_AS(synth_mobius(Measure::from_density(d)), InfiniteMassError);
}

TEST_CASE("derivative kernel: point mass closed form") {
    const Complex a(0.3, 0.4);
    const Measure mu = Measure::unit_atom(a);
    for (const Complex z : probe_ring(0.5, 8)) {
        const Complex expected =
            (1.0 - std::norm(a)) / ((1.0 - z * std::conj(a)) * (1.0 - z * std::conj(a)));
        CHECK(std::abs(synth_mobius_derivative(mu, 1, z) - expected) < 1e-13);
    }
}

TEST_CASE("derivative formula vs central differences, k <= 3") {
    const Measure mu = Measure::from_atoms({Atom{Complex(0.5, 0.1), Complex(1.0, 0.0)},
                                            Atom{Complex(-0.2, 0.6), Complex(0.0, 0.7)}})
                           .plus(polynomial_measure(2, 1));
    const KernelFunction f = synth_mobius(mu);
    const Complex z(0.3, 0.2);
    for (int k = 1; k <= 3; ++k) {
        const Complex fd = richardson_derivative([&](Complex v) { return f(v); }, z, k);
        const Complex exact = f.derivative(z, k);
        CHECK(std::abs(fd - exact) / std::max(1.0, std::abs(exact)) < 1e-6);
    }
}

TEST_CASE("derivative at 0 of the area measure is the first moment") {
    // f'(0) = \int (1 - |w|^2) dA = moment(0, 1)
    const Complex v = synth_mobius_derivative(Measure::from_density(Density{}), 1, Complex(0.0, 0.0));
    CHECK(v.real() == doctest::Approx(moment(0, 1)).epsilon(1e-10));
    CHECK(moment(0, 1) == doctest::Approx(0.5));
}

TEST_CASE("polynomial_measure constants come from the moment oracle") {
    // m = 1, N = 0: c = 1/(moment(0,0) - moment(1,0)) = 2
    CHECK(polynomial_measure(1, 0).densities().front().coefficient.real() ==
          doctest::Approx(2.0).epsilon(1e-13));
    // m = 2, N = 1: independent quadrature oracle for the two moments
    const auto& rule = gauss_legendre(200);
    double m11 = 0.0, m21 = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double t = rule.nodes[i];
        m11 += rule.weights[i] * t * (1.0 - t);
        m21 += rule.weights[i] * t * t * (1.0 - t);
    }
    const double c21 = 1.0 / (m11 - m21);
    CHECK(polynomial_measure(2, 1).densities().front().coefficient.real() ==
          doctest::Approx(c21).epsilon(1e-10));
    CHECK(c21 == doctest::Approx(12.0).epsilon(1e-9));
}

TEST_CASE("polynomial_measure reproduces monomials") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> probes;
    for (int i = 0; i < 40; ++i) {
        const double rho = 0.8 * std::sqrt(unit(rng));
        const double theta = 2.0 * 3.14159265358979323846 * unit(rng);
        probes.emplace_back(rho * std::cos(theta), rho * std::sin(theta));
    }
    for (int m = 0; m <= 5; ++m) {
        const KernelFunction f = synth_mobius(polynomial_measure(m, 1));
        for (const Complex z : probes) {
            CHECK(std::abs(f(z) - ipow(z, m)) < 1e-8);
        }
    }
}

TEST_CASE("polynomial_measure m = 0 uses the half-integer radial oracle") {
    const Measure mu = polynomial_measure(0, 2);
    // oracle: c = -1 / \int_0^1 sqrt(t) (1-t)^2 dt
    const auto& rule = gauss_legendre(400);
    double half = 0.0;
    for (int i = 0; i < 400; ++i) {
        const double t = rule.nodes[i];
        half += rule.weights[i] * std::sqrt(t) * (1.0 - t) * (1.0 - t);
    }
    CHECK(mu.densities().front().coefficient.real() == doctest::Approx(-1.0 / half).epsilon(1e-7));
    const KernelFunction f = synth_mobius(mu);
    CHECK(std::abs(f(Complex(0.0, 0.0)) - 1.0) < 1e-8);
    CHECK(std::abs(f(Complex(0.5, 0.2)) - 1.0) < 1e-8);
}

TEST_CASE("polynomial_measure_for covers full polynomials") {
    const std::vector<Complex> coeffs{Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(-2.0, 1.0)};
    const KernelFunction f = synth_mobius(polynomial_measure_for(coeffs, 2));
    for (const Complex z : probe_ring(0.6, 12)) {
        const Complex expected = coeffs[0] + coeffs[2] * z * z;
        CHECK(std::abs(f(z) - expected) < 1e-7);
    }
}

TEST_CASE("default_monomial_N grows as p shrinks") {
    CHECK(default_monomial_N(1.0) == 4);
    CHECK(default_monomial_N(0.5) == 6);
    CHECK(default_monomial_N(0.25) == 10);
}

TEST_CASE("lattice_atomic_measure weight rule") {
    const Lattice lat = build_lattice(0.5, 0.7);
    std::vector<Complex> coeffs(lat.size(), Complex(0.0, 0.0));
    coeffs[0] = Complex(1.0, 0.0);
    const Measure m2 = lattice_atomic_measure(lat, coeffs, 2);
    REQUIRE(m2.atoms().size() == 1);
    const Complex z1 = lat.centers()[0];
    CHECK(std::abs(m2.atoms()[0].weight - 1.0 / (2.0 * std::conj(z1))) < 1e-14);

    // k = 1 keeps the coefficients
    std::vector<Complex> all(lat.size(), Complex(0.25, 0.0));
    const Measure m1 = lattice_atomic_measure(lat, all, 1);
    for (const auto& atom : m1.atoms()) CHECK(atom.weight == Complex(0.25, 0.0));

    // summable coefficients give a convergent mass trend
    const auto mass = total_mass(m1, default_mass_schedule());
    CHECK(mass.verdict == Verdict::converged);
    CHECK(mass.final_value() == doctest::Approx(0.25 * double(lat.size())));
}

TEST_CASE("bergman kernel at the besov corner reduces to the unit-exponent atom") {
    // p = 1, k = 2, alpha = pk - 2 = 0, b = k + 1 = 3: numerator exponent 1
    const Lattice lat = build_lattice(0.5, 0.7);
    std::vector<Complex> coeffs(lat.size(), Complex(0.1, 0.0));
    const Measure mu = Measure::from_atoms([&] {
        std::vector<Atom> atoms;
        for (std::size_t n = 0; n < lat.size(); ++n) {
            atoms.push_back(Atom{lat.centers()[n], coeffs[n]});
        }
        return atoms;
    }());
    const KernelFunction f = synth_bergman(mu, 3.0, 1.0, 0.0);
    CHECK(f.params().e == doctest::Approx(1.0));
    for (const Complex z : probe_ring(0.5, 6)) {
        Complex expected = 0.0;
        for (std::size_t n = 0; n < lat.size(); ++n) {
            const Complex zn = lat.centers()[n];
            expected += coeffs[n] * (1.0 - std::norm(zn)) / ipow(1.0 - z * std::conj(zn), 3);
        }
        CHECK(std::abs(f(z) - expected) < 1e-12);
    }
}

TEST_CASE("bergman constraint is enforced") {
    CHECK_THROWS_AS(synth_bergman(Measure::unit_atom(Complex(0.0, 0.0)), 1.0, 1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("bergman kernel of a point mass at 0 is constant 1") {
    const KernelFunction f = synth_bergman(Measure::unit_atom(Complex(0.0, 0.0)), 3.0, 1.0, 0.0);
    for (const Complex z : probe_ring(0.8, 8)) CHECK(std::abs(f(z) - 1.0) < 1e-14);
}

TEST_CASE("principal branch stays continuous along a loop") {
    const Measure mu = Measure::unit_atom(Complex(0.6, 0.3));
    const KernelFunction f = synth_bergman(mu, 3.5, 1.0, 0.0);  // non-integer pole order
    Complex prev = f(Complex(0.8, 0.0));
    const int steps = 720;
    for (int i = 1; i <= steps; ++i) {
        const double theta = 2.0 * 3.14159265358979323846 * double(i) / double(steps);
        const Complex v = f(Complex(0.8 * std::cos(theta), 0.8 * std::sin(theta)));
        CHECK(std::abs(v - prev) < 0.2);  // no branch jump
        prev = v;
    }
}

TEST_CASE("lipschitz kernel constraints and point-mass value") {
    CHECK_THROWS_AS(synth_lipschitz(Measure(), 0.5, 0.2), std::invalid_argument);  // b + t <= 1
    CHECK_THROWS_AS(synth_lipschitz(Measure(), -1.0, 3.0), std::invalid_argument); // b negative integer
    const KernelFunction f = synth_lipschitz(Measure::unit_atom(Complex(0.0, 0.0)), 2.0, 1.5);
    CHECK(std::abs(f(Complex(0.4, -0.3)) - 1.0) < 1e-14);
}

TEST_CASE("theoremB_integrate recovers the antiderivative") {
    const Complex a(0.35, 0.2);
    const Measure mu = Measure::unit_atom(a);
    const KernelFunction fprime = synth_mobius_derivative_kernel(mu);
    const KernelFunction rebuilt = theoremB_integrate(fprime, Measure());
    // closed form: the antiderivative of (1-|a|^2)/(1 - z conj a)^2 in mobius form
    for (const Complex z : probe_ring(0.6, 10)) {
        const Complex expected = (z - a) / (1.0 - z * std::conj(a));
        CHECK(std::abs(rebuilt(z) - expected) < 1e-14);
    }
    // derivative round-trip against central differences
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double rho = 0.8 * std::sqrt(unit(rng));
        const double theta = 2.0 * 3.14159265358979323846 * unit(rng);
        const Complex z(rho * std::cos(theta), rho * std::sin(theta));
        const Complex fd = richardson_derivative([&](Complex v) { return rebuilt(v); }, z, 1);
        CHECK(std::abs(fd - fprime(z)) / std::max(1.0, std::abs(fprime(z))) < 1e-6);
    }
    // zero measure integrates to the zero function
    const KernelFunction zero = theoremB_integrate(synth_mobius_derivative_kernel(Measure()), Measure());
    CHECK(std::abs(zero(Complex(0.2, 0.2))) == 0.0);
    // only derivative-kernel inputs are accepted
    CHECK_THROWS_AS(theoremB_integrate(synth_mobius(mu), Measure()), std::invalid_argument);
}

TEST_CASE("fit_atomic_coefficients recovers planted coefficients") {
    const Lattice lat = build_lattice(0.6, 0.6);
    std::vector<Complex> planted(lat.size());
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (auto& c : planted) c = Complex(unit(rng), unit(rng));

    auto f = [&](Complex z) {
        Complex acc = 0.0;
        for (std::size_t n = 0; n < lat.size(); ++n) {
            const Complex zn = lat.centers()[n];
            acc += planted[n] * (1.0 - std::norm(zn)) / ipow(1.0 - z * std::conj(zn), 3);
        }
        return acc;
    };
    std::vector<Complex> probes;
    for (double rho : {0.15, 0.35, 0.55, 0.75, 0.9}) {
        for (const Complex z : probe_ring(rho, 24)) probes.push_back(z);
    }
    const AtomicFit fit = fit_atomic_coefficients(f, lat, 3.0, 1.0, probes);
    CHECK(fit.residual_max < 1e-8);
    for (std::size_t n = 0; n < lat.size(); ++n) {
        CHECK(std::abs(fit.coefficients[n] - planted[n]) < 1e-6);
    }
}
