#include <doctest.h>

#include <cmath>
#include <random>

#include "diskrep/errors.hpp"
#include "diskrep/measure.hpp"

using namespace diskrep;

namespace {

Measure area_density() { return Measure::from_density(Density{}); }

Measure power_density(double a) {
    Density d;
    d.family = DensityFamily::power;
    d.a = a;
    return Measure::from_density(d);
}

// Independent radial oracle: \int_0^{rho^2} (1-t)^a dt via the antiderivative
// -(1-t)^{a+1}/(a+1) (a != -1).
double radial_mass_oracle(double a, double rho) {
    const double t1 = rho * rho;
    return (1.0 - std::pow(1.0 - t1, a + 1.0)) / (a + 1.0);
}

} // namespace

TEST_CASE("localized atoms use strict pseudo-disk membership") {
    const Measure one = Measure::unit_atom(Complex(0.0, 0.0));
    CHECK(localized(one, 0.5, Complex(0.0, 0.0)).real() == doctest::Approx(1.0));
    // atom exactly on the boundary circle of D(0, 0.5) is outside
    const Measure edge = Measure::unit_atom(Complex(0.5, 0.0));
    CHECK(localized(edge, 0.5, Complex(0.0, 0.0)).real() == 0.0);
    // pseudo-distance 0.9 > r
    const Complex far(0.9, 0.0);
    CHECK(localized(one, 0.5, far).real() == 0.0);
}

TEST_CASE("localized area density reproduces pseudo-disk areas") {
    const Measure mu = area_density();
    CHECK(localized(mu, 0.5, Complex(0.5, 0.0)).real() == doctest::Approx(0.16).epsilon(1e-8));
    CHECK(localized_variation(mu, 0.5, Complex(0.5, 0.0)) == doctest::Approx(0.16).epsilon(1e-8));
}

TEST_CASE("averaged divides by (1-|z|^2)^2") {
    const Measure mu = area_density();
    CHECK(averaged(mu, 0.5, Complex(0.0, 0.0)) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(averaged(mu, 0.5, Complex(0.5, 0.0)) == doctest::Approx(0.16 / 0.5625).epsilon(1e-8));
    // ratio averaged * (1-|z|^2)^2 / pseudo_disk_area = 1 along a radius sweep
    for (double rho : {0.1, 0.4, 0.7, 0.9}) {
        const Complex z(rho, 0.0);
        const double q = 1.0 - rho * rho;
        const double ratio = averaged(mu, 0.5, z) * q * q / pseudo_disk_area(z, 0.5);
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-7));
    }
}

TEST_CASE("localized is linear in the measure") {
    const Measure a = Measure::unit_atom(Complex(0.2, 0.1));
    const Measure b = area_density();
    const Complex alpha(0.7, -0.3);
    const Measure combo = a.scaled(alpha).plus(b);
    for (const Complex z : {Complex(0.0, 0.0), Complex(0.3, -0.2), Complex(-0.5, 0.4)}) {
        const Complex lhs = localized(combo, 0.4, z);
        const Complex rhs = alpha * localized(a, 0.4, z) + localized(b, 0.4, z);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("localized is monotone in r for positive measures") {
    const Measure mu = area_density().plus(Measure::unit_atom(Complex(0.4, 0.3)));
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double rho = 0.8 * std::sqrt(unit(rng));
        const double theta = 2.0 * 3.14159265358979323846 * unit(rng);
        const Complex z(rho * std::cos(theta), rho * std::sin(theta));
        const double small = localized_variation(mu, 0.3, z);
        const double large = localized_variation(mu, 0.6, z);
        CHECK(small <= large + 1e-12);
    }
}

TEST_CASE("berezin transform values") {
    // area measure: the normalized kernel integrates to exactly 1 at z = 0.
    CHECK(berezin(area_density(), Complex(0.0, 0.0)).real() == doctest::Approx(1.0).epsilon(1e-6));

    // unit point mass at the origin: (1-|z|^2)^2
    const Measure atom = Measure::unit_atom(Complex(0.0, 0.0));
    for (double rho : {0.0, 0.3, 0.7, 0.9}) {
        const double q = 1.0 - rho * rho;
        CHECK(berezin(atom, Complex(rho, 0.0)).real() == doctest::Approx(q * q));
    }
}

TEST_CASE("berezin against a brute-force polar oracle at z = 0.9") {
    const Complex z(0.9, 0.0);
    // independent Riemann-sum oracle over the same truncated disk
    const double rho = 1.0 - 1e-6;
    const int nr = 3000, nt = 2048;
    const double q = 1.0 - std::norm(z);
    double oracle = 0.0;
    const double t1 = rho * rho;
    for (int i = 0; i < nr; ++i) {
        const double t = t1 * (double(i) + 0.5) / double(nr);
        const double s = std::sqrt(t);
        double ang = 0.0;
        for (int j = 0; j < nt; ++j) {
            const double theta = 2.0 * 3.14159265358979323846 * (double(j) + 0.5) / double(nt);
            const Complex w(s * std::cos(theta), s * std::sin(theta));
            const double n2 = std::norm(1.0 - z * std::conj(w));  // |1 - z conj w|^2
            ang += 1.0 / (n2 * n2);
        }
        oracle += ang / double(nt);
    }
    oracle *= q * q * t1 / double(nr);
    BerezinParams params;
    params.rho = rho;
    const double got = berezin_variation(area_density(), z, params);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(got == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("berezin rejects measures with divergent mass") {
    CHECK_THROWS_AS(berezin(power_density(-1.5), Complex(0.0, 0.0)), InfiniteMassError);
}

TEST_CASE("total_mass examples") {
    const auto schedule = default_mass_schedule();
    // finite atom list sums immediately
    const Measure atoms = Measure::from_atoms(
        {Atom{Complex(0.1, 0.0), Complex(0.25, 0.0)}, Atom{Complex(0.0, 0.5), Complex(0.0, -0.5)}});
    const auto a = total_mass(atoms, schedule);
    CHECK(a.final_value() == doctest::Approx(0.75));
    CHECK(a.verdict == Verdict::converged);

    // (1-t)^{-1/2} converges, values match the radial oracle
    const auto b = total_mass(power_density(-0.5), schedule);
    CHECK(b.verdict == Verdict::converged);
    for (std::size_t i = 0; i < schedule.size(); i += 4) {
        CHECK(b.values[i] == doctest::Approx(radial_mass_oracle(-0.5, schedule[i])).epsilon(1e-5));
    }

    // (1-t)^{-3/2} diverges
    const auto c = total_mass(power_density(-1.5), schedule);
    CHECK(c.verdict == Verdict::divergent);
}

TEST_CASE("lambda_clip reproduces the invariant mass of pseudo-disks") {
    // full disk: lambda(D(z, r)) = r^2/(1-r^2) regardless of the center
    for (const Complex z : {Complex(0.0, 0.0), Complex(0.5, 0.2), Complex(-0.3, 0.7)}) {
        const EuclideanDisk disk = pseudo_disk(z, 0.4);
        const double full = lambda_clip(disk, 0.9999, 2048);
        CHECK(full == doctest::Approx(0.16 / 0.84).epsilon(1e-6));
    }
    // clipping at rho below the disk kills it
    const EuclideanDisk far = pseudo_disk(Complex(0.8, 0.0), 0.1);
    CHECK(lambda_clip(far, 0.5) == 0.0);
}

TEST_CASE("localized_lp_norm: single atom at p = 1 converges to r^2/(1-r^2)") {
    // oracle: \int_0^r 2 s (1-s^2)^{-2} ds by fine midpoint
    const double r = 0.5;
    const int n = 100000;
    double oracle = 0.0;
    for (int i = 0; i < n; ++i) {
        const double s = r * (double(i) + 0.5) / double(n);
        oracle += 2.0 * s / ((1.0 - s * s) * (1.0 - s * s));
    }
    oracle *= r / double(n);

    const auto report = localized_lp_norm(Measure::unit_atom(Complex(0.0, 0.0)), r, 1.0,
                                          disk_rho_schedule(0.8, 0.999, 6));
    CHECK(report.verdict == Verdict::converged);
    CHECK(report.final_value() == doctest::Approx(oracle).epsilon(1e-5));
    CHECK(report.final_value() == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
}

TEST_CASE("localized_lp_norm: zero measure stays zero") {
    const auto report = localized_lp_norm(Measure(), 0.5, 1.0, disk_rho_schedule(0.8, 0.99, 5));
    for (const double v : report.values) CHECK(v == 0.0);
    CHECK(report.verdict == Verdict::converged);
}

TEST_CASE("localized_lp_norm: p = infinity tracks the area profile") {
    const auto report =
        localized_lp_norm(area_density(), 0.5, std::numeric_limits<double>::infinity(),
                          disk_rho_schedule(0.8, 0.99, 5));
    CHECK(report.final_value() == doctest::Approx(0.25).epsilon(1e-3));
    CHECK(report.verdict == Verdict::converged);
}

TEST_CASE("sequence_lp examples") {
    const Lattice lat = build_lattice(0.5, 0.9);
    const auto zero = sequence_lp(Measure(), lat, 1.0, false);
    CHECK(zero.norm == 0.0);

    // single atom: the l^1 sum counts centers whose pseudo-disk captures it
    const Measure atom = Measure::unit_atom(Complex(0.0, 0.0));
    const auto seq = sequence_lp(atom, lat, 1.0, false);
    std::size_t count = 0;
    for (const Complex zn : lat.centers()) {
        if (pseudo_distance(zn, Complex(0.0, 0.0)) < 0.5) ++count;
    }
    CHECK(seq.norm == doctest::Approx(double(count)));
    CHECK(double(count) < 40.0);  // bounded covering multiplicity

    // area density at p = infinity: comparable to the integral sup norm
    const auto sup_seq =
        sequence_lp(area_density(), lat, std::numeric_limits<double>::infinity(), false);
    const auto sup_int =
        localized_lp_norm(area_density(), 0.5, std::numeric_limits<double>::infinity(),
                          disk_rho_schedule(0.8, 0.99, 5));
    CHECK(sup_seq.norm <= sup_int.final_value() * 1.05);
    CHECK(sup_seq.norm >= sup_int.final_value() * 0.2);
}

TEST_CASE("carleson_constant profiles") {
    const auto probes = carleson_probe_ladder({0.0, 0.5, 0.9, 0.99, 0.999}, 4);
    // area measure is 2-Carleson: ratio = area / (1-|z|^2)^2 is bounded
    const auto area2 = carleson_constant(area_density(), 2.0, 0.5, probes);
    CHECK(area2.constant < 1.0);
    CHECK(area2.constant > 0.2);

    // a single atom is 1-Carleson: only probes with the atom inside count
    const auto atom1 = carleson_constant(Measure::unit_atom(Complex(0.0, 0.0)), 1.0, 0.5, probes);
    CHECK(std::isfinite(atom1.constant));
    for (std::size_t i = 0; i < atom1.probes.size(); ++i) {
        if (std::abs(atom1.probes[i]) > 0.6) CHECK(atom1.ratios[i] == 0.0);
    }
}

TEST_CASE("corollary-4 reweighting: the two integral routes coincide at n = 1") {
    // \int (mu_s)^p dlambda == \int (averaged_s)^p dA_{2(p-1)} identically.
    const double p = 0.7, s = 0.4;
    const Measure mu = area_density();
    const auto schedule = disk_rho_schedule(0.8, 0.98, 5);

    double cache_t = -1.0, cache_v = 0.0;
    auto loc = [&](Complex z) {
        const double t = std::norm(z);
        if (std::abs(t - cache_t) > 1e-13 * (1.0 + t)) {
            cache_t = t;
            cache_v = localized_variation(mu, s, Complex(std::sqrt(t), 0.0));
        }
        return cache_v;
    };
    auto route_a = lambda_profile_report(
        [&](Complex z) { return std::pow(loc(z), p); }, schedule);
    auto route_b = lambda_profile_report(
        [&](Complex z) {
            const double q = 1.0 - std::norm(z);
            const double avg = loc(z) / (q * q);
            // dA_{2(p-1)} = (1-t)^{2(p-1)} dA = (1-t)^{2p} dlambda
            return std::pow(avg, p) * std::pow(q, 2.0 * p);
        },
        schedule);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        CHECK(route_a.values[i] == doctest::Approx(route_b.values[i]).epsilon(1e-10));
    }
}

TEST_CASE("corollary-4 nu-transform keeps averaged values comparable") {
    const Lattice lat = build_lattice(0.5, 0.9);
    const Measure mu = area_density();
    const Measure nu = mu.weighted_by_power(2.0);
    const auto mu_seq = sequence_lp(mu, lat, 1.0, false);
    const auto nu_seq = sequence_lp(nu, lat, 1.0, true);  // averaged
    double lo = 1e300, hi = 0.0;
    for (std::size_t n = 0; n < lat.size(); ++n) {
        const double ratio = nu_seq.per_center[n] / mu_seq.per_center[n];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(lo > 0.05);
    CHECK(hi / lo < 30.0);
}

TEST_CASE("measure algebra: scaling, sums, reweighting") {
    const Measure atom = Measure::unit_atom(Complex(0.3, 0.0));
    const Measure two = atom.scaled(Complex(2.0, 0.0));
    CHECK(localized(two, 0.5, Complex(0.3, 0.0)).real() == doctest::Approx(2.0));

    const Measure weighted = atom.weighted_by_power(1.0);
    CHECK(localized(weighted, 0.5, Complex(0.3, 0.0)).real() == doctest::Approx(1.0 - 0.09));

    const Measure mix = atom.plus(area_density());
    CHECK(localized(mix, 0.5, Complex(0.3, 0.0)).real() ==
          doctest::Approx(1.0 + localized(area_density(), 0.5, Complex(0.3, 0.0)).real())
              .epsilon(1e-8));
}
