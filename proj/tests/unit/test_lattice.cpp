#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "diskrep/errors.hpp"
#include "diskrep/json_io.hpp"
#include "diskrep/lattice.hpp"

using namespace diskrep;

TEST_CASE("build_lattice covers and separates") {
    const Lattice lat = build_lattice(0.5, 0.9);
    CHECK(lat.size() > 10);
    CHECK(lat.center_separation() >= 0.25 - 1e-12);
    for (const Complex z : lat.centers()) {
        CHECK(std::abs(z) > 0.0);
        CHECK(std::abs(z) <= 0.9 + 1e-12);
    }
    // centers ordered with nondecreasing modulus
    for (std::size_t i = 1; i < lat.size(); ++i) {
        CHECK(std::abs(lat.centers()[i]) >= std::abs(lat.centers()[i - 1]) - 1e-12);
    }

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double rho = 0.9 * std::sqrt(unit(rng));
        const double theta = 2.0 * 3.14159265358979323846 * unit(rng);
        const Complex z(rho * std::cos(theta), rho * std::sin(theta));
        const std::size_t n = lat.cell_of(z);
        CHECK(pseudo_distance(z, lat.centers()[n]) < 0.5);
    }
}

TEST_CASE("cell_of is deterministic and owns its center") {
    const Lattice lat = build_lattice(0.4, 0.9);
    for (std::size_t n = 0; n < lat.size(); n += 7) {
        CHECK(lat.cell_of(lat.centers()[n]) == n);
    }
    const Complex z(0.123, -0.456);
    CHECK(lat.cell_of(z) == lat.cell_of(z));
    CHECK_THROWS_AS(lat.cell_of(Complex(0.95, 0.0)), std::domain_error);
}

TEST_CASE("center count grows like 1/(1 - rho_max)") {
    const double r = 0.5;
    const std::size_t n1 = build_lattice(r, 0.9).size();
    const std::size_t n2 = build_lattice(r, 0.99).size();
    const std::size_t n3 = build_lattice(r, 0.999).size();
    const double g1 = double(n2) / double(n1);
    const double g2 = double(n3) / double(n2);
    CHECK(g1 > 3.0);
    CHECK(g1 < 30.0);
    CHECK(g2 > 3.0);
    CHECK(g2 < 30.0);
}

TEST_CASE("small-domain lattice still partitions") {
    const Lattice lat = build_lattice(0.5, 0.5);
    CHECK(lat.rings().size() >= 1);
    const auto check = verify_lattice(lat, 20000, 11);
    CHECK(check.ok());
}

TEST_CASE("construction fails when the domain cannot hold a ring") {
    CHECK_THROWS_AS(build_lattice(0.9, 0.1), LatticeError);
}

TEST_CASE("verify_lattice is clean on valid lattices") {
    for (const double r : {0.3, 0.5}) {
        for (const double rho_max : {0.9, 0.99}) {
            const auto check = verify_lattice(build_lattice(r, rho_max), 20000, 5);
            CHECK(check.ok());
        }
    }
}

TEST_CASE("inner disks land in their own cell") {
    const Lattice lat = build_lattice(0.5, 0.9);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t n = 0; n < lat.size(); n += 3) {
        const EuclideanDisk inner = pseudo_disk(lat.centers()[n], 0.5 / 4.0);
        for (int i = 0; i < 20; ++i) {
            const double rho = inner.radius * std::sqrt(unit(rng)) * 0.999;
            const double theta = 2.0 * 3.14159265358979323846 * unit(rng);
            const Complex z = inner.center + rho * Complex(std::cos(theta), std::sin(theta));
            if (std::abs(z) > lat.rho_max()) continue;
            CHECK(lat.cell_of(z) == n);
        }
    }
}

TEST_CASE("mutated cell families report violations") {
    const Lattice lat = build_lattice(0.5, 0.9);
    const CellFamily base = cell_family(lat);

    SUBCASE("deleting a cell leaves uncovered points") {
        CellFamily mutant = base;
        const std::size_t removed = lat.size() / 2;
        mutant.cells_containing = [&base, removed](Complex z) {
            auto cells = base.cells_containing(z);
            std::erase(cells, removed);
            return cells;
        };
        const auto check = verify_cells(mutant, 100000, 17);
        CHECK(check.coverage_violations > 0);
    }

    SUBCASE("shrinking r in metadata breaks outer containment") {
        // The ring construction covers at better than r/2, so quartering the
        // metadata radius is what forces cells outside D(z_n, r').
        CellFamily mutant = base;
        mutant.r = base.r / 4.0;
        const auto check = verify_cells(mutant, 100000, 17);
        CHECK(check.outer_violations > 0);
    }

    SUBCASE("overlapping disks break disjointness") {
        CellFamily mutant = base;
        mutant.cells_containing = [&base](Complex z) {
            std::vector<std::size_t> cells;
            for (std::size_t n = 0; n < base.centers.size(); ++n) {
                if (pseudo_distance(z, base.centers[n]) < base.r / 2.0) cells.push_back(n);
            }
            return cells;
        };
        const auto check = verify_cells(mutant, 20000, 17);
        CHECK(check.disjointness_violations > 0);
    }
}

TEST_CASE("lattice JSON export carries r, rho_max and centers") {
    const Lattice lat = build_lattice(0.5, 0.8);
    const std::string text = lattice_to_json(lat);
    CHECK(text.find("\"r\"") != std::string::npos);
    CHECK(text.find("\"rho_max\"") != std::string::npos);
    CHECK(text.find("\"centers\"") != std::string::npos);
}
