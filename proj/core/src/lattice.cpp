#include "diskrep/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "diskrep/errors.hpp"

namespace diskrep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Smallest angle at which two points on the circle |z| = rho are r/2 apart
// in the pseudo metric. On equal radii d^2 = 2rho^2(1-cos g)/(1-2rho^2 cos g+rho^4)
// is monotone in g, so the threshold angle has
// cos g = (s^2 (1 + rho^4) - 2 rho^2) / (2 rho^2 (s^2 - 1)) with s = r/2.
double separation_angle(double rho, double s) {
    const double rho2 = rho * rho;
    const double num = s * s * (1.0 + rho2 * rho2) - 2.0 * rho2;
    const double den = 2.0 * rho2 * (s * s - 1.0);
    const double c = num / den;
    if (c >= 1.0) return 0.0;
    if (c <= -1.0) return std::numbers::pi * 2.0;  // even antipodes are closer than s
    return std::acos(c);
}

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

} // namespace

Lattice build_lattice(double r, double rho_max) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("build_lattice: need 0 < r < 1");
    if (!(rho_max > 0.0 && rho_max < 1.0)) throw std::domain_error("build_lattice: need 0 < rho_max < 1");

    const double s = r / 2.0;
    const double step = std::atanh(s);
    const int ring_count = int(std::floor(std::atanh(rho_max) / step + 1e-12));
    if (ring_count < 1) {
        throw LatticeError("build_lattice: domain too small for the ring construction at this r", 0);
    }

    Lattice lat;
    lat.r_ = r;
    lat.rho_max_ = rho_max;
    for (int k = 1; k <= ring_count; ++k) {
        Lattice::Ring ring;
        ring.rho = std::tanh(double(k) * step);
        const double gap = separation_angle(ring.rho, s);
        std::size_t count = 1;
        if (gap > 0.0 && gap < kTwoPi) {
            count = std::max<std::size_t>(1, std::size_t(std::floor(kTwoPi / gap - 1e-12)));
        }
        ring.count = count;
        ring.first = lat.centers_.size();
        ring.angle_offset = (k % 2 == 0) ? std::numbers::pi / double(count) : 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            const double theta = ring.angle_offset + kTwoPi * double(j) / double(count);
            lat.centers_.emplace_back(ring.rho * std::cos(theta), ring.rho * std::sin(theta));
        }
        lat.rings_.push_back(ring);
    }

    // Deterministic coverage self-check: worst points sit mid-gap between the
    // angular slots of each annulus. Report the cell whose neighborhood fails.
    auto check_point = [&](Complex z) {
        const std::size_t n = lat.nearest_center(z);
        if (pseudo_distance(z, lat.centers_[n]) >= r) {
            throw LatticeError("build_lattice: containment failed near cell " + std::to_string(n), n);
        }
    };
    check_point(Complex(0.0, 0.0));
    for (std::size_t k = 0; k < lat.rings_.size(); ++k) {
        const auto& ring = lat.rings_[k];
        const double lo = (k == 0) ? 0.0 : lat.rings_[k - 1].rho;
        const double hi = (k + 1 < lat.rings_.size()) ? lat.rings_[k + 1].rho : rho_max;
        const std::size_t probes = std::min<std::size_t>(2 * ring.count, 2048);
        for (std::size_t j = 0; j < probes; ++j) {
            const double theta = ring.angle_offset + kTwoPi * (double(j) + 0.5) / double(probes);
            for (double rho : {0.5 * (lo + ring.rho), ring.rho, 0.5 * (ring.rho + hi), hi}) {
                if (rho <= 0.0) continue;
                check_point(Complex(rho * std::cos(theta), rho * std::sin(theta)));
            }
        }
    }
    return lat;
}

std::size_t Lattice::nearest_center(Complex z) const {
    std::size_t best = kNoCell;
    double best_d = std::numeric_limits<double>::infinity();
    const double theta = wrap_angle(std::arg(z));
    for (const auto& ring : rings_) {
        // Within a ring the pseudo distance grows with the angular offset, so
        // only the slots adjacent to z's angle can win.
        const double gap = kTwoPi / double(ring.count);
        const long j0 = std::lround((theta - ring.angle_offset) / gap);
        for (long dj = -1; dj <= 1; ++dj) {
            long j = (j0 + dj) % long(ring.count);
            if (j < 0) j += long(ring.count);
            const std::size_t idx = ring.first + std::size_t(j);
            const double d = pseudo_distance(z, centers_[idx]);
            if (d < best_d || (d == best_d && idx < best)) {
                best_d = d;
                best = idx;
            }
        }
    }
    return best;
}

std::size_t Lattice::cell_of(Complex z) const {
    if (std::abs(z) > rho_max_ + 1e-12) {
        throw std::domain_error("cell_of: point lies outside the truncated lattice domain");
    }
    require_in_unit_disk(z, "cell_of: z");
    return nearest_center(z);
}

double Lattice::center_separation() const {
    double best = std::numeric_limits<double>::infinity();
    // Separation between non-adjacent rings exceeds the inter-ring step, so
    // scanning each ring against itself and its successor suffices.
    for (std::size_t k = 0; k < rings_.size(); ++k) {
        const auto& ring = rings_[k];
        for (std::size_t j = 0; j < ring.count; ++j) {
            const Complex a = centers_[ring.first + j];
            const Complex b = centers_[ring.first + (j + 1) % ring.count];
            if (ring.count > 1) best = std::min(best, pseudo_distance(a, b));
            if (k + 1 < rings_.size()) {
                const auto& next = rings_[k + 1];
                const double theta = wrap_angle(std::arg(a));
                const double gap = kTwoPi / double(next.count);
                const long j0 = std::lround((theta - next.angle_offset) / gap);
                for (long dj = -1; dj <= 1; ++dj) {
                    long jj = (j0 + dj) % long(next.count);
                    if (jj < 0) jj += long(next.count);
                    best = std::min(best, pseudo_distance(a, centers_[next.first + std::size_t(jj)]));
                }
            }
        }
    }
    return best;
}

CellFamily cell_family(const Lattice& lattice) {
    CellFamily family;
    family.centers = lattice.centers();
    family.r = lattice.r();
    family.rho_max = lattice.rho_max();
    family.cells_containing = [&lattice](Complex z) {
        return std::vector<std::size_t>{lattice.nearest_center(z)};
    };
    family.nearest_center = [&lattice](Complex z) { return lattice.nearest_center(z); };
    return family;
}

LatticeCheck verify_cells(const CellFamily& family, std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("verify_cells: need samples >= 1");
    LatticeCheck check;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double quarter = family.r / 4.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double rho = family.rho_max * std::sqrt(unit(rng));
        const double theta = kTwoPi * unit(rng);
        const Complex z(rho * std::cos(theta), rho * std::sin(theta));

        const auto cells = family.cells_containing(z);
        if (cells.empty()) {
            ++check.coverage_violations;
            continue;
        }
        if (cells.size() > 1) ++check.disjointness_violations;
        for (const std::size_t n : cells) {
            if (pseudo_distance(z, family.centers[n]) >= family.r) {
                ++check.outer_violations;
            }
        }
        // Points of D(z_m, r/4) must land in cell m; the inner disks are
        // disjoint, so the nearest center is the only candidate.
        const std::size_t m = family.nearest_center(z);
        if (m != kNoCell && pseudo_distance(z, family.centers[m]) < quarter) {
            if (std::find(cells.begin(), cells.end(), m) == cells.end()) {
                ++check.inner_violations;
            }
        }
    }
    return check;
}

LatticeCheck verify_lattice(const Lattice& lattice, std::size_t samples, std::uint64_t seed) {
    return verify_cells(cell_family(lattice), samples, seed);
}

} // namespace diskrep
