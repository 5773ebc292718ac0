#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "diskrep/geometry.hpp"

namespace diskrep {

inline constexpr std::size_t kNoCell = std::numeric_limits<std::size_t>::max();

/*
 * An r-lattice over {|z| <= rho_max}: centers {z_n} with pairwise
 * pseudo-distance >= r/2 whose nearest-center cells D_n satisfy
 * D(z_n, r/4) subset D_n subset D(z_n, r) and partition the truncated disk.
 *
 * Construction: concentric rings whose consecutive radii are exactly r/2
 * apart in the pseudo-hyperbolic metric (Euclidean radii tanh(k atanh(r/2))),
 * each ring filled with angularly equispaced centers at pseudo spacing
 * >= r/2. Cells are assigned by the nearest-center rule, ties to the lowest
 * index. Centers avoid the origin and accumulate at the boundary as
 * rho_max -> 1.
 */
class Lattice {
public:
    struct Ring {
        double rho = 0.0;          // Euclidean radius of the ring
        std::size_t first = 0;     // index of the ring's first center
        std::size_t count = 0;
        double angle_offset = 0.0;
    };

    double r() const { return r_; }
    double rho_max() const { return rho_max_; }
    const std::vector<Complex>& centers() const { return centers_; }
    std::size_t size() const { return centers_.size(); }
    const std::vector<Ring>& rings() const { return rings_; }

    /// Index of the cell containing z; deterministic, throws std::domain_error
    /// for |z| > rho_max.
    std::size_t cell_of(Complex z) const;

    /// Nearest center without the domain restriction (used by diagnostics).
    std::size_t nearest_center(Complex z) const;

    /// Minimal pairwise pseudo-distance between centers.
    double center_separation() const;

private:
    friend Lattice build_lattice(double r, double rho_max);
    double r_ = 0.0;
    double rho_max_ = 0.0;
    std::vector<Complex> centers_;
    std::vector<Ring> rings_;
};

/// Throws LatticeError when the ring construction cannot cover the domain
/// (reports the offending cell index).
Lattice build_lattice(double r, double rho_max);

struct LatticeCheck {
    std::size_t coverage_violations = 0;
    std::size_t disjointness_violations = 0;
    std::size_t inner_violations = 0;
    std::size_t outer_violations = 0;

    bool ok() const {
        return coverage_violations == 0 && disjointness_violations == 0 &&
               inner_violations == 0 && outer_violations == 0;
    }
};

/// A family of candidate cells; the default lattice family returns the single
/// nearest-center cell. Mutated families let the checker exercise failures.
struct CellFamily {
    std::vector<Complex> centers;
    double r = 0.0;
    double rho_max = 0.0;
    std::function<std::vector<std::size_t>(Complex)> cells_containing;
    std::function<std::size_t(Complex)> nearest_center;
};

CellFamily cell_family(const Lattice& lattice);

/// Monte-Carlo check of the partition properties over {|z| <= rho_max}:
/// uncovered points, multiply-covered points, points inside some D(z_m, r/4)
/// not assigned to cell m, and assigned points farther than r from their
/// center.
LatticeCheck verify_cells(const CellFamily& family, std::size_t samples, std::uint64_t seed);
LatticeCheck verify_lattice(const Lattice& lattice, std::size_t samples, std::uint64_t seed);

} // namespace diskrep
