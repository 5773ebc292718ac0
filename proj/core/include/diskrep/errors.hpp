#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diskrep {

/// Quadrature did not reach the requested tolerance; carries the best estimate.
struct QuadratureError : std::runtime_error {
    double achieved;
    QuadratureError(const std::string& what, double achieved_value)
        : std::runtime_error(what), achieved(achieved_value) {}
};

/// A finite-total-variation precondition failed (divergent mass trend).
struct InfiniteMassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lattice construction or consistency failure; `cell` points at the offender.
struct LatticeError : std::runtime_error {
    std::size_t cell;
    explicit LatticeError(const std::string& what, std::size_t cell_index = 0)
        : std::runtime_error(what), cell(cell_index) {}
};

/// Plane-integral truncation radius too small for the requested tolerance.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace diskrep
