#pragma once

#include <complex>

namespace diskrep {

using Complex = std::complex<double>;

// Points closer than this to the unit circle are rejected, not clamped.
inline constexpr double kBoundaryMargin = 1e-14;

struct EuclideanDisk {
    Complex center;
    double radius = 0.0;

    bool contains(Complex w) const { return std::abs(w - center) < radius; }
};

bool in_unit_disk(Complex z);
void require_in_unit_disk(Complex z, const char* role);

/// phi_a(z) = (a - z) / (1 - conj(a) z); involution of the unit disk.
Complex mobius_map(Complex a, Complex z);

/// d(z, w) = |phi_z(w)|, a Moebius-invariant metric on the disk.
double pseudo_distance(Complex z, Complex w);

/// Euclidean realization of D(z, r) = {w : d(z, w) < r}.
EuclideanDisk pseudo_disk(Complex z, double r);

/// Normalized area of D(z, r); the whole unit disk has area 1.
double pseudo_disk_area(Complex z, double r);

/// Convenience conversion: arctanh of the pseudo-hyperbolic distance.
double hyperbolic_distance(Complex z, Complex w);

/// Integer power by repeated multiplication; avoids the 0^0 hazard of the
/// complex std::pow overloads.
inline Complex ipow(Complex base, int exponent) {
    if (exponent < 0) return Complex(1.0, 0.0) / ipow(base, -exponent);
    Complex acc(1.0, 0.0);
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

} // namespace diskrep
