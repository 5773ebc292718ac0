#include "diskrep/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace diskrep {

bool in_unit_disk(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag()) &&
           std::abs(z) < 1.0 - kBoundaryMargin;
}

void require_in_unit_disk(Complex z, const char* role) {
    if (!in_unit_disk(z)) {
        throw std::domain_error(std::string(role) + " must lie strictly inside the unit disk (|z| = " +
                                std::to_string(std::abs(z)) + ")");
    }
}

Complex mobius_map(Complex a, Complex z) {
    require_in_unit_disk(a, "mobius_map: a");
    require_in_unit_disk(z, "mobius_map: z");
    return (a - z) / (1.0 - std::conj(a) * z);
}

double pseudo_distance(Complex z, Complex w) {
    require_in_unit_disk(z, "pseudo_distance: z");
    require_in_unit_disk(w, "pseudo_distance: w");
    return std::abs(z - w) / std::abs(1.0 - std::conj(z) * w);
}

// |(z - w)/(1 - conj(z) w)| = r traces a Euclidean circle; completing the
// square gives center (1 - r^2) z / (1 - r^2 |z|^2) and radius
// r (1 - |z|^2) / (1 - r^2 |z|^2).
EuclideanDisk pseudo_disk(Complex z, double r) {
    require_in_unit_disk(z, "pseudo_disk: z");
    if (!(r > 0.0 && r < 1.0)) {
        throw std::domain_error("pseudo_disk: radius must satisfy 0 < r < 1");
    }
    const double t = std::norm(z);
    const double denom = 1.0 - r * r * t;
    return EuclideanDisk{(1.0 - r * r) * z / denom, r * (1.0 - t) / denom};
}

double pseudo_disk_area(Complex z, double r) {
    require_in_unit_disk(z, "pseudo_disk_area: z");
    if (!(r > 0.0 && r < 1.0)) {
        throw std::domain_error("pseudo_disk_area: radius must satisfy 0 < r < 1");
    }
    const double t = std::norm(z);
    const double q = (1.0 - t) / (1.0 - r * r * t);
    return r * r * q * q;
}

double hyperbolic_distance(Complex z, Complex w) {
    return std::atanh(pseudo_distance(z, w));
}

} // namespace diskrep
