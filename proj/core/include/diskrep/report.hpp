#pragma once

#include <string>
#include <vector>

namespace diskrep {

enum class Verdict { converged, divergent, undecided };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Truncated-seminorm trace over an increasing radius schedule together with
/// the trend verdict the trace supports.
struct SeminormReport {
    std::vector<double> radii;   // truncation radii (rho on the disk, R on the plane)
    std::vector<double> values;  // truncated value at each radius
    Verdict verdict = Verdict::undecided;
    double growth_exponent = 0.0;  // slope of log(value) against the growth coordinate

    double final_value() const { return values.empty() ? 0.0 : values.back(); }
};

/// Growth coordinate used by the trend fit: log(1/(1-rho)) on the disk.
std::vector<double> disk_growth_coordinate(const std::vector<double>& rho);
/// On the plane the natural coordinate is R^2 (Gaussian scale).
std::vector<double> plane_growth_coordinate(const std::vector<double>& radii);

/*
 * Trend classification rule (shared by every report producer):
 *   CONVERGED  — the last three relative increments are below rel_tol;
 *   DIVERGENT  — log(value) grows against x with slope > 0.05 and a good fit,
 *                or increments fail to decay (ratio >= 0.85 over the tail)
 *                while still being material (> rel_tol relative);
 *   UNDECIDED  — anything else.
 * The fitted growth exponent is reported in all cases.
 */
SeminormReport classify_trend(std::vector<double> radii, std::vector<double> values,
                              const std::vector<double>& growth_x, double rel_tol = 1e-3);

/// Radius ladders approaching the boundary geometrically in (1 - rho).
std::vector<double> disk_rho_schedule(double rho_first, double rho_last, int points);
std::vector<double> plane_radius_schedule(double r_first, double r_last, int points);

/// Least-squares line fit; returns {slope, intercept, r_squared}.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

} // namespace diskrep
