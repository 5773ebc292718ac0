#include "diskrep/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diskrep {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::converged: return "CONVERGED";
        case Verdict::divergent: return "DIVERGENT";
        default: return "UNDECIDED";
    }
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "CONVERGED") return Verdict::converged;
    if (s == "DIVERGENT") return Verdict::divergent;
    if (s == "UNDECIDED") return Verdict::undecided;
    throw std::invalid_argument("unknown verdict: " + s);
}

std::vector<double> disk_growth_coordinate(const std::vector<double>& rho) {
    std::vector<double> x(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
        x[i] = std::log(1.0 / (1.0 - rho[i]));
    }
    return x;
}

std::vector<double> plane_growth_coordinate(const std::vector<double>& radii) {
    std::vector<double> x(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        x[i] = radii[i] * radii[i];
    }
    return x;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LineFit fit;
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) return fit;
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / double(n), my = sy / double(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0.0) return fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

SeminormReport classify_trend(std::vector<double> radii, std::vector<double> values,
                              const std::vector<double>& growth_x, double rel_tol) {
    SeminormReport report;
    report.radii = std::move(radii);
    report.values = std::move(values);

    const std::size_t n = report.values.size();
    if (n == 0 || growth_x.size() != n) {
        return report;
    }
    const double last = report.values.back();
    if (last <= 1e-300) {
        report.verdict = Verdict::converged;
        return report;
    }

    // Tail window for the fits: at least 4 points when available.
    const std::size_t tail = std::max<std::size_t>(std::min<std::size_t>(n, 4), n / 2);
    std::vector<double> xt, logv, vt;
    for (std::size_t i = n - tail; i < n; ++i) {
        if (report.values[i] > 0.0) {
            xt.push_back(growth_x[i]);
            logv.push_back(std::log(report.values[i]));
            vt.push_back(report.values[i]);
        }
    }
    const LineFit power = fit_line(xt, logv);
    report.growth_exponent = power.slope;

    if (n < 4) {
        return report;
    }

    // Increments below the relative tolerance (or the absolute noise floor
    // for near-zero traces) count as settled.
    const double abs_floor = 1e-11;
    bool tail_small = true;
    for (std::size_t i = n - 3; i < n; ++i) {
        const double inc = report.values[i] - report.values[i - 1];
        const double allowed =
            std::max(rel_tol * std::max(std::abs(report.values[i]), 1e-300), abs_floor);
        if (std::abs(inc) > allowed) {
            tail_small = false;
            break;
        }
    }
    if (tail_small) {
        report.verdict = Verdict::converged;
        return report;
    }

    if (power.slope > 0.05 && power.r_squared > 0.9) {
        report.verdict = Verdict::divergent;
        return report;
    }

    // Non-decaying increments (log-law or worse) over the last three steps.
    // Slowly converging power tails on a geometric schedule show increment
    // ratios q^beta <= 0.93 for any material beta, so 0.93 separates them
    // from genuine log growth (ratio 1).
    bool sustained = true;
    for (std::size_t i = n - 3; i < n; ++i) {
        const double inc = report.values[i] - report.values[i - 1];
        const double prev = report.values[i - 1] - (i >= 2 ? report.values[i - 2] : 0.0);
        if (!(inc > std::max(rel_tol * last, abs_floor)) ||
            (i >= 2 && prev > 0.0 && inc < 0.93 * prev)) {
            sustained = false;
            break;
        }
    }
    if (sustained) {
        report.verdict = Verdict::divergent;
        return report;
    }

    report.verdict = Verdict::undecided;
    return report;
}

namespace {

std::vector<double> geometric_gap_schedule(double first, double last, int points, double cap) {
    if (points < 2 || !(first < last) || !(last < cap)) {
        throw std::invalid_argument("schedule requires points >= 2 and first < last < limit");
    }
    const double g0 = cap - first, g1 = cap - last;
    const double q = std::pow(g1 / g0, 1.0 / double(points - 1));
    std::vector<double> out(points);
    double gap = g0;
    for (int i = 0; i < points; ++i) {
        out[i] = cap - gap;
        gap *= q;
    }
    out.back() = last;
    return out;
}

} // namespace

std::vector<double> disk_rho_schedule(double rho_first, double rho_last, int points) {
    return geometric_gap_schedule(rho_first, rho_last, points, 1.0);
}

std::vector<double> plane_radius_schedule(double r_first, double r_last, int points) {
    if (points < 2 || !(r_first < r_last)) {
        throw std::invalid_argument("plane schedule requires points >= 2 and increasing radii");
    }
    std::vector<double> out(points);
    // Uniform in R^2 so each step adds comparable Gaussian-weighted area.
    const double s0 = r_first * r_first, s1 = r_last * r_last;
    for (int i = 0; i < points; ++i) {
        out[i] = std::sqrt(s0 + (s1 - s0) * double(i) / double(points - 1));
    }
    return out;
}

} // namespace diskrep
