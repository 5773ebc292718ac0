#include "diskrep/disk_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diskrep {

namespace {

constexpr double kGolden = 0.6180339887498949;

void require_schedule(const std::vector<double>& rho) {
    if (rho.empty()) throw std::invalid_argument("radius schedule must not be empty");
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho[i] > 0.0 && rho[i] < 1.0)) {
            throw std::invalid_argument("radius schedule entries must lie in (0, 1)");
        }
        if (i > 0 && !(rho[i] > rho[i - 1])) {
            throw std::invalid_argument("radius schedule must be strictly increasing");
        }
    }
}

// Levels are uniform in log u (u = 1/(1 - |z|^2)), so deep schedules stay
// affordable while cell masses remain a fixed fraction of the local scale.
struct LevelWalker {
    std::vector<double> edges;  // u at each schedule radius
    double x_end = 0.0;
    double dx = 0.01;
    std::size_t levels = 0;

    LevelWalker(const std::vector<double>& rho, double dx_step) : dx(dx_step) {
        edges.resize(rho.size());
        for (std::size_t i = 0; i < rho.size(); ++i) {
            edges[i] = 1.0 / (1.0 - rho[i] * rho[i]);
        }
        x_end = std::log(edges.back());
        levels = std::size_t(std::ceil(x_end / dx));
    }
};

} // namespace

SeminormReport lambda_profile_report(const std::function<double(Complex)>& field,
                                     const std::vector<double>& rho_schedule,
                                     const LambdaGridParams& params) {
    require_schedule(rho_schedule);
    const LevelWalker walk(rho_schedule, params.dx);
    const int n_theta = params.angular_nodes;

    std::vector<double> bins(rho_schedule.size(), 0.0);
    std::size_t bin = 0;
    for (std::size_t l = 0; l < walk.levels; ++l) {
        const double x0 = double(l) * walk.dx;
        const double x1 = std::min(x0 + walk.dx, walk.x_end);
        if (!(x1 > x0)) break;
        const double u = std::exp(0.5 * (x0 + x1));
        const double mass = std::exp(x1) - std::exp(x0);  // invariant cell mass
        while (u > walk.edges[bin] && bin + 1 < bins.size()) ++bin;
        const double t = 1.0 - 1.0 / u;
        const double radius = std::sqrt(std::max(t, 0.0));
        const double offset = std::fmod(double(l) * kGolden, 1.0);
        double level_sum = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const double theta = 2.0 * std::numbers::pi * (double(j) + offset) / double(n_theta);
            level_sum += field(Complex(radius * std::cos(theta), radius * std::sin(theta)));
        }
        bins[bin] += level_sum * mass / double(n_theta);
    }
    std::vector<double> values(bins.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < bins.size(); ++i) {
        acc += bins[i];
        values[i] = acc;
    }
    return classify_trend(rho_schedule, std::move(values),
                          disk_growth_coordinate(rho_schedule), params.rel_tol);
}

SeminormReport sup_profile_report(const std::function<double(Complex)>& field,
                                  const std::vector<double>& rho_schedule,
                                  const LambdaGridParams& params) {
    require_schedule(rho_schedule);
    const LevelWalker walk(rho_schedule, params.dx);
    const int n_theta = params.angular_nodes;

    std::vector<double> bins(rho_schedule.size(), 0.0);
    bins[0] = field(Complex(0.0, 0.0));
    std::size_t bin = 0;
    for (std::size_t l = 0; l < walk.levels; ++l) {
        const double x0 = double(l) * walk.dx;
        const double x1 = std::min(x0 + walk.dx, walk.x_end);
        if (!(x1 > x0)) break;
        const double u = std::exp(0.5 * (x0 + x1));
        while (u > walk.edges[bin] && bin + 1 < bins.size()) ++bin;
        const double t = 1.0 - 1.0 / u;
        const double radius = std::sqrt(std::max(t, 0.0));
        const double offset = std::fmod(double(l) * kGolden, 1.0);
        for (int j = 0; j < n_theta; ++j) {
            const double theta = 2.0 * std::numbers::pi * (double(j) + offset) / double(n_theta);
            bins[bin] = std::max(bins[bin],
                                 field(Complex(radius * std::cos(theta), radius * std::sin(theta))));
        }
    }
    std::vector<double> values(bins.size());
    double running = 0.0;
    for (std::size_t i = 0; i < bins.size(); ++i) {
        running = std::max(running, bins[i]);
        values[i] = running;
    }
    return classify_trend(rho_schedule, std::move(values),
                          disk_growth_coordinate(rho_schedule), params.rel_tol);
}

bool bounded_profile(const SeminormReport& sup_report, double growth_tol) {
    const auto& v = sup_report.values;
    if (v.size() < 4) return false;
    const double last = v.back();
    if (last == 0.0) return true;
    const double base = v[v.size() - 4];
    return (last - base) <= growth_tol * std::max(std::abs(last), 1e-300);
}

} // namespace diskrep
