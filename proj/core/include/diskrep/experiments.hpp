#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace diskrep {

/*
 * Named, reproducible experiments. Every experiment pairs passing instances
 * with failing controls, declares its tolerances in the report header, and is
 * byte-reproducible for a fixed seed (reports carry no timestamps and all
 * summation orders are deterministic).
 */
struct ExperimentSpec {
    std::string name;
    std::uint64_t seed = 415926535;
    std::filesystem::path out_dir = "reports";
    std::string format = "json";  // "json", "csv" or "both"
    std::map<std::string, double> overrides;  // r, p, t, alpha where applicable
    std::vector<double> rho_list;             // optional schedule override
};

struct ExperimentAssertion {
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct ExperimentResult {
    std::string name;
    bool passed = false;
    std::vector<ExperimentAssertion> assertions;
    std::string report_json;  // canonical bytes of the report file
    std::vector<std::pair<std::string, std::string>> csv_tables;  // name -> content
};

const std::vector<std::string>& experiment_names();

ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Runs and writes <name>.json (and CSV tables per spec.format) under
/// spec.out_dir; returns 0 when every assertion passed.
int run_experiment_to_files(const ExperimentSpec& spec);

} // namespace diskrep
