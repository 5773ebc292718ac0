#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "diskrep/fock.hpp"
#include "diskrep/lattice.hpp"
#include "diskrep/measure.hpp"
#include "diskrep/synthesis.hpp"

namespace diskrep {

/*
 * Measure files:
 *   { "space": "disk" | "plane",            // default disk
 *     "atoms": [ {"z": [re, im], "w": [re, im]}, ... ],
 *     "density": {...} or "densities": [...],
 *     "R": 12.0 }                           // plane truncation radius
 * Disk density objects: {"family": "constant" | "power" | "monomial_power" |
 * "bloch_log" | "log_weight", "params": {"c": [re, im], "a": ..., "m": ...,
 * "N": ..., "extra_power": ...}}. Plane families: "constant",
 * "gaussian_monomial" ({"alpha", "m", "c"}).
 */
std::string measure_space(const std::string& json_text);
Measure measure_from_json(const std::string& json_text);
std::string measure_to_json(const Measure& mu);
PlaneMeasure plane_measure_from_json(const std::string& json_text);
std::string plane_measure_to_json(const PlaneMeasure& mu);

/// {"r": ..., "rho_max": ..., "centers": [[re, im], ...]}
std::string lattice_to_json(const Lattice& lattice);

/// {"kernel": "mobius" | "mobius_derivative" | "bergman" | "lipschitz" |
///  "power", "params": {...}, "measure": {...} | "measure_path": "file"}
struct KernelSpec {
    std::string kernel;
    KernelParams params;
    Measure mu;
};
KernelSpec kernel_spec_from_json(const std::string& json_text,
                                 const std::filesystem::path& base_dir = ".");
KernelFunction kernel_from_spec(const KernelSpec& spec);

std::string report_to_json(const SeminormReport& report);
std::string report_to_csv(const SeminormReport& report);

std::vector<Complex> probes_from_csv(std::istream& in);
std::string probes_to_csv(const std::vector<Complex>& probes,
                          const std::vector<Complex>& values);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace diskrep
