#include "diskrep/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace diskrep {

using nlohmann::json;

namespace {

Complex complex_from(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument("expected a number or [re, im] pair");
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

DensityFamily density_family_from(const std::string& name) {
    if (name == "constant") return DensityFamily::constant;
    if (name == "power") return DensityFamily::power;
    if (name == "monomial_power") return DensityFamily::monomial_power;
    if (name == "bloch_log") return DensityFamily::bloch_log;
    if (name == "log_weight") return DensityFamily::log_weight;
    throw std::invalid_argument("unknown density family: " + name);
}

const char* density_family_name(DensityFamily f) {
    switch (f) {
        case DensityFamily::constant: return "constant";
        case DensityFamily::power: return "power";
        case DensityFamily::monomial_power: return "monomial_power";
        case DensityFamily::bloch_log: return "bloch_log";
        case DensityFamily::log_weight: return "log_weight";
    }
    return "constant";
}

Density density_from(const json& j) {
    Density d;
    d.family = density_family_from(j.at("family").get<std::string>());
    if (j.contains("params")) {
        const json& p = j["params"];
        if (p.contains("c")) d.coefficient = complex_from(p["c"]);
        if (p.contains("a")) d.a = p["a"].get<double>();
        if (p.contains("m")) d.m = p["m"].get<int>();
        if (p.contains("N")) d.N = p["N"].get<int>();
        if (p.contains("extra_power")) d.extra_power = p["extra_power"].get<double>();
    }
    return d;
}

json density_to(const Density& d) {
    json p;
    p["c"] = complex_to(d.coefficient);
    if (d.a != 0.0) p["a"] = d.a;
    if (d.family == DensityFamily::monomial_power) {
        p["m"] = d.m;
        p["N"] = d.N;
    }
    if (d.extra_power != 0.0) p["extra_power"] = d.extra_power;
    return json{{"family", density_family_name(d.family)}, {"params", p}};
}

} // namespace

std::string measure_space(const std::string& json_text) {
    const json j = json::parse(json_text);
    return j.value("space", std::string("disk"));
}

Measure measure_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    if (j.value("space", std::string("disk")) != "disk") {
        throw std::invalid_argument("measure_from_json: not a disk measure");
    }
    std::vector<Atom> atoms;
    if (j.contains("atoms")) {
        for (const auto& a : j["atoms"]) {
            atoms.push_back(Atom{complex_from(a.at("z")), complex_from(a.at("w"))});
        }
    }
    std::vector<Density> densities;
    if (j.contains("density")) densities.push_back(density_from(j["density"]));
    if (j.contains("densities")) {
        for (const auto& d : j["densities"]) densities.push_back(density_from(d));
    }
    return Measure(std::move(atoms), std::move(densities));
}

std::string measure_to_json(const Measure& mu) {
    json j;
    j["space"] = "disk";
    json atoms = json::array();
    for (const auto& a : mu.atoms()) {
        atoms.push_back(json{{"z", complex_to(a.location)}, {"w", complex_to(a.weight)}});
    }
    j["atoms"] = atoms;
    if (!mu.densities().empty()) {
        json ds = json::array();
        for (const auto& d : mu.densities()) ds.push_back(density_to(d));
        j["densities"] = ds;
    }
    return j.dump(2);
}

PlaneMeasure plane_measure_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    if (j.value("space", std::string("disk")) != "plane") {
        throw std::invalid_argument("plane_measure_from_json: not a plane measure");
    }
    std::vector<PlaneAtom> atoms;
    if (j.contains("atoms")) {
        for (const auto& a : j["atoms"]) {
            atoms.push_back(PlaneAtom{complex_from(a.at("z")), complex_from(a.at("w"))});
        }
    }
    std::vector<PlaneDensity> densities;
    auto parse_density = [](const json& dj) {
        PlaneDensity d;
        const std::string family = dj.at("family").get<std::string>();
        if (family == "constant") {
            d.family = PlaneDensityFamily::constant;
        } else if (family == "gaussian_monomial") {
            d.family = PlaneDensityFamily::gaussian_monomial;
        } else {
            throw std::invalid_argument("unknown plane density family: " + family);
        }
        if (dj.contains("params")) {
            const json& p = dj["params"];
            if (p.contains("c")) d.coefficient = complex_from(p["c"]);
            if (p.contains("alpha")) d.alpha = p["alpha"].get<double>();
            if (p.contains("m")) d.m = p["m"].get<int>();
        }
        return d;
    };
    if (j.contains("density")) densities.push_back(parse_density(j["density"]));
    if (j.contains("densities")) {
        for (const auto& d : j["densities"]) densities.push_back(parse_density(d));
    }
    const double R = j.value("R", 12.0);
    return PlaneMeasure(std::move(atoms), std::move(densities), R);
}

std::string plane_measure_to_json(const PlaneMeasure& mu) {
    json j;
    j["space"] = "plane";
    json atoms = json::array();
    for (const auto& a : mu.atoms()) {
        atoms.push_back(json{{"z", complex_to(a.location)}, {"w", complex_to(a.weight)}});
    }
    j["atoms"] = atoms;
    if (!mu.densities().empty()) {
        json ds = json::array();
        for (const auto& d : mu.densities()) {
            json p{{"c", complex_to(d.coefficient)}};
            const char* family = "constant";
            if (d.family == PlaneDensityFamily::gaussian_monomial) {
                family = "gaussian_monomial";
                p["alpha"] = d.alpha;
                p["m"] = d.m;
            }
            ds.push_back(json{{"family", family}, {"params", p}});
        }
        j["densities"] = ds;
    }
    j["R"] = mu.truncation_radius();
    return j.dump(2);
}

std::string lattice_to_json(const Lattice& lattice) {
    json j;
    j["r"] = lattice.r();
    j["rho_max"] = lattice.rho_max();
    json centers = json::array();
    for (const Complex z : lattice.centers()) centers.push_back(complex_to(z));
    j["centers"] = centers;
    return j.dump(2);
}

KernelSpec kernel_spec_from_json(const std::string& json_text,
                                 const std::filesystem::path& base_dir) {
    const json j = json::parse(json_text);
    KernelSpec spec;
    spec.kernel = j.at("kernel").get<std::string>();
    if (j.contains("params")) {
        const json& p = j["params"];
        if (p.contains("b")) spec.params.b = p["b"].get<double>();
        if (p.contains("e")) spec.params.e = p["e"].get<double>();
        if (p.contains("p")) spec.params.p = p["p"].get<double>();
        if (p.contains("alpha")) spec.params.alpha = p["alpha"].get<double>();
        if (p.contains("t")) spec.params.t = p["t"].get<double>();
    }
    if (j.contains("measure")) {
        spec.mu = measure_from_json(j["measure"].dump());
    } else if (j.contains("measure_path")) {
        spec.mu = measure_from_json(read_text_file(base_dir / j["measure_path"].get<std::string>()));
    } else {
        throw std::invalid_argument("kernel spec needs a measure or measure_path");
    }
    return spec;
}

KernelFunction kernel_from_spec(const KernelSpec& spec) {
    if (spec.kernel == "mobius") return synth_mobius(spec.mu);
    if (spec.kernel == "mobius_derivative") return synth_mobius_derivative_kernel(spec.mu);
    if (spec.kernel == "bergman") {
        return synth_bergman(spec.mu, spec.params.b, spec.params.p, spec.params.alpha);
    }
    if (spec.kernel == "lipschitz") return synth_lipschitz(spec.mu, spec.params.b, spec.params.t);
    if (spec.kernel == "power") return synth_power(spec.mu, spec.params.b, spec.params.e);
    throw std::invalid_argument("unknown kernel: " + spec.kernel);
}

std::string report_to_json(const SeminormReport& report) {
    json j;
    j["radii"] = report.radii;
    j["values"] = report.values;
    j["verdict"] = to_string(report.verdict);
    j["growth_exponent"] = report.growth_exponent;
    return j.dump(2);
}

std::string report_to_csv(const SeminormReport& report) {
    std::ostringstream out;
    out << "radius,value\n";
    out.precision(17);
    for (std::size_t i = 0; i < report.radii.size(); ++i) {
        out << report.radii[i] << "," << report.values[i] << "\n";
    }
    return out.str();
}

std::vector<Complex> probes_from_csv(std::istream& in) {
    std::vector<Complex> probes;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("re", 0) == 0 || line.rfind("#", 0) == 0) continue;
        std::istringstream row(line);
        std::string a, b;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ',')) {
            throw std::invalid_argument("probe CSV rows must be re,im");
        }
        probes.emplace_back(std::stod(a), std::stod(b));
    }
    return probes;
}

std::string probes_to_csv(const std::vector<Complex>& probes,
                          const std::vector<Complex>& values) {
    std::ostringstream out;
    out << "re,im,value_re,value_im\n";
    out.precision(17);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        out << probes[i].real() << "," << probes[i].imag() << "," << values[i].real() << ","
            << values[i].imag() << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

} // namespace diskrep
