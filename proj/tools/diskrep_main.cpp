// diskrep: command-line driver for the disk/plane measure-representation
// toolkit. Experiments are subcommands by name (see `diskrep --help`), plus
// direct module access through `lattice`, `synth`, `membership`, `carleson`
// and `berezin` on measure JSON files.

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diskrep/errors.hpp"
#include "diskrep/experiments.hpp"
#include "diskrep/fock.hpp"
#include "diskrep/json_io.hpp"
#include "diskrep/membership.hpp"
#include "diskrep/synthesis.hpp"

namespace {

using namespace diskrep;

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

Complex parse_complex(const std::string& text) {
    std::istringstream in(text);
    std::string a, b;
    std::getline(in, a, ',');
    std::getline(in, b, ',');
    return Complex(std::stod(a), b.empty() ? 0.0 : std::stod(b));
}

std::vector<Complex> default_probe_grid() {
    std::vector<Complex> probes;
    for (double rho : {0.0, 0.2, 0.4, 0.6, 0.8}) {
        if (rho == 0.0) {
            probes.emplace_back(0.0, 0.0);
            continue;
        }
        for (int j = 0; j < 12; ++j) {
            const double theta = 2.0 * 3.14159265358979323846 * double(j) / 12.0;
            probes.emplace_back(rho * std::cos(theta), rho * std::sin(theta));
        }
    }
    return probes;
}

struct ExperimentOptions {
    std::string out = "reports";
    std::string format = "json";
    std::uint64_t seed = 415926535;
    std::string rho_list;
    double r = -1, p = -1, t = -1000, alpha = -1000, big_r = -1;
};

ExperimentSpec to_spec(const std::string& name, const ExperimentOptions& opt) {
    ExperimentSpec spec;
    spec.name = name;
    spec.out_dir = opt.out;
    spec.format = opt.format;
    spec.seed = opt.seed;
    if (!opt.rho_list.empty()) spec.rho_list = parse_list(opt.rho_list);
    if (opt.r >= 0) spec.overrides["r"] = opt.r;
    if (opt.p >= 0) spec.overrides["p"] = opt.p;
    if (opt.t > -999) spec.overrides["t"] = opt.t;
    if (opt.alpha > -999) spec.overrides["alpha"] = opt.alpha;
    if (opt.big_r >= 0) spec.overrides["R"] = opt.big_r;
    return spec;
}

void add_experiment_flags(CLI::App* cmd, ExperimentOptions& opt) {
    cmd->add_option("--out", opt.out, "Report output directory");
    cmd->add_option("--format", opt.format, "json, csv or both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    cmd->add_option("--seed", opt.seed, "Monte-Carlo seed (fixed default for reproducibility)");
    cmd->add_option("--rho-list", opt.rho_list, "Comma-separated truncation radii");
    cmd->add_option("--r", opt.r, "Pseudo-hyperbolic radius override");
    cmd->add_option("--p", opt.p, "Integrability exponent override");
    cmd->add_option("--t", opt.t, "Lipschitz / Carleson order override");
    cmd->add_option("--alpha", opt.alpha, "Weight parameter override");
    cmd->add_option("--R", opt.big_r, "Plane truncation radius override");
}

int run_named_experiment(const std::string& name, const ExperimentOptions& opt) {
    const int status = run_experiment_to_files(to_spec(name, opt));
    std::cout << name << ": " << (status == 0 ? "PASS" : "FAIL") << " (reports in " << opt.out
              << ")\n";
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"diskrep: integral representations of holomorphic function spaces by measures"};
    app.require_subcommand(1);

    // --- experiment subcommands -------------------------------------------
    std::vector<std::shared_ptr<ExperimentOptions>> experiment_opts;
    for (const std::string& name : experiment_names()) {
        auto opt = std::make_shared<ExperimentOptions>();
        experiment_opts.push_back(opt);
        CLI::App* cmd = app.add_subcommand(name, "Run the " + name + " experiment");
        add_experiment_flags(cmd, *opt);
        cmd->callback([name, opt]() {
            if (run_named_experiment(name, *opt) != 0) throw CLI::RuntimeError(1);
        });
    }
    {
        auto opt = std::make_shared<ExperimentOptions>();
        experiment_opts.push_back(opt);
        CLI::App* cmd = app.add_subcommand("suite", "Run every experiment; exit 0 iff all pass");
        add_experiment_flags(cmd, *opt);
        cmd->callback([opt]() {
            int status = 0;
            for (const std::string& name : experiment_names()) {
                status = std::max(status, run_named_experiment(name, *opt));
            }
            if (status != 0) throw CLI::RuntimeError(status);
        });
    }

    // --- lattice ------------------------------------------------------------
    {
        struct LatticeArgs {
            double r = 0.3, rho_max = 0.99;
            std::string out;
            std::size_t verify = 0;
            std::uint64_t seed = 415926535;
        };
        auto args = std::make_shared<LatticeArgs>();
        CLI::App* cmd = app.add_subcommand("lattice", "Build an r-lattice and export it as JSON");
        cmd->add_option("--r", args->r, "Lattice radius in (0,1)")->required();
        cmd->add_option("--rho-max", args->rho_max, "Truncation radius");
        cmd->add_option("--out", args->out, "Output JSON path (stdout when omitted)");
        cmd->add_option("--verify", args->verify, "Monte-Carlo sample count for verification");
        cmd->add_option("--seed", args->seed, "Verification seed");
        cmd->callback([args]() {
            const Lattice lat = build_lattice(args->r, args->rho_max);
            const std::string text = lattice_to_json(lat);
            if (args->out.empty()) {
                std::cout << text << "\n";
            } else {
                write_text_file_atomic(args->out, text + "\n");
            }
            std::cerr << "centers: " << lat.size()
                      << ", min separation: " << lat.center_separation() << "\n";
            if (args->verify > 0) {
                const auto check = verify_lattice(lat, args->verify, args->seed);
                std::cerr << "coverage=" << check.coverage_violations
                          << " disjoint=" << check.disjointness_violations
                          << " inner=" << check.inner_violations
                          << " outer=" << check.outer_violations << "\n";
                if (!check.ok()) throw CLI::RuntimeError(1);
            }
        });
    }

    // --- synth ---------------------------------------------------------------
    {
        struct SynthArgs {
            std::string kernel = "mobius";
            std::string measure_path;
            std::string probes_path;
            std::string out;
            double b = 3.0, p = 1.0, alpha = 0.0, t = 1.5, e = 0.0, fock_alpha = 1.0;
        };
        auto args = std::make_shared<SynthArgs>();
        CLI::App* cmd = app.add_subcommand("synth", "Evaluate a kernel synthesis on a probe grid");
        cmd->add_option("--kernel", args->kernel,
                        "mobius | mobius_derivative | bergman | lipschitz | power | fock")
            ->required();
        cmd->add_option("--measure", args->measure_path, "Measure JSON file")->required();
        cmd->add_option("--probes", args->probes_path, "Probe CSV (re,im rows)");
        cmd->add_option("--out", args->out, "Output CSV path (stdout when omitted)");
        cmd->add_option("--b", args->b, "Kernel pole order");
        cmd->add_option("--p", args->p, "Exponent p (bergman)");
        cmd->add_option("--alpha", args->alpha, "Weight alpha (bergman) or Fock alpha");
        cmd->add_option("--t", args->t, "Lipschitz order (lipschitz kernel)");
        cmd->add_option("--e", args->e, "Numerator exponent (power kernel)");
        cmd->callback([args]() {
            std::vector<Complex> probes = default_probe_grid();
            if (!args->probes_path.empty()) {
                std::ifstream in(args->probes_path);
                probes = probes_from_csv(in);
            }
            std::vector<Complex> values(probes.size());
            const std::string text = read_text_file(args->measure_path);
            if (args->kernel == "fock") {
                const FockFunction f = synth_fock(plane_measure_from_json(text), args->alpha);
                for (std::size_t i = 0; i < probes.size(); ++i) values[i] = f(probes[i]);
            } else {
                KernelSpec spec;
                spec.kernel = args->kernel;
                spec.params.b = args->b;
                spec.params.p = args->p;
                spec.params.alpha = args->alpha;
                spec.params.t = args->t;
                spec.params.e = args->e;
                spec.mu = measure_from_json(text);
                const KernelFunction f = kernel_from_spec(spec);
                for (std::size_t i = 0; i < probes.size(); ++i) values[i] = f(probes[i]);
            }
            const std::string csv = probes_to_csv(probes, values);
            if (args->out.empty()) {
                std::cout << csv;
            } else {
                write_text_file_atomic(args->out, csv);
            }
        });
    }

    // --- membership ------------------------------------------------------------
    {
        struct MemberArgs {
            std::string space = "besov";
            std::string measure_path;
            std::string kernel = "mobius";
            std::string rho_list;
            std::string out;
            double p = 1.0, t = 1.5, alpha = 0.0, b = 3.0, e = 0.0;
            int k = -1;
        };
        auto args = std::make_shared<MemberArgs>();
        CLI::App* cmd =
            app.add_subcommand("membership", "Seminorm trace and verdict for a synthesized function");
        cmd->add_option("--space", args->space, "besov | lipschitz | bergman | bloch")->required();
        cmd->add_option("--measure", args->measure_path, "Measure JSON file")->required();
        cmd->add_option("--kernel", args->kernel, "Kernel for the synthesis (default mobius)");
        cmd->add_option("--p", args->p, "Exponent p");
        cmd->add_option("--t", args->t, "Lipschitz order t");
        cmd->add_option("--alpha", args->alpha, "Bergman weight alpha");
        cmd->add_option("--b", args->b, "Kernel pole order");
        cmd->add_option("--e", args->e, "Numerator exponent (power kernel)");
        cmd->add_option("--k", args->k, "Derivative order override");
        cmd->add_option("--rho-list", args->rho_list, "Comma-separated truncation radii");
        cmd->add_option("--out", args->out, "Output JSON path (stdout when omitted)");
        cmd->callback([args]() {
            KernelSpec spec;
            spec.kernel = args->kernel;
            spec.params.b = args->b;
            spec.params.p = args->p;
            spec.params.alpha = args->alpha;
            spec.params.t = args->t;
            spec.params.e = args->e;
            spec.mu = measure_from_json(read_text_file(args->measure_path));
            const AnalyticFunction f = analytic_from_kernel(kernel_from_spec(spec));
            const std::vector<double> schedule = args->rho_list.empty()
                                                     ? disk_rho_schedule(0.8, 0.99, 8)
                                                     : parse_list(args->rho_list);
            SpaceSpec space;
            space.p = args->p;
            space.t = args->t;
            space.alpha = args->alpha;
            space.k_override = args->k;
            if (args->space == "besov") space.family = SpaceFamily::besov;
            else if (args->space == "lipschitz") space.family = SpaceFamily::lipschitz;
            else if (args->space == "bergman") space.family = SpaceFamily::bergman;
            else if (args->space == "bloch") space.family = SpaceFamily::bloch;
            else throw CLI::ValidationError("unknown space: " + args->space);
            const SeminormReport report = space_seminorm(f, space, schedule);
            const std::string text = report_to_json(report);
            if (args->out.empty()) {
                std::cout << text << "\n";
            } else {
                write_text_file_atomic(args->out, text + "\n");
            }
            std::cerr << "verdict: " << to_string(report.verdict) << "\n";
        });
    }

    // --- carleson ------------------------------------------------------------
    {
        struct CarlesonArgs {
            std::string measure_path;
            std::string out;
            double t = 1.0, r = 0.5;
        };
        auto args = std::make_shared<CarlesonArgs>();
        CLI::App* cmd = app.add_subcommand("carleson", "t-Carleson probe profile of a measure");
        cmd->add_option("--measure", args->measure_path, "Measure JSON file")->required();
        cmd->add_option("--t", args->t, "Carleson order t > 0");
        cmd->add_option("--r", args->r, "Pseudo-hyperbolic radius");
        cmd->add_option("--out", args->out, "Output CSV path (stdout when omitted)");
        cmd->callback([args]() {
            const Measure mu = measure_from_json(read_text_file(args->measure_path));
            const auto probes =
                carleson_probe_ladder({0.0, 0.3, 0.6, 0.8, 0.9, 0.95, 0.98, 0.99, 0.995}, 8);
            const auto report = carleson_constant(mu, args->t, args->r, probes);
            std::ostringstream csv;
            csv.precision(17);
            csv << "re,im,ratio\n";
            for (std::size_t i = 0; i < report.probes.size(); ++i) {
                csv << report.probes[i].real() << "," << report.probes[i].imag() << ","
                    << report.ratios[i] << "\n";
            }
            if (args->out.empty()) {
                std::cout << csv.str();
            } else {
                write_text_file_atomic(args->out, csv.str());
            }
            std::cerr << "carleson constant (probe sup): " << report.constant << "\n";
        });
    }

    // --- berezin ------------------------------------------------------------
    {
        struct BerezinArgs {
            std::string measure_path;
            std::vector<std::string> points;
            std::string out;
            bool variation = false;
        };
        auto args = std::make_shared<BerezinArgs>();
        CLI::App* cmd = app.add_subcommand("berezin", "Berezin transform of a finite measure");
        cmd->add_option("--measure", args->measure_path, "Measure JSON file")->required();
        cmd->add_option("--z", args->points, "Evaluation point 're,im' (repeatable)");
        cmd->add_flag("--variation", args->variation, "Integrate against |mu|");
        cmd->add_option("--out", args->out, "Output CSV path (stdout when omitted)");
        cmd->callback([args]() {
            const Measure mu = measure_from_json(read_text_file(args->measure_path));
            std::vector<Complex> probes;
            for (const auto& text : args->points) probes.push_back(parse_complex(text));
            if (probes.empty()) {
                for (double rho : {0.0, 0.3, 0.6, 0.9}) probes.emplace_back(rho, 0.0);
            }
            std::vector<Complex> values(probes.size());
            for (std::size_t i = 0; i < probes.size(); ++i) {
                values[i] = args->variation ? Complex(berezin_variation(mu, probes[i]), 0.0)
                                            : berezin(mu, probes[i]);
            }
            const std::string csv = probes_to_csv(probes, values);
            if (args->out.empty()) {
                std::cout << csv;
            } else {
                write_text_file_atomic(args->out, csv);
            }
        });
    }

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const QuadratureError& e) {
        std::cerr << "quadrature error: " << e.what() << " (achieved " << e.achieved << ")\n";
        return 2;
    } catch (const InfiniteMassError& e) {
        std::cerr << "infinite mass: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
