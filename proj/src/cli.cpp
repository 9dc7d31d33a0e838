#include "xychain/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "xychain/analysis.hpp"
#include "xychain/config.hpp"
#include "xychain/csv.hpp"
#include "xychain/dynamics.hpp"
#include "xychain/ensemble.hpp"
#include "xychain/validate.hpp"

namespace xychain {

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Thread count precedence: --threads, then XYCHAIN_THREADS, then the config.
std::size_t thread_override(std::size_t flag, std::size_t config_value) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("XYCHAIN_THREADS")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw ConfigError("XYCHAIN_THREADS", "not an unsigned integer");
        }
    }
    return config_value;
}

struct Output {
    std::string path;  // empty: write to the command's stdout

    template <typename Writer>
    void emit(std::ostream& out, Writer&& writer) const {
        if (path.empty()) {
            writer(out);
            return;
        }
        std::ofstream file(path);
        if (!file) throw Error("cannot open output '" + path + "'");
        writer(file);
    }
};

// Manifest sits next to the CSV as <csv>.manifest.json.
void write_manifest(const Output& output, const std::string& command, const json& config,
                    std::uint64_t base_seed, double seconds) {
    if (output.path.empty()) return;
    json manifest = {
        {"command", command},
        {"config", config},
        {"base_seed", base_seed},
        {"version", XYCHAIN_VERSION},
        {"wall_clock_seconds", seconds},
        {"outputs", {output.path}},
    };
    const std::string path = output.path + ".manifest.json";
    std::ofstream file(path);
    if (!file) throw Error("cannot open manifest '" + path + "'");
    file << manifest.dump(2) << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement between spins weakly coupled to a disordered XY chain", "xychain"};
    app.require_subcommand(1);
    std::size_t threads = 0;
    app.add_option("--threads", threads, "Worker threads (0: XYCHAIN_THREADS or all cores)");

    Output output;

    // gen-disorder
    DisorderParams dparams;
    std::string dkind = "onsite";
    auto* gen = app.add_subcommand("gen-disorder", "Emit one correlated disorder sequence as CSV");
    gen->add_option("--alpha", dparams.alpha, "Spectral exponent")->required();
    gen->add_option("--length", dparams.length, "Sequence length")->required();
    gen->add_option("--seed", dparams.seed, "RNG seed")->required();
    gen->add_option("--kind", dkind, "onsite|coupling")->check(CLI::IsMember({"onsite", "coupling"}));
    gen->add_option("--shift", dparams.coupling_shift, "Coupling shift (kind=coupling)");
    gen->add_option("--out", output.path, "CSV path (default stdout)");

    // sweep-alpha / grid-omega-alpha
    std::string config_path;
    std::size_t realizations = 0;
    std::uint64_t base_seed = 0;
    bool base_seed_set = false;
    auto* sweep = app.add_subcommand("sweep-alpha", "Ensemble-averaged concurrence over n_sites x alpha");
    auto* grid = app.add_subcommand("grid-omega-alpha", "Ensemble-averaged concurrence over alpha x omega");
    for (auto* sub : {sweep, grid}) {
        sub->add_option("--config", config_path, "JSON sweep config")->required();
        sub->add_option("--realizations", realizations, "Override realizations");
        sub->add_option_function<std::uint64_t>(
            "--base-seed", [&](const std::uint64_t& v) { base_seed = v; base_seed_set = true; },
            "Override base_seed");
        sub->add_option("--threads", threads, "Worker threads");
        sub->add_option("--out", output.path, "CSV path (default stdout)");
    }

    // wavefunction
    double w_alpha = 0.0, w_target = 0.0, w_shift = 4.5;
    std::size_t w_n = 201;
    std::uint64_t w_seed = 0;
    std::string w_kind = "coupling";
    auto* wave = app.add_subcommand("wavefunction", "Squared channel eigenstate nearest a target energy");
    wave->add_option("--alpha", w_alpha, "Spectral exponent")->required();
    wave->add_option("--n", w_n, "Channel sites");
    wave->add_option("--kind", w_kind, "onsite|coupling")->check(CLI::IsMember({"onsite", "coupling"}));
    wave->add_option("--seed", w_seed, "RNG seed")->required();
    wave->add_option("--target", w_target, "Target energy");
    wave->add_option("--shift", w_shift, "Coupling shift");
    wave->add_option("--out", output.path, "CSV path (default stdout)");

    // dynamics
    double tmax = 0.0;
    std::size_t samples = 1001;
    std::string initial_site = "s";
    auto* dyn = app.add_subcommand("dynamics", "Exact single-excitation evolution of the full system");
    dyn->add_option("--config", config_path, "JSON system spec")->required();
    dyn->add_option("--tmax", tmax, "Final time")->required()->check(CLI::PositiveNumber);
    dyn->add_option("--samples", samples, "Number of sample times")->check(CLI::Range(2, 100000000));
    dyn->add_option("--initial", initial_site, "Initially excited spin: s|r")->check(CLI::IsMember({"s", "r"}));
    dyn->add_option("--out", output.path, "CSV path (default stdout)");

    // validate
    bool quick = false;
    auto* val = app.add_subcommand("validate", "Effective theory vs exact dynamics checks");
    val->add_flag("--quick", quick, "Only the two-site and N=8 checks");

    if (args.empty()) {
        err << app.help();
        return kExitUsage;
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (*gen) {
            dparams.kind = disorder_kind_from_string(dkind);
            const auto seq = generate_sequence(dparams);
            output.emit(out, [&](std::ostream& os) { write_sequence_csv(os, seq); });
            json cfg = {{"alpha", dparams.alpha}, {"length", dparams.length}, {"seed", dparams.seed},
                        {"kind", dkind}, {"coupling_shift", dparams.coupling_shift}};
            write_manifest(output, "gen-disorder", cfg, dparams.seed, seconds_since(start));
        } else if (*sweep || *grid) {
            SweepConfig config = sweep_from_json(load_json_file(config_path));
            if (realizations > 0) config.realizations = realizations;
            if (base_seed_set) config.base_seed = base_seed;
            config.threads = thread_override(threads, config.threads);
            const json echo = to_json(config);
            if (*sweep) {
                const auto points = run_alpha_sweep(config);
                output.emit(out, [&](std::ostream& os) { write_alpha_sweep_csv(os, points); });
            } else {
                const auto points = run_omega_alpha_grid(config);
                output.emit(out, [&](std::ostream& os) { write_grid_csv(os, points); });
            }
            write_manifest(output, *sweep ? "sweep-alpha" : "grid-omega-alpha", echo, config.base_seed,
                           seconds_since(start));
        } else if (*wave) {
            const auto kind = disorder_kind_from_string(w_kind);
            const auto profile = wavefunction_profile(kind, w_alpha, w_n, w_seed, w_target, w_shift);
            output.emit(out, [&](std::ostream& os) { write_profile_csv(os, profile); });
            json cfg = {{"alpha", w_alpha}, {"n", w_n}, {"kind", w_kind}, {"seed", w_seed},
                        {"target", w_target}, {"coupling_shift", w_shift},
                        {"mode_index", profile.mode_index}, {"mode_energy", profile.mode_energy},
                        {"participation_ratio", participation_ratio(profile.probabilities)}};
            write_manifest(output, "wavefunction", cfg, w_seed, seconds_since(start));
        } else if (*dyn) {
            const SystemSpec spec = system_from_json(load_json_file(config_path));
            const std::size_t site = initial_site == "s" ? 0 : spec.size() - 1;
            const auto times = linspace_times(tmax, samples);
            const auto trace = evolve(spec, basis_state(spec.size(), site), times);
            output.emit(out, [&](std::ostream& os) { write_dynamics_csv(os, trace); });
            json cfg = to_json(spec);
            cfg["tmax"] = tmax;
            cfg["samples"] = samples;
            cfg["initial"] = initial_site;
            write_manifest(output, "dynamics", cfg, 0, seconds_since(start));
        } else if (*val) {
            const auto results = run_validation(quick);
            bool all = true;
            for (const auto& r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << "  [" << r.detail << "]\n";
                all = all && r.passed;
            }
            out << (all ? "validation passed" : "validation FAILED") << " ("
                << seconds_since(start) << " s)\n";
            return all ? 0 : kExitRuntime;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}

int dispatch(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
}

}  // namespace xychain
