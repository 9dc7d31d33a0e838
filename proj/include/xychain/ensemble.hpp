#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "xychain/disorder.hpp"

namespace xychain {

enum class Regime { TwoLevel, ThreeLevel };

const char* to_string(Regime regime);
Regime regime_from_string(const std::string_view& name);

/// start, start + step, ..., stop (inclusive), values rounded to 1e-12.
std::vector<double> make_grid(double start, double stop, double step);
std::vector<double> default_alpha_grid();  // 0, 0.25, ..., 4
std::vector<double> default_omega_grid();  // -2, -1.9, ..., 2

struct SweepConfig {
    DisorderKind disorder_kind = DisorderKind::OnSite;
    Regime regime = Regime::TwoLevel;
    std::vector<std::size_t> n_sites{50, 100, 150, 200};
    std::vector<double> alpha = default_alpha_grid();
    std::vector<double> omega = default_omega_grid();  // omega-alpha grid only
    std::size_t realizations = 500;
    std::uint64_t base_seed = 20170401;
    double g_s = 0.01;
    double g_r = 0.01;
    double omega_s = 0.0;
    double omega_r = 0.0;
    double coupling_shift = 4.5;
    /// Retries of a realization whose shifted couplings are not all positive.
    /// 0 aborts the sweep on the first such realization.
    std::size_t coupling_redraws = 0;
    double mode_target = 0.0;  // ThreeLevel: resonant mode is the one nearest this energy
    std::optional<double> resonance_threshold;  // default 10 * max(g_s, g_r)^2
    std::size_t threads = 0;  // 0: hardware concurrency

    void validate() const;
    double effective_resonance_threshold() const;
};


struct EnsembleStats {
    double mean_c = 0.0;
    double std_c = 0.0;  // sample standard deviation (n - 1)
    double stderr_c = 0.0;
    std::size_t n = 0;
    double resonance_fraction = 0.0;
    double degenerate_fraction = 0.0;
    std::size_t redraws = 0;  // total coupling redraws spent on this point
};

/// Mean, sample std and standard error of a set of values.
EnsembleStats summarize(const std::vector<double>& values);

struct AlphaPoint {
    std::size_t n_sites = 0;
    double alpha = 0.0;
    EnsembleStats stats;
};

struct GridPoint {
    double alpha = 0.0;
    double omega = 0.0;
    EnsembleStats stats;
};

/// Seed of one realization. splitmix64 chain over
/// (base_seed, n_sites, alpha_index, realization).
std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t n_sites,
                               std::size_t alpha_index, std::size_t realization);

std::uint64_t splitmix64(std::uint64_t x);

/// Concurrence of a single realization under the configured regime at the
/// given omega_s/omega_r. Exposed for tests and bindings.
struct RealizationResult {
    double concurrence = 0.0;
    double min_gap = 0.0;
    bool degenerate = false;
    std::size_t redraws = 0;
};
RealizationResult run_realization(const SweepConfig& config, std::size_t n_sites,
                                  double alpha, std::uint64_t seed);

/// Ensemble over n_sites x alpha; output ordered n_sites-major.
std::vector<AlphaPoint> run_alpha_sweep(const SweepConfig& config);

/// Ensemble over alpha x omega for the first entry of n_sites, TwoLevel
/// regime, omega_s = omega_r = omega. Each realization is shared across the
/// omega row of its alpha. Output ordered alpha-major.
std::vector<GridPoint> run_omega_alpha_grid(const SweepConfig& config);

/// Runs body(i) for i in [0, count) on `threads` workers (0: hardware).
/// The first exception thrown by any worker is rethrown after joining.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

std::size_t resolve_threads(std::size_t requested);

}  // namespace xychain
