#include "xychain/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "xychain/effective.hpp"
#include "xychain/eigensolve.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"
#include "xychain/lattice.hpp"

namespace xychain {

const char* to_string(Regime regime) {
    return regime == Regime::TwoLevel ? "two_level" : "three_level";
}

Regime regime_from_string(const std::string_view& name) {
    if (name == "two_level" || name == "TwoLevel" || name == "two-level") return Regime::TwoLevel;
    if (name == "three_level" || name == "ThreeLevel" || name == "three-level")
        return Regime::ThreeLevel;
    throw Error("unknown regime '" + std::string(name) + "'");
}

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0.0) || !(stop >= start)) throw Error("grid needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-6)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
    return grid;
}

std::vector<double> default_alpha_grid() { return make_grid(0.0, 4.0, 0.25); }
std::vector<double> default_omega_grid() { return make_grid(-2.0, 2.0, 0.1); }

void SweepConfig::validate() const {
    if (n_sites.empty()) throw Error("n_sites must not be empty");
    const std::size_t min_sites = disorder_kind == DisorderKind::Coupling ? 3 : 2;
    for (auto n : n_sites)
        if (n < min_sites)
            throw Error("n_sites entries must be >= " + std::to_string(min_sites));
    if (alpha.empty()) throw Error("alpha grid must not be empty");
    for (double a : alpha)
        if (!(a >= 0.0) || !std::isfinite(a)) throw Error("alpha values must be finite and >= 0");
    if (realizations < 1) throw Error("realizations must be >= 1");
    if (!(g_s > 0.0) || !(g_r > 0.0)) throw Error("g_s and g_r must be positive");
    if (resonance_threshold && !(*resonance_threshold >= 0.0))
        throw Error("resonance_threshold must be >= 0");
}

double SweepConfig::effective_resonance_threshold() const {
    if (resonance_threshold) return *resonance_threshold;
    const double g = std::max(g_s, g_r);
    return 10.0 * g * g;
}

EnsembleStats summarize(const std::vector<double>& values) {
    EnsembleStats st;
    st.n = values.size();
    if (st.n == 0) return st;
    double sum = 0.0;
    for (double v : values) sum += v;
    st.mean_c = sum / static_cast<double>(st.n);
    if (st.n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - st.mean_c) * (v - st.mean_c);
        st.std_c = std::sqrt(ss / static_cast<double>(st.n - 1));
    }
    st.stderr_c = st.std_c / std::sqrt(static_cast<double>(st.n));
    return st;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t realization_seed(std::uint64_t base_seed, std::size_t n_sites,
                               std::size_t alpha_index, std::size_t realization) {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n_sites));
    h = splitmix64(h ^ static_cast<std::uint64_t>(alpha_index));
    return splitmix64(h ^ static_cast<std::uint64_t>(realization));
}

std::size_t resolve_threads(std::size_t requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(resolve_threads(threads), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed = true;
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

namespace {

Spectrum realization_spectrum(const SweepConfig& config, std::size_t n_sites, double alpha,
                              std::uint64_t seed, std::size_t& redraws) {
    const ChannelSpec channel = disordered_channel(config.disorder_kind, alpha, n_sites, seed,
                                                   config.coupling_shift, config.coupling_redraws,
                                                   &redraws);
    return diagonalize(channel_matrix(channel), Vectors::EdgesOnly);
}

RealizationResult evaluate(const SweepConfig& config, const Spectrum& spectrum, double omega_s,
                           double omega_r) {
    RealizationResult out;
    out.degenerate = spectrum.degenerate;
    if (config.regime == Regime::TwoLevel) {
        const auto eff = two_level(spectrum, omega_s, omega_r, config.g_s, config.g_r);
        out.concurrence = concurrence_two_level(eff.delta, eff.j_eff).value;
        out.min_gap = eff.min_gap;
    } else {
        const std::size_t k = select_mode(spectrum, config.mode_target);
        const auto eff = three_level(spectrum, k, config.g_s, config.g_r);
        out.concurrence = concurrence_three_level(eff.eta);
        out.min_gap = std::numeric_limits<double>::infinity();
    }
    return out;
}

template <typename Fn>
auto with_seed(std::uint64_t seed, Fn&& fn) {
    try {
        return fn();
    } catch (const RealizationError&) {
        throw;
    } catch (const Error& e) {
        throw RealizationError(seed, e.what());
    }
}

EnsembleStats aggregate(const RealizationResult* results, std::size_t count, double threshold) {
    std::vector<double> c(count);
    std::size_t resonant = 0, degenerate = 0, redraws = 0;
    for (std::size_t i = 0; i < count; ++i) {
        c[i] = results[i].concurrence;
        if (results[i].min_gap < threshold) ++resonant;
        if (results[i].degenerate) ++degenerate;
        redraws += results[i].redraws;
    }
    EnsembleStats st = summarize(c);
    st.resonance_fraction = static_cast<double>(resonant) / static_cast<double>(count);
    st.degenerate_fraction = static_cast<double>(degenerate) / static_cast<double>(count);
    st.redraws = redraws;
    return st;
}

}  // namespace

RealizationResult run_realization(const SweepConfig& config, std::size_t n_sites, double alpha,
                                  std::uint64_t seed) {
    return with_seed(seed, [&] {
        std::size_t redraws = 0;
        const Spectrum spectrum = realization_spectrum(config, n_sites, alpha, seed, redraws);
        auto out = evaluate(config, spectrum, config.omega_s, config.omega_r);
        out.redraws = redraws;
        return out;
    });
}

std::vector<AlphaPoint> run_alpha_sweep(const SweepConfig& config) {
    config.validate();
    const std::size_t n_alpha = config.alpha.size();
    const std::size_t reps = config.realizations;
    const std::size_t points = config.n_sites.size() * n_alpha;

    std::vector<RealizationResult> slots(points * reps);
    parallel_for(slots.size(), config.threads, [&](std::size_t task) {
        const std::size_t point = task / reps;
        const std::size_t r = task % reps;
        const std::size_t n = config.n_sites[point / n_alpha];
        const std::size_t a = point % n_alpha;
        slots[task] = run_realization(config, n, config.alpha[a], realization_seed(config.base_seed, n, a, r));
    });

    const double threshold = config.effective_resonance_threshold();
    std::vector<AlphaPoint> out(points);
    for (std::size_t p = 0; p < points; ++p) {
        out[p].n_sites = config.n_sites[p / n_alpha];
        out[p].alpha = config.alpha[p % n_alpha];
        out[p].stats = aggregate(slots.data() + p * reps, reps, threshold);
    }
    return out;
}

std::vector<GridPoint> run_omega_alpha_grid(const SweepConfig& config) {
    config.validate();
    if (config.regime != Regime::TwoLevel) throw Error("omega-alpha grid requires the two_level regime");
    if (config.omega.empty()) throw Error("omega grid must not be empty");

    const std::size_t n = config.n_sites.front();
    const std::size_t n_alpha = config.alpha.size();
    const std::size_t n_omega = config.omega.size();
    const std::size_t reps = config.realizations;

    // slot layout: [alpha][omega][realization]
    std::vector<RealizationResult> slots(n_alpha * n_omega * reps);
    parallel_for(n_alpha * reps, config.threads, [&](std::size_t task) {
        const std::size_t a = task / reps;
        const std::size_t r = task % reps;
        const std::uint64_t seed = realization_seed(config.base_seed, n, a, r);
        with_seed(seed, [&] {
            std::size_t redraws = 0;
            const Spectrum spectrum = realization_spectrum(config, n, config.alpha[a], seed, redraws);
            for (std::size_t w = 0; w < n_omega; ++w) {
                auto& slot = slots[(a * n_omega + w) * reps + r];
                slot = evaluate(config, spectrum, config.omega[w], config.omega[w]);
                slot.redraws = redraws;
            }
            return 0;
        });
    });

    const double threshold = config.effective_resonance_threshold();
    std::vector<GridPoint> out(n_alpha * n_omega);
    for (std::size_t a = 0; a < n_alpha; ++a)
        for (std::size_t w = 0; w < n_omega; ++w) {
            auto& pt = out[a * n_omega + w];
            pt.alpha = config.alpha[a];
            pt.omega = config.omega[w];
            pt.stats = aggregate(slots.data() + (a * n_omega + w) * reps, reps, threshold);
        }
    return out;
}

}  // namespace xychain
