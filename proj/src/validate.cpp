#include "xychain/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xychain/dynamics.hpp"
#include "xychain/effective.hpp"
#include "xychain/eigensolve.hpp"
#include "xychain/entanglement.hpp"

namespace xychain {

namespace {

constexpr double kRelativeTolerance = 0.05;
constexpr double kLeakBound = 0.05;
constexpr double kNormBound = 1e-9;

std::string fmt(const char* label, double got, double want) {
    std::ostringstream os;
    os.precision(6);
    os << label << " got " << got << " want " << want;
    return os.str();
}

double relative_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

void two_site_rabi(std::vector<CheckResult>& out) {
    const double g = 0.05;
    Tridiagonal h{{0.0, 0.0}, {-g}};
    const auto times = linspace_times(std::numbers::pi / g, 2001);
    const auto trace = evolve(h, basis_state(2, 0), times, 0, 1);

    double worst = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double exact = std::pow(std::sin(g * times[i]), 2);
        worst = std::max(worst, std::abs(std::norm(trace.amp_r[i]) - exact));
    }
    out.push_back({"two-site |d_r|^2 = sin^2(g t)", worst < 1e-9, fmt("max error", worst, 0.0)});

    const auto peak = max_transfer(trace);
    const bool ok = std::abs(peak.peak_population - 1.0) < 1e-6 &&
                    std::abs(peak.t_population - std::numbers::pi / (2 * g)) < 2 * (times[1] - times[0]);
    out.push_back({"two-site full transfer at pi/(2g)", ok,
                   fmt("t_population", peak.t_population, std::numbers::pi / (2 * g))});
}

// Peak concurrence of |d_s d_r| starting from |s> under the two-level model.
double rabi_peak_concurrence(double delta, double j_eff) {
    const double transfer = 4.0 * j_eff * j_eff / (delta * delta + 4.0 * j_eff * j_eff);
    return transfer >= 0.5 ? 1.0 : 2.0 * std::sqrt(transfer * (1.0 - transfer));
}

void effective_vs_exact(const std::string& label, const SystemSpec& spec,
                        std::vector<CheckResult>& out) {
    const Spectrum channel = diagonalize(channel_matrix(spec.channel), Vectors::EdgesOnly);
    const auto eff = two_level(channel, spec.omega_s, spec.omega_r, spec.g_s, spec.g_r);
    const double c_eff = concurrence_two_level(eff.delta, eff.j_eff).value;

    // eigenstate route: the two exact eigenvectors with most weight on s and r
    const Spectrum full = diagonalize(full_matrix(spec), Vectors::Full);
    const std::size_t n = full.size();
    std::vector<std::pair<double, std::size_t>> weight;
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = full.mode(k);
        weight.emplace_back(v[0] * v[0] + v[n - 1] * v[n - 1], k);
    }
    std::sort(weight.rbegin(), weight.rend());
    double c_exact = 0.0;
    for (int m = 0; m < 2; ++m) {
        const auto v = full.mode(weight[m].second);
        PureState psi(v.begin(), v.end());
        c_exact += 0.5 * concurrence_pair(psi, 0, n - 1);
    }
    out.push_back({label + ": eigenstate concurrence vs 2|J'|/Omega",
                   relative_error(c_exact, c_eff) < kRelativeTolerance,
                   fmt("exact", c_exact, c_eff)});

    const double period = 2.0 * std::numbers::pi / eff.rabi;
    const auto times = linspace_times(4.0 * period, 4001);
    const auto trace = evolve(spec, basis_state(spec.size(), 0), times);

    const auto peak = max_transfer(trace);
    const double c_dyn_pred = rabi_peak_concurrence(eff.delta, eff.j_eff);
    out.push_back({label + ": dynamical peak concurrence",
                   relative_error(peak.peak_concurrence, c_dyn_pred) < kRelativeTolerance,
                   fmt("peak", peak.peak_concurrence, c_dyn_pred)});

    std::vector<double> pop_r(trace.times.size());
    for (std::size_t i = 0; i < pop_r.size(); ++i) pop_r[i] = std::norm(trace.amp_r[i]);
    const double w = dominant_frequency(trace.times, pop_r);
    out.push_back({label + ": oscillation frequency vs Omega",
                   relative_error(w, eff.rabi) < kRelativeTolerance, fmt("omega", w, eff.rabi)});

    const double leak = *std::max_element(trace.population_leak.begin(), trace.population_leak.end());
    out.push_back({label + ": population leak", leak < kLeakBound, fmt("max leak", leak, kLeakBound)});

    double norm_err = 0.0;
    for (double nv : trace.norm) norm_err = std::max(norm_err, std::abs(nv - 1.0));
    out.push_back({label + ": norm conservation", norm_err < kNormBound,
                   fmt("max |norm - 1|", norm_err, 0.0)});
}

SystemSpec clean_system(std::size_t n, double g) {
    SystemSpec spec;
    spec.channel = ChannelSpec::uniform(n);
    spec.g_s = spec.g_r = g;
    return spec;
}

}  // namespace

std::vector<CheckResult> run_validation(bool quick) {
    std::vector<CheckResult> out;
    two_site_rabi(out);
    effective_vs_exact("uniform N=8 g=0.02", clean_system(8, 0.02), out);
    if (quick) return out;

    effective_vs_exact("uniform N=20 g=0.01", clean_system(20, 0.01), out);

    // detuning of about 1.5 Omega: eigenstate concurrence ~0.55
    SystemSpec detuned = clean_system(8, 0.02);
    detuned.omega_s = 1.2e-3;
    effective_vs_exact("detuned N=8 g=0.02", detuned, out);
    return out;
}

}  // namespace xychain
