#include "xychain/disorder.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "xychain/error.hpp"

namespace xychain {

const char* to_string(DisorderKind kind) {
    return kind == DisorderKind::OnSite ? "onsite" : "coupling";
}

DisorderKind disorder_kind_from_string(const std::string_view& name) {
    if (name == "onsite" || name == "on-site" || name == "OnSite") return DisorderKind::OnSite;
    if (name == "coupling" || name == "Coupling") return DisorderKind::Coupling;
    throw Error("unknown disorder kind '" + std::string(name) + "'");
}

void DisorderParams::validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw Error("disorder alpha must be finite and >= 0");
    if (length < 2) throw Error("disorder length must be >= 2");
    if (kind == DisorderKind::Coupling && !std::isfinite(coupling_shift))
        throw Error("coupling shift must be finite");
}

std::vector<double> draw_phases(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 engine(seed);
    std::vector<double> phases(count);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    constexpr double inv_2_53 = 1.0 / 9007199254740992.0;
    for (auto& phi : phases) phi = two_pi * static_cast<double>(engine() >> 11) * inv_2_53;
    return phases;
}

DisorderSequence generate_sequence_with_phases(const DisorderParams& params,
                                               std::span<const double> phases) {
    params.validate();
    const std::size_t L = params.length;
    const std::size_t modes = L / 2;
    if (phases.size() != modes)
        throw Error("expected " + std::to_string(modes) + " phases, got " +
                    std::to_string(phases.size()));

    std::vector<double> amplitude(modes);
    for (std::size_t k = 1; k <= modes; ++k)
        amplitude[k - 1] = std::pow(static_cast<double>(k), -params.alpha / 2.0);

    // cos(2 pi m / L + phi) = cos(theta_m) cos(phi) - sin(theta_m) sin(phi), m = n k mod L
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> cos_table(L), sin_table(L);
    for (std::size_t m = 0; m < L; ++m) {
        const double theta = two_pi * static_cast<double>(m) / static_cast<double>(L);
        cos_table[m] = std::cos(theta);
        sin_table[m] = std::sin(theta);
    }
    std::vector<double> a_cos(modes), a_sin(modes);
    for (std::size_t k = 0; k < modes; ++k) {
        a_cos[k] = amplitude[k] * std::cos(phases[k]);
        a_sin[k] = amplitude[k] * std::sin(phases[k]);
    }

    std::vector<double> values(L, 0.0);
    for (std::size_t n = 1; n <= L; ++n) {
        double sum = 0.0;
        std::size_t m = 0;
        for (std::size_t k = 0; k < modes; ++k) {
            m += n;
            if (m >= L) m %= L;
            sum += a_cos[k] * cos_table[m] - a_sin[k] * sin_table[m];
        }
        values[n - 1] = sum;
    }

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(L);
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(L);
    if (var < 1e-14) throw DegenerateSequence();

    const double inv_sd = 1.0 / std::sqrt(var);
    for (auto& v : values) v = (v - mean) * inv_sd;

    if (params.kind == DisorderKind::Coupling) {
        for (std::size_t i = 0; i < L; ++i) {
            values[i] += params.coupling_shift;
            if (!(values[i] > 0.0)) throw NonPositiveCoupling(i, values[i]);
        }
    }
    return {std::move(values), params};
}

DisorderSequence generate_sequence(const DisorderParams& params) {
    params.validate();
    const auto phases = draw_phases(params.seed, params.length / 2);
    return generate_sequence_with_phases(params, phases);
}

}  // namespace xychain
