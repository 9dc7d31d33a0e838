#include "xychain/effective.hpp"

#include <cmath>
#include <limits>

#include "xychain/error.hpp"

namespace xychain {

TwoLevelEffective two_level(const Spectrum& spectrum, double omega_s, double omega_r, double g_s,
                            double g_r) {
    const std::size_t n = spectrum.size();
    double self_s = 0.0;
    double self_r = 0.0;
    double cross = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();

    for (std::size_t k = 0; k < n; ++k) {
        const double e = spectrum.eigenvalues[k];
        const double ds = e - omega_s;
        const double dr = e - omega_r;
        min_gap = std::min({min_gap, std::abs(ds), std::abs(dr)});
        if (std::abs(ds) < kResonanceTolerance || std::abs(dr) < kResonanceTolerance)
            throw ResonantMode();

        const double as = spectrum.edge_s[k];
        const double ar = spectrum.edge_r[k];
        self_s += as * as / ds;
        self_r += ar * ar / dr;
        cross += as * ar * (1.0 / ds + 1.0 / dr);
    }

    TwoLevelEffective out;
    out.h_s = omega_s - g_s * g_s * self_s;
    out.h_r = omega_r - g_r * g_r * self_r;
    out.j_eff = 0.5 * g_s * g_r * cross;
    out.delta = out.h_s - out.h_r;
    out.rabi = std::sqrt(out.delta * out.delta + 4.0 * out.j_eff * out.j_eff);
    out.min_gap = min_gap;
    return out;
}

ThreeLevelEffective three_level(const Spectrum& spectrum, std::size_t mode_index, double g_s,
                                double g_r) {
    if (mode_index >= spectrum.size()) throw Error("mode index out of range");
    const double as = spectrum.edge_s[mode_index];
    const double ar = spectrum.edge_r[mode_index];
    if (std::abs(ar) <= kDecoupledTolerance) throw ReceiverDecoupled();

    ThreeLevelEffective out;
    out.mode_index = mode_index;
    out.mode_energy = spectrum.eigenvalues[mode_index];
    out.coupling_s = g_s * as;
    out.coupling_r = g_r * ar;
    out.eta = out.coupling_s / out.coupling_r;
    return out;
}

}  // namespace xychain
