#pragma once

#include <cstddef>

#include "xychain/eigensolve.hpp"

namespace xychain {

/// Second-order couplings of the off-resonant sender/receiver pair.
struct TwoLevelEffective {
    double h_s = 0.0;
    double h_r = 0.0;
    double j_eff = 0.0;  // J'
    double delta = 0.0;  // h_s - h_r
    double rabi = 0.0;   // sqrt(delta^2 + 4 J'^2)
    double min_gap = 0.0;  // min over k, nu of |E_k - omega_nu|
};

/// Resonant sender-mode-receiver couplings for mode k'.
struct ThreeLevelEffective {
    std::size_t mode_index = 0;
    double mode_energy = 0.0;
    double eta = 0.0;  // g_s a_sk' / (g_r a_rk')
    double coupling_s = 0.0;
    double coupling_r = 0.0;
};

inline constexpr double kResonanceTolerance = 1e-14;
inline constexpr double kDecoupledTolerance = 1e-14;

/// h_nu = omega_nu - g_nu^2 sum_k a_nuk^2 / (E_k - omega_nu)
/// J'   = (g_s g_r / 2) sum_k a_sk a_rk [1/(E_k - omega_s) + 1/(E_k - omega_r)]
///
/// Throws ResonantMode when some |E_k - omega_nu| < 1e-14.
TwoLevelEffective two_level(const Spectrum& spectrum, double omega_s, double omega_r,
                            double g_s, double g_r);

/// Throws ReceiverDecoupled when |a_rk'| <= 1e-14.
ThreeLevelEffective three_level(const Spectrum& spectrum, std::size_t mode_index, double g_s,
                                double g_r);

}  // namespace xychain
