#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace xychain {

using Amplitude = std::complex<double>;
using PureState = std::vector<Amplitude>;

inline constexpr double kNormTolerance = 1e-10;

double norm(std::span<const Amplitude> state);

/// Pairwise concurrence inside the single-excitation manifold,
/// C_ij = 2 |d_i conj(d_j)|. Throws Error on unnormalized input or i == j.
double concurrence_pair(std::span<const Amplitude> state, std::size_t i, std::size_t j);

struct TwoLevelConcurrence {
    double value = 0.0;
    bool decoupled = false;  // j_eff == 0
};

/// 2 / sqrt((delta / j_eff)^2 + 4), evaluated as 2|J'| / Omega.
TwoLevelConcurrence concurrence_two_level(double delta, double j_eff);

/// 2 |eta| / (1 + eta^2)
double concurrence_three_level(double eta);

/// Eigenstate (2J'|s> + (delta +- Omega)|r>) / norm of the effective
/// two-level Hamiltonian as a 2-component state (s, r); plus selects the sign.
PureState two_level_eigenstate(double delta, double j_eff, bool plus);

/// Zero mode (|s> - eta|r>) / sqrt(1 + eta^2) over (s, k', r).
PureState three_level_zero_mode(double eta);

}  // namespace xychain
