#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "xychain/disorder.hpp"
#include "xychain/ensemble.hpp"
#include "xychain/lattice.hpp"

namespace xychain {

struct WavefunctionProfile {
    std::vector<double> probabilities;  // |<n|E_k'>|^2, n = 1..N
    std::size_t mode_index = 0;
    double mode_energy = 0.0;
    // Provenance; filled by the disordered overload.
    double alpha = 0.0;
    DisorderKind disorder_kind = DisorderKind::OnSite;
    std::uint64_t seed = 0;
};

/// Squared components of the channel eigenstate closest to `target`.
WavefunctionProfile wavefunction_profile(const ChannelSpec& spec, double target);

WavefunctionProfile wavefunction_profile(DisorderKind kind, double alpha, std::size_t n_sites,
                                         std::uint64_t seed, double target = 0.0,
                                         double coupling_shift = 4.5);

/// 1 / sum_n p_n^2. Throws Error if the probabilities do not sum to one.
double participation_ratio(std::span<const double> probabilities);

/// Participation ratio of the mode nearest `target` over `realizations`
/// disorder draws (seeds from realization_seed(base_seed, n_sites, 0, r)).
EnsembleStats participation_ensemble(DisorderKind kind, double alpha, std::size_t n_sites,
                                     std::size_t realizations, std::uint64_t base_seed,
                                     double target = 0.0, std::size_t threads = 0,
                                     double coupling_shift = 4.5, std::size_t coupling_redraws = 0);

}  // namespace xychain
