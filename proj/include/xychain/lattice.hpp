#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xychain/disorder.hpp"

namespace xychain {

/// Real symmetric tridiagonal matrix stored by its two bands.
struct Tridiagonal {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  // (i, i+1) entries, size n-1

    std::size_t size() const noexcept { return diagonal.size(); }
    double at(std::size_t i, std::size_t j) const;
    std::vector<double> dense() const;  // row-major n*n
};

/// Channel spins 1..N: local fields omega_n and N-1 bond couplings J_n,
/// in units of J.
struct ChannelSpec {
    std::size_t n_sites = 0;
    std::vector<double> onsite;
    std::vector<double> couplings;

    static ChannelSpec uniform(std::size_t n, double omega = 0.0, double coupling = 1.0);
    void validate() const;
};

/// Channel plus weakly attached sender (s) and receiver (r) spins.
struct SystemSpec {
    ChannelSpec channel;
    double omega_s = 0.0;
    double omega_r = 0.0;
    double g_s = 0.01;
    double g_r = 0.01;

    void validate() const;
    std::size_t size() const noexcept { return channel.n_sites + 2; }
    /// max(g_s, g_r) / min|J_n|; perturbation theory needs this << 1.
    double weak_coupling_ratio() const;
};

/// Single-excitation Hamiltonian of the channel: diag omega_n, off-diag -J_n.
Tridiagonal channel_matrix(const ChannelSpec& spec);

/// Full (N+2)-site matrix in the ordering (s, 1..N, r).
Tridiagonal full_matrix(const SystemSpec& spec);

/// Channel with correlated disorder of the given kind. OnSite: random
/// omega_n, J_n = 1. Coupling: omega_n = 0, J_n drawn with length N-1 and
/// shifted.
ChannelSpec disordered_channel(DisorderKind kind, double alpha, std::size_t n_sites,
                               std::uint64_t seed, double coupling_shift = 4.5);

/// disordered_channel that, on NonPositiveCoupling, retries up to
/// max_redraws times with seed <- splitmix64(seed). The number of retries
/// used is stored in *redraws when non-null. max_redraws = 0 rethrows.
ChannelSpec disordered_channel(DisorderKind kind, double alpha, std::size_t n_sites,
                               std::uint64_t seed, double coupling_shift,
                               std::size_t max_redraws, std::size_t* redraws);

}  // namespace xychain
