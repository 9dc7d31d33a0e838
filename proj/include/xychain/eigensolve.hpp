#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xychain/lattice.hpp"

namespace xychain {

enum class Vectors {
    Full,       // all N components of every eigenvector
    EdgesOnly,  // only the first and last components (a_sk, a_rk)
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    /// Column-major N*N when has_vectors(); column k is |E_k>.
    std::vector<double> eigenvectors;
    std::vector<double> edge_s;  // a_sk = <1|E_k>
    std::vector<double> edge_r;  // a_rk = <N|E_k>
    bool degenerate = false;     // some gap |E_{k+1} - E_k| < 1e-12

    std::size_t size() const noexcept { return eigenvalues.size(); }
    bool has_vectors() const noexcept { return !eigenvectors.empty(); }
    std::span<const double> mode(std::size_t k) const;
};

inline constexpr double kDegeneracyGap = 1e-12;
inline constexpr int kMaxSweepsPerEigenvalue = 50;

/// Implicit-shift QL on a symmetric tridiagonal matrix.
/// Each eigenvector is signed so its first component above 1e-12 is positive.
/// EdgesOnly only sees the two edge rows, so when |a_sk| <= 1e-12 the sign
/// follows a_rk instead; sign-free quantities (a_sk a_rk, a_rk^2) always agree.
/// Throws NotConverged if an eigenvalue needs more than 50 sweeps.
Spectrum diagonalize(const Tridiagonal& matrix, Vectors vectors = Vectors::Full);

struct ParticleHoleReport {
    double max_pairing_error = 0.0;  // max_k |E_k + E_{N+1-k}|
    double zero_mode_gap = 0.0;      // min_k |E_k|
};

/// Only meaningful for channels with zero local fields.
ParticleHoleReport particle_hole_check(const Spectrum& spectrum);

/// Index of the eigenvalue closest to target, smaller index on ties.
std::size_t select_mode(const Spectrum& spectrum, double target);

}  // namespace xychain
