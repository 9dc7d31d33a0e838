#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xychain/entanglement.hpp"
#include "xychain/lattice.hpp"

namespace xychain {

struct DynamicsTrace {
    std::vector<double> times;
    std::vector<Amplitude> amp_s;
    std::vector<Amplitude> amp_r;
    std::vector<double> concurrence_sr;
    std::vector<double> population_leak;  // 1 - |d_s|^2 - |d_r|^2
    std::vector<double> norm;
};

/// Exact propagation psi(t) = sum_k exp(-i E_k t) |E_k><E_k|psi(0)> of the
/// full (N+2)-site system. `initial` is indexed (s, 1..N, r).
DynamicsTrace evolve(const SystemSpec& spec, std::span<const Amplitude> initial,
                     std::span<const double> times);

/// Same propagation for an arbitrary tridiagonal Hamiltonian; s and r name
/// the two sites whose amplitudes are recorded.
DynamicsTrace evolve(const Tridiagonal& hamiltonian, std::span<const Amplitude> initial,
                     std::span<const double> times, std::size_t s, std::size_t r);

/// Localized excitation on site `site` of an n-site register.
PureState basis_state(std::size_t n, std::size_t site);

struct MaxTransfer {
    double t_peak = 0.0;  // earliest argmax of concurrence_sr
    double peak_concurrence = 0.0;
    double t_population = 0.0;  // earliest argmax of |d_r|^2
    double peak_population = 0.0;
};

MaxTransfer max_transfer(const DynamicsTrace& trace);

/// Angular frequency of the best single-sinusoid least-squares fit
/// a + b cos(w t) + c sin(w t) to the samples, searched over
/// (pi / span, pi / dt_min].
double dominant_frequency(std::span<const double> times, std::span<const double> signal);

/// Evenly spaced sample times on [0, t_max], `samples` points.
std::vector<double> linspace_times(double t_max, std::size_t samples);

}  // namespace xychain
