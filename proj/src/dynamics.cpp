#include "xychain/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "xychain/eigensolve.hpp"
#include "xychain/error.hpp"

namespace xychain {

PureState basis_state(std::size_t n, std::size_t site) {
    if (site >= n) throw Error("basis site out of range");
    PureState psi(n, 0.0);
    psi[site] = 1.0;
    return psi;
}

std::vector<double> linspace_times(double t_max, std::size_t samples) {
    if (samples == 0) return {};
    if (samples == 1) return {0.0};
    std::vector<double> t(samples);
    for (std::size_t i = 0; i < samples; ++i)
        t[i] = t_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    return t;
}

DynamicsTrace evolve(const Tridiagonal& hamiltonian, std::span<const Amplitude> initial,
                     std::span<const double> times, std::size_t s, std::size_t r) {
    const std::size_t n = hamiltonian.size();
    if (initial.size() != n) throw Error("initial state size does not match the Hamiltonian");
    if (s >= n || r >= n) throw Error("recorded site out of range");
    if (std::abs(norm(initial) - 1.0) > kNormTolerance) throw Error("initial state is not normalized");
    if (!std::is_sorted(times.begin(), times.end())) throw Error("times must be sorted ascending");

    const Spectrum spectrum = diagonalize(hamiltonian, Vectors::Full);

    std::vector<Amplitude> overlap(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = spectrum.mode(k);
        Amplitude c = 0.0;
        for (std::size_t i = 0; i < n; ++i) c += v[i] * initial[i];
        overlap[k] = c;
    }

    DynamicsTrace trace;
    trace.times.assign(times.begin(), times.end());
    trace.amp_s.reserve(times.size());
    trace.amp_r.reserve(times.size());
    trace.concurrence_sr.reserve(times.size());
    trace.population_leak.reserve(times.size());
    trace.norm.reserve(times.size());

    std::vector<Amplitude> phased(n);
    for (double t : times) {
        for (std::size_t k = 0; k < n; ++k)
            phased[k] = std::polar(1.0, -spectrum.eigenvalues[k] * t) * overlap[k];

        Amplitude ds = 0.0, dr = 0.0;
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Amplitude amp = 0.0;
            for (std::size_t k = 0; k < n; ++k) amp += spectrum.eigenvectors[k * n + i] * phased[k];
            total += std::norm(amp);
            if (i == s) ds = amp;
            if (i == r) dr = amp;
        }
        trace.amp_s.push_back(ds);
        trace.amp_r.push_back(dr);
        trace.concurrence_sr.push_back(2.0 * std::abs(ds * std::conj(dr)));
        trace.population_leak.push_back(1.0 - std::norm(ds) - std::norm(dr));
        trace.norm.push_back(std::sqrt(total));
    }
    return trace;
}

DynamicsTrace evolve(const SystemSpec& spec, std::span<const Amplitude> initial,
                     std::span<const double> times) {
    return evolve(full_matrix(spec), initial, times, 0, spec.size() - 1);
}

MaxTransfer max_transfer(const DynamicsTrace& trace) {
    if (trace.times.empty()) throw Error("empty dynamics trace");
    MaxTransfer out;
    out.t_peak = out.t_population = trace.times.front();
    out.peak_concurrence = trace.concurrence_sr.front();
    out.peak_population = std::norm(trace.amp_r.front());
    for (std::size_t i = 1; i < trace.times.size(); ++i) {
        if (trace.concurrence_sr[i] > out.peak_concurrence) {
            out.peak_concurrence = trace.concurrence_sr[i];
            out.t_peak = trace.times[i];
        }
        const double pop = std::norm(trace.amp_r[i]);
        if (pop > out.peak_population) {
            out.peak_population = pop;
            out.t_population = trace.times[i];
        }
    }
    return out;
}

namespace {

// Explained sum of squares of the least-squares fit y ~ a + b cos(wt) + c sin(wt).
double sinusoid_fit_score(std::span<const double> t, std::span<const double> y, double w) {
    std::array<double, 9> g{};  // Gram matrix
    std::array<double, 3> rhs{};
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double x[3] = {1.0, std::cos(w * t[i]), std::sin(w * t[i])};
        for (int a = 0; a < 3; ++a) {
            rhs[a] += x[a] * y[i];
            for (int b = 0; b < 3; ++b) g[a * 3 + b] += x[a] * x[b];
        }
    }
    // Gaussian elimination with partial pivoting on the 3x3 system.
    std::array<double, 3> sol = rhs;
    std::array<double, 9> m = g;
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row * 3 + col]) > std::abs(m[piv * 3 + col])) piv = row;
        if (std::abs(m[piv * 3 + col]) < 1e-300) return 0.0;
        if (piv != col) {
            for (int k = 0; k < 3; ++k) std::swap(m[col * 3 + k], m[piv * 3 + k]);
            std::swap(sol[col], sol[piv]);
        }
        for (int row = col + 1; row < 3; ++row) {
            const double factor = m[row * 3 + col] / m[col * 3 + col];
            for (int k = col; k < 3; ++k) m[row * 3 + k] -= factor * m[col * 3 + k];
            sol[row] -= factor * sol[col];
        }
    }
    for (int row = 2; row >= 0; --row) {
        double acc = sol[row];
        for (int k = row + 1; k < 3; ++k) acc -= m[row * 3 + k] * sol[k];
        sol[row] = acc / m[row * 3 + row];
    }
    return sol[0] * rhs[0] + sol[1] * rhs[1] + sol[2] * rhs[2];
}

}  // namespace

double dominant_frequency(std::span<const double> times, std::span<const double> signal) {
    if (times.size() != signal.size() || times.size() < 4)
        throw Error("dominant_frequency needs at least 4 matching samples");
    const double span = times.back() - times.front();
    double dt_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < times.size(); ++i) dt_min = std::min(dt_min, times[i] - times[i - 1]);
    if (!(span > 0.0) || !(dt_min > 0.0)) throw Error("sample times must be strictly increasing");

    const double w_lo = std::numbers::pi / span;
    const double w_hi = std::numbers::pi / dt_min;
    const double step = w_lo / 8.0;

    double best_w = w_lo;
    double best_score = -1.0;
    for (double w = w_lo; w <= w_hi; w += step) {
        const double score = sinusoid_fit_score(times, signal, w);
        if (score > best_score) {
            best_score = score;
            best_w = w;
        }
    }

    // golden-section refinement inside the bracketing grid cell
    constexpr double inv_phi = 0.6180339887498949;
    double a = std::max(w_lo, best_w - step);
    double b = best_w + step;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = sinusoid_fit_score(times, signal, x1);
    double f2 = sinusoid_fit_score(times, signal, x2);
    for (int it = 0; it < 100 && (b - a) > 1e-13 * b; ++it) {
        if (f1 > f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = sinusoid_fit_score(times, signal, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = sinusoid_fit_score(times, signal, x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace xychain
