#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "xychain/dynamics.hpp"
#include "xychain/effective.hpp"
#include "xychain/eigensolve.hpp"
#include "xychain/error.hpp"

using namespace xychain;

namespace {

SystemSpec clean_system(std::size_t n, double g) {
    SystemSpec spec;
    spec.channel = ChannelSpec::uniform(n);
    spec.g_s = spec.g_r = g;
    return spec;
}

}  // namespace

TEST_CASE("t = 0 reproduces the initial state") {
    SystemSpec spec = clean_system(5, 0.05);
    const double h = 1.0 / std::sqrt(2.0);
    PureState psi(spec.size(), 0.0);
    psi.front() = h;
    psi.back() = Amplitude(0.0, h);
    const std::vector<double> t0{0.0};
    const auto trace = evolve(spec, psi, t0);
    CHECK(std::abs(trace.amp_s[0] - psi.front()) < 1e-14);
    CHECK(std::abs(trace.amp_r[0] - psi.back()) < 1e-14);
    CHECK(trace.concurrence_sr[0] == doctest::Approx(concurrence_pair(psi, 0, spec.size() - 1)));
    CHECK(std::abs(trace.population_leak[0]) < 1e-14);
}

TEST_CASE("two sites: |d_r(t)|^2 = sin^2(g t)") {
    const double g = 0.1;
    const Tridiagonal h{{0.3, 0.3}, {-g}};
    const auto times = linspace_times(60.0, 301);
    const auto trace = evolve(h, basis_state(2, 0), times, 0, 1);
    for (std::size_t i = 0; i < times.size(); ++i)
        CHECK(std::norm(trace.amp_r[i]) == doctest::Approx(std::pow(std::sin(g * times[i]), 2)).epsilon(1e-12));

    const auto fine = linspace_times(M_PI / g, 1001);
    const auto peak = max_transfer(evolve(h, basis_state(2, 0), fine, 0, 1));
    CHECK(peak.peak_population == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(peak.t_population == doctest::Approx(M_PI / (2 * g)).epsilon(1e-3));
    CHECK(peak.peak_concurrence == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(peak.t_peak == doctest::Approx(M_PI / (4 * g)).epsilon(1e-3));
}

TEST_CASE("spectral propagation agrees with RK4 for t <= 100") {
    for (std::size_t n : {4u, 12u, 20u}) {
        SystemSpec spec;
        spec.channel = disordered_channel(DisorderKind::OnSite, 1.0, n, 100 + n);
        spec.g_s = 0.2;
        spec.g_r = 0.3;
        spec.omega_s = 0.1;
        const auto h = full_matrix(spec);
        const auto times = linspace_times(100.0, 11);
        PureState init = basis_state(spec.size(), 0);
        const auto trace = evolve(spec, init, times);

        const oracle::Rk4 rk(h, 0.01);
        oracle::State psi(init.begin(), init.end());
        double t = 0.0;
        for (std::size_t i = 0; i < times.size(); ++i) {
            rk.advance(psi, t, times[i]);
            t = times[i];
            CHECK(std::abs(psi.front() - trace.amp_s[i]) < 1e-6);
            CHECK(std::abs(psi.back() - trace.amp_r[i]) < 1e-6);
        }
    }
}

TEST_CASE("norm is conserved") {
    SystemSpec spec;
    spec.channel = disordered_channel(DisorderKind::Coupling, 2.0, 30, 8);
    spec.g_s = spec.g_r = 0.05;
    const auto trace = evolve(spec, basis_state(spec.size(), 0), linspace_times(5000.0, 200));
    for (double nv : trace.norm) CHECK(std::abs(nv - 1.0) <= 1e-9);
}

TEST_CASE("uniform N = 8 channel oscillates at the effective Rabi frequency") {
    const SystemSpec spec = clean_system(8, 0.02);
    const auto eff = two_level(diagonalize(channel_matrix(spec.channel), Vectors::EdgesOnly), 0.0, 0.0, 0.02, 0.02);
    const double period = 2.0 * M_PI / eff.rabi;

    const auto times = linspace_times(3.0 * period, 1501);
    const auto trace = evolve(spec, basis_state(spec.size(), 0), times);
    std::vector<double> pop(times.size());
    for (std::size_t i = 0; i < pop.size(); ++i) pop[i] = std::norm(trace.amp_r[i]);
    const double w_spectral = dominant_frequency(times, pop);
    CHECK(std::abs(w_spectral - eff.rabi) / eff.rabi < 0.05);

    // cross-check the spectral trace against RK4 at dt = 0.01 over one period
    const oracle::Rk4 rk(full_matrix(spec), 0.01);
    const auto sample = linspace_times(std::floor(period), 201);
    oracle::State psi(spec.size(), 0.0);
    psi[0] = 1.0;
    std::vector<double> pop_rk(sample.size());
    double t = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        // sample times are not multiples of dt; advance to the nearest step
        const double target = std::round(sample[i] / 0.01) * 0.01;
        rk.advance(psi, t, target);
        t = target;
        pop_rk[i] = std::norm(psi.back());
    }
    std::vector<double> snapped(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) snapped[i] = std::round(sample[i] / 0.01) * 0.01;
    const auto exact = evolve(spec, basis_state(spec.size(), 0), snapped);
    for (std::size_t i = 0; i < sample.size(); ++i) CHECK(std::abs(std::norm(exact.amp_r[i]) - pop_rk[i]) < 1e-4);
}

TEST_CASE("dominant_frequency recovers a sampled sinusoid") {
    const auto t = linspace_times(50.0, 400);
    std::vector<double> y(t.size()), noisy(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        y[i] = 0.3 + 0.5 * std::cos(1.7 * t[i] + 0.4);
        noisy[i] = y[i] + 0.01 * std::sin(9.0 * t[i]);
    }
    CHECK(dominant_frequency(t, y) == doctest::Approx(1.7).epsilon(1e-8));
    // a weak second tone is not orthogonal over a finite window and pulls the fit slightly
    CHECK(dominant_frequency(t, noisy) == doctest::Approx(1.7).epsilon(1e-5));
    CHECK_THROWS_AS(dominant_frequency(std::vector<double>{0, 1}, std::vector<double>{0, 1}), Error);
}

TEST_CASE("max_transfer") {
    DynamicsTrace trace;
    trace.times = {0, 1, 2, 3, 4};
    trace.concurrence_sr = {0.1, 0.5, 0.9, 0.9, 0.2};
    trace.amp_r = {0.0, 0.3, 0.6, 0.8, 0.7};
    trace.amp_s = trace.amp_r;
    auto peak = max_transfer(trace);
    CHECK(peak.t_peak == 2.0);
    CHECK(peak.peak_concurrence == 0.9);
    CHECK(peak.t_population == 3.0);
    CHECK(peak.peak_population == doctest::Approx(0.64));

    trace.concurrence_sr.assign(5, 0.0);
    peak = max_transfer(trace);
    CHECK(peak.t_peak == 0.0);
    CHECK(peak.peak_concurrence == 0.0);
    CHECK_THROWS_AS(max_transfer(DynamicsTrace{}), Error);
}

TEST_CASE("evolve preconditions") {
    const SystemSpec spec = clean_system(3, 0.01);
    CHECK_THROWS_AS(evolve(spec, PureState(5, 0.5), std::vector<double>{0.0}), Error);
    CHECK_THROWS_AS(evolve(spec, basis_state(5, 0), std::vector<double>{1.0, 0.0}), Error);
    CHECK_THROWS_AS(evolve(spec, basis_state(4, 0), std::vector<double>{0.0}), Error);
}
