#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "xychain/disorder.hpp"
#include "xychain/error.hpp"

using namespace xychain;

namespace {

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double population_variance(const std::vector<double>& v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("zero phases, alpha = 0, L = 4 reproduces the hand-evaluated series") {
    // raw series (-1, 0, -1, 2): mean 0, population variance 1.5
    DisorderParams p;
    p.alpha = 0.0;
    p.length = 4;
    const std::vector<double> phases{0.0, 0.0};
    const auto seq = generate_sequence_with_phases(p, phases);
    const double sd = std::sqrt(1.5);
    CHECK(seq.values[0] == doctest::Approx(-1.0 / sd).epsilon(1e-14));
    CHECK(seq.values[1] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(seq.values[2] == doctest::Approx(-1.0 / sd).epsilon(1e-14));
    CHECK(seq.values[3] == doctest::Approx(2.0 / sd).epsilon(1e-14));
    CHECK(seq.values[0] == doctest::Approx(-0.81650).epsilon(1e-5));
    CHECK(seq.values[3] == doctest::Approx(1.63299).epsilon(1e-5));
}

TEST_CASE("standardization holds across alpha and length") {
    for (double alpha : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0})
        for (std::size_t L : {10u, 50u, 100u, 201u})
            for (std::uint64_t seed : {1ull, 99ull, 123456789ull}) {
                DisorderParams p{alpha, L, seed, DisorderKind::OnSite};
                const auto seq = generate_sequence(p);
                REQUIRE(seq.values.size() == L);
                CHECK(std::abs(mean_of(seq.values)) < 1e-12);
                CHECK(std::abs(population_variance(seq.values) - 1.0) < 1e-10);
            }
}

TEST_CASE("same seed gives bit-identical sequences, different seeds differ") {
    DisorderParams p{2.5, 137, 7, DisorderKind::OnSite};
    const auto a = generate_sequence(p);
    const auto b = generate_sequence(p);
    CHECK(a.values == b.values);
    p.seed = 8;
    CHECK(generate_sequence(p).values != a.values);
}

TEST_CASE("phases are drawn in order k = 1, 2, ... and lie in [0, 2pi)") {
    const auto few = draw_phases(11, 3);
    const auto many = draw_phases(11, 50);
    for (std::size_t i = 0; i < few.size(); ++i) CHECK(few[i] == many[i]);
    for (double phi : many) {
        CHECK(phi >= 0.0);
        CHECK(phi < 2.0 * M_PI);
    }
}

TEST_CASE("odd length uses floor(L/2) modes") {
    DisorderParams p{1.0, 7, 3, DisorderKind::OnSite};
    CHECK_THROWS_AS(generate_sequence_with_phases(p, std::vector<double>(4, 0.0)), Error);
    CHECK_NOTHROW(generate_sequence_with_phases(p, std::vector<double>(3, 0.0)));
}

TEST_CASE("coupling kind adds the shift after standardization") {
    DisorderParams onsite{1.5, 99, 21, DisorderKind::OnSite};
    DisorderParams coupling = onsite;
    coupling.kind = DisorderKind::Coupling;
    coupling.coupling_shift = 4.5;
    const auto a = generate_sequence(onsite);
    const auto b = generate_sequence(coupling);
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(b.values[i] == doctest::Approx(a.values[i] + 4.5));
    CHECK(mean_of(b.values) == doctest::Approx(4.5));
}

TEST_CASE("shifted couplings stay positive for correlated disorder at L <= 1000") {
    for (double alpha : {1.0, 2.0, 3.0, 4.0})
        for (std::size_t L : {100u, 1000u})
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                DisorderParams p{alpha, L, seed, DisorderKind::Coupling, 4.5};
                const auto seq = generate_sequence(p);
                CHECK(*std::min_element(seq.values.begin(), seq.values.end()) > 0.0);
            }
}

TEST_CASE("white-noise couplings occasionally dip below zero and are reported") {
    // A unit-variance sequence falls below -4.5 with probability ~3e-6 per
    // site, so the shift is not a hard guarantee for alpha = 0.
    std::size_t failures = 0;
    const std::size_t trials = 400;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        DisorderParams p{0.0, 1000, seed, DisorderKind::Coupling, 4.5};
        try {
            generate_sequence(p);
        } catch (const NonPositiveCoupling& e) {
            ++failures;
            CHECK(e.index() < 1000);
            CHECK(e.value() <= 0.0);
            CHECK(std::string(e.what()).find("non-positive coupling") != std::string::npos);
        }
    }
    CHECK(failures < trials / 50);
}

TEST_CASE("a tiny shift makes the error path deterministic") {
    DisorderParams p{0.0, 50, 5, DisorderKind::Coupling, 0.1};
    CHECK_THROWS_AS(generate_sequence(p), NonPositiveCoupling);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(generate_sequence({-0.5, 10, 1, DisorderKind::OnSite}), Error);
    CHECK_THROWS_AS(generate_sequence({1.0, 1, 1, DisorderKind::OnSite}), Error);
}

TEST_CASE("degenerate series") {
    // L = 2, alpha = 0, phase pi/2: cos(pi + pi/2) = cos(2pi + pi/2) = 0
    DisorderParams p{0.0, 2, 0, DisorderKind::OnSite};
    const std::vector<double> phases{M_PI / 2};
    CHECK_THROWS_WITH_AS(generate_sequence_with_phases(p, phases), "degenerate sequence", DegenerateSequence);
}

TEST_CASE("alpha = 0 has a flat spectrum: lag-1 autocorrelation matches white noise") {
    // Circular lag-1 autocorrelation of a flat-spectrum series over k = 1..L/2.
    // Odd L: exactly sum_k cos(2 pi k / L) / ((L - 1) / 2) = -1 / (L - 1) for every seed.
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(oracle::circular_lag1(generate_sequence({0.0, 101, seed, DisorderKind::OnSite}).values) ==
              doctest::Approx(-1.0 / 100.0).epsilon(1e-9));

    // Even L: only the Nyquist mode (weight cos^2 phi) correlates, so
    // E[r] = -(1/2pi) int cos^2 phi / ((L - 2)/4 + cos^2 phi) dphi -> 0 as 1/L.
    const std::size_t L = 100, seeds = 200;
    const double expected = oracle::nyquist_lag1_expectation(L);
    std::vector<double> r(seeds);
    for (std::size_t s = 0; s < seeds; ++s)
        r[s] = oracle::circular_lag1(generate_sequence({0.0, L, s, DisorderKind::OnSite}).values);
    const double se = std::sqrt(population_variance(r) / static_cast<double>(seeds - 1));
    CHECK(std::abs(mean_of(r) - expected) < 3.0 * se);
    CHECK(std::abs(expected) < 2.5 / static_cast<double>(L));
}

TEST_CASE("persistence grows with alpha") {
    const std::size_t seeds = 200;
    double white = 0.0, persistent = 0.0;
    for (std::size_t s = 0; s < seeds; ++s) {
        white += oracle::lag1_autocorrelation(generate_sequence({0.0, 100, s, DisorderKind::OnSite}).values);
        persistent += oracle::lag1_autocorrelation(generate_sequence({4.0, 100, s, DisorderKind::OnSite}).values);
    }
    CHECK(persistent / seeds > white / seeds + 0.5);
}

TEST_CASE("disorder kind names round-trip") {
    CHECK(disorder_kind_from_string(to_string(DisorderKind::OnSite)) == DisorderKind::OnSite);
    CHECK(disorder_kind_from_string(to_string(DisorderKind::Coupling)) == DisorderKind::Coupling);
    CHECK_THROWS_AS(disorder_kind_from_string("binary"), Error);
}
