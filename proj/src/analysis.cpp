#include "xychain/analysis.hpp"

#include <cmath>

#include "xychain/eigensolve.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"

namespace xychain {

WavefunctionProfile wavefunction_profile(const ChannelSpec& spec, double target) {
    const Spectrum spectrum = diagonalize(channel_matrix(spec), Vectors::Full);
    WavefunctionProfile profile;
    profile.mode_index = select_mode(spectrum, target);
    profile.mode_energy = spectrum.eigenvalues[profile.mode_index];
    const auto v = spectrum.mode(profile.mode_index);
    profile.probabilities.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) profile.probabilities[i] = v[i] * v[i];
    return profile;
}

WavefunctionProfile wavefunction_profile(DisorderKind kind, double alpha, std::size_t n_sites,
                                         std::uint64_t seed, double target,
                                         double coupling_shift) {
    auto profile =
        wavefunction_profile(disordered_channel(kind, alpha, n_sites, seed, coupling_shift), target);
    profile.alpha = alpha;
    profile.disorder_kind = kind;
    profile.seed = seed;
    return profile;
}

double participation_ratio(std::span<const double> probabilities) {
    double sum = 0.0, sum_sq = 0.0;
    for (double p : probabilities) {
        sum += p;
        sum_sq += p * p;
    }
    if (probabilities.empty() || std::abs(sum - 1.0) > kNormTolerance)
        throw Error("probabilities must sum to 1");
    return 1.0 / sum_sq;
}

EnsembleStats participation_ensemble(DisorderKind kind, double alpha, std::size_t n_sites,
                                     std::size_t realizations, std::uint64_t base_seed,
                                     double target, std::size_t threads, double coupling_shift,
                                     std::size_t coupling_redraws) {
    if (realizations == 0) throw Error("realizations must be >= 1");
    std::vector<double> pr(realizations);
    parallel_for(realizations, threads, [&](std::size_t r) {
        const auto seed = realization_seed(base_seed, n_sites, 0, r);
        try {
            const auto channel =
                disordered_channel(kind, alpha, n_sites, seed, coupling_shift, coupling_redraws, nullptr);
            pr[r] = participation_ratio(wavefunction_profile(channel, target).probabilities);
        } catch (const Error& e) {
            throw RealizationError(seed, e.what());
        }
    });
    return summarize(pr);
}

}  // namespace xychain
