#include "xychain/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xychain/ensemble.hpp"
#include "xychain/error.hpp"

namespace xychain {

double Tridiagonal::at(std::size_t i, std::size_t j) const {
    const std::size_t n = size();
    if (i >= n || j >= n) throw Error("tridiagonal index out of range");
    if (i == j) return diagonal[i];
    if (i + 1 == j) return off_diagonal[i];
    if (j + 1 == i) return off_diagonal[j];
    return 0.0;
}

std::vector<double> Tridiagonal::dense() const {
    const std::size_t n = size();
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = diagonal[i];
        if (i + 1 < n) {
            m[i * n + i + 1] = off_diagonal[i];
            m[(i + 1) * n + i] = off_diagonal[i];
        }
    }
    return m;
}

ChannelSpec ChannelSpec::uniform(std::size_t n, double omega, double coupling) {
    ChannelSpec spec;
    spec.n_sites = n;
    spec.onsite.assign(n, omega);
    spec.couplings.assign(n > 0 ? n - 1 : 0, coupling);
    return spec;
}

void ChannelSpec::validate() const {
    if (n_sites == 0) throw Error("channel must have at least one site");
    if (onsite.size() != n_sites)
        throw Error("onsite has " + std::to_string(onsite.size()) + " entries, expected " +
                    std::to_string(n_sites));
    if (couplings.size() != n_sites - 1)
        throw Error("couplings has " + std::to_string(couplings.size()) + " entries, expected " +
                    std::to_string(n_sites - 1));
    for (std::size_t i = 0; i < couplings.size(); ++i)
        if (couplings[i] == 0.0 || !std::isfinite(couplings[i]))
            throw Error("coupling " + std::to_string(i + 1) + " must be finite and nonzero");
    for (double w : onsite)
        if (!std::isfinite(w)) throw Error("onsite fields must be finite");
}

void SystemSpec::validate() const {
    channel.validate();
    if (!(g_s > 0.0) || !(g_r > 0.0)) throw Error("g_s and g_r must be positive");
    if (!std::isfinite(omega_s) || !std::isfinite(omega_r))
        throw Error("omega_s and omega_r must be finite");
}

double SystemSpec::weak_coupling_ratio() const {
    if (channel.couplings.empty()) return 0.0;
    double min_j = std::abs(channel.couplings.front());
    for (double j : channel.couplings) min_j = std::min(min_j, std::abs(j));
    return std::max(g_s, g_r) / min_j;
}

Tridiagonal channel_matrix(const ChannelSpec& spec) {
    spec.validate();
    Tridiagonal m;
    m.diagonal = spec.onsite;
    m.off_diagonal.resize(spec.couplings.size());
    std::transform(spec.couplings.begin(), spec.couplings.end(), m.off_diagonal.begin(),
                   [](double j) { return -j; });
    return m;
}

Tridiagonal full_matrix(const SystemSpec& spec) {
    spec.validate();
    const auto& ch = spec.channel;
    Tridiagonal m;
    m.diagonal.reserve(ch.n_sites + 2);
    m.diagonal.push_back(spec.omega_s);
    m.diagonal.insert(m.diagonal.end(), ch.onsite.begin(), ch.onsite.end());
    m.diagonal.push_back(spec.omega_r);

    m.off_diagonal.reserve(ch.n_sites + 1);
    m.off_diagonal.push_back(-spec.g_s);
    for (double j : ch.couplings) m.off_diagonal.push_back(-j);
    m.off_diagonal.push_back(-spec.g_r);
    return m;
}

ChannelSpec disordered_channel(DisorderKind kind, double alpha, std::size_t n_sites,
                               std::uint64_t seed, double coupling_shift) {
    DisorderParams params;
    params.alpha = alpha;
    params.seed = seed;
    params.kind = kind;
    params.coupling_shift = coupling_shift;

    ChannelSpec spec;
    spec.n_sites = n_sites;
    if (kind == DisorderKind::OnSite) {
        params.length = n_sites;
        spec.onsite = generate_sequence(params).values;
        spec.couplings.assign(n_sites - 1, 1.0);
    } else {
        params.length = n_sites - 1;
        spec.onsite.assign(n_sites, 0.0);
        spec.couplings = generate_sequence(params).values;
    }
    return spec;
}

ChannelSpec disordered_channel(DisorderKind kind, double alpha, std::size_t n_sites,
                               std::uint64_t seed, double coupling_shift,
                               std::size_t max_redraws, std::size_t* redraws) {
    for (std::size_t attempt = 0;; ++attempt) {
        try {
            auto spec = disordered_channel(kind, alpha, n_sites, seed, coupling_shift);
            if (redraws) *redraws = attempt;
            return spec;
        } catch (const NonPositiveCoupling&) {
            if (attempt >= max_redraws) throw;
            seed = splitmix64(seed);
        }
    }
}

}  // namespace xychain
