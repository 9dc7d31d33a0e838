#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace xychain {

enum class DisorderKind { OnSite, Coupling };

const char* to_string(DisorderKind kind);
DisorderKind disorder_kind_from_string(const std::string_view& name);

struct DisorderParams {
    double alpha = 0.0;  // spectral exponent of S(k) ~ k^-alpha
    std::size_t length = 2;
    std::uint64_t seed = 0;
    DisorderKind kind = DisorderKind::OnSite;
    double coupling_shift = 4.5;  // added after standardization, Coupling only

    void validate() const;
};

struct DisorderSequence {
    std::vector<double> values;
    DisorderParams params;
};

/// Correlated sequence with power-law spectrum, standardized to zero mean and
/// unit population variance:
///
///   x_n = sum_{k=1}^{floor(L/2)} k^(-alpha/2) cos(2 pi n k / L + phi_k)
///
/// Phases phi_k are drawn in order k = 1, 2, ... from mt19937_64(seed).
/// For DisorderKind::Coupling the shift is added afterwards and every value
/// must stay positive.
DisorderSequence generate_sequence(const DisorderParams& params);

/// Same as generate_sequence but with explicit phases (one per k); used to
/// pin the generator in tests.
DisorderSequence generate_sequence_with_phases(const DisorderParams& params,
                                               std::span<const double> phases);

/// Phases phi_1..phi_{floor(L/2)} that generate_sequence would use.
std::vector<double> draw_phases(std::uint64_t seed, std::size_t count);

}  // namespace xychain
