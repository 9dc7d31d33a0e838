#include "xychain/entanglement.hpp"

#include <cmath>

#include "xychain/error.hpp"

namespace xychain {

double norm(std::span<const Amplitude> state) {
    double sum = 0.0;
    for (const auto& a : state) sum += std::norm(a);
    return std::sqrt(sum);
}

double concurrence_pair(std::span<const Amplitude> state, std::size_t i, std::size_t j) {
    if (i == j) throw Error("concurrence needs two distinct sites");
    if (i >= state.size() || j >= state.size()) throw Error("site index out of range");
    if (std::abs(norm(state) - 1.0) > kNormTolerance) throw Error("state is not normalized");
    return 2.0 * std::abs(state[i] * std::conj(state[j]));
}

TwoLevelConcurrence concurrence_two_level(double delta, double j_eff) {
    if (j_eff == 0.0) return {0.0, true};
    // 2|J'|/Omega == 2/sqrt((delta/J')^2 + 4) without overflowing the ratio
    const double rabi = std::hypot(delta, 2.0 * j_eff);
    return {2.0 * std::abs(j_eff) / rabi, false};
}

double concurrence_three_level(double eta) {
    if (!std::isfinite(eta)) throw Error("eta must be finite");
    return 2.0 * std::abs(eta) / (1.0 + eta * eta);
}

PureState two_level_eigenstate(double delta, double j_eff, bool plus) {
    const double rabi = std::sqrt(delta * delta + 4.0 * j_eff * j_eff);
    const double a = 2.0 * j_eff;
    const double b = plus ? delta + rabi : delta - rabi;
    const double scale = std::sqrt(b * b + a * a);
    if (scale == 0.0) return {1.0, 0.0};
    return {a / scale, b / scale};
}

PureState three_level_zero_mode(double eta) {
    const double scale = std::sqrt(1.0 + eta * eta);
    return {1.0 / scale, 0.0, -eta / scale};
}

}  // namespace xychain
