#include "xychain/error.hpp"

#include <sstream>

namespace xychain {

namespace {
std::string describe(const char* head, std::size_t index, const char* label, double value) {
    std::ostringstream os;
    os.precision(17);
    os << head << " at index " << index << " (" << label << " " << value << ")";
    return os.str();
}
}  // namespace

NonPositiveCoupling::NonPositiveCoupling(std::size_t index, double value)
    : Error(describe("non-positive coupling", index, "value", value)), index_(index), value_(value) {}

NotConverged::NotConverged(std::size_t index, double residual)
    : Error(describe("eigensolver did not converge", index, "residual", residual)),
      index_(index),
      residual_(residual) {}

RealizationError::RealizationError(std::uint64_t seed, const std::string& what)
    : Error("realization with seed " + std::to_string(seed) + " failed: " + what), seed_(seed) {}

}  // namespace xychain
