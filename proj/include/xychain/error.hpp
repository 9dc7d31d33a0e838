#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace xychain {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateSequence : public Error {
public:
    DegenerateSequence() : Error("degenerate sequence") {}
};

class NonPositiveCoupling : public Error {
public:
    NonPositiveCoupling(std::size_t index, double value);
    std::size_t index() const noexcept { return index_; }
    double value() const noexcept { return value_; }

private:
    std::size_t index_;
    double value_;
};

class NotConverged : public Error {
public:
    NotConverged(std::size_t index, double residual);
    std::size_t index() const noexcept { return index_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t index_;
    double residual_;
};

class ResonantMode : public Error {
public:
    ResonantMode() : Error("resonant mode: use three_level") {}
};

class ReceiverDecoupled : public Error {
public:
    ReceiverDecoupled() : Error("receiver decoupled from mode") {}
};

/// A realization inside an ensemble sweep failed; carries the seed that
/// reproduces it.
class RealizationError : public Error {
public:
    RealizationError(std::uint64_t seed, const std::string& what);
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace xychain
