#pragma once

#include <string>

#include "json.hpp"

#include "xychain/ensemble.hpp"
#include "xychain/error.hpp"
#include "xychain/lattice.hpp"

namespace xychain {

/// Invalid configuration; field() names the offending key.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

using nlohmann::json;

// Keys: n_sites, onsite, couplings (+ omega_s, omega_r, g_s, g_r for SystemSpec).
json to_json(const ChannelSpec& spec);
json to_json(const SystemSpec& spec);
ChannelSpec channel_from_json(const json& j);
SystemSpec system_from_json(const json& j);

/// Keys mirror SweepConfig. "alpha" and "omega" accept either an array or
/// an object {"start", "stop", "step"}. Missing keys keep their defaults.
json to_json(const SweepConfig& config);
SweepConfig sweep_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace xychain
