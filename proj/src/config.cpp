#include "xychain/config.hpp"

#include <fstream>

namespace xychain {

ConfigError::ConfigError(std::string field, const std::string& message)
    : Error("invalid config field '" + field + "': " + message), field_(std::move(field)) {}

namespace {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw ConfigError(key, "missing");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(key, e.what());
    }
}

template <typename T>
void optional_field(const json& j, const char* key, T& target) {
    if (!j.contains(key) || j.at(key).is_null()) return;
    target = field<T>(j, key);
}

std::vector<double> grid_field(const json& j, const char* key) {
    const json& v = j.at(key);
    if (v.is_array()) return field<std::vector<double>>(j, key);
    if (v.is_object()) {
        try {
            return make_grid(field<double>(v, "start"), field<double>(v, "stop"), field<double>(v, "step"));
        } catch (const Error& e) {
            throw ConfigError(key, e.what());
        }
    }
    throw ConfigError(key, "expected an array or {start, stop, step}");
}

void require_object(const json& j) {
    if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
}

}  // namespace

json to_json(const ChannelSpec& spec) {
    return {{"n_sites", spec.n_sites}, {"onsite", spec.onsite}, {"couplings", spec.couplings}};
}

json to_json(const SystemSpec& spec) {
    json j = to_json(spec.channel);
    j["omega_s"] = spec.omega_s;
    j["omega_r"] = spec.omega_r;
    j["g_s"] = spec.g_s;
    j["g_r"] = spec.g_r;
    return j;
}

ChannelSpec channel_from_json(const json& j) {
    require_object(j);
    ChannelSpec spec;
    spec.n_sites = field<std::size_t>(j, "n_sites");
    if (spec.n_sites == 0) throw ConfigError("n_sites", "must be positive");
    // onsite/couplings default to a clean chain when omitted
    spec.onsite.assign(spec.n_sites, 0.0);
    spec.couplings.assign(spec.n_sites - 1, 1.0);
    optional_field(j, "onsite", spec.onsite);
    optional_field(j, "couplings", spec.couplings);
    if (spec.onsite.size() != spec.n_sites) throw ConfigError("onsite", "length must equal n_sites");
    if (spec.couplings.size() != spec.n_sites - 1)
        throw ConfigError("couplings", "length must equal n_sites - 1");
    for (double c : spec.couplings)
        if (c == 0.0) throw ConfigError("couplings", "entries must be nonzero");
    return spec;
}

SystemSpec system_from_json(const json& j) {
    SystemSpec spec;
    spec.channel = channel_from_json(j);
    optional_field(j, "omega_s", spec.omega_s);
    optional_field(j, "omega_r", spec.omega_r);
    optional_field(j, "g_s", spec.g_s);
    optional_field(j, "g_r", spec.g_r);
    if (!(spec.g_s > 0.0)) throw ConfigError("g_s", "must be positive");
    if (!(spec.g_r > 0.0)) throw ConfigError("g_r", "must be positive");
    return spec;
}

json to_json(const SweepConfig& c) {
    json j = {
        {"disorder_kind", to_string(c.disorder_kind)},
        {"regime", to_string(c.regime)},
        {"n_sites", c.n_sites},
        {"alpha", c.alpha},
        {"omega", c.omega},
        {"realizations", c.realizations},
        {"base_seed", c.base_seed},
        {"g_s", c.g_s},
        {"g_r", c.g_r},
        {"omega_s", c.omega_s},
        {"omega_r", c.omega_r},
        {"coupling_shift", c.coupling_shift},
        {"coupling_redraws", c.coupling_redraws},
        {"mode_target", c.mode_target},
        {"threads", c.threads},
    };
    j["resonance_threshold"] = c.resonance_threshold ? json(*c.resonance_threshold) : json(nullptr);
    return j;
}

SweepConfig sweep_from_json(const json& j) {
    require_object(j);
    static const char* known[] = {"disorder_kind", "regime", "n_sites", "alpha", "omega",
                                  "realizations", "base_seed", "g_s", "g_r", "omega_s",
                                  "omega_r", "coupling_shift", "coupling_redraws", "mode_target",
                                  "resonance_threshold", "threads", "comment"};
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError(key, "unknown key");
    }

    SweepConfig c;
    if (j.contains("disorder_kind")) {
        try {
            c.disorder_kind = disorder_kind_from_string(field<std::string>(j, "disorder_kind"));
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            throw ConfigError("disorder_kind", e.what());
        }
    }
    if (j.contains("regime")) {
        try {
            c.regime = regime_from_string(field<std::string>(j, "regime"));
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            throw ConfigError("regime", e.what());
        }
    }
    optional_field(j, "n_sites", c.n_sites);
    if (j.contains("alpha")) c.alpha = grid_field(j, "alpha");
    if (j.contains("omega")) c.omega = grid_field(j, "omega");
    optional_field(j, "realizations", c.realizations);
    optional_field(j, "base_seed", c.base_seed);
    optional_field(j, "g_s", c.g_s);
    optional_field(j, "g_r", c.g_r);
    optional_field(j, "omega_s", c.omega_s);
    optional_field(j, "omega_r", c.omega_r);
    optional_field(j, "coupling_shift", c.coupling_shift);
    optional_field(j, "coupling_redraws", c.coupling_redraws);
    optional_field(j, "mode_target", c.mode_target);
    optional_field(j, "threads", c.threads);
    if (j.contains("resonance_threshold") && !j.at("resonance_threshold").is_null())
        c.resonance_threshold = field<double>(j, "resonance_threshold");

    if (c.n_sites.empty()) throw ConfigError("n_sites", "must not be empty");
    const std::size_t min_sites = c.disorder_kind == DisorderKind::Coupling ? 3 : 2;
    for (auto n : c.n_sites)
        if (n < min_sites) throw ConfigError("n_sites", "entries must be >= " + std::to_string(min_sites));
    if (c.alpha.empty()) throw ConfigError("alpha", "must not be empty");
    for (double a : c.alpha)
        if (!(a >= 0.0)) throw ConfigError("alpha", "values must be >= 0");
    if (c.realizations < 1) throw ConfigError("realizations", "must be >= 1");
    if (!(c.g_s > 0.0)) throw ConfigError("g_s", "must be positive");
    if (!(c.g_r > 0.0)) throw ConfigError("g_r", "must be positive");
    if (c.resonance_threshold && !(*c.resonance_threshold >= 0.0))
        throw ConfigError("resonance_threshold", "must be >= 0");
    return c;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("--config", "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("--config", std::string("parse error: ") + e.what());
    }
}

}  // namespace xychain
