#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pursuit/curve.hpp"
#include "pursuit/schedule.hpp"
#include "pursuit/vec2.hpp"

namespace pursuit {

inline constexpr std::string_view kVersion = "0.1.0";

/// Invalid configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numeric breakdown during a run (CLI exit code 3).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimConfig {
    int agents = 3;
    double eta = 0.01;
    double alpha = 0.01;
    long steps = 1000;
    int method = 1;
    BetaSchedule beta = BetaSchedule::constant();
    std::string shape = "name:shape1";
    Vec2 center{0.0, 0.0};
    double radius = 15.0;
    std::uint64_t seed = 0;
};

inline void validate(const SimConfig& c) {
    if (c.agents < 3) throw ConfigError("config: agents must be >= 3");
    if (!(c.eta > 0.0 && c.eta < 1.0)) throw ConfigError("config: eta must be in (0,1)");
    if (!(c.alpha > 0.0)) throw ConfigError("config: alpha must be > 0");
    if (c.steps < 1) throw ConfigError("config: steps must be >= 1");
    if (c.method != 1 && c.method != 2) throw ConfigError("config: method must be 1 or 2");
    if (!(c.radius > 0.0)) throw ConfigError("config: radius must be > 0");
}

/// Resolve "name:<id>", "file:<path>", or a bare stock-shape name.
inline ClosedCurve resolve_shape(const std::string& spec) {
    try {
        if (spec.rfind("name:", 0) == 0) return make_named_shape(spec.substr(5));
        if (spec.rfind("file:", 0) == 0) return load_shape_file(spec.substr(5));
        return make_named_shape(spec);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("shape: ") + e.what());
    }
}

}  // namespace pursuit
