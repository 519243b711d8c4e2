#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pursuit/vec2.hpp"

namespace pursuit {

enum class BetaMethod { constant, time_decrease, time_increase, achievement_decrease, achievement_increase };

/// Per-step alignment probability strategy. Emitted values are always
/// clamped to [0, 1].
struct BetaSchedule {
    BetaMethod method = BetaMethod::constant;
    double beta0 = 0.1;    // constant value, time-series start, or pre-estimate fallback
    double delta = 0.01;   // per-window increment for the time variants
    long window = 100;     // steps per window
    double coeff = 0.1;    // c_d or c_i for the achievement variants

    static BetaSchedule constant(double b0 = 0.1) {
        return {BetaMethod::constant, b0, 0.0, 1, 0.0};
    }
    static BetaSchedule time_decrease(double b0 = 0.1, double d = 0.01, long w = 100) {
        return {BetaMethod::time_decrease, b0, d, w, 0.0};
    }
    static BetaSchedule time_increase(double b0 = 0.1, double d = 0.01, long w = 100) {
        return {BetaMethod::time_increase, b0, d, w, 0.0};
    }
    static BetaSchedule achievement_decrease(double c = 1.0 / (10.0 * kPi), double b0 = 0.01) {
        return {BetaMethod::achievement_decrease, b0, 0.0, 1, c};
    }
    static BetaSchedule achievement_increase(double c = 0.01 * kPi, double b0 = 0.1) {
        return {BetaMethod::achievement_increase, b0, 0.0, 1, c};
    }
};

/// Alignment probability at step k. `achievement` is the latest A_i when
/// one exists; the achievement variants fall back to beta0 before the
/// first estimate.
inline double beta_value(const BetaSchedule& s, long k, std::optional<double> achievement = {}) {
    if (k < 0) throw std::invalid_argument("beta_value: negative step");
    if (achievement && *achievement < 0.0)
        throw std::invalid_argument("beta_value: negative achievement rate");
    const auto clamp01 = [](double b) { return std::clamp(b, 0.0, 1.0); };
    switch (s.method) {
        case BetaMethod::constant:
            return clamp01(s.beta0);
        case BetaMethod::time_decrease:
            return clamp01(s.beta0 - s.delta * static_cast<double>(k / s.window));
        case BetaMethod::time_increase:
            return clamp01(s.beta0 + s.delta * static_cast<double>(k / s.window));
        case BetaMethod::achievement_decrease:
            if (!achievement) return clamp01(s.beta0);
            return clamp01(s.coeff * *achievement);
        case BetaMethod::achievement_increase:
            if (!achievement) return clamp01(s.beta0);
            if (*achievement == 0.0) return 1.0;
            return clamp01(s.coeff / *achievement);
    }
    return 0.0;
}

/// CLI tags: constant, td, ti, ad, ai.
inline BetaSchedule beta_schedule_from_tag(std::string_view tag) {
    if (tag == "constant") return BetaSchedule::constant();
    if (tag == "td") return BetaSchedule::time_decrease();
    if (tag == "ti") return BetaSchedule::time_increase();
    if (tag == "ad") return BetaSchedule::achievement_decrease();
    if (tag == "ai") return BetaSchedule::achievement_increase();
    throw std::invalid_argument("unknown beta method: " + std::string(tag));
}

inline std::string beta_schedule_tag(BetaMethod m) {
    switch (m) {
        case BetaMethod::constant: return "constant";
        case BetaMethod::time_decrease: return "td";
        case BetaMethod::time_increase: return "ti";
        case BetaMethod::achievement_decrease: return "ad";
        case BetaMethod::achievement_increase: return "ai";
    }
    return "constant";
}

}  // namespace pursuit
