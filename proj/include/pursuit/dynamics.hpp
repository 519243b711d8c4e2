#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pursuit/curve.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/schedule.hpp"
#include "pursuit/vec2.hpp"

namespace pursuit {

// Below this magnitude a displacement (or curve velocity) carries no usable
// direction and frame estimation is skipped for the step.
inline constexpr double kDirectionEps = 1e-9;

struct AgentState {
    Vec2 pos;                       // x_i, world frame
    double tau = 0.0;               // phase on the curve, [0,1)
    double theta = 0.0;             // local-frame rotation, [0,2*pi); fixed 0 in method 1
    double phi0 = 0.0;              // initial orientation on the starting circle
    Vec2 prev_pred_rel;             // predecessor relative position observed last step
    Vec2 last_disp;                 // own movement over the last step
    bool has_prev = false;          // false until one transition has been observed
    double last_beta = 0.0;         // alignment probability used this step (logging)
    double last_achievement = 0.0;  // latest A_i; carried over when estimation is undefined
    bool has_achievement = false;
};

struct World {
    std::vector<AgentState> agents;
    long step = 0;

    int size() const { return static_cast<int>(agents.size()); }
};

/// Predecessor index in the pursuit ring, 1-based: i+1, wrapping N -> 1.
inline int next_index(int i, int n_agents) {
    if (i < 1 || i > n_agents) throw std::out_of_range("next_index: agent index out of range");
    return i < n_agents ? i + 1 : 1;
}

/// Agents evenly spaced on a circle; tau seeded from the initial
/// orientation so consecutive phases differ by exactly 1/N. Frame angles
/// are drawn uniformly from [0,2*pi) when `random_theta` is set (method 2).
inline World init_placement(int n_agents, Vec2 center, double radius, Rng& rng,
                            bool random_theta) {
    if (n_agents < 3) throw std::invalid_argument("init_placement: need at least 3 agents");
    if (!(radius > 0.0)) throw std::invalid_argument("init_placement: radius must be positive");
    World world;
    world.agents.resize(n_agents);
    for (int i = 0; i < n_agents; ++i) {
        AgentState& a = world.agents[i];
        const double psi = kTwoPi * static_cast<double>(i) / n_agents;
        a.pos = center + Vec2{radius * std::cos(psi), radius * std::sin(psi)};
        a.phi0 = psi;
        a.tau = psi / kTwoPi;
        a.theta = random_theta ? rng.uniform(0.0, kTwoPi) : 0.0;
    }
    return world;
}

inline World init_placement(int n_agents, Vec2 center, double radius, std::uint64_t seed,
                            bool random_theta = false) {
    Rng rng(seed);
    return init_placement(n_agents, center, radius, rng, random_theta);
}

/// Advance a phase by eta, wrapping at 1.
inline double tau_step(double tau, double eta) {
    const double next = tau + eta;
    return next < 1.0 ? next : next - 1.0;
}

/// Phase of the predecessor, offset by the fixed spacing 1/N.
inline double predecessor_tau(double tau, int n_agents) {
    const double next = tau + 1.0 / n_agents;
    return next < 1.0 ? next : next - 1.0;
}

/// Shape-tracing movement vector: the curve velocity at tau, seen through a
/// frame rotated by theta, scaled by eta so one period of 1/eta steps walks
/// the curve once at its own scale.
inline Vec2 v_shape(const ClosedCurve& curve, double tau, double theta, double eta) {
    return rotate(curve.deriv(tau), theta) * eta;
}

/// Number of past shape steps separating an agent from its predecessor.
inline int backtrack_count(int n_agents, double eta) {
    return static_cast<int>(std::floor(1.0 / (n_agents * eta)));
}

/// Ideal position: the predecessor's observed position walked backwards
/// along the shape by the spacing-equivalent number of steps. `pred_rel`
/// is the observed relative position of the predecessor; theta is the
/// caller's own frame angle (0 in method 1).
inline Vec2 ideal_position(Vec2 pos, Vec2 pred_rel, const ClosedCurve& curve, double tau,
                           int n_agents, double eta, double theta) {
    Vec2 ideal = pos + pred_rel;
    const double spacing = 1.0 / n_agents;
    const int count = backtrack_count(n_agents, eta);
    for (int l = 1; l <= count; ++l)
        ideal -= v_shape(curve, wrap_phase(tau + spacing - l * eta), theta);
    return ideal;
}

/// Coordination vector pulling toward the ideal position.
inline Vec2 v_align(Vec2 ideal, Vec2 pos, double alpha) {
    return (ideal - pos) * alpha;
}

/// Frame angle that rotates the curve velocity at tau_pred onto the
/// observed displacement direction. Undefined (nullopt) when either vector
/// is too short to carry a direction.
inline std::optional<double> estimate_pred_theta(Vec2 observed_disp, const ClosedCurve& curve,
                                                 double tau_pred) {
    const Vec2 ref = curve.deriv(tau_pred);
    if (norm(observed_disp) <= kDirectionEps || norm(ref) <= kDirectionEps)
        return std::nullopt;
    return wrap_angle(angle_of(observed_disp) - angle_of(ref));
}

/// Angular distance between own frame and the estimated predecessor frame,
/// wrapped into [0, pi].
inline double achievement(double theta_own, double theta_est) {
    double d = std::abs(theta_own - theta_est);
    if (d > kPi) d = kTwoPi - d;
    return d;
}

namespace detail {

// Movement common to both methods: every agent's move is computed from the
// step-k snapshot, then all moves are applied together.
inline void apply_moves(World& world, const ClosedCurve& curve, double eta, double alpha,
                        const std::vector<Vec2>& pred_rel) {
    const int n = world.size();
    std::vector<Vec2> move(n);
    for (int i = 0; i < n; ++i) {
        const AgentState& a = world.agents[i];
        const Vec2 ideal =
            ideal_position(a.pos, pred_rel[i], curve, a.tau, n, eta, a.theta);
        move[i] = v_shape(curve, a.tau, a.theta, eta) + v_align(ideal, a.pos, alpha);
    }
    for (int i = 0; i < n; ++i) {
        AgentState& a = world.agents[i];
        a.pos += move[i];
        a.prev_pred_rel = pred_rel[i];
        a.last_disp = move[i];
        a.has_prev = true;
        a.tau = tau_step(a.tau, eta);
    }
    world.step += 1;
}

inline std::vector<Vec2> predecessor_offsets(const World& world) {
    const int n = world.size();
    std::vector<Vec2> rel(n);
    for (int i = 0; i < n; ++i)
        rel[i] = world.agents[(i + 1) % n].pos - world.agents[i].pos;
    return rel;
}

}  // namespace detail

/// One synchronous step of the shared-frame movement law.
inline void step_method1(World& world, const ClosedCurve& curve, double eta, double alpha) {
    const auto rel = detail::predecessor_offsets(world);
    for (auto& a : world.agents) a.last_beta = 0.0;
    detail::apply_moves(world, curve, eta, alpha, rel);
}

/// One synchronous step of the local-frame movement law. Before moving,
/// each agent estimates the predecessor's frame angle from the displacement
/// observed over the previous transition (evaluated at the phase that
/// produced it) and snaps its own frame to the estimate with probability
/// beta. One uniform draw is consumed per agent per step, in agent order.
inline void step_method2(World& world, const ClosedCurve& curve, double eta, double alpha,
                         const BetaSchedule& schedule, Rng& rng) {
    const int n = world.size();
    const auto rel = detail::predecessor_offsets(world);
    for (int i = 0; i < n; ++i) {
        AgentState& a = world.agents[i];
        std::optional<double> est;
        if (a.has_prev) {
            // x_{n(i)}(k) - x_{n(i)}(k-1), reconstructed from the two
            // relative observations and the agent's own last move.
            const Vec2 disp = rel[i] - a.prev_pred_rel + a.last_disp;
            const double tau_gen = wrap_phase(predecessor_tau(a.tau, n) - eta);
            est = estimate_pred_theta(disp, curve, tau_gen);
            if (est) {
                a.last_achievement = achievement(a.theta, *est);
                a.has_achievement = true;
            }
        }
        a.last_beta = beta_value(schedule, world.step,
                                 a.has_achievement ? std::optional<double>(a.last_achievement)
                                                   : std::nullopt);
        const double u = rng.uniform01();
        if (est && u < a.last_beta) a.theta = *est;
    }
    detail::apply_moves(world, curve, eta, alpha, rel);
}

}  // namespace pursuit
