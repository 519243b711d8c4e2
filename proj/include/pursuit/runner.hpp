#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <future>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pursuit/config.hpp"
#include "pursuit/dynamics.hpp"
#include "pursuit/metric.hpp"
#include "pursuit/trajectory.hpp"

namespace pursuit {

/// GA stream for period s of a run seeded with `master`.
inline std::uint64_t ga_seed_for_period(std::uint64_t master, int period) {
    return derive_seed(derive_seed(master, kEvalStream), static_cast<std::uint64_t>(period));
}

/// Run one simulation to completion and return the full log. Deterministic:
/// the same config (seed included) reproduces the log byte for byte.
inline TrajectoryLog run_simulation(const SimConfig& config) {
    validate(config);
    const ClosedCurve curve = resolve_shape(config.shape);
    Rng rng(derive_seed(config.seed, kSimStream));
    World world = init_placement(config.agents, config.center, config.radius, rng,
                                 config.method == 2);
    TrajectoryLog log;
    log.config = config;
    log.rows.reserve(static_cast<std::size_t>(config.steps) * config.agents);

    const int n = config.agents;
    std::vector<Vec2> pos_snap(n);
    std::vector<double> tau_snap(n);
    for (long k = 0; k < config.steps; ++k) {
        for (int i = 0; i < n; ++i) {
            pos_snap[i] = world.agents[i].pos;
            tau_snap[i] = world.agents[i].tau;
        }
        if (config.method == 1)
            step_method1(world, curve, config.eta, config.alpha);
        else
            step_method2(world, curve, config.eta, config.alpha, config.beta, rng);
        for (int i = 0; i < n; ++i) {
            const AgentState& a = world.agents[i];
            if (!std::isfinite(a.pos.x) || !std::isfinite(a.pos.y))
                throw NumericError("non-finite agent position at step " + std::to_string(k));
            // theta/beta reflect what step k actually used; pos/tau are the
            // step-k state captured before the move.
            log.rows.push_back({k, i + 1, pos_snap[i], tau_snap[i], a.theta, a.last_beta});
        }
    }
    return log;
}

struct MetricPoint {
    int period = 0;  // 1-based
    double d = 0.0;
    SimilarityTransform transform;
};

inline long period_length(double eta) {
    const long len = std::lround(1.0 / eta);
    return len >= 1 ? len : 1;
}

namespace detail {

inline MetricPoint evaluate_period(const TrajectoryLog& log, const ClosedCurve& curve,
                                   const GaParams& ga, std::uint64_t master_seed, int period) {
    const int n = log.config.agents;
    const long len = period_length(log.config.eta);
    const long first_step = static_cast<long>(period - 1) * len;
    std::vector<Polyline> trajectories(n, Polyline(len));
    std::vector<std::vector<double>> taus(n, std::vector<double>(len));
    for (long k = 0; k < len; ++k) {
        const std::size_t base = static_cast<std::size_t>(first_step + k) * n;
        for (int i = 0; i < n; ++i) {
            const TrajectoryRow& row = log.rows[base + i];
            trajectories[i][k] = row.pos;
            taus[i][k] = row.tau;
        }
    }
    const MetricResult res =
        metric_d(trajectories, curve, taus, ga, ga_seed_for_period(master_seed, period));
    return {period, res.distance, res.transform};
}

}  // namespace detail

/// Per-period metric series for a completed run. Periods are evaluated
/// concurrently; each gets its own GA stream so results do not depend on
/// scheduling.
inline std::vector<MetricPoint> evaluate_run(const TrajectoryLog& log, const ClosedCurve& curve,
                                             const GaParams& ga = {},
                                             std::uint64_t seed = 0) {
    const int n = log.config.agents;
    if (n < 1 || log.rows.size() % n != 0)
        throw ConfigError("evaluate: log row count is not a multiple of the agent count");
    const long steps = static_cast<long>(log.rows.size()) / n;
    const long len = period_length(log.config.eta);
    const int periods = static_cast<int>(steps / len);
    if (periods < 1) throw ConfigError("evaluate: run shorter than one period");

    std::vector<std::future<MetricPoint>> jobs;
    jobs.reserve(periods);
    for (int s = 1; s <= periods; ++s)
        jobs.push_back(std::async(std::launch::async, [&, s] {
            return detail::evaluate_period(log, curve, ga, seed, s);
        }));
    std::vector<MetricPoint> series;
    series.reserve(periods);
    for (auto& job : jobs) series.push_back(job.get());
    return series;
}

inline void write_metrics_csv(const std::vector<MetricPoint>& series, const SimConfig& config,
                              std::ostream& out) {
    detail::write_config_header(out, config);
    out << "period,d,e,theta,xt,yt\n";
    for (const auto& p : series) {
        out << p.period << ',' << detail::format_double(p.d) << ','
            << detail::format_double(p.transform.scale) << ','
            << detail::format_double(p.transform.rotation) << ','
            << detail::format_double(p.transform.translation.x) << ','
            << detail::format_double(p.transform.translation.y) << "\n";
    }
}

enum class SweepAxis { agents, alpha, shape, beta_method };

inline SweepAxis sweep_axis_from_tag(const std::string& tag) {
    if (tag == "N") return SweepAxis::agents;
    if (tag == "alpha") return SweepAxis::alpha;
    if (tag == "shape") return SweepAxis::shape;
    if (tag == "beta-method") return SweepAxis::beta_method;
    throw ConfigError("sweep: unknown axis '" + tag + "'");
}

inline std::string sweep_axis_tag(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::agents: return "N";
        case SweepAxis::alpha: return "alpha";
        case SweepAxis::shape: return "shape";
        case SweepAxis::beta_method: return "beta-method";
    }
    return "N";
}

inline SimConfig apply_axis_value(SimConfig config, SweepAxis axis, const std::string& value) {
    try {
        switch (axis) {
            case SweepAxis::agents: config.agents = std::stoi(value); break;
            case SweepAxis::alpha: config.alpha = std::stod(value); break;
            case SweepAxis::shape: config.shape = value; break;
            case SweepAxis::beta_method: config.beta = beta_schedule_from_tag(value); break;
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError("sweep: bad value '" + value + "': " + e.what());
    }
    return config;
}

struct SweepCell {
    std::string value;
    std::uint64_t seed = 0;
    double d_final = 0.0;
    bool failed = false;
    std::string error;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::agents;
    std::vector<SweepCell> cells;                      // one per (value, seed)
    std::vector<std::pair<std::string, double>> means;  // per value, over seeds
};

/// Final-period metric of one run; identical to the last entry of
/// evaluate_run on the same config, by construction of the GA stream.
inline double final_period_metric(const SimConfig& config, const GaParams& ga = {}) {
    const TrajectoryLog log = run_simulation(config);
    const ClosedCurve curve = resolve_shape(config.shape);
    const long len = period_length(config.eta);
    const int periods = static_cast<int>(config.steps / len);
    if (periods < 1) throw ConfigError("sweep: run shorter than one period");
    return detail::evaluate_period(log, curve, ga, config.seed, periods).d;
}

/// Cross product of axis values and seeds; cells run concurrently. Failed
/// cells are recorded, not fatal.
inline SweepResult sweep(const SimConfig& base, SweepAxis axis,
                         const std::vector<std::string>& values,
                         const std::vector<std::uint64_t>& seeds, const GaParams& ga = {}) {
    if (values.empty() || seeds.empty()) throw ConfigError("sweep: need values and seeds");
    SweepResult result;
    result.axis = axis;

    std::vector<std::future<SweepCell>> jobs;
    for (const auto& value : values) {
        for (std::uint64_t seed : seeds) {
            jobs.push_back(std::async(std::launch::async, [&, value, seed] {
                SweepCell cell{value, seed, 0.0, false, {}};
                try {
                    SimConfig config = apply_axis_value(base, axis, value);
                    config.seed = seed;
                    cell.d_final = final_period_metric(config, ga);
                } catch (const std::exception& e) {
                    cell.failed = true;
                    cell.error = e.what();
                }
                return cell;
            }));
        }
    }
    for (auto& job : jobs) result.cells.push_back(job.get());

    for (const auto& value : values) {
        double sum = 0.0;
        int count = 0;
        for (const auto& cell : result.cells) {
            if (cell.value == value && !cell.failed) {
                sum += cell.d_final;
                ++count;
            }
        }
        if (count > 0) result.means.emplace_back(value, sum / count);
    }
    return result;
}

inline void write_sweep_csv(const SweepResult& result, const SimConfig& base, std::ostream& out) {
    detail::write_config_header(out, base);
    out << "axis,value,seed,d_final\n";
    const std::string axis = sweep_axis_tag(result.axis);
    for (const auto& cell : result.cells) {
        out << axis << ',' << cell.value << ',' << cell.seed << ',';
        if (cell.failed)
            out << "error:" << cell.error;
        else
            out << detail::format_double(cell.d_final);
        out << "\n";
    }
    for (const auto& [value, mean] : result.means)
        out << axis << ',' << value << ",mean," << detail::format_double(mean) << "\n";
}

}  // namespace pursuit
