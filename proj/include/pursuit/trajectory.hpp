#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "pursuit/config.hpp"
#include "pursuit/schedule.hpp"
#include "pursuit/vec2.hpp"

namespace pursuit {

struct TrajectoryRow {
    long step = 0;
    int agent = 0;  // 1-based
    Vec2 pos;
    double tau = 0.0;
    double theta = 0.0;
    double beta = 0.0;
};

/// Full per-step, per-agent record of one run plus the configuration that
/// produced it. Rows are step-major, agents ascending within a step.
struct TrajectoryLog {
    SimConfig config;
    std::vector<TrajectoryRow> rows;
};

namespace detail {

// Shortest round-trip decimal form; re-reading restores the exact bits.
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw ConfigError("csv: bad number: " + std::string(s));
    return v;
}

inline long parse_long(std::string_view s) {
    long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw ConfigError("csv: bad integer: " + std::string(s));
    return v;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline void write_config_header(std::ostream& out, const SimConfig& c) {
    out << "# version " << kVersion << "\n";
    out << "# agents " << c.agents << "\n";
    out << "# eta " << format_double(c.eta) << "\n";
    out << "# alpha " << format_double(c.alpha) << "\n";
    out << "# steps " << c.steps << "\n";
    out << "# method " << c.method << "\n";
    out << "# beta_method " << beta_schedule_tag(c.beta.method) << "\n";
    out << "# beta0 " << format_double(c.beta.beta0) << "\n";
    out << "# beta_delta " << format_double(c.beta.delta) << "\n";
    out << "# beta_window " << c.beta.window << "\n";
    out << "# beta_coeff " << format_double(c.beta.coeff) << "\n";
    out << "# shape " << c.shape << "\n";
    out << "# center " << format_double(c.center.x) << " " << format_double(c.center.y) << "\n";
    out << "# radius " << format_double(c.radius) << "\n";
    out << "# seed " << c.seed << "\n";
}

inline bool read_config_line(std::string_view line, SimConfig& c) {
    if (line.empty() || line[0] != '#') return false;
    std::istringstream in{std::string(line.substr(1))};
    std::string key;
    in >> key;
    std::string rest;
    std::getline(in, rest);
    const std::string value = trim(rest);
    if (key == "version") return true;
    if (key == "agents") c.agents = static_cast<int>(parse_long(value));
    else if (key == "eta") c.eta = parse_double(value);
    else if (key == "alpha") c.alpha = parse_double(value);
    else if (key == "steps") c.steps = parse_long(value);
    else if (key == "method") c.method = static_cast<int>(parse_long(value));
    else if (key == "beta_method") c.beta.method = beta_schedule_from_tag(value).method;
    else if (key == "beta0") c.beta.beta0 = parse_double(value);
    else if (key == "beta_delta") c.beta.delta = parse_double(value);
    else if (key == "beta_window") c.beta.window = parse_long(value);
    else if (key == "beta_coeff") c.beta.coeff = parse_double(value);
    else if (key == "shape") c.shape = value;
    else if (key == "center") {
        const auto parts = split(value, ' ');
        if (parts.size() != 2) throw ConfigError("csv: bad center line");
        c.center = {parse_double(parts[0]), parse_double(parts[1])};
    } else if (key == "radius") c.radius = parse_double(value);
    else if (key == "seed") {
        std::uint64_t v = 0;
        const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
        if (res.ec != std::errc{}) throw ConfigError("csv: bad seed");
        c.seed = v;
    } else throw ConfigError("csv: unknown config key '" + key + "'");
    return true;
}

}  // namespace detail

inline void write_trajectory_csv(const TrajectoryLog& log, std::ostream& out) {
    detail::write_config_header(out, log.config);
    out << "step,agent,x,y,tau,theta,beta\n";
    for (const auto& r : log.rows) {
        out << r.step << ',' << r.agent << ',' << detail::format_double(r.pos.x) << ','
            << detail::format_double(r.pos.y) << ',' << detail::format_double(r.tau) << ','
            << detail::format_double(r.theta) << ',' << detail::format_double(r.beta) << "\n";
    }
}

inline std::string trajectory_csv_string(const TrajectoryLog& log) {
    std::ostringstream out;
    write_trajectory_csv(log, out);
    return out.str();
}

inline TrajectoryLog read_trajectory_csv(std::istream& in) {
    TrajectoryLog log;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (detail::read_config_line(line, log.config)) continue;
        if (!header_seen) {
            if (line != "step,agent,x,y,tau,theta,beta")
                throw ConfigError("csv: unexpected column header: " + line);
            header_seen = true;
            continue;
        }
        const auto f = detail::split(line, ',');
        if (f.size() != 7) throw ConfigError("csv: expected 7 fields: " + line);
        TrajectoryRow r;
        r.step = detail::parse_long(f[0]);
        r.agent = static_cast<int>(detail::parse_long(f[1]));
        r.pos = {detail::parse_double(f[2]), detail::parse_double(f[3])};
        r.tau = detail::parse_double(f[4]);
        r.theta = detail::parse_double(f[5]);
        r.beta = detail::parse_double(f[6]);
        log.rows.push_back(r);
    }
    if (!header_seen) throw ConfigError("csv: missing trajectory header");
    return log;
}

inline void save_trajectory_csv(const TrajectoryLog& log, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    write_trajectory_csv(log, out);
}

inline TrajectoryLog load_trajectory_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open trajectory file: " + path);
    return read_trajectory_csv(in);
}

}  // namespace pursuit
