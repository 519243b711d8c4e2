#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pursuit/vec2.hpp"

namespace pursuit {

enum class CurveKind { fourier, polygon, heart };

/// Closed parametric curve gamma : [0,1) -> R^2 used as a desired shape.
///
/// Variants:
///  - fourier: truncated series with sin/cos harmonic pairs per axis,
///    coefficient m >= 1 multiplies sin(2*pi*j*t) for odd m and
///    cos(2*pi*j*t) for even m, with harmonic j = (m+1)/2; index 0 is the
///    constant term.
///  - polygon: vertices joined in order and closed back to the first;
///    parametrized proportionally to arc length (constant speed).
///  - heart: fixed analytic heart curve.
///
/// Immutable after construction, safe to share across threads.
class ClosedCurve {
public:
    static ClosedCurve fourier(std::vector<double> cx, std::vector<double> cy) {
        if (cx.size() != cy.size())
            throw std::invalid_argument("fourier: coefficient lists differ in length");
        if (cx.empty())
            throw std::invalid_argument("fourier: empty coefficient lists");
        ClosedCurve c;
        c.kind_ = CurveKind::fourier;
        c.cx_ = std::move(cx);
        c.cy_ = std::move(cy);
        return c;
    }

    static ClosedCurve polygon(std::vector<Vec2> vertices) {
        if (vertices.size() < 3)
            throw std::invalid_argument("polygon: need at least 3 vertices");
        ClosedCurve c;
        c.kind_ = CurveKind::polygon;
        c.vertices_ = std::move(vertices);
        c.build_polygon_table();
        return c;
    }

    static ClosedCurve heart() {
        ClosedCurve c;
        c.kind_ = CurveKind::heart;
        return c;
    }

    CurveKind kind() const { return kind_; }
    const std::vector<double>& fourier_cx() const { return cx_; }
    const std::vector<double>& fourier_cy() const { return cy_; }
    const std::vector<Vec2>& vertices() const { return vertices_; }

    /// gamma(t); t is wrapped into [0,1).
    Vec2 eval(double t) const {
        t = wrap_phase(t);
        switch (kind_) {
            case CurveKind::fourier: return fourier_eval(t);
            case CurveKind::polygon: return polygon_eval(t);
            case CurveKind::heart: return heart_eval(t);
        }
        return {};
    }

    /// d gamma / dt; for polygons, corners take the outgoing segment's
    /// constant velocity.
    Vec2 deriv(double t) const {
        t = wrap_phase(t);
        switch (kind_) {
            case CurveKind::fourier: return fourier_deriv(t);
            case CurveKind::polygon: return polygon_deriv(t);
            case CurveKind::heart: return heart_deriv(t);
        }
        return {};
    }

    /// Parameter values of polygon corners (empty for smooth variants).
    std::vector<double> corner_phases() const {
        if (kind_ != CurveKind::polygon) return {};
        return std::vector<double>(breaks_.begin(), breaks_.end() - 1);
    }

private:
    ClosedCurve() = default;

    Vec2 fourier_eval(double t) const {
        double x = cx_[0];
        double y = cy_[0];
        for (std::size_t m = 1; m < cx_.size(); ++m) {
            const double j = static_cast<double>((m + 1) / 2);
            const double arg = kTwoPi * j * t;
            const double basis = (m % 2 == 1) ? std::sin(arg) : std::cos(arg);
            x += cx_[m] * basis;
            y += cy_[m] * basis;
        }
        return {x, y};
    }

    Vec2 fourier_deriv(double t) const {
        double x = 0.0;
        double y = 0.0;
        for (std::size_t m = 1; m < cx_.size(); ++m) {
            const double j = static_cast<double>((m + 1) / 2);
            const double arg = kTwoPi * j * t;
            const double basis = (m % 2 == 1) ? kTwoPi * j * std::cos(arg)
                                              : -kTwoPi * j * std::sin(arg);
            x += cx_[m] * basis;
            y += cy_[m] * basis;
        }
        return {x, y};
    }

    Vec2 polygon_eval(double t) const {
        const std::size_t s = segment_index(t);
        const double local = (t - breaks_[s]) / (breaks_[s + 1] - breaks_[s]);
        const Vec2 a = vertices_[s];
        const Vec2 b = vertices_[(s + 1) % vertices_.size()];
        return a + (b - a) * local;
    }

    Vec2 polygon_deriv(double t) const {
        const std::size_t s = segment_index(t);
        const Vec2 a = vertices_[s];
        const Vec2 b = vertices_[(s + 1) % vertices_.size()];
        return (b - a) / (breaks_[s + 1] - breaks_[s]);
    }

    static Vec2 heart_eval(double t) {
        const double s1 = std::sin(kTwoPi * t);
        const double x = s1 * s1 * s1;
        const double u = std::cos(kTwoPi * t) - std::cos(2.0 * kTwoPi * t);
        const double w = 3.0 - std::cos(3.0 * kTwoPi * t) / 6.0;
        return {x, u / w};
    }

    static Vec2 heart_deriv(double t) {
        const double s1 = std::sin(kTwoPi * t);
        const double c1 = std::cos(kTwoPi * t);
        const double dx = 3.0 * s1 * s1 * c1 * kTwoPi;
        const double u = c1 - std::cos(2.0 * kTwoPi * t);
        const double du = -kTwoPi * s1 + 2.0 * kTwoPi * std::sin(2.0 * kTwoPi * t);
        const double w = 3.0 - std::cos(3.0 * kTwoPi * t) / 6.0;
        const double dw = kPi * std::sin(3.0 * kTwoPi * t);
        return {dx, (du * w - u * dw) / (w * w)};
    }

    void build_polygon_table() {
        const std::size_t n = vertices_.size();
        std::vector<double> lengths(n);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            lengths[i] = dist(vertices_[i], vertices_[(i + 1) % n]);
            if (lengths[i] <= 0.0)
                throw std::invalid_argument("polygon: zero-length segment");
            total += lengths[i];
        }
        breaks_.resize(n + 1);
        breaks_[0] = 0.0;
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += lengths[i];
            breaks_[i + 1] = acc / total;
        }
        breaks_[n] = 1.0;
    }

    // Segment covering t, with each segment owning [breaks[s], breaks[s+1]).
    std::size_t segment_index(double t) const {
        auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
        std::size_t s = static_cast<std::size_t>(it - breaks_.begin()) - 1;
        return std::min(s, vertices_.size() - 1);
    }

    CurveKind kind_ = CurveKind::heart;
    std::vector<double> cx_, cy_;
    std::vector<Vec2> vertices_;
    std::vector<double> breaks_;
};

/// gamma evaluated at each offset, in order.
inline std::vector<Vec2> curve_sample(const ClosedCurve& curve, std::span<const double> offsets) {
    if (offsets.empty()) throw std::invalid_argument("curve_sample: empty offsets");
    std::vector<Vec2> out;
    out.reserve(offsets.size());
    for (double t : offsets) out.push_back(curve.eval(t));
    return out;
}

/// Largest pairwise distance over a uniform sampling of the curve.
inline double curve_diameter(const ClosedCurve& curve, int samples = 256) {
    std::vector<Vec2> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i)
        pts.push_back(curve.eval(static_cast<double>(i) / samples));
    double best = 0.0;
    for (int i = 0; i < samples; ++i)
        for (int j = i + 1; j < samples; ++j)
            best = std::max(best, dist2(pts[i], pts[j]));
    return std::sqrt(best);
}

namespace detail {

struct FourierTable {
    const char* name;
    double cx[7];
    double cy[7];
};

// Coefficient columns for the five stock series shapes.
inline constexpr FourierTable kSeriesShapes[5] = {
    {"shape1", {0, 1, 0.76, 0.42, 0.26, 0.51, 0.40}, {0, 0.30, 1, 0.58, 0.45, 0.50, 0.91}},
    {"shape2", {0, 1, 0.85, 0.76, 0.26, 0.50, 0.45}, {0, 0.79, 1, 0.03, 0.94, 0.43, 0.84}},
    {"shape3", {0, 1, 0.95, 0.06, 0.08, 0.84, 0.74}, {0, 0.31, 1, 0.61, 0.61, 0.16, 0.58}},
    {"shape4", {0, 1, 0.54, 0.37, 0.60, 0.63, 0.07}, {0, 0.84, 1, 0.23, 0.26, 0.47, 0.99}},
    {"shape5", {0, 1, 0.10, 0.40, 0.15, 0.07, 0.40}, {0, 0.80, 1, 0.22, 0.77, 0.28, 0.54}},
};

}  // namespace detail

/// Stock shapes: "square", "star", "heart", and "shape1".."shape5".
inline ClosedCurve make_named_shape(std::string_view name) {
    if (name == "square") {
        return ClosedCurve::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    }
    if (name == "star") {
        auto v = [](double a) { return Vec2{std::cos(a), std::sin(a)}; };
        return ClosedCurve::polygon({v(9 * kPi / 10), v(kPi / 10), v(13 * kPi / 10),
                                     v(kPi / 2), v(17 * kPi / 10)});
    }
    if (name == "heart") {
        return ClosedCurve::heart();
    }
    for (const auto& row : detail::kSeriesShapes) {
        if (name == row.name) {
            return ClosedCurve::fourier(std::vector<double>(row.cx, row.cx + 7),
                                        std::vector<double>(row.cy, row.cy + 7));
        }
    }
    throw std::invalid_argument("unknown shape name: " + std::string(name));
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::string cleaned;
    for (char ch : text)
        cleaned += (ch == '[' || ch == ']' || ch == ',') ? ' ' : ch;
    std::istringstream in(cleaned);
    double v;
    while (in >> v) out.push_back(v);
    return out;
}

}  // namespace detail

/// Parse a shape spec ("kind = fourier|polygon|heart" plus "cx"/"cy" lists
/// or a "vertices" list of [x,y] pairs). Lines starting with '#' are
/// comments.
inline ClosedCurve parse_shape_spec(const std::string& text) {
    std::string kind;
    std::vector<double> cx, cy, flat_vertices;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key == "kind") kind = value;
        else if (key == "cx") cx = detail::parse_number_list(value);
        else if (key == "cy") cy = detail::parse_number_list(value);
        else if (key == "vertices") flat_vertices = detail::parse_number_list(value);
        else throw std::invalid_argument("shape spec: unknown key '" + key + "'");
    }
    if (kind == "fourier") return ClosedCurve::fourier(std::move(cx), std::move(cy));
    if (kind == "heart") return ClosedCurve::heart();
    if (kind == "polygon") {
        if (flat_vertices.size() % 2 != 0)
            throw std::invalid_argument("shape spec: vertices need x,y pairs");
        std::vector<Vec2> verts;
        for (std::size_t i = 0; i < flat_vertices.size(); i += 2)
            verts.push_back({flat_vertices[i], flat_vertices[i + 1]});
        return ClosedCurve::polygon(std::move(verts));
    }
    throw std::invalid_argument("shape spec: missing or unknown kind '" + kind + "'");
}

inline ClosedCurve load_shape_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open shape file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_shape_spec(buf.str());
}

}  // namespace pursuit
