#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "pursuit/vec2.hpp"

namespace pursuit {

using Polyline = std::vector<Vec2>;

/// Circle metric on phases in [0,1): min(|x-y|, 1-|x-y|), range [0, 0.5].
inline double wrap_dist(double x, double y) {
    const double d = std::abs(x - y);
    return std::min(d, 1.0 - d);
}

/// Discrete Frechet distance between two polylines under the Euclidean
/// point metric. O(|P| * |Q|) dynamic program on squared distances; a
/// single sqrt at the end keeps the min/max structure exact.
inline double discrete_frechet(std::span<const Vec2> p, std::span<const Vec2> q) {
    if (p.empty() || q.empty())
        throw std::invalid_argument("discrete_frechet: empty polyline");
    const std::size_t n = p.size();
    const std::size_t m = q.size();
    std::vector<double> row(m);
    row[0] = dist2(p[0], q[0]);
    for (std::size_t j = 1; j < m; ++j)
        row[j] = std::max(row[j - 1], dist2(p[0], q[j]));
    for (std::size_t i = 1; i < n; ++i) {
        double diag = row[0];
        row[0] = std::max(row[0], dist2(p[i], q[0]));
        for (std::size_t j = 1; j < m; ++j) {
            const double reach = std::min({row[j], row[j - 1], diag});
            diag = row[j];
            row[j] = std::max(reach, dist2(p[i], q[j]));
        }
    }
    return std::sqrt(row[m - 1]);
}

inline double discrete_frechet(const Polyline& p, const Polyline& q) {
    return discrete_frechet(std::span<const Vec2>(p), std::span<const Vec2>(q));
}

namespace detail {

inline void frechet_walk(std::span<const Vec2> p, std::span<const Vec2> q,
                         std::size_t i, std::size_t j, double running_max, double& best) {
    const double cur = std::max(running_max, dist2(p[i], q[j]));
    if (i + 1 == p.size() && j + 1 == q.size()) {
        best = std::min(best, cur);
        return;
    }
    if (i + 1 < p.size()) frechet_walk(p, q, i + 1, j, cur, best);
    if (j + 1 < q.size()) frechet_walk(p, q, i, j + 1, cur, best);
    if (i + 1 < p.size() && j + 1 < q.size()) frechet_walk(p, q, i + 1, j + 1, cur, best);
}

}  // namespace detail

/// Test oracle: exhaustive enumeration of every monotone coupling.
/// Restricted to short polylines; must agree with discrete_frechet exactly.
inline double frechet_oracle(std::span<const Vec2> p, std::span<const Vec2> q) {
    if (p.empty() || q.empty())
        throw std::invalid_argument("frechet_oracle: empty polyline");
    if (p.size() > 8 || q.size() > 8)
        throw std::invalid_argument("frechet_oracle: polylines longer than 8 points");
    double best = std::numeric_limits<double>::infinity();
    detail::frechet_walk(p, q, 0, 0, 0.0, best);
    return std::sqrt(best);
}

inline double frechet_oracle(const Polyline& p, const Polyline& q) {
    return frechet_oracle(std::span<const Vec2>(p), std::span<const Vec2>(q));
}

/// Similarity transform p -> scale * R(rotation) * p + translation.
struct SimilarityTransform {
    double scale = 1.0;
    double rotation = 0.0;
    Vec2 translation{0.0, 0.0};
};

/// Transform with the rotation+scale product folded into two factors so
/// every caller applies bit-identical arithmetic.
inline Vec2 apply_point(const SimilarityTransform& t, Vec2 p) {
    const double ec = t.scale * std::cos(t.rotation);
    const double es = t.scale * std::sin(t.rotation);
    return {ec * p.x - es * p.y + t.translation.x,
            es * p.x + ec * p.y + t.translation.y};
}

inline Polyline apply_transform(const Polyline& poly, const SimilarityTransform& t) {
    if (!(t.scale > 0.0))
        throw std::invalid_argument("apply_transform: scale must be positive");
    Polyline out;
    out.reserve(poly.size());
    const double ec = t.scale * std::cos(t.rotation);
    const double es = t.scale * std::sin(t.rotation);
    for (Vec2 p : poly)
        out.push_back({ec * p.x - es * p.y + t.translation.x,
                       es * p.x + ec * p.y + t.translation.y});
    return out;
}

}  // namespace pursuit
