#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pursuit/curve.hpp"
#include "pursuit/frechet.hpp"
#include "pursuit/ga.hpp"
#include "pursuit/vec2.hpp"

namespace pursuit {

struct MetricResult {
    double distance = 0.0;
    SimilarityTransform transform;
};

namespace detail {

struct BoundingBox {
    Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

    void include(Vec2 p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    Vec2 center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}; }
    double diagonal() const { return dist(lo, hi); }
};

// Rotation-free scale+shift guess from the bounding boxes of the
// trajectories against the reference arcs; a useful GA starting point.
inline SimilarityTransform bbox_fit(const std::vector<Polyline>& trajectories,
                                    const std::vector<Polyline>& refs, const GaBounds& bounds) {
    BoundingBox traj_box, ref_box;
    for (const auto& poly : trajectories)
        for (Vec2 p : poly) traj_box.include(p);
    for (const auto& poly : refs)
        for (Vec2 p : poly) ref_box.include(p);
    SimilarityTransform t;
    const double ref_diag = ref_box.diagonal();
    t.scale = ref_diag > 0.0 ? traj_box.diagonal() / ref_diag : 1.0;
    t.scale = std::clamp(t.scale, bounds.scale_min, bounds.scale_max);
    t.rotation = 0.0;
    t.translation = traj_box.center() - ref_box.center() * t.scale;
    t.translation.x = std::clamp(t.translation.x, bounds.translation_min, bounds.translation_max);
    t.translation.y = std::clamp(t.translation.y, bounds.translation_min, bounds.translation_max);
    return t;
}

}  // namespace detail

/// Formation metric: mean discrete Frechet distance between each agent's
/// trajectory and the curve sampled at that agent's own phase sequence,
/// minimized over one shared similarity transform applied to the curve
/// side. The minimization runs the seeded GA with the identity and a
/// bounding-box fit injected into the initial population.
inline MetricResult metric_d(const std::vector<Polyline>& trajectories, const ClosedCurve& curve,
                             const std::vector<std::vector<double>>& tau_offsets,
                             const GaParams& ga = {}, std::uint64_t seed = 0,
                             const GaBounds& bounds = {}) {
    if (trajectories.empty()) throw std::invalid_argument("metric_d: no trajectories");
    if (tau_offsets.size() != trajectories.size())
        throw std::invalid_argument("metric_d: tau_offsets count mismatch");
    const std::size_t len = trajectories[0].size();
    if (len == 0) throw std::invalid_argument("metric_d: empty trajectory");
    for (std::size_t i = 0; i < trajectories.size(); ++i) {
        if (trajectories[i].size() != len)
            throw std::invalid_argument("metric_d: trajectories differ in length");
        if (tau_offsets[i].size() != len)
            throw std::invalid_argument("metric_d: tau sequence length mismatch");
    }

    std::vector<Polyline> refs;
    refs.reserve(trajectories.size());
    for (const auto& taus : tau_offsets) refs.push_back(curve_sample(curve, taus));

    const double n_inv = 1.0 / static_cast<double>(trajectories.size());
    Polyline scratch(len);
    const auto objective = [&](const SimilarityTransform& t) {
        const double ec = t.scale * std::cos(t.rotation);
        const double es = t.scale * std::sin(t.rotation);
        double total = 0.0;
        for (std::size_t i = 0; i < refs.size(); ++i) {
            for (std::size_t j = 0; j < len; ++j) {
                const Vec2 p = refs[i][j];
                scratch[j] = {ec * p.x - es * p.y + t.translation.x,
                              es * p.x + ec * p.y + t.translation.y};
            }
            total += discrete_frechet(std::span<const Vec2>(trajectories[i]),
                                      std::span<const Vec2>(scratch));
        }
        return total * n_inv;
    };

    const SimilarityTransform guesses[2] = {SimilarityTransform{},
                                            detail::bbox_fit(trajectories, refs, bounds)};
    const SimilarityTransform best =
        ga_optimize(objective, bounds, ga, seed, std::span<const SimilarityTransform>(guesses));
    return {objective(best), best};
}

}  // namespace pursuit
