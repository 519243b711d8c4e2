#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "pursuit/frechet.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/vec2.hpp"

namespace pursuit {

struct GaParams {
    int population = 50;
    int generations = 100;
    int tournament = 3;
    double crossover_prob = 0.9;
    double mutation_prob = 0.2;       // per gene
    double mutation_sigma_frac = 0.05;  // sigma as a fraction of each gene's range
    int elitism = 2;
};

/// Search box for the transform genome; rotation always spans [0, 2*pi).
struct GaBounds {
    double scale_min = 0.1;
    double scale_max = 5.0;
    double translation_min = -50.0;
    double translation_max = 50.0;
};

namespace detail {

inline SimilarityTransform clamp_to_bounds(SimilarityTransform t, const GaBounds& b) {
    t.scale = std::clamp(t.scale, b.scale_min, b.scale_max);
    t.rotation = wrap_angle(t.rotation);
    t.translation.x = std::clamp(t.translation.x, b.translation_min, b.translation_max);
    t.translation.y = std::clamp(t.translation.y, b.translation_min, b.translation_max);
    return t;
}

}  // namespace detail

/// Minimize `objective` over similarity transforms with a real-coded,
/// elitist genetic algorithm: tournament selection, uniform crossover,
/// per-gene Gaussian mutation. Deterministic given the seed. Individuals
/// in `initial_guesses` are injected (clamped) into the first population.
inline SimilarityTransform ga_optimize(
    const std::function<double(const SimilarityTransform&)>& objective, const GaBounds& bounds,
    const GaParams& params, std::uint64_t seed,
    std::span<const SimilarityTransform> initial_guesses = {}) {
    if (!(bounds.scale_min > 0.0) || !(bounds.scale_min < bounds.scale_max) ||
        !(bounds.translation_min < bounds.translation_max))
        throw std::invalid_argument("ga_optimize: empty or invalid bounds");
    if (params.population < 1) throw std::invalid_argument("ga_optimize: empty population");

    Rng rng(seed);
    const std::size_t pop_size = static_cast<std::size_t>(params.population);
    const int elites = std::min<int>(params.elitism, params.population);

    const double sigma_scale = params.mutation_sigma_frac * (bounds.scale_max - bounds.scale_min);
    const double sigma_rot = params.mutation_sigma_frac * kTwoPi;
    const double sigma_trans =
        params.mutation_sigma_frac * (bounds.translation_max - bounds.translation_min);

    const auto random_individual = [&] {
        SimilarityTransform t;
        t.scale = rng.uniform(bounds.scale_min, bounds.scale_max);
        t.rotation = rng.uniform(0.0, kTwoPi);
        t.translation = {rng.uniform(bounds.translation_min, bounds.translation_max),
                         rng.uniform(bounds.translation_min, bounds.translation_max)};
        return t;
    };

    std::vector<SimilarityTransform> pop;
    pop.reserve(pop_size);
    for (const auto& guess : initial_guesses) {
        if (pop.size() == pop_size) break;
        pop.push_back(detail::clamp_to_bounds(guess, bounds));
    }
    while (pop.size() < pop_size) pop.push_back(random_individual());

    std::vector<double> fitness(pop_size);
    const auto evaluate = [&] {
        for (std::size_t i = 0; i < pop_size; ++i) fitness[i] = objective(pop[i]);
    };
    evaluate();

    SimilarityTransform best = pop[0];
    double best_fitness = fitness[0];
    const auto track_best = [&] {
        for (std::size_t i = 0; i < pop_size; ++i) {
            if (fitness[i] < best_fitness) {
                best_fitness = fitness[i];
                best = pop[i];
            }
        }
    };
    track_best();

    const auto tournament_pick = [&] {
        std::size_t winner = rng.below(pop_size);
        for (int c = 1; c < params.tournament; ++c) {
            const std::size_t rival = rng.below(pop_size);
            if (fitness[rival] < fitness[winner]) winner = rival;
        }
        return winner;
    };

    std::vector<std::size_t> order(pop_size);
    for (int gen = 0; gen < params.generations; ++gen) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return fitness[a] != fitness[b] ? fitness[a] < fitness[b] : a < b;
        });

        std::vector<SimilarityTransform> next;
        next.reserve(pop_size);
        for (int e = 0; e < elites; ++e) next.push_back(pop[order[e]]);
        while (next.size() < pop_size) {
            const SimilarityTransform& p1 = pop[tournament_pick()];
            const SimilarityTransform& p2 = pop[tournament_pick()];
            SimilarityTransform child = p1;
            if (rng.uniform01() < params.crossover_prob) {
                if (rng.uniform01() < 0.5) child.scale = p2.scale;
                if (rng.uniform01() < 0.5) child.rotation = p2.rotation;
                if (rng.uniform01() < 0.5) child.translation.x = p2.translation.x;
                if (rng.uniform01() < 0.5) child.translation.y = p2.translation.y;
            }
            if (rng.uniform01() < params.mutation_prob)
                child.scale = rng.normal(child.scale, sigma_scale);
            if (rng.uniform01() < params.mutation_prob)
                child.rotation = rng.normal(child.rotation, sigma_rot);
            if (rng.uniform01() < params.mutation_prob)
                child.translation.x = rng.normal(child.translation.x, sigma_trans);
            if (rng.uniform01() < params.mutation_prob)
                child.translation.y = rng.normal(child.translation.y, sigma_trans);
            next.push_back(detail::clamp_to_bounds(child, bounds));
        }
        pop = std::move(next);
        evaluate();
        track_best();
    }
    return best;
}

}  // namespace pursuit
