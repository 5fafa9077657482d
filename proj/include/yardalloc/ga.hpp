#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "yardalloc/constraints.hpp"
#include "yardalloc/core.hpp"
#include "yardalloc/fitness.hpp"
#include "yardalloc/layout.hpp"
#include "yardalloc/rng.hpp"

namespace yardalloc {

struct GAConfig {
    int pop_size = 30;
    int stall_window = 20;        // generations without strict improvement before stopping
    double p_cross = 0.70;
    double p_mut = 0.20;
    FitnessMode mode = FitnessMode::blocking;
    std::int64_t max_generations = 0;  // 0 = derive a cap from pop_size and stall_window
    int init_restart_limit = 1000;     // random-layout restarts before giving up
    int mutation_attempt_limit = 50;   // swap attempts per mutation call

    std::int64_t generation_cap() const {
        return max_generations > 0 ? max_generations
                                   : 10LL * stall_window * pop_size;
    }

    void validate() const {
        if (pop_size < 2) throw config_error("population size must be >= 2");
        if (stall_window < 1) throw config_error("stall window must be >= 1");
        if (p_cross < 0.0 || p_cross > 1.0) throw config_error("p_cross must be in [0, 1]");
        if (p_mut < 0.0 || p_mut > 1.0) throw config_error("p_mut must be in [0, 1]");
        if (init_restart_limit < 1) throw config_error("init restart limit must be >= 1");
        if (mutation_attempt_limit < 0) throw config_error("mutation attempt limit must be >= 0");
    }
};

struct Individual {
    Layout layout;
    double fitness = 0.0;
};

namespace detail {

/// Lower rank places earlier. The most constrained types go first so that
/// greedy completion rarely paints itself into a corner: reefers are tied to
/// powered blocks, open-sides consume a whole row suffix, tanks and open-tops
/// restrict what may ever sit on them, empties nearly so, dry goes anywhere.
inline int placement_rank(ContainerType t) {
    switch (t) {
        case ContainerType::reefer: return 0;
        case ContainerType::open_side: return 1;
        case ContainerType::tank: return 2;
        case ContainerType::open_top: return 3;
        case ContainerType::empty: return 4;
        case ContainerType::dry: return 5;
    }
    return 6;
}

/// Instance containers sorted hardest-type-first, ties by ascending id.
inline std::vector<Container> hardest_first_order(const Instance& instance) {
    std::vector<Container> order = instance.containers;
    std::stable_sort(order.begin(), order.end(), [](const Container& a, const Container& b) {
        int ra = placement_rank(a.ctype), rb = placement_rank(b.ctype);
        if (ra != rb) return ra < rb;
        return a.id < b.id;
    });
    return order;
}

}  // namespace detail

/// Builds one complete feasible layout by placing containers hardest type
/// first, each at a uniformly chosen feasible cell. A dead end restarts from
/// an empty yard; after `restart_limit` failed attempts the instance is
/// deemed unsatisfiable and generation_error is thrown. Unsatisfiable inputs
/// (too many reefers, over capacity) surface that way too.
inline Layout random_feasible_layout(const Instance& instance, Rng& rng,
                                     int restart_limit = 1000) {
    std::vector<Container> order = detail::hardest_first_order(instance);
    ContainerIndex index(instance);
    for (int attempt = 0; attempt < restart_limit; ++attempt) {
        Layout layout(instance.config);
        bool stuck = false;
        for (const Container& c : order) {
            // The partial layout is violation-free by construction, so the
            // direct candidate check applies; it returns the same cells, in
            // the same order, as the general feasibility query would.
            std::vector<Coord> cells = detail::feasible_cells(layout, index, c);
            if (cells.empty()) {
                stuck = true;
                break;
            }
            layout.place(c.id, rng.pick(cells));
        }
        if (!stuck) return layout;
    }
    throw generation_error("no feasible layout found in " + std::to_string(restart_limit) +
                           " attempts");
}

/// Fitness-proportionate pick: weight 1 / (1 + f), so lower fitness (fewer
/// weighted rehandles) is more likely. Returns an index into pop.
inline std::size_t roulette_select(const std::vector<Individual>& pop, Rng& rng) {
    if (pop.empty()) throw config_error("selection needs a non-empty population");
    double total = 0.0;
    for (const Individual& ind : pop) total += 1.0 / (1.0 + ind.fitness);
    double u = rng.unit_real() * total;
    double cum = 0.0;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        cum += 1.0 / (1.0 + pop[i].fitness);
        if (u < cum) return i;
    }
    return pop.size() - 1;  // u landed on the rounding edge
}

/// Region crossover. A corner region R (x <= px, y <= py, z <= pz, every
/// block) is cut at a uniformly random plane; the child copies parent 1
/// inside R, adopts parent 2's coordinates outside R where they drop in
/// legally, and fills whatever is left like random_feasible_layout. R is
/// downward-closed in z, so the copied part never floats and the child stays
/// violation-free throughout. If completion dead-ends, the child is a copy of
/// the fitter parent (ties favor parent 1).
inline Layout crossover(const Individual& parent1, const Individual& parent2,
                        const Instance& instance, Rng& rng) {
    const YardConfig& cfg = instance.config;
    int px = static_cast<int>(rng.between(1, cfg.slots_x));
    int py = static_cast<int>(rng.between(1, cfg.slots_y));
    int pz = static_cast<int>(rng.between(1, cfg.tiers));
    auto in_region = [&](const Coord& c) { return c.x <= px && c.y <= py && c.z <= pz; };

    Layout child(cfg);
    for (const auto& [id, coord] : parent1.layout.placements())
        if (in_region(coord)) child.place(id, coord);

    ContainerIndex index(instance);
    for (std::size_t i = 0; i < parent2.layout.cell_count(); ++i) {
        Coord coord = parent2.layout.coord_at(i);
        ContainerId id = parent2.layout.occupant(coord);
        if (id == kNoContainer || in_region(coord) || child.find(id)) continue;
        if (detail::placement_candidate_ok(child, index, index.at(id), coord))
            child.place(id, coord);
    }

    for (const Container& c : detail::hardest_first_order(instance)) {
        if (child.find(c.id)) continue;
        std::vector<Coord> cells = detail::feasible_cells(child, index, c);
        if (cells.empty())
            return parent2.fitness < parent1.fitness ? parent2.layout : parent1.layout;
        child.place(c.id, rng.pick(cells));
    }
    return child;
}

/// In-place mutation: with probability p_mut, try up to attempt_limit random
/// swaps of two distinct containers' cells and keep the first swap that
/// leaves the layout violation-free. Returns whether the layout changed.
inline bool mutate(Layout& layout, const Instance& instance, Rng& rng, double p_mut = 0.20,
                   int attempt_limit = 50) {
    if (!rng.chance(p_mut)) return false;
    const auto& placed = layout.placements();
    if (placed.size() < 2) return false;
    std::vector<ContainerId> ids;
    ids.reserve(placed.size());
    for (const auto& [id, coord] : placed) ids.push_back(id);

    for (int attempt = 0; attempt < attempt_limit; ++attempt) {
        std::size_t i = static_cast<std::size_t>(rng.bounded(ids.size()));
        std::size_t j = static_cast<std::size_t>(rng.bounded(ids.size() - 1));
        if (j >= i) ++j;
        ContainerId a = ids[i], b = ids[j];
        Coord ca = layout.coord_of(a), cb = layout.coord_of(b);
        layout.remove(ca);
        layout.remove(cb);
        layout.place(a, cb);
        layout.place(b, ca);
        if (rule_violations(layout, instance).empty()) return true;
        layout.remove(cb);
        layout.remove(ca);
        layout.place(a, ca);
        layout.place(b, cb);
    }
    return false;
}

/// One generational step: pop.size() reproduction trials (select two parents,
/// cross with probability p_cross else clone parent 1, then mutate), followed
/// by elitist truncation of parents + children to the original size. Parents
/// precede children in the stable sort, so the best individual survives ties
/// and the best fitness never worsens.
inline void evolve_generation(std::vector<Individual>& pop, const Instance& instance,
                              const GAConfig& cfg, Rng& rng) {
    std::vector<Individual> children;
    children.reserve(pop.size());
    for (std::size_t t = 0; t < pop.size(); ++t) {
        const Individual& pa = pop[roulette_select(pop, rng)];
        const Individual& pb = pop[roulette_select(pop, rng)];
        Layout child = rng.chance(cfg.p_cross) ? crossover(pa, pb, instance, rng) : pa.layout;
        mutate(child, instance, rng, cfg.p_mut, cfg.mutation_attempt_limit);
#ifndef NDEBUG
        assert(validate_layout(child, instance).empty());
#endif
        double f = layout_fitness(child, instance, cfg.mode);
        children.push_back({std::move(child), f});
    }
    pop.insert(pop.end(), std::make_move_iterator(children.begin()),
               std::make_move_iterator(children.end()));
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Individual& a, const Individual& b) { return a.fitness < b.fitness; });
    pop.resize(cfg.pop_size);
}

struct RunResult {
    Layout best;
    double fitness_initial = 0.0;  // best fitness in the initial population
    double fitness_final = 0.0;
    std::int64_t generations = 0;       // evolution steps actually executed
    std::vector<double> history;        // best fitness per generation, [0] = initial
};

/// Full optimization run: random feasible initial population, generational
/// evolution, termination after stall_window generations without strict
/// improvement of the best fitness (or at the generation cap).
inline RunResult run_ga(const Instance& instance, const GAConfig& cfg, Rng& rng) {
    cfg.validate();
    instance.validate();

    std::vector<Individual> pop;
    pop.reserve(cfg.pop_size);
    for (int i = 0; i < cfg.pop_size; ++i) {
        Layout layout = random_feasible_layout(instance, rng, cfg.init_restart_limit);
        double f = layout_fitness(layout, instance, cfg.mode);
        pop.push_back({std::move(layout), f});
    }
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Individual& a, const Individual& b) { return a.fitness < b.fitness; });

    RunResult result;
    result.fitness_initial = pop.front().fitness;
    result.history.push_back(pop.front().fitness);

    double best = pop.front().fitness;
    int stall = 0;
    std::int64_t cap = cfg.generation_cap();
    while (result.generations < cap && stall < cfg.stall_window) {
        evolve_generation(pop, instance, cfg, rng);
        ++result.generations;
        double now = pop.front().fitness;
        result.history.push_back(now);
        if (now < best) {
            best = now;
            stall = 0;
        } else {
            ++stall;
        }
    }

    result.best = pop.front().layout;
    result.fitness_final = pop.front().fitness;
    return result;
}

inline RunResult run_ga(const Instance& instance, const GAConfig& cfg, std::uint64_t seed) {
    Rng rng(seed);
    return run_ga(instance, cfg, rng);
}

}  // namespace yardalloc
