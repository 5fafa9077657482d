#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "yardalloc/constraints.hpp"
#include "yardalloc/core.hpp"
#include "yardalloc/layout.hpp"

namespace yardalloc {

/// How rehandles are counted for a container.
///  - blocking: containers above it with a strictly later delivery date.
///  - above:    every container above it, dates ignored.
enum class FitnessMode { blocking, above };

inline const char* to_string(FitnessMode mode) {
    return mode == FitnessMode::blocking ? "blocking" : "above";
}

inline FitnessMode fitness_mode_from_string(const std::string& s) {
    if (s == "blocking") return FitnessMode::blocking;
    if (s == "above") return FitnessMode::above;
    throw parse_error("unknown fitness mode: " + s + " (expected blocking or above)");
}

/// Urgency weight of a delivery date. Earlier means heavier.
inline double priority(Date delivery_date) {
    if (delivery_date < 1) throw date_domain_error("delivery date must be >= 1");
    return 1.0 / static_cast<double>(delivery_date);
}

/// Rehandle count for one placed container under the given mode.
inline int rehandle_count(const Layout& layout, const ContainerIndex& index, ContainerId id,
                          FitnessMode mode) {
    Coord at = layout.coord_of(id);
    std::vector<ContainerId> above = layout.stack_above(at);
    if (mode == FitnessMode::above) return static_cast<int>(above.size());
    Date own = index.at(id).delivery_date;
    int n = 0;
    for (ContainerId other : above)
        if (index.at(other).delivery_date > own) ++n;
    return n;
}

/// Sum of priority(d_i) * rehandles_i over all containers, accumulated in
/// ascending container id so the result is bit-reproducible. Demands a
/// complete placement; partial layouts have no meaningful objective value.
inline double layout_fitness(const Layout& layout, const Instance& instance,
                             FitnessMode mode = FitnessMode::blocking) {
    ContainerIndex index(instance);
    if (layout.placed_count() != index.size())
        throw incomplete_layout_error("fitness needs all " + std::to_string(index.size()) +
                                      " containers placed, found " +
                                      std::to_string(layout.placed_count()));
    double total = 0.0;
    for (const auto& [id, coord] : layout.placements()) {
        int m = rehandle_count(layout, index, id, mode);
        if (m != 0) total += priority(index.at(id).delivery_date) * m;
    }
    return total;
}

/// Per-container rehandle counts from simulating the retrieval day. All
/// containers leave in ascending delivery-date order, ties within a stack
/// resolved top-down. Fetching a buried container lifts everything above it
/// (one rehandle each, charged to the fetched container) and puts the lifted
/// containers back on the same stack in their original vertical order.
///
/// With that restacking discipline the charge for container i is exactly the
/// number of strictly-later-dated containers above it in the initial layout,
/// i.e. the blocking count; a test pins the equivalence.
inline std::map<ContainerId, int> retrieval_oracle(const Layout& layout,
                                                   const Instance& instance) {
    ContainerIndex index(instance);
    if (!validate_layout(layout, instance).empty())
        throw infeasible_layout_error("retrieval oracle needs a complete feasible layout");

    // Stacks as bottom-to-top id vectors, keyed by (block, y, x) for a stable
    // processing order.
    std::map<std::tuple<int, int, int>, std::vector<ContainerId>> stacks;
    const YardConfig& cfg = layout.config();
    for (int j = 1; j <= cfg.total_blocks(); ++j)
        for (int y = 1; y <= cfg.slots_y; ++y)
            for (int x = 1; x <= cfg.slots_x; ++x) {
                std::vector<ContainerId> stack;
                for (int z = 1; z <= cfg.tiers; ++z) {
                    ContainerId id = layout.occupant(Coord{x, y, z, j});
                    if (id == kNoContainer) break;  // stacks are gap-free here
                    stack.push_back(id);
                }
                if (!stack.empty()) stacks[{j, y, x}] = std::move(stack);
            }

    // Retrieval order: ascending date; same-date containers in one stack go
    // top-down (no rehandles among each other); across stacks order is
    // irrelevant to the counts, so sort by (date, stack key, depth from top).
    struct Job {
        Date date;
        std::tuple<int, int, int> key;
        int from_top;
        ContainerId id;
    };
    std::vector<Job> jobs;
    for (const auto& [key, stack] : stacks)
        for (std::size_t i = 0; i < stack.size(); ++i)
            jobs.push_back({index.at(stack[i]).delivery_date, key,
                            static_cast<int>(stack.size() - 1 - i), stack[i]});
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        if (a.date != b.date) return a.date < b.date;
        if (a.key != b.key) return a.key < b.key;
        return a.from_top < b.from_top;
    });

    std::map<ContainerId, int> rehandles;
    for (const auto& c : instance.containers) rehandles[c.id] = 0;

    for (const Job& job : jobs) {
        std::vector<ContainerId>& stack = stacks[job.key];
        auto it = std::find(stack.begin(), stack.end(), job.id);
        // Every job's container is still in its home stack: lifted containers
        // always return there.
        std::vector<ContainerId> lifted(it + 1, stack.end());
        rehandles[job.id] += static_cast<int>(lifted.size());
        stack.erase(it, stack.end());
        stack.insert(stack.end(), lifted.begin(), lifted.end());
    }
    return rehandles;
}

/// Fitness recomputed from the retrieval simulation instead of the stack
/// geometry. Agrees with layout_fitness(..., blocking) on feasible layouts.
inline double oracle_fitness(const Layout& layout, const Instance& instance) {
    ContainerIndex index(instance);
    double total = 0.0;
    for (const auto& [id, m] : retrieval_oracle(layout, instance))
        if (m != 0) total += priority(index.at(id).delivery_date) * m;
    return total;
}

}  // namespace yardalloc
