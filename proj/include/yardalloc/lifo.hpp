#pragma once

#include <string>
#include <vector>

#include "yardalloc/constraints.hpp"
#include "yardalloc/core.hpp"
#include "yardalloc/layout.hpp"

namespace yardalloc {

namespace detail {

/// Block visiting order for the stacking baseline. Reefers may only use
/// powered blocks; everything else tries the regular blocks first so the
/// scarce powered cells stay free for reefers.
inline std::vector<int> baseline_block_order(const YardConfig& cfg, ContainerType t) {
    std::vector<int> order;
    if (t == ContainerType::reefer) {
        for (int j = 1; j <= cfg.refrig_blocks; ++j) order.push_back(j);
        return order;
    }
    for (int j = cfg.refrig_blocks + 1; j <= cfg.total_blocks(); ++j) order.push_back(j);
    for (int j = 1; j <= cfg.refrig_blocks; ++j) order.push_back(j);
    return order;
}

}  // namespace detail

/// Deterministic stacking baseline: containers are processed in arrival
/// (input) order and each goes to the first admissible stack top found by a
/// fixed scan. Blocks are visited in baseline_block_order, rows by ascending
/// y; within a row the scan runs by ascending x, except that open-side
/// containers scan x descending so they land at the open end of a row and
/// keep the cells on their open side free. The container is dropped on the
/// lowest empty tier of the first stack where the placement breaks no rule.
/// No look-ahead, no date awareness: later arrivals simply pile on top, which
/// is what makes it the last-in-first-out reference policy.
inline Layout lifo_allocate(const Instance& instance) {
    instance.validate();
    ContainerIndex index(instance);
    Layout layout(instance.config);
    const YardConfig& cfg = instance.config;

    for (const Container& c : instance.containers) {
        std::vector<int> blocks = detail::baseline_block_order(cfg, c.ctype);
        bool placed = false;
        for (int j : blocks) {
            for (int y = 1; y <= cfg.slots_y && !placed; ++y) {
                bool descending = c.ctype == ContainerType::open_side;
                for (int step = 0; step < cfg.slots_x && !placed; ++step) {
                    int x = descending ? cfg.slots_x - step : 1 + step;
                    int z = layout.stack_height(x, y, j) + 1;
                    if (z > cfg.tiers) continue;
                    Coord at{x, y, z, j};
                    if (detail::placement_candidate_ok(layout, index, c, at)) {
                        layout.place(c.id, at);
                        placed = true;
                    }
                }
            }
            if (placed) break;
        }
        if (!placed)
            throw allocation_error("baseline could not place container " + std::to_string(c.id));
    }
    return layout;
}

}  // namespace yardalloc
