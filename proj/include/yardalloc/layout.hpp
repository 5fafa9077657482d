#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "yardalloc/core.hpp"

namespace yardalloc {

/// Occupancy grid over every cell of every block, paired with the inverse
/// container->cell map. A Layout is a plain value: copy it to branch, compare
/// with == (cell-wise on occupancy). Placement here is purely structural;
/// stacking legality lives in constraints.hpp so that deliberately broken
/// layouts can be built in tests.
class Layout {
  public:
    Layout() = default;

    explicit Layout(const YardConfig& cfg) : config_(cfg) {
        cfg.validate();
        cells_.assign(static_cast<std::size_t>(cfg.cell_count()), kNoContainer);
    }

    const YardConfig& config() const { return config_; }

    std::size_t index_of(const Coord& c) const {
        return ((static_cast<std::size_t>(c.block - 1) * config_.tiers + (c.z - 1)) *
                    config_.slots_y +
                (c.y - 1)) *
                   config_.slots_x +
               (c.x - 1);
    }

    /// Inverse of index_of; cells iterate in (block, z, y, x) order, x fastest.
    Coord coord_at(std::size_t idx) const {
        Coord c;
        c.x = static_cast<int>(idx % config_.slots_x) + 1;
        idx /= config_.slots_x;
        c.y = static_cast<int>(idx % config_.slots_y) + 1;
        idx /= config_.slots_y;
        c.z = static_cast<int>(idx % config_.tiers) + 1;
        idx /= config_.tiers;
        c.block = static_cast<int>(idx) + 1;
        return c;
    }

    std::size_t cell_count() const { return cells_.size(); }
    std::size_t placed_count() const { return placement_.size(); }

    bool occupied(const Coord& c) const {
        check_bounds(c);
        return cells_[index_of(c)] != kNoContainer;
    }

    /// Occupant id at c, or kNoContainer.
    ContainerId occupant(const Coord& c) const {
        check_bounds(c);
        return cells_[index_of(c)];
    }

    /// Where a container currently sits, if anywhere.
    const Coord* find(ContainerId id) const {
        auto it = placement_.find(id);
        return it == placement_.end() ? nullptr : &it->second;
    }

    Coord coord_of(ContainerId id) const {
        const Coord* c = find(id);
        if (!c) throw lookup_error("container not placed: " + std::to_string(id));
        return *c;
    }

    void place(const Container& container, const Coord& c) { place(container.id, c); }

    void place(ContainerId id, const Coord& c) {
        check_bounds(c);
        std::size_t idx = index_of(c);
        if (cells_[idx] != kNoContainer)
            throw occupancy_conflict_error("cell " + to_string(c) + " already holds container " +
                                           std::to_string(cells_[idx]));
        if (placement_.count(id))
            throw duplicate_placement_error("container " + std::to_string(id) +
                                            " is already placed");
        cells_[idx] = id;
        placement_.emplace(id, c);
    }

    /// Clears the cell; returns the removed id.
    ContainerId remove(const Coord& c) {
        check_bounds(c);
        std::size_t idx = index_of(c);
        ContainerId id = cells_[idx];
        if (id == kNoContainer)
            throw no_occupant_error("cell " + to_string(c) + " is empty");
        cells_[idx] = kNoContainer;
        placement_.erase(id);
        return id;
    }

    /// Occupant ids strictly above c in its stack, bottom-to-top. Empty cells
    /// in between are skipped so that broken (floating) layouts still get an
    /// answer.
    std::vector<ContainerId> stack_above(const Coord& c) const {
        check_bounds(c);
        std::vector<ContainerId> out;
        Coord probe = c;
        for (int z = c.z + 1; z <= config_.tiers; ++z) {
            probe.z = z;
            ContainerId id = cells_[index_of(probe)];
            if (id != kNoContainer) out.push_back(id);
        }
        return out;
    }

    /// Number of occupied cells on tier k of block j.
    int floor_count(int block, int tier) const {
        if (block < 1 || block > config_.total_blocks())
            throw bounds_error("block index out of range: " + std::to_string(block));
        if (tier < 1 || tier > config_.tiers)
            throw bounds_error("tier out of range: " + std::to_string(tier));
        int n = 0;
        Coord c{1, 1, tier, block};
        for (c.y = 1; c.y <= config_.slots_y; ++c.y)
            for (c.x = 1; c.x <= config_.slots_x; ++c.x)
                if (cells_[index_of(c)] != kNoContainer) ++n;
        return n;
    }

    /// Current stack height at ground position (x, y) of a block. Counts
    /// occupied cells, which equals the top tier only when the stack is
    /// gap-free.
    int stack_height(int x, int y, int block) const {
        int h = 0;
        Coord c{x, y, 1, block};
        check_bounds(c);
        for (c.z = 1; c.z <= config_.tiers; ++c.z)
            if (cells_[index_of(c)] != kNoContainer) ++h;
        return h;
    }

    /// All placed (id, coord) pairs ordered by id.
    const std::map<ContainerId, Coord>& placements() const { return placement_; }

    bool operator==(const Layout& other) const {
        return config_ == other.config_ && cells_ == other.cells_;
    }

  private:
    void check_bounds(const Coord& c) const {
        if (!in_bounds(config_, c))
            throw bounds_error("coordinate " + to_string(c) + " outside yard bounds");
    }

    YardConfig config_;
    std::vector<ContainerId> cells_;
    std::map<ContainerId, Coord> placement_;
};

inline Layout new_layout(const YardConfig& cfg) { return Layout(cfg); }

}  // namespace yardalloc
