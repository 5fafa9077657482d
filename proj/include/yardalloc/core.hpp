#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace yardalloc {

using ContainerId = std::int64_t;
using Date = std::int64_t;

inline constexpr ContainerId kNoContainer = -1;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct yard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct config_error : yard_error {
    using yard_error::yard_error;
};
struct bounds_error : yard_error {
    using yard_error::yard_error;
};
struct occupancy_conflict_error : yard_error {
    using yard_error::yard_error;
};
struct duplicate_placement_error : yard_error {
    using yard_error::yard_error;
};
struct no_occupant_error : yard_error {
    using yard_error::yard_error;
};
struct lookup_error : yard_error {
    using yard_error::yard_error;
};
struct date_domain_error : yard_error {
    using yard_error::yard_error;
};
struct incomplete_layout_error : yard_error {
    using yard_error::yard_error;
};
struct infeasible_layout_error : yard_error {
    using yard_error::yard_error;
};
struct generation_error : yard_error {
    using yard_error::yard_error;
};
struct allocation_error : yard_error {
    using yard_error::yard_error;
};
struct spec_error : yard_error {
    using yard_error::yard_error;
};
struct parse_error : yard_error {
    using yard_error::yard_error;
};
struct io_error : yard_error {
    using yard_error::yard_error;
};
struct validation_error : yard_error {
    using yard_error::yard_error;
};

// ---------------------------------------------------------------------------
// Container types
// ---------------------------------------------------------------------------

/// The six container classes handled by the solver. Numeric codes are part of
/// the on-disk instance format.
enum class ContainerType : int {
    dry = 1,
    empty = 2,
    open_top = 3,
    open_side = 4,
    tank = 5,
    reefer = 6,
};

inline constexpr int kTypeCount = 6;

inline bool is_valid_type_code(int code) { return code >= 1 && code <= kTypeCount; }

inline ContainerType type_from_code(int code) {
    if (!is_valid_type_code(code))
        throw validation_error("container type code out of range: " + std::to_string(code));
    return static_cast<ContainerType>(code);
}

inline int type_code(ContainerType t) { return static_cast<int>(t); }

inline const char* type_name(ContainerType t) {
    switch (t) {
        case ContainerType::dry: return "dry";
        case ContainerType::empty: return "empty";
        case ContainerType::open_top: return "open-top";
        case ContainerType::open_side: return "open-side";
        case ContainerType::tank: return "tank";
        case ContainerType::reefer: return "reefer";
    }
    return "?";
}

struct Container {
    ContainerId id = 0;
    ContainerType ctype = ContainerType::dry;
    Date delivery_date = 1;  // >= 1
};

// ---------------------------------------------------------------------------
// Yard geometry
// ---------------------------------------------------------------------------

/// Grid dimensions of one block plus the block counts. Blocks 1..refrig_blocks
/// are the powered (refrigerated) blocks, regular blocks follow.
struct YardConfig {
    int slots_x = 1;       // positions along X within a block
    int slots_y = 1;       // positions along Y within a block
    int tiers = 1;         // stacking height, tier 1 is the ground
    int refrig_blocks = 0;
    int regular_blocks = 0;

    int total_blocks() const { return refrig_blocks + regular_blocks; }
    std::int64_t cells_per_block() const {
        return std::int64_t(slots_x) * slots_y * tiers;
    }
    std::int64_t cell_count() const { return cells_per_block() * total_blocks(); }
    std::int64_t refrigerated_capacity() const {
        return cells_per_block() * refrig_blocks;
    }

    void validate() const {
        if (slots_x < 1 || slots_y < 1 || tiers < 1)
            throw config_error("yard dimensions must all be >= 1");
        if (refrig_blocks < 0 || regular_blocks < 0)
            throw config_error("block counts must be >= 0");
        if (total_blocks() < 1)
            throw config_error("yard must contain at least one block");
    }

    bool operator==(const YardConfig&) const = default;
};

/// True iff block j is powered. Blocks are 1-based.
inline bool is_refrigerated_block(const YardConfig& cfg, int j) {
    if (j < 1 || j > cfg.total_blocks())
        throw bounds_error("block index out of range: " + std::to_string(j));
    return j <= cfg.refrig_blocks;
}

/// 1-based cell address: (x, y) ground position, z tier, block index.
struct Coord {
    int x = 1;
    int y = 1;
    int z = 1;
    int block = 1;

    bool operator==(const Coord&) const = default;
};

inline bool in_bounds(const YardConfig& cfg, const Coord& c) {
    return c.x >= 1 && c.x <= cfg.slots_x && c.y >= 1 && c.y <= cfg.slots_y &&
           c.z >= 1 && c.z <= cfg.tiers && c.block >= 1 && c.block <= cfg.total_blocks();
}

inline std::string to_string(const Coord& c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," +
           std::to_string(c.z) + "," + std::to_string(c.block) + ")";
}

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

/// A yard plus the container population to be stored in it.
struct Instance {
    YardConfig config;
    std::vector<Container> containers;  // arrival order

    std::int64_t count_of(ContainerType t) const {
        std::int64_t n = 0;
        for (const auto& c : containers)
            if (c.ctype == t) ++n;
        return n;
    }

    int distinct_types() const {
        int n = 0;
        for (int code = 1; code <= kTypeCount; ++code)
            if (count_of(static_cast<ContainerType>(code)) > 0) ++n;
        return n;
    }

    const Container& lookup(ContainerId id) const {
        for (const auto& c : containers)
            if (c.id == id) return c;
        throw lookup_error("unknown container id: " + std::to_string(id));
    }

    /// Checks the structural invariants; throws validation_error on the first
    /// broken one.
    void validate() const {
        config.validate();
        if (std::int64_t(containers.size()) > config.cell_count())
            throw validation_error("container count exceeds yard capacity");
        std::int64_t reefers = 0;
        std::unordered_map<ContainerId, int> seen;
        for (const auto& c : containers) {
            if (c.id < 0)
                throw validation_error("container id must be non-negative: " +
                                       std::to_string(c.id));
            if (++seen[c.id] > 1)
                throw validation_error("duplicate container id: " + std::to_string(c.id));
            if (c.delivery_date < 1)
                throw validation_error("delivery date must be >= 1 for container " +
                                       std::to_string(c.id));
            if (c.ctype == ContainerType::reefer) ++reefers;
        }
        if (reefers > config.refrigerated_capacity())
            throw validation_error("reefer count exceeds refrigerated capacity");
    }
};

/// Fast id -> container lookup built once per instance where the linear scan
/// in Instance::lookup would be too slow.
class ContainerIndex {
  public:
    explicit ContainerIndex(const Instance& inst) {
        map_.reserve(inst.containers.size());
        for (const auto& c : inst.containers) map_.emplace(c.id, &c);
    }

    const Container& at(ContainerId id) const {
        auto it = map_.find(id);
        if (it == map_.end())
            throw lookup_error("unknown container id: " + std::to_string(id));
        return *it->second;
    }

    const Container* find(ContainerId id) const {
        auto it = map_.find(id);
        return it == map_.end() ? nullptr : it->second;
    }

    std::size_t size() const { return map_.size(); }

  private:
    std::unordered_map<ContainerId, const Container*> map_;
};

}  // namespace yardalloc
