#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "yardalloc/core.hpp"
#include "yardalloc/layout.hpp"

namespace yardalloc {

/// Which stacking rule a violation belongs to. Values 3..9 match the rule
/// numbering used in the violation reports; placement_incomplete is the
/// extra completeness check applied by validate_layout.
enum class ConstraintId : int {
    floor_monotone = 3,        // tier k may not hold fewer containers than tier k+1
    support = 4,               // no floating containers
    open_top = 5,              // nothing above an open-top
    open_side = 6,             // nothing above or right of an open-side
    empty_under_full = 7,      // an empty may carry only empties
    tank_stack = 8,            // a tank may carry only tanks
    reefer_block = 9,          // reefers only in powered blocks
    placement_incomplete = 10, // some instance container is missing
};

inline const char* constraint_name(ConstraintId id) {
    switch (id) {
        case ConstraintId::floor_monotone: return "floor-monotone";
        case ConstraintId::support: return "support";
        case ConstraintId::open_top: return "open-top";
        case ConstraintId::open_side: return "open-side";
        case ConstraintId::empty_under_full: return "empty-under-full";
        case ConstraintId::tank_stack: return "tank-stack";
        case ConstraintId::reefer_block: return "reefer-block";
        case ConstraintId::placement_incomplete: return "placement-incomplete";
    }
    return "?";
}

struct Violation {
    ConstraintId constraint;
    Coord coord;  // for floor_monotone: z = offending lower tier, x = y = 1
    std::string detail;
};

inline std::string to_string(const Violation& v) {
    return std::string(constraint_name(v.constraint)) + " at " + to_string(v.coord) + ": " +
           v.detail;
}

// ---------------------------------------------------------------------------
// Per-rule predicates. Each scans the whole layout and reports independently;
// validate_layout concatenates them.
// ---------------------------------------------------------------------------

/// An occupied cell above tier 1 needs an occupied cell directly underneath.
inline std::vector<Violation> check_support(const Layout& layout) {
    std::vector<Violation> out;
    const YardConfig& cfg = layout.config();
    Coord c;
    for (c.block = 1; c.block <= cfg.total_blocks(); ++c.block)
        for (c.z = 2; c.z <= cfg.tiers; ++c.z)
            for (c.y = 1; c.y <= cfg.slots_y; ++c.y)
                for (c.x = 1; c.x <= cfg.slots_x; ++c.x) {
                    ContainerId id = layout.occupant(c);
                    if (id == kNoContainer) continue;
                    Coord below = c;
                    below.z = c.z - 1;
                    if (layout.occupant(below) == kNoContainer)
                        out.push_back({ConstraintId::support, c,
                                       "container " + std::to_string(id) +
                                           " floats above an empty cell"});
                }
    return out;
}

/// Per block, tier k must hold at least as many containers as tier k+1. Gap
/// free stacks satisfy this automatically; it is kept as its own check so a
/// report can cite the rule directly.
inline std::vector<Violation> check_floor_monotone(const Layout& layout) {
    std::vector<Violation> out;
    const YardConfig& cfg = layout.config();
    for (int j = 1; j <= cfg.total_blocks(); ++j)
        for (int k = 1; k + 1 <= cfg.tiers; ++k) {
            int lower = layout.floor_count(j, k);
            int upper = layout.floor_count(j, k + 1);
            if (lower < upper)
                out.push_back({ConstraintId::floor_monotone, Coord{1, 1, k, j},
                               "tier " + std::to_string(k) + " holds " + std::to_string(lower) +
                                   " containers but tier " + std::to_string(k + 1) + " holds " +
                                   std::to_string(upper)});
        }
    return out;
}

namespace detail {

/// Applies `fn(coord, container)` to every placed container, in id order.
template <typename Fn>
void for_each_placed(const Layout& layout, const ContainerIndex& index, Fn&& fn) {
    for (const auto& [id, coord] : layout.placements()) {
        const Container* c = index.find(id);
        if (!c) throw lookup_error("layout holds unknown container id: " + std::to_string(id));
        fn(coord, *c);
    }
}

}  // namespace detail

/// Nothing may sit above an open-top container.
inline std::vector<Violation> check_open_top(const Layout& layout, const ContainerIndex& index) {
    std::vector<Violation> out;
    detail::for_each_placed(layout, index, [&](const Coord& coord, const Container& c) {
        if (c.ctype != ContainerType::open_top) return;
        if (coord.z >= layout.config().tiers) return;
        Coord above = coord;
        above.z = coord.z + 1;
        ContainerId top = layout.occupant(above);
        if (top != kNoContainer)
            out.push_back({ConstraintId::open_top, coord,
                           "open-top container " + std::to_string(c.id) + " carries container " +
                               std::to_string(top)});
    });
    return out;
}

/// An open-side container needs every cell above it in its stack empty and
/// every cell at the same (y, z) with larger x in its block empty. One
/// violation per offending container.
inline std::vector<Violation> check_open_side(const Layout& layout, const ContainerIndex& index) {
    std::vector<Violation> out;
    const YardConfig& cfg = layout.config();
    detail::for_each_placed(layout, index, [&](const Coord& coord, const Container& c) {
        if (c.ctype != ContainerType::open_side) return;
        Coord probe = coord;
        for (int z = coord.z + 1; z <= cfg.tiers; ++z) {
            probe.z = z;
            if (layout.occupant(probe) != kNoContainer) {
                out.push_back({ConstraintId::open_side, coord,
                               "open-side container " + std::to_string(c.id) +
                                   " has container " + std::to_string(layout.occupant(probe)) +
                                   " above it"});
                return;
            }
        }
        probe = coord;
        for (int x = coord.x + 1; x <= cfg.slots_x; ++x) {
            probe.x = x;
            if (layout.occupant(probe) != kNoContainer) {
                out.push_back({ConstraintId::open_side, coord,
                               "open-side container " + std::to_string(c.id) +
                                   " is blocked at " + to_string(probe) + " by container " +
                                   std::to_string(layout.occupant(probe))});
                return;
            }
        }
    });
    return out;
}

/// Whatever sits directly on an empty container must itself be an empty.
inline std::vector<Violation> check_empty_stacking(const Layout& layout,
                                                   const ContainerIndex& index) {
    std::vector<Violation> out;
    detail::for_each_placed(layout, index, [&](const Coord& coord, const Container& c) {
        if (c.ctype != ContainerType::empty) return;
        if (coord.z >= layout.config().tiers) return;
        Coord above = coord;
        above.z = coord.z + 1;
        ContainerId top = layout.occupant(above);
        if (top == kNoContainer) return;
        const Container* tc = index.find(top);
        if (!tc) throw lookup_error("layout holds unknown container id: " + std::to_string(top));
        if (tc->ctype != ContainerType::empty)
            out.push_back({ConstraintId::empty_under_full, coord,
                           "empty container " + std::to_string(c.id) + " carries " +
                               type_name(tc->ctype) + " container " + std::to_string(top)});
    });
    return out;
}

/// Whatever sits directly on a tank must itself be a tank. A tank standing on
/// some other type is allowed; the rule constrains only the cell above.
inline std::vector<Violation> check_tank_stacking(const Layout& layout,
                                                  const ContainerIndex& index) {
    std::vector<Violation> out;
    detail::for_each_placed(layout, index, [&](const Coord& coord, const Container& c) {
        if (c.ctype != ContainerType::tank) return;
        if (coord.z >= layout.config().tiers) return;
        Coord above = coord;
        above.z = coord.z + 1;
        ContainerId top = layout.occupant(above);
        if (top == kNoContainer) return;
        const Container* tc = index.find(top);
        if (!tc) throw lookup_error("layout holds unknown container id: " + std::to_string(top));
        if (tc->ctype != ContainerType::tank)
            out.push_back({ConstraintId::tank_stack, coord,
                           "tank container " + std::to_string(c.id) + " carries " +
                               type_name(tc->ctype) + " container " + std::to_string(top)});
    });
    return out;
}

/// Reefers may only stand in powered blocks.
inline std::vector<Violation> check_reefer_block(const Layout& layout,
                                                 const ContainerIndex& index) {
    std::vector<Violation> out;
    detail::for_each_placed(layout, index, [&](const Coord& coord, const Container& c) {
        if (c.ctype != ContainerType::reefer) return;
        if (coord.block > layout.config().refrig_blocks)
            out.push_back({ConstraintId::reefer_block, coord,
                           "reefer container " + std::to_string(c.id) +
                               " stands in unpowered block " + std::to_string(coord.block)});
    });
    return out;
}

// ---------------------------------------------------------------------------
// Whole-layout validation
// ---------------------------------------------------------------------------

/// All seven rule checks plus a completeness check: every instance container
/// placed exactly once. Returns the concatenated violation list; empty means
/// the layout is a complete feasible plan for the instance.
inline std::vector<Violation> validate_layout(const Layout& layout, const Instance& instance) {
    ContainerIndex index(instance);
    // Integrity precondition: placed ids must all belong to the instance.
    for (const auto& [id, coord] : layout.placements())
        if (!index.find(id))
            throw lookup_error("layout holds unknown container id: " + std::to_string(id));

    std::vector<Violation> out = check_support(layout);
    auto append = [&out](std::vector<Violation> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    append(check_floor_monotone(layout));
    append(check_open_top(layout, index));
    append(check_open_side(layout, index));
    append(check_empty_stacking(layout, index));
    append(check_tank_stacking(layout, index));
    append(check_reefer_block(layout, index));

    for (const auto& c : instance.containers)
        if (!layout.find(c.id))
            out.push_back({ConstraintId::placement_incomplete, Coord{0, 0, 0, 0},
                           "container " + std::to_string(c.id) + " is not placed"});
    return out;
}

/// Rule violations only, ignoring completeness. Used while layouts are still
/// being filled.
inline std::vector<Violation> rule_violations(const Layout& layout, const Instance& instance) {
    std::vector<Violation> out = validate_layout(layout, instance);
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Violation& v) {
                                 return v.constraint == ConstraintId::placement_incomplete;
                             }),
              out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Feasible position enumeration
// ---------------------------------------------------------------------------

namespace detail {

/// O(slots_x) legality check for dropping `c` at `at`, valid only when the
/// current layout has zero rule violations. Under that precondition the cells
/// above an empty cell are themselves empty and every stack is gap-free, so
/// only the cell below, the row to the right/left (for open-side rules) and
/// the block power need checking; tier monotonicity then follows from
/// support. placement_candidate_ok must agree with the simulation path in
/// feasible_positions; a property test enforces that.
inline bool placement_candidate_ok(const Layout& layout, const ContainerIndex& index,
                                   const Container& c, const Coord& at) {
    const YardConfig& cfg = layout.config();
    if (layout.occupant(at) != kNoContainer) return false;
    if (c.ctype == ContainerType::reefer && at.block > cfg.refrig_blocks) return false;

    if (at.z > 1) {
        Coord below = at;
        below.z = at.z - 1;
        ContainerId bid = layout.occupant(below);
        if (bid == kNoContainer) return false;  // would float
        ContainerType bt = index.at(bid).ctype;
        if (bt == ContainerType::open_top || bt == ContainerType::open_side) return false;
        if (bt == ContainerType::empty && c.ctype != ContainerType::empty) return false;
        if (bt == ContainerType::tank && c.ctype != ContainerType::tank) return false;
    }

    // No open-side to the left may get blocked, and an open-side candidate
    // needs its whole row to the right free.
    Coord probe = at;
    for (int x = 1; x < at.x; ++x) {
        probe.x = x;
        ContainerId id = layout.occupant(probe);
        if (id != kNoContainer && index.at(id).ctype == ContainerType::open_side) return false;
    }
    if (c.ctype == ContainerType::open_side) {
        for (int x = at.x + 1; x <= cfg.slots_x; ++x) {
            probe.x = x;
            if (layout.occupant(probe) != kNoContainer) return false;
        }
    }
    return true;
}

/// Enumerates candidate cells with placement_candidate_ok, in cell scan
/// order. Solver-internal: callers must hold a violation-free layout.
inline std::vector<Coord> feasible_cells(const Layout& layout, const ContainerIndex& index,
                                         const Container& c) {
    std::vector<Coord> out;
    for (std::size_t i = 0; i < layout.cell_count(); ++i) {
        Coord at = layout.coord_at(i);
        if (placement_candidate_ok(layout, index, c, at)) out.push_back(at);
    }
    return out;
}

struct ViolationKey {
    int constraint;
    Coord coord;
    bool operator==(const ViolationKey&) const = default;
};

inline std::vector<ViolationKey> violation_keys(const std::vector<Violation>& vs) {
    std::vector<ViolationKey> keys;
    keys.reserve(vs.size());
    for (const auto& v : vs) keys.push_back({static_cast<int>(v.constraint), v.coord});
    return keys;
}

/// True iff `after` contains a violation key not already present in `before`
/// (multiset semantics).
inline bool introduces_new_violation(const std::vector<Violation>& before,
                                     const std::vector<Violation>& after) {
    std::vector<ViolationKey> pool = violation_keys(before);
    for (const auto& v : after) {
        ViolationKey key{static_cast<int>(v.constraint), v.coord};
        auto it = std::find(pool.begin(), pool.end(), key);
        if (it == pool.end()) return true;
        pool.erase(it);
    }
    return false;
}

}  // namespace detail

/// Every empty cell where placing `container` adds no new rule violation.
/// On a violation-free layout this uses the O(slots_x)-per-cell direct check;
/// otherwise each candidate is evaluated by placing, re-validating and
/// rolling back, so the answer stays exact on broken layouts too.
inline std::vector<Coord> feasible_positions(const Layout& layout, const Container& container,
                                             const Instance& instance) {
    if (layout.find(container.id))
        throw duplicate_placement_error("container " + std::to_string(container.id) +
                                        " is already placed");
    ContainerIndex index(instance);
    std::vector<Violation> base = rule_violations(layout, instance);
    if (base.empty()) return detail::feasible_cells(layout, index, container);

    std::vector<Coord> out;
    Layout scratch = layout;
    for (std::size_t i = 0; i < layout.cell_count(); ++i) {
        Coord at = layout.coord_at(i);
        if (scratch.occupant(at) != kNoContainer) continue;
        scratch.place(container.id, at);
        std::vector<Violation> after = rule_violations(scratch, instance);
        if (!detail::introduces_new_violation(base, after)) out.push_back(at);
        scratch.remove(at);
    }
    return out;
}

}  // namespace yardalloc
