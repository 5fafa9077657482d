#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <string>

#include "json.hpp"
#include "yardalloc/core.hpp"
#include "yardalloc/layout.hpp"
#include "yardalloc/rng.hpp"

namespace yardalloc {

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

/// Recipe for a random instance: yard shape, how many containers of each
/// type, and the inclusive delivery-date window the dates are drawn from.
struct GenSpec {
    YardConfig config;
    std::array<std::int64_t, kTypeCount> counts{};  // indexed by type code - 1
    Date date_min = 1;
    Date date_max = 30;
    std::uint64_t seed = 0;

    std::int64_t& count(ContainerType t) { return counts[static_cast<std::size_t>(type_code(t)) - 1]; }
    std::int64_t count(ContainerType t) const {
        return counts[static_cast<std::size_t>(type_code(t)) - 1];
    }

    std::int64_t total() const {
        std::int64_t n = 0;
        for (std::int64_t c : counts) n += c;
        return n;
    }

    void validate() const {
        config.validate();
        for (std::int64_t c : counts)
            if (c < 0) throw spec_error("container counts must be >= 0");
        if (date_min < 1) throw spec_error("date_min must be >= 1");
        if (date_max < date_min) throw spec_error("date_max must be >= date_min");
        if (total() > config.cell_count())
            throw spec_error("requested containers exceed yard capacity");
        if (count(ContainerType::reefer) > config.refrigerated_capacity())
            throw spec_error("requested reefers exceed refrigerated capacity");
    }
};

/// Deterministic instance from a recipe: ids run 1..total in ascending type
/// order, every delivery date drawn uniformly from [date_min, date_max] with
/// the recipe's seed.
inline Instance generate_instance(const GenSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    Instance inst;
    inst.config = spec.config;
    inst.containers.reserve(static_cast<std::size_t>(spec.total()));
    ContainerId next_id = 1;
    for (int code = 1; code <= kTypeCount; ++code) {
        ContainerType t = type_from_code(code);
        for (std::int64_t k = 0; k < spec.count(t); ++k) {
            Container c;
            c.id = next_id++;
            c.ctype = t;
            c.delivery_date = rng.between(spec.date_min, spec.date_max);
            inst.containers.push_back(c);
        }
    }
    inst.validate();
    return inst;
}

/// The five benchmark cases used by the baseline comparison: fixed per-type
/// counts of growing size and variety on a five-block yard (two powered),
/// 3x3 ground positions, three tiers.
inline Instance benchmark_preset(int n, Date date_min = 1, Date date_max = 30,
                                 std::uint64_t seed = 0) {
    if (n < 1 || n > 5) throw config_error("benchmark case out of range: " + std::to_string(n));
    GenSpec spec;
    spec.config = YardConfig{3, 3, 3, 2, 3};
    spec.date_min = date_min;
    spec.date_max = date_max;
    spec.seed = seed;
    switch (n) {
        case 1:
            spec.count(ContainerType::dry) = 50;
            spec.count(ContainerType::open_top) = 15;
            break;
        case 2:
            spec.count(ContainerType::dry) = 25;
            spec.count(ContainerType::empty) = 25;
            spec.count(ContainerType::open_top) = 10;
            break;
        case 3:
            spec.count(ContainerType::open_top) = 8;
            spec.count(ContainerType::open_side) = 5;
            spec.count(ContainerType::tank) = 7;
            spec.count(ContainerType::reefer) = 15;
            break;
        case 4:
            spec.count(ContainerType::empty) = 14;
            spec.count(ContainerType::open_top) = 8;
            spec.count(ContainerType::open_side) = 5;
            spec.count(ContainerType::tank) = 7;
            spec.count(ContainerType::reefer) = 15;
            break;
        case 5:
            spec.count(ContainerType::dry) = 25;
            spec.count(ContainerType::empty) = 14;
            spec.count(ContainerType::open_top) = 9;
            spec.count(ContainerType::open_side) = 8;
            spec.count(ContainerType::tank) = 7;
            spec.count(ContainerType::reefer) = 12;
            break;
    }
    return generate_instance(spec);
}

// ---------------------------------------------------------------------------
// JSON files
// ---------------------------------------------------------------------------

namespace detail {

template <typename T>
T get_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad field ") + key + ": " + e.what());
    }
}

inline nlohmann::ordered_json config_to_json(const YardConfig& cfg) {
    nlohmann::ordered_json j;
    j["n1"] = cfg.slots_x;
    j["n2"] = cfg.slots_y;
    j["n3"] = cfg.tiers;
    j["n_stock_refrig"] = cfg.refrig_blocks;
    j["n_stock_reg"] = cfg.regular_blocks;
    return j;
}

inline YardConfig config_from_json(const nlohmann::json& j) {
    YardConfig cfg;
    cfg.slots_x = get_field<int>(j, "n1");
    cfg.slots_y = get_field<int>(j, "n2");
    cfg.tiers = get_field<int>(j, "n3");
    cfg.refrig_blocks = get_field<int>(j, "n_stock_refrig");
    cfg.regular_blocks = get_field<int>(j, "n_stock_reg");
    try {
        cfg.validate();
    } catch (const config_error& e) {
        throw validation_error(std::string("bad yard config: ") + e.what());
    }
    return cfg;
}

inline nlohmann::json parse_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw io_error(std::string("cannot open ") + what + " file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string(what) + " file " + path + ": " + e.what());
    }
}

inline void write_file(const std::string& path, const nlohmann::ordered_json& j,
                       const char* what) {
    std::ofstream out(path);
    if (!out) throw io_error(std::string("cannot open ") + what + " file for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error(std::string("failed writing ") + what + " file: " + path);
}

inline void check_version(const nlohmann::json& j, const char* what) {
    int v = get_field<int>(j, "format_version");
    if (v != 1)
        throw parse_error(std::string(what) + ": unsupported format_version " +
                          std::to_string(v));
}

}  // namespace detail

inline void save_instance(const Instance& inst, const std::string& path) {
    inst.validate();
    nlohmann::ordered_json j;
    j["format_version"] = 1;
    j["config"] = detail::config_to_json(inst.config);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Container& c : inst.containers) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["type"] = type_code(c.ctype);
        e["delivery_date"] = c.delivery_date;
        arr.push_back(std::move(e));
    }
    j["containers"] = std::move(arr);
    detail::write_file(path, j, "instance");
}

inline Instance load_instance(const std::string& path) {
    nlohmann::json j = detail::parse_file(path, "instance");
    detail::check_version(j, "instance");
    Instance inst;
    inst.config = detail::config_from_json(detail::get_field<nlohmann::json>(j, "config"));
    nlohmann::json arr = detail::get_field<nlohmann::json>(j, "containers");
    if (!arr.is_array()) throw parse_error("containers must be an array");
    for (const nlohmann::json& e : arr) {
        Container c;
        c.id = detail::get_field<ContainerId>(e, "id");
        c.ctype = type_from_code(detail::get_field<int>(e, "type"));
        c.delivery_date = detail::get_field<Date>(e, "delivery_date");
        inst.containers.push_back(c);
    }
    inst.validate();
    return inst;
}

inline void save_plan(const Layout& layout, const std::string& path) {
    nlohmann::ordered_json j;
    j["format_version"] = 1;
    j["config"] = detail::config_to_json(layout.config());
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [id, coord] : layout.placements()) {
        nlohmann::ordered_json e;
        e["id"] = id;
        e["x"] = coord.x;
        e["y"] = coord.y;
        e["z"] = coord.z;
        e["j"] = coord.block;
        arr.push_back(std::move(e));
    }
    j["placements"] = std::move(arr);
    detail::write_file(path, j, "plan");
}

/// Reads a plan and checks it structurally against the instance: the yard
/// config must match, every id must belong to the instance, coordinates must
/// be in bounds and cells unique. Stacking rules are deliberately not checked
/// here; run validate_layout on the result for those.
inline Layout load_plan(const std::string& path, const Instance& instance) {
    nlohmann::json j = detail::parse_file(path, "plan");
    detail::check_version(j, "plan");
    YardConfig cfg = detail::config_from_json(detail::get_field<nlohmann::json>(j, "config"));
    if (!(cfg == instance.config))
        throw validation_error("plan yard config does not match the instance");
    ContainerIndex index(instance);
    Layout layout(cfg);
    nlohmann::json arr = detail::get_field<nlohmann::json>(j, "placements");
    if (!arr.is_array()) throw parse_error("placements must be an array");
    for (const nlohmann::json& e : arr) {
        ContainerId id = detail::get_field<ContainerId>(e, "id");
        Coord coord;
        coord.x = detail::get_field<int>(e, "x");
        coord.y = detail::get_field<int>(e, "y");
        coord.z = detail::get_field<int>(e, "z");
        coord.block = detail::get_field<int>(e, "j");
        if (!index.find(id))
            throw validation_error("plan places unknown container id: " + std::to_string(id));
        if (!in_bounds(cfg, coord))
            throw validation_error("plan coordinate out of bounds: " + to_string(coord));
        if (layout.occupied(coord))
            throw validation_error("plan places two containers at " + to_string(coord));
        if (layout.find(id))
            throw validation_error("plan places container " + std::to_string(id) + " twice");
        layout.place(id, coord);
    }
    return layout;
}

}  // namespace yardalloc
