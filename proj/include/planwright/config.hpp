#pragma once

// Generator configuration: distributions, dimensional limits, the room
// priority list and connection rules. Loadable from JSON; the joint
// bedroom/room-count table can come from the built-in census values or a CSV.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "planwright/rooms.hpp"

namespace planwright {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Probability of each (bedrooms, rooms) pair; rows are 0-4 bedrooms,
/// columns 1-10 rooms.
class JointCountTable {
public:
    static constexpr int kBedroomRows = 5;
    static constexpr int kRoomColumns = 10;
    using Grid = std::array<std::array<double, kRoomColumns>, kBedroomRows>;

    /// Validates and renormalises. Throws ConfigError.
    explicit JointCountTable(const Grid& probabilities) : p_(probabilities) {
        double total = 0.0;
        for (int b = 0; b < kBedroomRows; ++b) {
            for (int r = 0; r < kRoomColumns; ++r) {
                const double v = p_[b][r];
                if (!std::isfinite(v) || v < 0.0) throw ConfigError("joint table: entries must be finite and >= 0");
                if (v > 0.0 && b >= r + 1) {
                    throw ConfigError("joint table: cell (" + std::to_string(b) + " bedrooms, " + std::to_string(r + 1) +
                                      " rooms) must be 0");
                }
                total += v;
            }
        }
        if (!(total > 0.0)) throw ConfigError("joint table: all entries are zero");
        for (auto& row : p_)
            for (auto& v : row) v /= total;
    }

    /// Joint distribution of bedroom and room counts from the 2001 Canadian
    /// census.
    static JointCountTable census_2001() {
        return JointCountTable(Grid{{
            {8.0338e-3, 1.4385e-2, 6.3392e-4, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 8.0221e-2, 4.3408e-2, 1.1586e-2, 3.4386e-3, 1.1857e-3, 5.8376e-4, 2.1361e-4, 1.0810e-4},
            {0, 0, 0, 9.6780e-2, 9.0908e-2, 3.9446e-2, 1.6442e-2, 8.5631e-3, 2.9806e-3, 1.5026e-3},
            {0, 0, 0, 0, 7.6431e-2, 1.0599e-1, 8.0343e-2, 5.4633e-2, 2.5820e-2, 2.5868e-2},
            {0, 0, 0, 0, 0, 1.4412e-2, 3.4647e-2, 5.2167e-2, 3.9863e-2, 6.9406e-2},
        }});
    }

    /// 5 rows x 10 comma-separated columns; blank lines and '#' comments ignored.
    static JointCountTable from_csv(std::istream& in) {
        Grid g{};
        std::string line;
        int row = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
            if (row >= kBedroomRows) throw ConfigError("joint table CSV: more than 5 rows");
            std::stringstream ss(line);
            std::string cell;
            int col = 0;
            while (std::getline(ss, cell, ',')) {
                if (col >= kRoomColumns) throw ConfigError("joint table CSV: row " + std::to_string(row + 1) + " has more than 10 columns");
                try {
                    std::size_t used = 0;
                    g[row][col] = std::stod(cell, &used);
                } catch (const std::exception&) {
                    throw ConfigError("joint table CSV: bad number '" + cell + "' in row " + std::to_string(row + 1));
                }
                ++col;
            }
            if (col != kRoomColumns) throw ConfigError("joint table CSV: row " + std::to_string(row + 1) + " needs 10 columns");
            ++row;
        }
        if (row != kBedroomRows) throw ConfigError("joint table CSV: expected 5 rows");
        return JointCountTable(g);
    }

    double probability(int bedrooms, int rooms) const {
        if (bedrooms < 0 || bedrooms >= kBedroomRows || rooms < 1 || rooms > kRoomColumns) return 0.0;
        return p_[bedrooms][rooms - 1];
    }

    const Grid& grid() const { return p_; }
    bool operator==(const JointCountTable&) const = default;

private:
    Grid p_;
};

/// Uniform(min, max); min == max is a point mass.
struct AreaDistribution {
    double min = 0.0;
    double max = 0.0;
    bool operator==(const AreaDistribution&) const = default;
};

struct OptionalEdgeRule {
    RoomKind a;
    RoomKind b;
    double probability;
    bool operator==(const OptionalEdgeRule&) const = default;
};

struct GenConfig {
    std::map<RoomKind, AreaDistribution> area;
    AreaDistribution footprint_aspect{1.0, 2.0};
    double max_footprint_aspect = 2.0;

    double corridor_width = 1.0;  // m
    double door_width = 0.9;      // m
    double window_width = 1.2;    // m
    double min_room_width = 1.8;  // m
    double max_room_aspect = 4.0;

    std::vector<RoomKind> priority;
    std::vector<OptionalEdgeRule> optional_edges;
    std::vector<std::pair<RoomKind, RoomKind>> prohibited_pairs;
    std::vector<RoomKind> no_window;
    int windows_per_room = 1;
    double kitchen_via_dining_probability = 0.5;

    int max_attempts = 32;
    /// Upper bound on corridor candidates evaluated per plan.
    int max_corridor_candidates = 256;

    JointCountTable joint_table = JointCountTable::census_2001();

    static GenConfig defaults() {
        GenConfig c;
        for (auto k : kAllRoomKinds) {
            if (k == RoomKind::Outside) continue;
            c.area[k] = is_bedroom(k) ? AreaDistribution{8.0, 18.0} : AreaDistribution{3.0, 11.0};
        }
        c.priority = {RoomKind::Outside,  RoomKind::LivingRoom, RoomKind::Kitchen, RoomKind::MasterBedroom,
                      RoomKind::Bathroom, RoomKind::Bedroom,    RoomKind::DiningRoom, RoomKind::Bedroom,
                      RoomKind::Bathroom, RoomKind::Laundry,    RoomKind::Pantry,  RoomKind::Storage};
        c.optional_edges = {{RoomKind::Kitchen, RoomKind::DiningRoom, 0.5},
                            {RoomKind::LivingRoom, RoomKind::DiningRoom, 0.5},
                            {RoomKind::LivingRoom, RoomKind::Kitchen, 0.3}};
        c.prohibited_pairs = {{RoomKind::MasterBedroom, RoomKind::Kitchen},
                              {RoomKind::Bedroom, RoomKind::Kitchen},
                              {RoomKind::MasterBedroom, RoomKind::Bedroom},
                              {RoomKind::Bedroom, RoomKind::Bedroom}};
        c.no_window = {RoomKind::Bathroom};
        return c;
    }

    bool prohibited(RoomKind a, RoomKind b) const {
        for (const auto& [x, y] : prohibited_pairs)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    }

    bool window_allowed(RoomKind k) const {
        for (auto n : no_window)
            if (n == k) return false;
        return true;
    }

    void validate() const {
        auto positive = [](double v, const char* what) {
            if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(what) + " must be > 0");
        };
        positive(corridor_width, "corridor_width");
        positive(door_width, "door_width");
        positive(window_width, "window_width");
        positive(min_room_width, "min_room_width");
        if (!(max_room_aspect >= 1.0)) throw ConfigError("max_room_aspect must be >= 1");
        if (!(footprint_aspect.min >= 1.0) || footprint_aspect.max < footprint_aspect.min)
            throw ConfigError("footprint_aspect must satisfy 1 <= min <= max");
        if (!(max_footprint_aspect >= footprint_aspect.min))
            throw ConfigError("max_footprint_aspect must be >= footprint_aspect.min");
        for (const auto& [kind, d] : area) {
            if (!(d.min > 0.0) || d.max < d.min)
                throw ConfigError("area distribution for " + std::string(to_string(kind)) + " must satisfy 0 < min <= max");
        }
        if (priority.size() < 2 || priority[0] != RoomKind::Outside || priority[1] != RoomKind::LivingRoom)
            throw ConfigError("priority list must start with Outside, LivingRoom");
        for (std::size_t i = 1; i < priority.size(); ++i)
            if (priority[i] == RoomKind::Outside) throw ConfigError("priority list: Outside may only appear first");
        for (const auto& e : optional_edges)
            if (e.probability < 0.0 || e.probability > 1.0) throw ConfigError("optional edge probability must be in [0,1]");
        if (kitchen_via_dining_probability < 0.0 || kitchen_via_dining_probability > 1.0)
            throw ConfigError("kitchen_via_dining_probability must be in [0,1]");
        if (windows_per_room < 0) throw ConfigError("windows_per_room must be >= 0");
        if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
        if (max_corridor_candidates < 1) throw ConfigError("max_corridor_candidates must be >= 1");
    }

    bool operator==(const GenConfig&) const = default;
};

// ---------------------------------------------------------------------------
// JSON

namespace config_detail {

inline RoomKind kind_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_string()) throw ConfigError(path + ": expected a room kind string");
    auto k = parse_room_kind(j.get<std::string>());
    if (!k) throw ConfigError(path + ": unknown room kind '" + j.get<std::string>() + "'");
    return *k;
}

inline double number(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path + ": expected a number");
    return j.get<double>();
}

inline void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    if (!obj.is_object()) throw ConfigError(path + ": expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw ConfigError(path + "/" + key + ": unknown field");
    }
}

inline AreaDistribution distribution(const nlohmann::json& j, const std::string& path) {
    if (j.is_number()) return {j.get<double>(), j.get<double>()};
    reject_unknown(j, {"min", "max"}, path);
    if (!j.contains("min") || !j.contains("max")) throw ConfigError(path + ": needs min and max");
    return {number(j["min"], path + "/min"), number(j["max"], path + "/max")};
}

}  // namespace config_detail

inline nlohmann::ordered_json to_json(const GenConfig& c) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json areas = nlohmann::ordered_json::object();
    for (auto k : kAllRoomKinds) {
        auto it = c.area.find(k);
        if (it != c.area.end()) areas[std::string(to_string(k))] = {{"min", it->second.min}, {"max", it->second.max}};
    }
    j["area"] = areas;
    j["footprint_aspect"] = {{"min", c.footprint_aspect.min}, {"max", c.footprint_aspect.max}};
    j["max_footprint_aspect"] = c.max_footprint_aspect;
    j["corridor_width"] = c.corridor_width;
    j["door_width"] = c.door_width;
    j["window_width"] = c.window_width;
    j["min_room_width"] = c.min_room_width;
    j["max_room_aspect"] = c.max_room_aspect;
    auto& pr = j["priority"] = nlohmann::ordered_json::array();
    for (auto k : c.priority) pr.push_back(std::string(to_string(k)));
    auto& oe = j["optional_edges"] = nlohmann::ordered_json::array();
    for (const auto& e : c.optional_edges)
        oe.push_back({{"a", std::string(to_string(e.a))}, {"b", std::string(to_string(e.b))}, {"probability", e.probability}});
    auto& pp = j["prohibited_pairs"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : c.prohibited_pairs) pp.push_back({std::string(to_string(a)), std::string(to_string(b))});
    auto& nw = j["no_window"] = nlohmann::ordered_json::array();
    for (auto k : c.no_window) nw.push_back(std::string(to_string(k)));
    j["windows_per_room"] = c.windows_per_room;
    j["kitchen_via_dining_probability"] = c.kitchen_via_dining_probability;
    j["max_attempts"] = c.max_attempts;
    j["max_corridor_candidates"] = c.max_corridor_candidates;
    auto& jt = j["joint_table"] = nlohmann::ordered_json::array();
    for (const auto& row : c.joint_table.grid()) jt.push_back(row);
    return j;
}

/// Overlays the fields present in `j` onto the defaults. Unknown fields are
/// rejected with their JSON path. `base_dir` resolves joint_table_csv.
inline GenConfig config_from_json(const nlohmann::json& j, const std::string& base_dir = ".") {
    using namespace config_detail;
    reject_unknown(j,
                   {"area", "footprint_aspect", "max_footprint_aspect", "corridor_width", "door_width", "window_width",
                    "min_room_width", "max_room_aspect", "priority", "optional_edges", "prohibited_pairs", "no_window",
                    "windows_per_room", "kitchen_via_dining_probability", "max_attempts", "max_corridor_candidates",
                    "joint_table", "joint_table_csv"},
                   "");
    GenConfig c = GenConfig::defaults();
    if (j.contains("area")) {
        const auto& a = j["area"];
        if (!a.is_object()) throw ConfigError("/area: expected an object");
        for (const auto& [key, val] : a.items()) {
            const RoomKind k = kind_from_json(key, "/area/" + key);
            c.area[k] = distribution(val, "/area/" + key);
        }
    }
    if (j.contains("footprint_aspect")) c.footprint_aspect = distribution(j["footprint_aspect"], "/footprint_aspect");
    auto num = [&](const char* key, double& out) {
        if (j.contains(key)) out = number(j[key], std::string("/") + key);
    };
    num("max_footprint_aspect", c.max_footprint_aspect);
    num("corridor_width", c.corridor_width);
    num("door_width", c.door_width);
    num("window_width", c.window_width);
    num("min_room_width", c.min_room_width);
    num("max_room_aspect", c.max_room_aspect);
    num("kitchen_via_dining_probability", c.kitchen_via_dining_probability);
    auto integer = [&](const char* key, int& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_integer()) throw ConfigError(std::string("/") + key + ": expected an integer");
        out = j[key].get<int>();
    };
    integer("windows_per_room", c.windows_per_room);
    integer("max_attempts", c.max_attempts);
    integer("max_corridor_candidates", c.max_corridor_candidates);
    if (j.contains("priority")) {
        if (!j["priority"].is_array()) throw ConfigError("/priority: expected an array");
        c.priority.clear();
        for (std::size_t i = 0; i < j["priority"].size(); ++i)
            c.priority.push_back(kind_from_json(j["priority"][i], "/priority/" + std::to_string(i)));
    }
    if (j.contains("optional_edges")) {
        if (!j["optional_edges"].is_array()) throw ConfigError("/optional_edges: expected an array");
        c.optional_edges.clear();
        for (std::size_t i = 0; i < j["optional_edges"].size(); ++i) {
            const auto& e = j["optional_edges"][i];
            const std::string p = "/optional_edges/" + std::to_string(i);
            reject_unknown(e, {"a", "b", "probability"}, p);
            if (!e.contains("a") || !e.contains("b") || !e.contains("probability")) throw ConfigError(p + ": needs a, b, probability");
            c.optional_edges.push_back({kind_from_json(e["a"], p + "/a"), kind_from_json(e["b"], p + "/b"),
                                        number(e["probability"], p + "/probability")});
        }
    }
    if (j.contains("prohibited_pairs")) {
        if (!j["prohibited_pairs"].is_array()) throw ConfigError("/prohibited_pairs: expected an array");
        c.prohibited_pairs.clear();
        for (std::size_t i = 0; i < j["prohibited_pairs"].size(); ++i) {
            const auto& e = j["prohibited_pairs"][i];
            const std::string p = "/prohibited_pairs/" + std::to_string(i);
            if (!e.is_array() || e.size() != 2) throw ConfigError(p + ": expected a pair of room kinds");
            c.prohibited_pairs.push_back({kind_from_json(e[0], p + "/0"), kind_from_json(e[1], p + "/1")});
        }
    }
    if (j.contains("no_window")) {
        if (!j["no_window"].is_array()) throw ConfigError("/no_window: expected an array");
        c.no_window.clear();
        for (std::size_t i = 0; i < j["no_window"].size(); ++i)
            c.no_window.push_back(kind_from_json(j["no_window"][i], "/no_window/" + std::to_string(i)));
    }
    if (j.contains("joint_table") && j.contains("joint_table_csv"))
        throw ConfigError("/joint_table_csv: give either joint_table or joint_table_csv, not both");
    if (j.contains("joint_table")) {
        const auto& t = j["joint_table"];
        if (!t.is_array() || t.size() != JointCountTable::kBedroomRows) throw ConfigError("/joint_table: expected 5 rows");
        JointCountTable::Grid g{};
        for (int r = 0; r < JointCountTable::kBedroomRows; ++r) {
            const auto& row = t[static_cast<std::size_t>(r)];
            if (!row.is_array() || row.size() != JointCountTable::kRoomColumns)
                throw ConfigError("/joint_table/" + std::to_string(r) + ": expected 10 columns");
            for (int col = 0; col < JointCountTable::kRoomColumns; ++col)
                g[r][col] = number(row[static_cast<std::size_t>(col)], "/joint_table/" + std::to_string(r) + "/" + std::to_string(col));
        }
        c.joint_table = JointCountTable(g);
    }
    if (j.contains("joint_table_csv")) {
        if (!j["joint_table_csv"].is_string()) throw ConfigError("/joint_table_csv: expected a path");
        std::string path = j["joint_table_csv"].get<std::string>();
        if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
        std::ifstream in(path);
        if (!in) throw ConfigError("/joint_table_csv: cannot open " + path);
        c.joint_table = JointCountTable::from_csv(in);
    }
    c.validate();
    return c;
}

inline GenConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    const auto slash = path.find_last_of('/');
    return config_from_json(j, slash == std::string::npos ? "." : path.substr(0, slash));
}

/// FNV-1a 64 over the canonical JSON form, as 16 hex digits.
inline std::string fingerprint(const GenConfig& c) {
    const std::string text = to_json(c).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace planwright
