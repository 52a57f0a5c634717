#pragma once

// FloorPlan <-> JSON. Lengths are metres printed with three decimals, which
// is exact on the millimetre grid, so documents round-trip losslessly.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "planwright/pipeline.hpp"
#include "planwright/plan.hpp"

namespace planwright {

constexpr int kSchemaVersion = 1;

class PlanParseError : public std::runtime_error {
public:
    PlanParseError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    /// JSON pointer for schema errors, "line L, column C" for syntax errors.
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

namespace json_detail {

using ojson = nlohmann::ordered_json;

inline double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

inline void write_number(std::string& out, const ojson& j) {
    if (j.is_number_float()) {
        char buf[64];
        double v = round3(j.get<double>());
        if (v == 0.0) v = 0.0;  // no "-0.000"
        std::snprintf(buf, sizeof buf, "%.3f", v);
        out += buf;
    } else {
        out += j.dump();
    }
}

inline bool is_flat(const ojson& j) {
    if (!j.is_array() || j.empty() || j.size() > 16) return false;
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

inline void write(std::string& out, const ojson& j, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out += pad + ojson(it.key()).dump() + ": ";
            write(out, it.value(), depth + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (is_flat(j)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                write(out, j[i], depth + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            write(out, j[i], depth + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else if (j.is_number()) {
        write_number(out, j);
    } else {
        out += j.dump();
    }
}

inline ojson point(const GridPoint& p) { return ojson::array({to_m(p.x), to_m(p.y)}); }

inline ojson polygon(const Polygon& p) {
    ojson a = ojson::array();
    for (const auto& v : p.vertices) a.push_back(point(v));
    return a;
}

// ---- reading

inline void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> allowed, const std::string& path) {
    if (!j.is_object()) throw PlanParseError(path.empty() ? "/" : path, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) throw PlanParseError(path + "/" + k, "unknown field");
    }
    for (const char* a : allowed)
        if (!j.contains(a)) throw PlanParseError(path + "/" + a, "missing field");
}

inline const nlohmann::json& array_at(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array()) throw PlanParseError(path, "expected an array");
    return j;
}

inline std::int64_t integer(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number_integer()) throw PlanParseError(path, "expected an integer");
    return j.get<std::int64_t>();
}

inline double real(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number()) throw PlanParseError(path, "expected a number");
    return j.get<double>();
}

inline Coord mm(const nlohmann::json& j, const std::string& path) {
    const double v = real(j, path) * 1000.0;
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-6 * std::max(1.0, std::abs(v))) throw PlanParseError(path, "value is not on the millimetre grid");
    return static_cast<Coord>(r);
}

inline std::string text(const nlohmann::json& j, const std::string& path) {
    if (!j.is_string()) throw PlanParseError(path, "expected a string");
    return j.get<std::string>();
}

inline GridPoint read_point(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw PlanParseError(path, "expected [x, y]");
    return {mm(j[0], path + "/0"), mm(j[1], path + "/1")};
}

inline Polygon read_polygon(const nlohmann::json& j, const std::string& path) {
    Polygon p;
    const auto& a = array_at(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) p.vertices.push_back(read_point(a[i], path + "/" + std::to_string(i)));
    return p;
}

inline RoomKind read_kind(const nlohmann::json& j, const std::string& path) {
    const auto k = parse_room_kind(text(j, path));
    if (!k || *k == RoomKind::Outside) throw PlanParseError(path, "unknown room kind");
    return *k;
}

inline OpeningKind read_opening_kind(const nlohmann::json& j, const std::string& path) {
    const auto s = text(j, path);
    for (auto k : {OpeningKind::Door, OpeningKind::Window, OpeningKind::EntryDoor})
        if (s == to_string(k)) return k;
    throw PlanParseError(path, "unknown opening kind");
}

inline std::string line_column(const std::string& doc, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < doc.size(); ++i) {
        if (doc[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace json_detail

/// Pretty printer shared by every document the library writes.
inline std::string dump_json(const nlohmann::ordered_json& j) {
    std::string out;
    json_detail::write(out, j, 0);
    out += "\n";
    return out;
}

inline nlohmann::ordered_json plan_to_json(const FloorPlan& p) {
    using namespace json_detail;
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = p.seed;
    j["config_fingerprint"] = p.config_fingerprint;
    j["footprint"] = {{"x", to_m(p.footprint.x)},
                      {"y", to_m(p.footprint.y)},
                      {"width", to_m(p.footprint.width)},
                      {"height", to_m(p.footprint.height)}};
    auto& rooms = j["rooms"] = ojson::array();
    for (const auto& r : p.rooms) {
        rooms.push_back({{"id", r.id},
                         {"kind", std::string(to_string(r.kind))},
                         {"target_area", r.target_area},
                         {"area", polygon_area(r.shape)},
                         {"polygon", polygon(r.shape)}});
    }
    auto& cor = j["corridor"] = ojson::array();
    for (const auto& c : p.corridor) cor.push_back(polygon(c));
    auto& ops = j["openings"] = ojson::array();
    for (const auto& o : p.openings) {
        ops.push_back({{"kind", std::string(to_string(o.kind))},
                       {"wall", ojson::array({point(o.wall.a), point(o.wall.b)})},
                       {"offset", to_m(o.offset)},
                       {"width", to_m(o.width)},
                       {"a", o.a},
                       {"b", o.b}});
    }
    auto& con = j["connections"] = ojson::array();
    for (const auto& c : p.connections) con.push_back({{"a", c.a}, {"b", c.b}, {"mandatory", c.mandatory}});
    j["generation"] = {{"attempts", p.info.attempts},
                       {"corridor_candidates", p.info.corridor_candidates},
                       {"corridor_rooms", p.info.corridor_rooms}};
    return j;
}

inline std::string to_json(const FloorPlan& p) { return dump_json(plan_to_json(p)); }

/// Strict reader: every field is required, unknown fields are rejected, and
/// each room's "area" must agree with its polygon.
inline FloorPlan plan_from_json(const nlohmann::json& j) {
    using namespace json_detail;
    reject_unknown(j, {"schema_version", "seed", "config_fingerprint", "footprint", "rooms", "corridor", "openings",
                       "connections", "generation"},
                   "");
    if (integer(j["schema_version"], "/schema_version") != kSchemaVersion)
        throw PlanParseError("/schema_version", "unsupported schema version");
    FloorPlan p;
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) throw PlanParseError("/seed", "expected an integer");
    if (j["seed"].is_number_integer() && !j["seed"].is_number_unsigned() && j["seed"].get<std::int64_t>() < 0)
        throw PlanParseError("/seed", "expected a non-negative integer");
    p.seed = j["seed"].get<std::uint64_t>();
    p.config_fingerprint = text(j["config_fingerprint"], "/config_fingerprint");

    const auto& f = j["footprint"];
    reject_unknown(f, {"x", "y", "width", "height"}, "/footprint");
    p.footprint = {mm(f["x"], "/footprint/x"), mm(f["y"], "/footprint/y"), mm(f["width"], "/footprint/width"),
                   mm(f["height"], "/footprint/height")};

    const auto& rooms = array_at(j["rooms"], "/rooms");
    for (std::size_t i = 0; i < rooms.size(); ++i) {
        const std::string path = "/rooms/" + std::to_string(i);
        const auto& r = rooms[i];
        reject_unknown(r, {"id", "kind", "target_area", "area", "polygon"}, path);
        PlanRoom room;
        room.id = static_cast<RoomId>(integer(r["id"], path + "/id"));
        room.kind = read_kind(r["kind"], path + "/kind");
        room.target_area = real(r["target_area"], path + "/target_area");
        room.shape = read_polygon(r["polygon"], path + "/polygon");
        if (std::abs(real(r["area"], path + "/area") - polygon_area(room.shape)) > 6e-4)
            throw PlanParseError(path + "/area", "does not match the polygon");
        p.rooms.push_back(std::move(room));
    }
    const auto& cor = array_at(j["corridor"], "/corridor");
    for (std::size_t i = 0; i < cor.size(); ++i) p.corridor.push_back(read_polygon(cor[i], "/corridor/" + std::to_string(i)));

    const auto& ops = array_at(j["openings"], "/openings");
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const std::string path = "/openings/" + std::to_string(i);
        const auto& o = ops[i];
        reject_unknown(o, {"kind", "wall", "offset", "width", "a", "b"}, path);
        Opening op;
        op.kind = read_opening_kind(o["kind"], path + "/kind");
        const auto& w = o["wall"];
        if (!w.is_array() || w.size() != 2) throw PlanParseError(path + "/wall", "expected two points");
        op.wall = {read_point(w[0], path + "/wall/0"), read_point(w[1], path + "/wall/1")};
        op.offset = mm(o["offset"], path + "/offset");
        op.width = mm(o["width"], path + "/width");
        op.a = static_cast<RoomId>(integer(o["a"], path + "/a"));
        op.b = static_cast<RoomId>(integer(o["b"], path + "/b"));
        p.openings.push_back(op);
    }
    const auto& con = array_at(j["connections"], "/connections");
    for (std::size_t i = 0; i < con.size(); ++i) {
        const std::string path = "/connections/" + std::to_string(i);
        const auto& c = con[i];
        reject_unknown(c, {"a", "b", "mandatory"}, path);
        if (!c["mandatory"].is_boolean()) throw PlanParseError(path + "/mandatory", "expected a boolean");
        p.connections.push_back({static_cast<RoomId>(integer(c["a"], path + "/a")),
                                 static_cast<RoomId>(integer(c["b"], path + "/b")), c["mandatory"].get<bool>()});
    }
    const auto& g = j["generation"];
    reject_unknown(g, {"attempts", "corridor_candidates", "corridor_rooms"}, "/generation");
    p.info.attempts = static_cast<int>(integer(g["attempts"], "/generation/attempts"));
    p.info.corridor_candidates = static_cast<int>(integer(g["corridor_candidates"], "/generation/corridor_candidates"));
    const auto& cr = array_at(g["corridor_rooms"], "/generation/corridor_rooms");
    for (std::size_t i = 0; i < cr.size(); ++i)
        p.info.corridor_rooms.push_back(static_cast<RoomId>(integer(cr[i], "/generation/corridor_rooms/" + std::to_string(i))));
    return p;
}

inline FloorPlan from_json(const std::string& doc) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(doc);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw PlanParseError(json_detail::line_column(doc, at), "malformed JSON");
    }
    return plan_from_json(j);
}

/// Corridor stage details for --trace output.
inline nlohmann::ordered_json trace_to_json(const GenerationTrace& t) {
    using namespace json_detail;
    ojson j;
    auto& fails = j["failed_attempts"] = ojson::array();
    for (const auto& f : t.failures) fails.push_back({{"attempt", f.attempt}, {"stage", f.stage}, {"reason", f.reason}});
    const auto& c = t.corridor;
    ojson cj;
    cj["terminals"] = c.terminals;
    cj["wall_graph_edges"] = c.graph.edges.size();
    cj["pruned_graph_edges"] = c.pruned.edges.size();
    cj["path_length"] = to_m(c.path.length);
    auto& contacts = cj["contacts"] = ojson::array();
    for (const auto& k : c.path.contacts)
        contacts.push_back({{"room", k.room}, {"kind", k.kind == ContactKind::Edge ? "edge" : "vertex"}, {"at", point(k.at)}});
    auto& legs = cj["legs"] = ojson::array();
    for (const auto& l : c.legs)
        legs.push_back({{"horizontal", l.horizontal}, {"line", to_m(l.line)}, {"lo", to_m(l.lo)}, {"hi", to_m(l.hi)}, {"stub", l.stub}});
    auto& cands = cj["candidates"] = ojson::array();
    std::size_t evaluated = 0;
    for (const auto& k : c.candidates) {
        if (k.valid) ++evaluated;
        ojson e{{"choice", k.choice}, {"area", to_m2(k.area_mm2)}, {"length", to_m(k.length_mm)}};
        e["valid"] = k.valid ? ojson(*k.valid) : ojson(nullptr);
        if (!k.reason.empty()) e["reason"] = k.reason;
        cands.push_back(std::move(e));
    }
    cj["evaluated"] = evaluated;
    cj["winner"] = c.winner ? ojson(*c.winner) : ojson(nullptr);
    j["corridor"] = std::move(cj);
    return j;
}

}  // namespace planwright
