#pragma once

// Connection graph, door and window placement, and the plan validator.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "planwright/config.hpp"
#include "planwright/geometry.hpp"
#include "planwright/plan.hpp"
#include "planwright/random.hpp"

namespace planwright {

class OpeningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mandatory edges (the rewired hierarchy) plus optional edges drawn from the
/// whitelist. An optional pair is considered only when its rooms share a wall
/// that fits a door and the pair is not prohibited.
inline std::vector<Connection> build_connection_graph(const std::vector<PlanRoom>& rooms,
                                                      const std::vector<std::pair<RoomId, RoomId>>& mandatory,
                                                      RandomStream& rng, const GenConfig& cfg) {
    const Coord door = to_mm(cfg.door_width);
    std::vector<Connection> out;
    std::set<std::pair<RoomId, RoomId>> have;
    auto key = [](RoomId a, RoomId b) { return std::pair{std::min(a, b), std::max(a, b)}; };
    for (const auto& [a, b] : mandatory) {
        if (have.insert(key(a, b)).second) out.push_back({a, b, true});
    }
    for (const auto& rule : cfg.optional_edges) {
        for (std::size_t i = 0; i < rooms.size(); ++i) {
            for (std::size_t j = i + 1; j < rooms.size(); ++j) {
                const auto ki = rooms[i].kind, kj = rooms[j].kind;
                if (!((ki == rule.a && kj == rule.b) || (ki == rule.b && kj == rule.a))) continue;
                const RoomId a = rooms[i].id, b = rooms[j].id;
                if (have.count(key(a, b)) || cfg.prohibited(ki, kj)) continue;
                if (longest_shared_wall_mm(rooms[i].shape, rooms[j].shape) < door) continue;
                if (rng.bernoulli(rule.probability)) {
                    have.insert(key(a, b));
                    out.push_back({a, b, false});
                }
            }
        }
    }
    return out;
}

namespace openings_detail {

inline const PlanRoom& room(const std::vector<PlanRoom>& rooms, RoomId id) {
    for (const auto& r : rooms)
        if (r.id == id) return r;
    throw OpeningError("unknown room " + std::to_string(id));
}

inline std::optional<Segment> longest(const std::vector<Segment>& walls) {
    std::optional<Segment> best;
    for (const auto& s : walls)
        if (!best || s.length() > best->length()) best = s;
    return best;
}

}  // namespace openings_detail

/// One door per connection on the pair's longest shared wall at a uniform
/// offset; the Outside connection becomes the entry door on the living room's
/// longest exterior wall. Throws OpeningError when a door does not fit.
inline std::vector<Opening> place_doors(const std::vector<PlanRoom>& rooms, const std::vector<Connection>& graph,
                                        const GridRect& footprint, RandomStream& rng, const GenConfig& cfg) {
    using namespace openings_detail;
    const Coord door = to_mm(cfg.door_width);
    std::vector<Opening> out;
    for (const auto& c : graph) {
        const bool entry = c.b == kOutsideId || c.a == kOutsideId;
        const RoomId inside = c.a == kOutsideId ? c.b : c.a;
        const auto& ra = room(rooms, inside);
        const auto wall = entry ? longest(exterior_edges(ra.shape, footprint)) : longest(shared_walls(ra.shape, room(rooms, c.b).shape));
        if (!wall || wall->length() < door)
            throw OpeningError("no wall fits a door between " + std::to_string(c.a) + " and " + std::to_string(c.b));
        const Coord offset = static_cast<Coord>(rng.uniform_int(static_cast<std::uint64_t>(wall->length() - door)));
        out.push_back({entry ? OpeningKind::EntryDoor : OpeningKind::Door, *wall, offset, door, inside, entry ? kOutsideId : c.b});
    }
    return out;
}

/// Up to windows_per_room windows for every room allowed one, each on a
/// uniformly chosen free exterior span and at a uniform offset within it.
inline std::vector<Opening> place_windows(const std::vector<PlanRoom>& rooms, const std::vector<Opening>& existing,
                                          const GridRect& footprint, RandomStream& rng, const GenConfig& cfg) {
    const Coord width = to_mm(cfg.window_width);
    std::vector<Opening> placed;
    for (const auto& r : rooms) {
        if (!cfg.window_allowed(r.kind)) continue;
        for (int k = 0; k < cfg.windows_per_room; ++k) {
            // Free spans: exterior edges minus intervals already used.
            struct Span {
                Segment wall;
                Coord lo, hi;  // offsets along wall
            };
            std::vector<Span> spans;
            for (const auto& wall : exterior_edges(r.shape, footprint)) {
                std::vector<std::pair<Coord, Coord>> used;
                auto note = [&](const Opening& o) {
                    const auto sp = o.span().normalized();
                    if (auto ov = collinear_overlap(sp, wall)) {
                        const auto n = ov->normalized();
                        used.push_back({n.a.x - wall.a.x + n.a.y - wall.a.y, n.b.x - wall.a.x + n.b.y - wall.a.y});
                    }
                };
                for (const auto& o : existing) note(o);
                for (const auto& o : placed) note(o);
                std::sort(used.begin(), used.end());
                Coord cur = 0;
                for (const auto& [lo, hi] : used) {
                    if (lo - cur >= width) spans.push_back({wall, cur, lo});
                    cur = std::max(cur, hi);
                }
                if (wall.length() - cur >= width) spans.push_back({wall, cur, wall.length()});
            }
            if (spans.empty()) break;
            const auto& s = spans[rng.uniform_int(spans.size() - 1)];
            const Coord offset = s.lo + static_cast<Coord>(rng.uniform_int(static_cast<std::uint64_t>(s.hi - s.lo - width)));
            placed.push_back({OpeningKind::Window, s.wall, offset, width, r.id, kOutsideId});
        }
    }
    return placed;
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool connected = false;

    bool ok() const { return issues.empty(); }
    void add(std::string code, std::string message) { issues.push_back({std::move(code), std::move(message)}); }
};

/// Geometric and topological audit of a finished plan.
inline ValidationReport validate(const FloorPlan& plan, const GenConfig& cfg) {
    ValidationReport rep;
    const auto& fp = plan.footprint;
    const Coord door = to_mm(cfg.door_width);
    const Coord window = to_mm(cfg.window_width);
    const Polygon outline = Polygon::from_rect(fp);
    std::map<RoomId, const PlanRoom*> by_id;
    for (const auto& r : plan.rooms) {
        if (!by_id.emplace(r.id, &r).second) rep.add("polygon", "duplicate room id " + std::to_string(r.id));
    }

    // Shapes, bounds, partition, overlap.
    Coord total = 0;
    bool shapes_ok = true;
    for (const auto& r : plan.rooms) {
        if (!is_valid_polygon(r.shape)) {
            rep.add("polygon", "room " + std::to_string(r.id) + " is not a simple counter-clockwise rectilinear polygon");
            shapes_ok = false;
            continue;
        }
        const auto b = r.shape.bounds();
        if (b.left() < fp.left() || b.right() > fp.right() || b.bottom() < fp.bottom() || b.top() > fp.top())
            rep.add("bounds", "room " + std::to_string(r.id) + " extends outside the footprint");
        total += polygon_area_mm2(r.shape);
    }
    if (shapes_ok) {
        for (std::size_t i = 0; i < plan.rooms.size(); ++i)
            for (std::size_t j = i + 1; j < plan.rooms.size(); ++j)
                if (intersection_area_mm2(plan.rooms[i].shape, plan.rooms[j].shape) > 0)
                    rep.add("overlap", "rooms " + std::to_string(plan.rooms[i].id) + " and " + std::to_string(plan.rooms[j].id) + " overlap");
        if (total != fp.area())
            rep.add("partition", "room areas sum to " + std::to_string(to_m2(total)) + " m2, footprint is " + std::to_string(to_m2(fp.area())) + " m2");
    }

    // Openings.
    for (std::size_t k = 0; k < plan.openings.size(); ++k) {
        const auto& o = plan.openings[k];
        const std::string tag = "opening " + std::to_string(k) + " (" + std::string(to_string(o.kind)) + ")";
        if (!is_axis_aligned(o.wall) || o.offset < 0 || o.width <= 0 || o.offset + o.width > o.wall.length()) {
            rep.add("opening-geometry", tag + " does not fit its wall");
            continue;
        }
        const auto span = o.span();
        const Coord expect = o.kind == OpeningKind::Window ? window : door;
        if (o.width != expect) rep.add("opening-geometry", tag + " has width " + std::to_string(o.width) + " mm, expected " + std::to_string(expect));
        auto ra = by_id.find(o.a);
        if (ra == by_id.end()) {
            rep.add("opening-geometry", tag + " refers to unknown room " + std::to_string(o.a));
            continue;
        }
        if (!segment_on_boundary(span, ra->second->shape)) rep.add("opening-geometry", tag + " is not on the wall of room " + std::to_string(o.a));
        if (o.kind == OpeningKind::Door) {
            auto rb = by_id.find(o.b);
            if (rb == by_id.end())
                rep.add("opening-geometry", tag + " refers to unknown room " + std::to_string(o.b));
            else if (!segment_on_boundary(span, rb->second->shape))
                rep.add("opening-geometry", tag + " is not on the wall of room " + std::to_string(o.b));
        } else {
            if (o.b != kOutsideId) rep.add("opening-geometry", tag + " must lead outside");
            if (!segment_on_boundary(span, outline)) rep.add("opening-geometry", tag + " is not on the footprint boundary");
        }
    }
    for (std::size_t i = 0; i < plan.openings.size(); ++i)
        for (std::size_t j = i + 1; j < plan.openings.size(); ++j)
            if (collinear_overlap(plan.openings[i].span(), plan.openings[j].span()))
                rep.add("opening-overlap", "openings " + std::to_string(i) + " and " + std::to_string(j) + " overlap");

    // Door graph versus connection graph.
    std::set<std::pair<RoomId, RoomId>> doors, conns;
    auto key = [](RoomId a, RoomId b) { return std::pair{std::min(a, b), std::max(a, b)}; };
    bool entry = false;
    for (const auto& o : plan.openings) {
        if (o.kind == OpeningKind::Window) continue;
        entry = entry || o.kind == OpeningKind::EntryDoor;
        if (!doors.insert(key(o.a, o.b)).second)
            rep.add("door-graph", "more than one door between " + std::to_string(o.a) + " and " + std::to_string(o.b));
    }
    for (const auto& c : plan.connections) conns.insert(key(c.a, c.b));
    if (doors != conns) rep.add("door-graph", "doors do not match the connection graph");
    if (!entry) rep.add("entry", "no entry door");

    auto kind_of = [&](RoomId id) { return id == kOutsideId ? RoomKind::Outside : (by_id.count(id) ? by_id[id]->kind : RoomKind::Outside); };
    std::map<RoomId, std::vector<RoomId>> adj;
    for (const auto& [a, b] : doors) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        if (cfg.prohibited(kind_of(a), kind_of(b)))
            rep.add("prohibited", "door between " + std::string(to_string(kind_of(a))) + " " + std::to_string(a) + " and " +
                                      std::string(to_string(kind_of(b))) + " " + std::to_string(b));
    }
    auto reach = [&](auto passable) {
        std::set<RoomId> seen{kOutsideId};
        std::queue<RoomId> q;
        q.push(kOutsideId);
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            for (auto w : adj[v]) {
                if (seen.count(w)) continue;
                seen.insert(w);
                if (passable(w)) q.push(w);
            }
        }
        return seen;
    };
    const auto all = reach([](RoomId) { return true; });
    rep.connected = true;
    for (const auto& r : plan.rooms) {
        if (!all.count(r.id)) {
            rep.connected = false;
            rep.add("connectivity", "room " + std::to_string(r.id) + " cannot be reached from outside");
        }
    }
    // A bedroom must be reachable without passing through a bathroom or
    // another bedroom.
    const auto open = reach([&](RoomId id) { const auto k = kind_of(id); return !is_bedroom(k) && k != RoomKind::Bathroom; });
    for (const auto& r : plan.rooms)
        if (is_bedroom(r.kind) && all.count(r.id) && !open.count(r.id))
            rep.add("prohibited", "bedroom " + std::to_string(r.id) + " is only reachable through a bedroom or bathroom");
    return rep;
}

}  // namespace planwright
