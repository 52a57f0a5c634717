#pragma once

// Corridor placement. Rooms that cannot open onto their parent are joined to
// the living room by a corridor routed along interior walls; each straight leg
// of the route may be shifted sideways or lengthened, and the smallest valid
// corridor is carved out of the rooms it crosses and merged into the living
// room.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "planwright/geometry.hpp"
#include "planwright/plan.hpp"
#include "planwright/rooms.hpp"
#include "planwright/wall_graph.hpp"

namespace planwright {

struct CorridorProblem {
    GridRect footprint;
    std::vector<PlanRoom> rooms;  // rooms[i].id == i
    RoomId living = 0;
    /// Required doors as (room, room) pairs after rewiring; Outside allowed.
    std::vector<std::pair<RoomId, RoomId>> mandatory;
    Coord corridor_width = 1000;
    Coord door_width = 900;
    Coord min_room_width = 1800;
    double max_room_aspect = 4.0;
    int max_candidates = 256;
};

/// Children that share no wall of at least door_width with their parent.
inline std::vector<RoomId> identify_corridor_rooms(const std::vector<PlanRoom>& rooms,
                                                   const std::vector<std::pair<RoomId, RoomId>>& tree, Coord door_width) {
    std::vector<RoomId> out;
    for (const auto& [child, parent] : tree) {
        if (parent == kOutsideId) continue;
        if (longest_shared_wall_mm(rooms[child].shape, rooms[parent].shape) < door_width) out.push_back(child);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Tree edges with every corridor room re-attached to the living room.
inline std::vector<std::pair<RoomId, RoomId>> rewire(const std::vector<std::pair<RoomId, RoomId>>& tree,
                                                     const std::vector<RoomId>& corridor_rooms, RoomId living) {
    auto out = tree;
    for (auto& [child, parent] : out)
        if (std::binary_search(corridor_rooms.begin(), corridor_rooms.end(), child)) parent = living;
    return out;
}

// ---------------------------------------------------------------------------
// Legs and actions

/// Straight piece of the route. Stubs start with zero length at a contact
/// vertex and only exist through their Lengthen actions.
struct Leg {
    bool horizontal = true;
    Coord line = 0;  // y of a horizontal leg, x of a vertical one
    Coord lo = 0;
    Coord hi = 0;
    bool stub = false;
    bool operator==(const Leg&) const = default;
};

/// Shift moves the leg perpendicular (+ is up/right); the extensions lengthen
/// it past its low and high ends. All zero means no action.
struct EdgeAction {
    Coord shift = 0;
    Coord extend_lo = 0;
    Coord extend_hi = 0;
    bool none() const { return shift == 0 && extend_lo == 0 && extend_hi == 0; }
    bool operator==(const EdgeAction&) const = default;
};

/// Maximal straight runs of the route plus stubs at vertex contacts.
inline std::vector<Leg> legs_from_path(const WallGraph& g, const CorridorPath& path, const GridRect& footprint) {
    std::vector<Leg> legs;
    std::vector<int> deg(g.vertices.size(), 0);
    for (auto e : path.edges) {
        ++deg[g.edges[e].u];
        ++deg[g.edges[e].v];
    }
    // Merge collinear edges through pass-through vertices.
    std::map<std::pair<bool, Coord>, std::vector<std::pair<Coord, Coord>>> runs;
    for (auto e : path.edges) {
        const auto s = g.segment(e);
        if (s.horizontal())
            runs[{true, s.a.y}].push_back({s.a.x, s.b.x});
        else
            runs[{false, s.a.x}].push_back({s.a.y, s.b.y});
    }
    for (auto& [key, spans] : runs) {
        std::sort(spans.begin(), spans.end());
        const auto [horizontal, line] = key;
        for (const auto& sp : spans) {
            if (!legs.empty() && legs.back().horizontal == horizontal && legs.back().line == line && legs.back().hi == sp.first) {
                const GridPoint p = horizontal ? GridPoint{sp.first, line} : GridPoint{line, sp.first};
                const auto v = g.find_vertex(p);
                if (v && deg[*v] == 2) {
                    legs.back().hi = sp.second;
                    continue;
                }
            }
            legs.push_back({horizontal, line, sp.first, sp.second, false});
        }
    }
    auto covered = [&](bool horizontal, const GridPoint& p) {
        for (const auto& l : legs) {
            if (l.horizontal != horizontal) continue;
            if (horizontal ? (p.y == l.line && p.x >= l.lo && p.x <= l.hi) : (p.x == l.line && p.y >= l.lo && p.y <= l.hi)) return true;
        }
        return false;
    };
    std::set<std::pair<bool, GridPoint>> stubs;
    for (const auto& c : path.contacts) {
        if (c.kind != ContactKind::Vertex) continue;
        const auto p = c.at;
        if (p.y != footprint.bottom() && p.y != footprint.top() && !covered(true, p)) stubs.insert({true, p});
        if (p.x != footprint.left() && p.x != footprint.right() && !covered(false, p)) stubs.insert({false, p});
    }
    for (const auto& [horizontal, p] : stubs) {
        const Coord along = horizontal ? p.x : p.y;
        legs.push_back({horizontal, horizontal ? p.y : p.x, along, along, true});
    }
    return legs;
}

namespace corridor_detail {

inline Coord across_lo(const GridRect& r, bool horizontal) { return horizontal ? r.bottom() : r.left(); }
inline Coord across_hi(const GridRect& r, bool horizontal) { return horizontal ? r.top() : r.right(); }
inline Coord along_lo(const GridRect& r, bool horizontal) { return horizontal ? r.left() : r.bottom(); }
inline Coord along_hi(const GridRect& r, bool horizontal) { return horizontal ? r.right() : r.top(); }

inline GridRect make_rect(bool horizontal, Coord a0, Coord a1, Coord b0, Coord b1) {
    return horizontal ? grid_rect_from_corners(a0, b0, a1, b1) : grid_rect_from_corners(b0, a0, b1, a1);
}

}  // namespace corridor_detail

/// Action alternatives of one leg, simplest first. Shifts: none, half a
/// corridor either way, and the two smallest shifts that align a corridor
/// side with a nearby parallel wall. Extensions: none, door_width, and the
/// distances to the two nearest wall corners beyond each end. Everything stays
/// inside the footprint. Alternatives whose band alone already splits a room
/// or leaves it unusable are dropped.
inline std::vector<EdgeAction> leg_alternatives(const Leg& leg, const CorridorProblem& pb) {
    using namespace corridor_detail;
    const auto& rooms = pb.rooms;
    const auto& footprint = pb.footprint;
    const Coord width = pb.corridor_width;
    const Coord door_width = pb.door_width;
    const bool h = leg.horizontal;
    const Coord half = width / 2;
    const Coord band_min = across_lo(footprint, h), band_max = across_hi(footprint, h);
    const Coord fa0 = along_lo(footprint, h), fa1 = along_hi(footprint, h);

    std::vector<Coord> shifts{0, -half, width - half};
    std::set<Coord> parallel;
    std::set<Coord> corners;
    for (const auto& r : rooms) {
        for (std::size_t i = 0; i < r.shape.size(); ++i) {
            const auto e = r.shape.edge(i).normalized();
            const auto& v = r.shape.vertices[i];
            if ((h ? v.y : v.x) == leg.line) corners.insert(h ? v.x : v.y);
            if (e.horizontal() != h) continue;
            const Coord c = h ? e.a.y : e.a.x;
            const Coord e0 = h ? e.a.x : e.a.y, e1 = h ? e.b.x : e.b.y;
            if (c != leg.line && e1 > leg.lo - door_width && e0 < leg.hi + door_width) parallel.insert(c);
        }
    }
    std::vector<Coord> aligned;
    for (Coord c : parallel) {
        for (Coord s : {c - leg.line - (width - half), c - leg.line + half}) {
            if (s == 0 || std::abs(s) > width) continue;
            if (std::find(shifts.begin(), shifts.end(), s) != shifts.end()) continue;
            if (std::find(aligned.begin(), aligned.end(), s) != aligned.end()) continue;
            aligned.push_back(s);
        }
    }
    std::sort(aligned.begin(), aligned.end(), [](Coord a, Coord b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a < b); });
    if (aligned.size() > 2) aligned.resize(2);
    shifts.insert(shifts.end(), aligned.begin(), aligned.end());
    std::erase_if(shifts, [&](Coord s) { return leg.line + s - half < band_min || leg.line + s + width - half > band_max; });

    auto extensions = [&](bool low) {
        std::vector<Coord> out{0};
        const Coord end = low ? leg.lo : leg.hi;
        const Coord limit = low ? end - fa0 : fa1 - end;
        if (door_width <= limit) out.push_back(door_width);
        std::vector<Coord> d;
        for (Coord c : corners) {
            const Coord dist = low ? end - c : c - end;
            if (dist > 0 && dist <= limit) d.push_back(dist);
        }
        std::sort(d.begin(), d.end());
        for (std::size_t k = 0; k < d.size() && k < 2; ++k)
            if (std::find(out.begin(), out.end(), d[k]) == out.end()) out.push_back(d[k]);
        return out;
    };
    const auto elo = extensions(true);
    const auto ehi = extensions(false);

    std::vector<EdgeAction> out;
    for (Coord s : shifts)
        for (Coord a : elo)
            for (Coord b : ehi) {
                if (leg.stub && a == 0 && b == 0 && s != 0) continue;  // inactive stub
                out.push_back({s, a, b});
            }
    std::erase_if(out, [&](const EdgeAction& x) {
        const Coord a0 = std::max(leg.lo - x.extend_lo, fa0), a1 = std::min(leg.hi + x.extend_hi, fa1);
        if (a1 <= a0) return false;
        const GridRect band = make_rect(h, a0, a1, leg.line + x.shift - half, leg.line + x.shift + width - half);
        const auto cut = std::span<const GridRect>(&band, 1);
        for (const auto& r : rooms) {
            if (r.id == pb.living || intersection_area_mm2(r.shape, Polygon::from_rect(band)) == 0) continue;
            try {
                if (!is_usable_room_shape(subtract(r.shape, cut), pb.min_room_width, pb.max_room_aspect)) return true;
            } catch (const GeometryError&) {
                return true;
            }
        }
        return false;
    });
    auto key = [](const EdgeAction& x) {
        const int nonzero = (x.shift != 0) + (x.extend_lo != 0) + (x.extend_hi != 0);
        return std::tuple(nonzero, std::abs(x.shift) + x.extend_lo + x.extend_hi, std::abs(x.shift), x.shift, x.extend_lo,
                          x.extend_hi);
    };
    std::sort(out.begin(), out.end(), [&](const EdgeAction& x, const EdgeAction& y) { return key(x) < key(y); });
    return out;
}

/// Corridor rectangles for one action per leg. Leg ends that meet a
/// perpendicular leg are stretched across that leg's band so corners close.
inline std::vector<GridRect> corridor_rects(const std::vector<Leg>& legs, const std::vector<EdgeAction>& actions, Coord width,
                                            const GridRect& footprint) {
    using namespace corridor_detail;
    const Coord half = width / 2;
    struct Band {
        bool active;
        Coord a0, a1, b0, b1;
    };
    std::vector<Band> bands(legs.size());
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const auto& l = legs[i];
        const auto& act = actions[i];
        Band b{};
        b.a0 = l.lo - act.extend_lo;
        b.a1 = l.hi + act.extend_hi;
        b.b0 = l.line + act.shift - half;
        b.b1 = l.line + act.shift + (width - half);
        b.active = b.a1 > b.a0;
        bands[i] = b;
    }
    auto contains = [](const Leg& l, const GridPoint& p) {
        return l.horizontal ? (p.y == l.line && p.x >= l.lo && p.x <= l.hi) : (p.x == l.line && p.y >= l.lo && p.y <= l.hi);
    };
    std::vector<GridRect> out;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (!bands[i].active) continue;
        const auto& l = legs[i];
        Coord a0 = bands[i].a0, a1 = bands[i].a1;
        for (Coord end : {l.lo, l.hi}) {
            const GridPoint p = l.horizontal ? GridPoint{end, l.line} : GridPoint{l.line, end};
            for (std::size_t j = 0; j < legs.size(); ++j) {
                if (j == i || !bands[j].active || legs[j].horizontal == l.horizontal || !contains(legs[j], p)) continue;
                a0 = std::min(a0, bands[j].b0);
                a1 = std::max(a1, bands[j].b1);
            }
        }
        a0 = std::max(a0, along_lo(footprint, l.horizontal));
        a1 = std::min(a1, along_hi(footprint, l.horizontal));
        if (a1 > a0) out.push_back(make_rect(l.horizontal, a0, a1, bands[i].b0, bands[i].b1));
    }
    return out;
}

/// Area in mm^2 covered by the rectangles but not by `base`.
inline Coord carved_area_mm2(const std::vector<GridRect>& rects, const Polygon& base) {
    if (rects.empty()) return 0;
    std::vector<Coord> xs, ys;
    for (const auto& r : rects) detail::append_coords(r, xs, ys);
    detail::append_coords(base, xs, ys);
    auto g = detail::CellGrid::build(xs, ys, [&](Coord x2, Coord y2) {
        if (detail::contains_doubled(base, x2, y2)) return false;
        for (const auto& r : rects)
            if (detail::rect_contains_doubled(r, x2, y2)) return true;
        return false;
    });
    return g.area();
}

struct CorridorCandidate {
    std::vector<std::size_t> choice;  // alternative index per leg
    std::vector<EdgeAction> actions;
    std::vector<GridRect> rects;
    Coord area_mm2 = 0;
    Coord length_mm = 0;
    std::optional<bool> valid;  // unset until evaluated
    std::string reason;
};

/// Total order used for selection: area, then route length, then action
/// vector.
inline bool candidate_less(const CorridorCandidate& a, const CorridorCandidate& b) {
    return std::tie(a.area_mm2, a.length_mm, a.choice) < std::tie(b.area_mm2, b.length_mm, b.choice);
}

struct CandidateEvaluation {
    bool valid = false;
    std::string reason;
    std::vector<Polygon> shapes;     // per room after extrusion
    std::vector<Polygon> corridor;   // carved pieces outside the original living room
};

/// Applies the rectangles and checks every room keeps a usable shape, the
/// living room stays one simple polygon, each corridor piece opens onto the
/// living room, and every required door still fits.
inline CandidateEvaluation evaluate_candidate(const CorridorProblem& pb, const std::vector<GridRect>& rects) {
    CandidateEvaluation ev;
    const auto& L = pb.rooms[pb.living].shape;
    ev.shapes.reserve(pb.rooms.size());
    for (const auto& r : pb.rooms) ev.shapes.push_back(r.shape);
    auto fail = [&](std::string why) {
        ev.valid = false;
        ev.reason = std::move(why);
        return ev;
    };
    for (std::size_t i = 0; i < pb.rooms.size(); ++i) {
        if (static_cast<RoomId>(i) == pb.living) continue;
        try {
            ev.shapes[i] = subtract(pb.rooms[i].shape, std::span<const GridRect>(rects));
        } catch (const GeometryError& e) {
            return fail("room " + std::to_string(i) + ": " + e.what());
        }
        if (ev.shapes[i] != pb.rooms[i].shape &&
            !is_usable_room_shape(ev.shapes[i], pb.min_room_width, pb.max_room_aspect)) {
            return fail("room " + std::to_string(i) + " left with an unusable shape");
        }
    }
    auto united = unite(L, std::span<const GridRect>(rects));
    if (!united) return fail("living room is not a simple polygon");
    ev.shapes[pb.living] = *united;

    if (!rects.empty()) {
        std::vector<Coord> xs, ys;
        for (const auto& r : rects) detail::append_coords(r, xs, ys);
        detail::append_coords(L, xs, ys);
        auto g = detail::CellGrid::build(xs, ys, [&](Coord x2, Coord y2) {
            if (detail::contains_doubled(L, x2, y2)) return false;
            for (const auto& r : rects)
                if (detail::rect_contains_doubled(r, x2, y2)) return true;
            return false;
        });
        std::vector<int> label;
        const int n = detail::label_components(g, label);
        for (int k = 0; k < n; ++k) {
            auto piece = detail::trace(g, &label, k);
            if (!piece) return fail("corridor piece is not a simple polygon");
            if (longest_shared_wall_mm(*piece, L) < pb.door_width) return fail("corridor piece does not open onto the living room");
            ev.corridor.push_back(std::move(*piece));
        }
    }
    for (const auto& [a, b] : pb.mandatory) {
        if (b == kOutsideId) {
            Coord best = 0;
            for (const auto& s : exterior_edges(ev.shapes[a], pb.footprint)) best = std::max(best, s.length());
            if (best < pb.door_width) return fail("room " + std::to_string(a) + " lost its exterior wall");
            continue;
        }
        if (longest_shared_wall_mm(ev.shapes[a], ev.shapes[b]) < pb.door_width)
            return fail("no door fits between rooms " + std::to_string(a) + " and " + std::to_string(b));
    }
    ev.valid = true;
    return ev;
}

/// Action vectors in order of increasing total alternative rank (then
/// lexicographic), at most `cap` of them.
inline std::vector<std::vector<std::size_t>> enumerate_choices(const std::vector<std::size_t>& counts, std::size_t cap) {
    std::vector<std::vector<std::size_t>> out;
    if (std::find(counts.begin(), counts.end(), 0u) != counts.end()) return out;
    if (counts.empty()) {
        out.push_back({});
        return out;
    }
    std::size_t max_sum = 0;
    for (auto c : counts) max_sum += c - 1;
    std::vector<std::size_t> cur(counts.size(), 0);
    // suffix capacity: largest rank sum available from position i onward
    std::vector<std::size_t> suffix(counts.size() + 1, 0);
    for (std::size_t i = counts.size(); i-- > 0;) suffix[i] = suffix[i + 1] + counts[i] - 1;
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
        if (out.size() >= cap) return;
        if (i == counts.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (std::size_t r = 0; r < counts[i] && r <= left; ++r) {
            if (left - r > suffix[i + 1]) continue;
            cur[i] = r;
            self(self, i + 1, left - r);
            if (out.size() >= cap) return;
        }
    };
    for (std::size_t sum = 0; sum <= max_sum && out.size() < cap; ++sum) rec(rec, 0, sum);
    return out;
}

/// Candidate set for a routed path: the Cartesian product of per-leg
/// alternatives, simplest combinations first, capped at max_candidates. When
/// the unmodified corridor already works and reaches every terminal along an
/// edge, it is the only candidate. Candidates come back unevaluated except in
/// that case.
inline std::vector<CorridorCandidate> enumerate_candidates(const CorridorProblem& pb, const std::vector<Leg>& legs,
                                                           const CorridorPath& path) {
    std::vector<std::vector<EdgeAction>> alts;
    std::vector<std::size_t> counts;
    for (const auto& l : legs) {
        alts.push_back(leg_alternatives(l, pb));
        counts.push_back(alts.back().size());
    }
    const auto& L = pb.rooms[pb.living].shape;
    auto build = [&](const std::vector<std::size_t>& choice) {
        CorridorCandidate c;
        c.choice = choice;
        for (std::size_t i = 0; i < legs.size(); ++i) {
            c.actions.push_back(alts[i][choice[i]]);
            const auto& a = c.actions.back();
            if (legs[i].hi - legs[i].lo + a.extend_lo + a.extend_hi > 0) c.length_mm += legs[i].hi - legs[i].lo + a.extend_lo + a.extend_hi;
        }
        c.rects = corridor_rects(legs, c.actions, pb.corridor_width, pb.footprint);
        c.area_mm2 = carved_area_mm2(c.rects, L);
        return c;
    };
    const bool all_edge = std::all_of(path.contacts.begin(), path.contacts.end(),
                                      [](const TerminalContact& t) { return t.kind == ContactKind::Edge; });
    if (all_edge) {
        auto none = build(std::vector<std::size_t>(legs.size(), 0));
        const auto ev = evaluate_candidate(pb, none.rects);
        none.valid = ev.valid;
        none.reason = ev.reason;
        if (ev.valid) return {std::move(none)};
    }
    std::vector<CorridorCandidate> out;
    for (const auto& choice : enumerate_choices(counts, static_cast<std::size_t>(pb.max_candidates))) out.push_back(build(choice));
    return out;
}

/// Index of the least valid candidate under candidate_less; candidates must
/// already be evaluated. nullopt when none is valid.
inline std::optional<std::size_t> filter_and_select(const std::vector<CorridorCandidate>& cands) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!cands[i].valid.value_or(false)) continue;
        if (!best || candidate_less(cands[i], cands[*best])) best = i;
    }
    return best;
}

/// Same result as evaluating every candidate and calling filter_and_select,
/// but evaluates in selection order and stops at the first valid one.
inline std::optional<std::size_t> select_lazily(const CorridorProblem& pb, std::vector<CorridorCandidate>& cands) {
    std::vector<std::size_t> order(cands.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return candidate_less(cands[a], cands[b]); });
    for (auto i : order) {
        if (!cands[i].valid) {
            const auto ev = evaluate_candidate(pb, cands[i].rects);
            cands[i].valid = ev.valid;
            cands[i].reason = ev.reason;
        }
        if (*cands[i].valid) return i;
    }
    return std::nullopt;
}

struct CorridorResult {
    std::vector<Polygon> shapes;    // per room, living room including the corridor
    std::vector<Polygon> corridor;
    std::vector<RoomId> corridor_rooms;
    std::vector<std::pair<RoomId, RoomId>> mandatory;
    int candidates = 0;
};

struct CorridorTrace {
    std::vector<RoomId> terminals;
    WallGraph graph;
    WallGraph pruned;
    CorridorPath path;
    std::vector<Leg> legs;
    std::vector<CorridorCandidate> candidates;
    std::optional<std::size_t> winner;
};

/// Carves the winner out of the rooms it crosses.
inline CorridorResult extrude(const CorridorProblem& pb, const CorridorCandidate& winner) {
    auto ev = evaluate_candidate(pb, winner.rects);
    if (!ev.valid) throw GeometryError("extrude: candidate is not valid: " + ev.reason);
    CorridorResult r;
    r.shapes = std::move(ev.shapes);
    r.corridor = std::move(ev.corridor);
    r.mandatory = pb.mandatory;
    return r;
}

/// The whole corridor stage. `tree` holds the hierarchy's (child, parent)
/// edges. Throws RoutingError when no corridor can be placed.
inline CorridorResult plan_corridor(CorridorProblem pb, const std::vector<std::pair<RoomId, RoomId>>& tree,
                                    CorridorTrace* trace = nullptr) {
    const auto corridor_rooms = identify_corridor_rooms(pb.rooms, tree, pb.door_width);
    pb.mandatory = rewire(tree, corridor_rooms, pb.living);
    std::vector<std::pair<RoomId, Polygon>> terminals;
    for (auto id : corridor_rooms)
        if (longest_shared_wall_mm(pb.rooms[id].shape, pb.rooms[pb.living].shape) < pb.door_width)
            terminals.push_back({id, pb.rooms[id].shape});
    if (trace)
        for (const auto& t : terminals) trace->terminals.push_back(t.first);

    CorridorResult result;
    result.corridor_rooms = corridor_rooms;
    result.mandatory = pb.mandatory;
    if (terminals.empty()) {
        for (const auto& r : pb.rooms) result.shapes.push_back(r.shape);
        return result;
    }

    std::vector<Polygon> shapes;
    for (const auto& r : pb.rooms) shapes.push_back(r.shape);
    auto graph = build_wall_graph(shapes, pb.footprint);
    std::vector<GridPoint> anchors;
    for (const auto& v : graph.vertices)
        if (v.x == pb.footprint.left() || v.x == pb.footprint.right() || v.y == pb.footprint.bottom() || v.y == pb.footprint.top())
            anchors.push_back(v);
    auto pruned = prune(graph, anchors);
    if (pruned.empty()) throw RoutingError("corridor graph is empty after pruning");
    const auto path = route(pruned, pb.rooms[pb.living].shape, terminals);
    const auto legs = legs_from_path(pruned, path, pb.footprint);
    auto cands = enumerate_candidates(pb, legs, path);
    const auto winner = select_lazily(pb, cands);
    if (trace) {
        trace->graph = graph;
        trace->pruned = pruned;
        trace->path = path;
        trace->legs = legs;
        trace->candidates = cands;
        trace->winner = winner;
    }
    if (!winner) throw RoutingError("no corridor candidate is valid");
    result = extrude(pb, cands[*winner]);
    result.corridor_rooms = corridor_rooms;
    result.candidates = static_cast<int>(cands.size());
    return result;
}

}  // namespace planwright
