#pragma once

// Interior wall graph, leaf pruning, and terminal routing for corridors.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "planwright/geometry.hpp"
#include "planwright/rooms.hpp"

namespace planwright {

class RoutingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WallEdge {
    std::size_t u = 0;
    std::size_t v = 0;  // u < v, vertices[u] < vertices[v]
    bool operator==(const WallEdge&) const = default;
};

/// Undirected graph of axis-aligned wall pieces. Vertices are kept sorted.
struct WallGraph {
    std::vector<GridPoint> vertices;
    std::vector<WallEdge> edges;

    Segment segment(std::size_t e) const { return Segment{vertices[edges[e].u], vertices[edges[e].v]}; }
    Coord length(std::size_t e) const { return segment(e).length(); }
    bool empty() const { return edges.empty(); }

    std::optional<std::size_t> find_vertex(const GridPoint& p) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
        if (it == vertices.end() || *it != p) return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }

    std::vector<int> degrees() const {
        std::vector<int> d(vertices.size(), 0);
        for (const auto& e : edges) {
            ++d[e.u];
            ++d[e.v];
        }
        return d;
    }

    /// Per vertex, (neighbour, edge index) pairs.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency() const {
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertices.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            adj[edges[i].u].push_back({edges[i].v, i});
            adj[edges[i].v].push_back({edges[i].u, i});
        }
        return adj;
    }

    bool operator==(const WallGraph&) const = default;
};

/// Builds a graph from segments: every segment is split at every endpoint of
/// any other segment lying on it; collinear overlaps are merged.
inline WallGraph graph_from_segments(const std::vector<Segment>& segments) {
    std::set<GridPoint> points;
    for (const auto& s : segments) {
        points.insert(s.a);
        points.insert(s.b);
    }
    // Merge per line.
    std::map<Coord, std::vector<std::pair<Coord, Coord>>> hlines, vlines;
    for (const auto& s0 : segments) {
        const auto s = s0.normalized();
        if (s.length() == 0) continue;
        if (s.horizontal())
            hlines[s.a.y].push_back({s.a.x, s.b.x});
        else
            vlines[s.a.x].push_back({s.a.y, s.b.y});
    }
    std::set<std::pair<GridPoint, GridPoint>> pieces;
    auto emit = [&](auto& lines, bool horizontal) {
        for (auto& [c, spans] : lines) {
            std::sort(spans.begin(), spans.end());
            std::vector<std::pair<Coord, Coord>> merged;
            for (const auto& sp : spans) {
                if (!merged.empty() && sp.first <= merged.back().second)
                    merged.back().second = std::max(merged.back().second, sp.second);
                else
                    merged.push_back(sp);
            }
            for (const auto& [lo, hi] : merged) {
                std::vector<Coord> cuts{lo, hi};
                for (const auto& p : points) {
                    const Coord along = horizontal ? p.x : p.y;
                    const Coord across = horizontal ? p.y : p.x;
                    if (across == c && along > lo && along < hi) cuts.push_back(along);
                }
                std::sort(cuts.begin(), cuts.end());
                cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
                for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
                    const GridPoint a = horizontal ? GridPoint{cuts[k], c} : GridPoint{c, cuts[k]};
                    const GridPoint b = horizontal ? GridPoint{cuts[k + 1], c} : GridPoint{c, cuts[k + 1]};
                    pieces.insert({a, b});
                }
            }
        }
    };
    emit(hlines, true);
    emit(vlines, false);

    WallGraph g;
    std::set<GridPoint> used;
    for (const auto& [a, b] : pieces) {
        used.insert(a);
        used.insert(b);
    }
    g.vertices.assign(used.begin(), used.end());
    for (const auto& [a, b] : pieces) g.edges.push_back({*g.find_vertex(a), *g.find_vertex(b)});
    std::sort(g.edges.begin(), g.edges.end(), [](const WallEdge& x, const WallEdge& y) {
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    return g;
}

/// Interior walls of the given rooms, split at every room corner, with
/// pieces on the footprint boundary left out.
inline WallGraph build_wall_graph(const std::vector<Polygon>& rooms, const GridRect& footprint) {
    std::vector<Segment> segs;
    for (const auto& r : rooms) {
        for (std::size_t i = 0; i < r.size(); ++i) segs.push_back(r.edge(i));
    }
    const auto g = graph_from_segments(segs);
    WallGraph out;
    std::vector<WallEdge> keep;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto s = g.segment(e);
        const bool boundary = (s.horizontal() && (s.a.y == footprint.bottom() || s.a.y == footprint.top())) ||
                              (s.vertical() && (s.a.x == footprint.left() || s.a.x == footprint.right()));
        if (!boundary) keep.push_back(g.edges[e]);
    }
    std::vector<bool> used(g.vertices.size(), false);
    for (const auto& e : keep) used[e.u] = used[e.v] = true;
    std::vector<std::size_t> remap(g.vertices.size(), 0);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (!used[i]) continue;
        remap[i] = out.vertices.size();
        out.vertices.push_back(g.vertices[i]);
    }
    for (const auto& e : keep) out.edges.push_back({remap[e.u], remap[e.v]});
    return out;
}

/// Repeatedly removes edges incident to degree-1 vertices. Vertices listed in
/// `anchors` never count as leaves. Without anchors the result is the 2-core.
/// Isolated vertices are dropped.
inline WallGraph prune(const WallGraph& g, const std::vector<GridPoint>& anchors = {}) {
    std::vector<bool> anchored(g.vertices.size(), false);
    for (const auto& p : anchors)
        if (auto v = g.find_vertex(p)) anchored[*v] = true;
    auto deg = g.degrees();
    const auto adj = g.adjacency();
    std::vector<bool> removed(g.edges.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (deg[v] == 1 && !anchored[v]) stack.push_back(v);
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        if (deg[v] != 1 || anchored[v]) continue;
        for (const auto& [w, e] : adj[v]) {
            if (removed[e]) continue;
            removed[e] = true;
            --deg[v];
            --deg[w];
            if (deg[w] == 1 && !anchored[w]) stack.push_back(w);
        }
    }
    WallGraph out;
    std::vector<std::size_t> remap(g.vertices.size(), 0);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (deg[v] == 0) continue;
        remap[v] = out.vertices.size();
        out.vertices.push_back(g.vertices[v]);
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (!removed[e]) out.edges.push_back({remap[g.edges[e].u], remap[g.edges[e].v]});
    return out;
}

// ---------------------------------------------------------------------------
// Routing

struct ShortestPath {
    Coord length = 0;
    std::vector<std::size_t> vertices;  // from a source to the target
    std::vector<std::size_t> edges;
};

/// Multi-source Dijkstra. Returns the shortest path from any source to any
/// target; ties go to the smaller target index and, along the way, to the
/// first relaxation in vertex order. nullopt when no target is reachable.
inline std::optional<ShortestPath> shortest_path(const WallGraph& g, const std::vector<std::size_t>& sources,
                                                 const std::vector<std::size_t>& targets) {
    constexpr Coord inf = std::numeric_limits<Coord>::max();
    const auto adj = g.adjacency();
    std::vector<Coord> dist(g.vertices.size(), inf);
    std::vector<std::size_t> prev_edge(g.vertices.size(), SIZE_MAX);
    using Item = std::pair<Coord, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (auto s : sources) {
        if (dist[s] != 0) {
            dist[s] = 0;
            pq.push({0, s});
        }
    }
    while (!pq.empty()) {
        const auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        for (const auto& [w, e] : adj[v]) {
            const Coord nd = d + g.length(e);
            if (nd < dist[w]) {
                dist[w] = nd;
                prev_edge[w] = e;
                pq.push({nd, w});
            }
        }
    }
    std::optional<std::size_t> best;
    for (auto t : targets) {
        if (dist[t] == inf) continue;
        if (!best || dist[t] < dist[*best] || (dist[t] == dist[*best] && t < *best)) best = t;
    }
    if (!best) return std::nullopt;
    ShortestPath p;
    p.length = dist[*best];
    std::size_t v = *best;
    p.vertices.push_back(v);
    while (prev_edge[v] != SIZE_MAX) {
        const auto e = prev_edge[v];
        p.edges.push_back(e);
        v = g.edges[e].u == v ? g.edges[e].v : g.edges[e].u;
        p.vertices.push_back(v);
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

enum class ContactKind { Edge, Vertex };

struct TerminalContact {
    RoomId room = 0;
    ContactKind kind = ContactKind::Vertex;
    GridPoint at;  // the vertex where the route reaches the room
};

/// Union of routes joining every terminal to the hub.
struct CorridorPath {
    std::vector<std::size_t> edges;  // sorted edge ids of the graph
    std::vector<TerminalContact> contacts;
    Coord length = 0;
};

/// Grows a tree from the hub's boundary vertices, each round joining the
/// terminal with the shortest remaining path (ties to the lower room id).
/// Throws RoutingError when a terminal cannot be reached.
inline CorridorPath route(const WallGraph& g, const Polygon& hub, const std::vector<std::pair<RoomId, Polygon>>& terminals) {
    CorridorPath out;
    std::vector<std::size_t> sources;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (on_boundary(g.vertices[v], hub)) sources.push_back(v);
    if (sources.empty() && !terminals.empty()) throw RoutingError("route: hub does not touch the wall graph");

    std::vector<std::vector<std::size_t>> targets(terminals.size());
    for (std::size_t t = 0; t < terminals.size(); ++t) {
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (on_boundary(g.vertices[v], terminals[t].second)) targets[t].push_back(v);
        if (targets[t].empty()) throw RoutingError("route: room " + std::to_string(terminals[t].first) + " does not touch the wall graph");
    }
    std::set<std::size_t> tree_edges;
    std::vector<bool> done(terminals.size(), false);
    std::vector<std::size_t> reached(terminals.size(), 0);
    std::vector<bool> in_tree(g.vertices.size(), false);
    for (auto s : sources) in_tree[s] = true;
    for (std::size_t round = 0; round < terminals.size(); ++round) {
        std::optional<ShortestPath> best;
        std::size_t best_t = 0;
        for (std::size_t t = 0; t < terminals.size(); ++t) {
            if (done[t]) continue;
            auto p = shortest_path(g, sources, targets[t]);
            if (!p) throw RoutingError("route: room " + std::to_string(terminals[t].first) + " is unreachable");
            if (!best || p->length < best->length) {
                best = std::move(p);
                best_t = t;
            }
        }
        done[best_t] = true;
        reached[best_t] = best->vertices.back();
        for (auto e : best->edges) tree_edges.insert(e);
        for (auto v : best->vertices) {
            if (!in_tree[v]) {
                in_tree[v] = true;
                sources.push_back(v);
            }
        }
    }
    out.edges.assign(tree_edges.begin(), tree_edges.end());
    for (auto e : out.edges) out.length += g.length(e);

    // Contact records: edge contact if a tree edge lies on the room boundary.
    for (std::size_t t = 0; t < terminals.size(); ++t) {
        const auto& poly = terminals[t].second;
        TerminalContact c{terminals[t].first, ContactKind::Vertex, {}};
        bool found = false;
        for (auto e : out.edges) {
            if (segment_on_boundary(g.segment(e), poly)) {
                c.kind = ContactKind::Edge;
                c.at = g.segment(e).a;
                found = true;
                break;
            }
        }
        if (!found) c.at = g.vertices[reached[t]];
        out.contacts.push_back(c);
    }
    return out;
}

}  // namespace planwright
