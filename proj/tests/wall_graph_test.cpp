#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "planwright/wall_graph.hpp"

using namespace planwright;

namespace {

Segment S(Coord x0, Coord y0, Coord x1, Coord y1) { return Segment{{x0 * 1000, y0 * 1000}, {x1 * 1000, y1 * 1000}}; }

// A 1 mm square whose boundary contains exactly the grid vertex p.
Polygon dot(const GridPoint& p) { return Polygon::from_rect(GridRect{p.x - 1, p.y - 1, 1, 1}); }

WallGraph random_graph(std::mt19937_64& gen, int grid, int segments) {
    std::vector<Segment> segs;
    for (int i = 0; i < segments; ++i) {
        const Coord a = static_cast<Coord>(gen() % (grid + 1)), b = static_cast<Coord>(gen() % (grid + 1));
        Coord c = static_cast<Coord>(gen() % (grid + 1));
        const Coord len = 1 + static_cast<Coord>(gen() % 3);
        if (c + len > grid) c = grid - len;
        if (gen() % 2)
            segs.push_back(S(c, a, c + len, a));
        else
            segs.push_back(S(b, c, b, c + len));
    }
    return graph_from_segments(segs);
}

Coord brute_shortest(const WallGraph& g, std::size_t s, std::size_t t) {
    const auto adj = g.adjacency();
    Coord best = -1;
    std::vector<bool> seen(g.vertices.size(), false);
    std::function<void(std::size_t, Coord)> dfs = [&](std::size_t v, Coord len) {
        if (v == t) {
            if (best < 0 || len < best) best = len;
            return;
        }
        seen[v] = true;
        for (const auto& [w, e] : adj[v])
            if (!seen[w]) dfs(w, len + g.length(e));
        seen[v] = false;
    };
    dfs(s, 0);
    return best;
}

}  // namespace

TEST(GraphFromSegments, SplitsAtEndpointsAndMergesOverlaps) {
    const auto g = graph_from_segments({S(0, 0, 4, 0), S(2, 0, 2, 3), S(1, 0, 3, 0)});
    // Horizontal line split at x = 1, 2, 3 plus the vertical piece.
    EXPECT_EQ(g.vertices.size(), 6u);
    EXPECT_EQ(g.edges.size(), 5u);
    Coord total = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) total += g.length(e);
    EXPECT_EQ(total, 7000);
}

TEST(BuildWallGraph, CornerRoomHasTwoInteriorWalls) {
    const auto g = build_wall_graph({Polygon::from_rect({0, 0, 3000, 3000})}, GridRect{0, 0, 10000, 10000});
    ASSERT_EQ(g.edges.size(), 2u);
    for (std::size_t e = 0; e < 2; ++e) {
        const auto s = g.segment(e);
        EXPECT_TRUE(s.a.x == 3000 || s.a.y == 3000);
        EXPECT_EQ(s.length(), 3000);
    }
}

TEST(BuildWallGraph, NoRoomsNoGraph) { EXPECT_TRUE(build_wall_graph({}, GridRect{0, 0, 1000, 1000}).empty()); }

TEST(BuildWallGraph, ExcludesFootprintBoundary) {
    const GridRect fp{0, 0, 8000, 4000};
    const auto g = build_wall_graph({Polygon::from_rect({0, 0, 4000, 4000}), Polygon::from_rect({4000, 0, 4000, 4000})}, fp);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.segment(0), (Segment{{4000, 0}, {4000, 4000}}));
}

TEST(Prune, PathVanishes) { EXPECT_TRUE(prune(graph_from_segments({S(0, 0, 1, 0), S(1, 0, 1, 1), S(1, 1, 3, 1)})).empty()); }

TEST(Prune, CycleUnchanged) {
    const auto g = graph_from_segments({S(0, 0, 2, 0), S(2, 0, 2, 2), S(2, 2, 0, 2), S(0, 2, 0, 0)});
    EXPECT_EQ(prune(g), g);
}

TEST(Prune, PendantRemoved) {
    const auto cycle = graph_from_segments({S(0, 0, 2, 0), S(2, 0, 2, 2), S(2, 2, 0, 2), S(0, 2, 0, 0)});
    const auto g = graph_from_segments({S(0, 0, 2, 0), S(2, 0, 2, 2), S(2, 2, 0, 2), S(0, 2, 0, 0), S(2, 2, 4, 2)});
    EXPECT_EQ(prune(g), cycle);
}

TEST(Prune, AnchorsAreKept) {
    const auto g = graph_from_segments({S(0, 0, 2, 0), S(2, 0, 4, 0)});
    const auto p = prune(g, {{0, 0}, {4000, 0}});
    EXPECT_EQ(p.edges.size(), 2u);
}

TEST(Prune, RandomGraphsMinDegreeAndIdempotent) {
    std::mt19937_64 gen(1);
    int nonempty = 0;
    for (int t = 0; t < 10000; ++t) {
        const auto g = random_graph(gen, 5, 2 + static_cast<int>(gen() % 14));
        const auto p = prune(g);
        if (!p.empty()) {
            ++nonempty;
            for (int d : p.degrees()) EXPECT_GE(d, 2);
        }
        EXPECT_EQ(prune(p), p);
        // Every surviving edge is an edge of g.
        for (std::size_t e = 0; e < p.edges.size(); ++e) {
            const auto s = p.segment(e);
            const auto u = g.find_vertex(s.a), v = g.find_vertex(s.b);
            ASSERT_TRUE(u && v);
        }
    }
    EXPECT_GT(nonempty, 1000);
}

TEST(Route, EdgeAdjacentTerminalNeedsNoPath) {
    const auto g = graph_from_segments({S(0, 0, 4, 0), S(0, 0, 0, 2), S(4, 0, 4, 2), S(0, 2, 4, 2)});
    const auto hub = Polygon::from_rect({0, 0, 4000, 2000});
    const auto room = Polygon::from_rect({0, 2000, 4000, 2000});
    const auto p = route(g, hub, {{1, room}});
    EXPECT_EQ(p.length, 0);
    ASSERT_EQ(p.contacts.size(), 1u);
}

TEST(Route, StraightWallBetweenTwoRooms) {
    const auto g = graph_from_segments({S(0, 0, 5, 0)});
    const auto p = route(g, dot({0, 0}), {{1, dot({5000, 0})}});
    EXPECT_EQ(p.length, 5000);
    ASSERT_EQ(p.edges.size(), 1u);
    EXPECT_EQ(g.segment(p.edges[0]), (Segment{{0, 0}, {5000, 0}}));
    EXPECT_EQ(p.contacts[0].kind, ContactKind::Vertex);
    EXPECT_EQ(p.contacts[0].at, (GridPoint{5000, 0}));
}

TEST(Route, UnreachableThrows) {
    const auto g = graph_from_segments({S(0, 0, 1, 0), S(3, 0, 4, 0)});
    EXPECT_THROW(route(g, dot({0, 0}), {{1, dot({4000, 0})}}), RoutingError);
}

TEST(Route, TwoTerminalLengthMatchesBruteForce) {
    std::mt19937_64 gen(2);
    int checked = 0;
    for (int t = 0; t < 20000 && checked < 2000; ++t) {
        const auto g = random_graph(gen, 4, 3 + static_cast<int>(gen() % 8));
        if (g.edges.size() > 12 || g.vertices.size() < 2) continue;
        const std::size_t s = gen() % g.vertices.size(), e = gen() % g.vertices.size();
        if (s == e) continue;
        const Coord want = brute_shortest(g, s, e);
        if (want < 0) {
            EXPECT_THROW(route(g, dot(g.vertices[s]), {{1, dot(g.vertices[e])}}), RoutingError);
            continue;
        }
        const auto p = route(g, dot(g.vertices[s]), {{1, dot(g.vertices[e])}});
        EXPECT_EQ(p.length, want);
        ++checked;
    }
    EXPECT_GE(checked, 1000);
}

TEST(Route, SteinerTreeConnectsEveryTerminal) {
    std::mt19937_64 gen(3);
    int checked = 0;
    for (int t = 0; t < 5000 && checked < 500; ++t) {
        const auto g = random_graph(gen, 5, 12);
        if (g.vertices.size() < 4) continue;
        const std::size_t h = gen() % g.vertices.size();
        std::vector<std::pair<RoomId, Polygon>> terms;
        std::vector<std::size_t> tv;
        for (int k = 0; k < 3; ++k) {
            const std::size_t v = gen() % g.vertices.size();
            if (v == h || std::find(tv.begin(), tv.end(), v) != tv.end()) continue;
            tv.push_back(v);
            terms.push_back({k + 1, dot(g.vertices[v])});
        }
        if (terms.size() < 2) continue;
        bool reachable = true;
        Coord sum = 0;
        for (auto v : tv) {
            const Coord d = brute_shortest(g, h, v);
            reachable = reachable && d >= 0;
            sum += d;
        }
        if (!reachable) continue;
        const auto p = route(g, dot(g.vertices[h]), terms);
        ++checked;
        EXPECT_LE(p.length, sum);
        // Hub and every terminal lie in one component of the chosen edges.
        std::vector<std::size_t> comp(g.vertices.size());
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
        for (auto e : p.edges) comp[find(g.edges[e].u)] = find(g.edges[e].v);
        for (auto v : tv) EXPECT_EQ(find(v), find(h));
    }
    EXPECT_GE(checked, 200);
}
