// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "planwright/planwright.hpp"

using namespace planwright;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", n, name.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Plans for seeds 1, 2, ... until `n` succeed. Failed seeds are counted.
struct Batch {
    std::vector<FloorPlan> plans;
    int failed = 0;
};

Batch plans_for(std::size_t n) {
    Batch b;
    const auto cfg = GenConfig::defaults();
    for (std::uint64_t s = 1; b.plans.size() < n; ++s) {
        try {
            b.plans.push_back(generate(s, cfg));
        } catch (const GenerationError&) {
            ++b.failed;
        }
    }
    return b;
}

// ---- 1

void distribution_fidelity() {
    // Rows: 0..4 bedrooms; columns: 1..10 rooms.
    const double table[5][10] = {
        {8.0338e-3, 1.4385e-2, 6.3392e-4, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 8.0221e-2, 4.3408e-2, 1.1586e-2, 3.4386e-3, 1.1857e-3, 5.8376e-4, 2.1361e-4, 1.0810e-4},
        {0, 0, 0, 9.6780e-2, 9.0908e-2, 3.9446e-2, 1.6442e-2, 8.5631e-3, 2.9806e-3, 1.5026e-3},
        {0, 0, 0, 0, 7.6431e-2, 1.0599e-1, 8.0343e-2, 5.4633e-2, 2.5820e-2, 2.5868e-2},
        {0, 0, 0, 0, 0, 1.4412e-2, 3.4647e-2, 5.2167e-2, 3.9863e-2, 6.9406e-2},
    };
    double total = 0;
    for (const auto& row : table)
        for (double v : row) total += v;

    constexpr int kDraws = 1'000'000;
    const auto t0 = Clock::now();
    const auto census = JointCountTable::census_2001();
    RandomStream rng(20010515);
    std::vector<long> counts(50, 0);
    for (int i = 0; i < kDraws; ++i) {
        const auto c = sample_counts(rng, census);
        ++counts[static_cast<std::size_t>(c.bedrooms * 10 + c.rooms - 1)];
    }
    const double secs = seconds_since(t0);
    double l1 = 0;
    for (int b = 0; b < 5; ++b)
        for (int r = 0; r < 10; ++r) l1 += std::abs(static_cast<double>(counts[static_cast<std::size_t>(b * 10 + r)]) / kDraws - table[b][r] / total);
    report(1, "count distribution", l1 < 0.01 && secs < 10.0, fmt("L1 = %.5f over %d draws in %.2f s", l1, kDraws, secs));
}

// ---- 2

void parameter_conformance(const Batch& batch) {
    int violations = 0;
    double worst_aspect = 1.0;
    for (const auto& p : batch.plans) {
        for (const auto& r : p.rooms) {
            const bool bed = is_bedroom(r.kind);
            const double lo = bed ? 8.0 : 3.0, hi = bed ? 18.0 : 11.0;
            if (r.target_area < lo || r.target_area > hi) ++violations;
        }
        const double ar = aspect_ratio(p.footprint);
        worst_aspect = std::max(worst_aspect, ar);
        if (ar < 1.0 || ar > 2.0) ++violations;
    }
    report(2, "parameter bounds", violations == 0,
           fmt("%zu plans (%d seeds failed to generate), %d violations, max footprint aspect %.4f", batch.plans.size(), batch.failed,
               violations, worst_aspect));
}

// ---- 3

void partition(const Batch& batch) {
    int violations = 0;
    for (std::size_t k = 0; k < 1000; ++k) {
        const auto& p = batch.plans[k];
        double sum = 0;
        for (std::size_t i = 0; i < p.rooms.size(); ++i) {
            sum += polygon_area(p.rooms[i].shape);
            for (std::size_t j = i + 1; j < p.rooms.size(); ++j)
                if (to_m2(intersection_area_mm2(p.rooms[i].shape, p.rooms[j].shape)) >= 1e-9) ++violations;
        }
        const double fp = to_m2(p.footprint.area());
        if (std::abs(sum - fp) > 1e-6 * fp) ++violations;
    }
    report(3, "partition and disjointness", violations == 0, fmt("1000 plans, %d violations", violations));
}

// ---- 4

void connectivity(const Batch& batch) {
    const auto cfg = GenConfig::defaults();
    int bad = 0, prohibited = 0;
    for (std::size_t k = 0; k < 1000; ++k) {
        const auto& p = batch.plans[k];
        const auto rep = validate(p, cfg);
        bool entry = false;
        for (const auto& o : p.openings) entry = entry || o.kind == OpeningKind::EntryDoor;
        if (!rep.ok() || !rep.connected || !entry) ++bad;
        for (const auto& o : p.openings) {
            if (o.kind != OpeningKind::Door) continue;
            const auto a = p.room(o.a)->kind, b = p.room(o.b)->kind;
            const bool bed_kitchen = (is_bedroom(a) && b == RoomKind::Kitchen) || (is_bedroom(b) && a == RoomKind::Kitchen);
            if (bed_kitchen || (is_bedroom(a) && is_bedroom(b))) ++prohibited;
        }
    }
    report(4, "connectivity", bad == 0 && prohibited == 0,
           fmt("1000 plans, %d failing validation, %d prohibited doors", bad, prohibited));
}

// ---- 5

Segment seg(Coord x0, Coord y0, Coord x1, Coord y1) { return Segment{{x0 * 1000, y0 * 1000}, {x1 * 1000, y1 * 1000}}; }

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

WallGraph random_graph(std::mt19937_64& gen, int grid, int segments) {
    std::vector<Segment> segs;
    for (int i = 0; i < segments; ++i) {
        const Coord a = static_cast<Coord>(gen() % (grid + 1));
        Coord c = static_cast<Coord>(gen() % (grid + 1));
        const Coord len = 1 + static_cast<Coord>(gen() % 3);
        if (c + len > grid) c = grid - len;
        segs.push_back(gen() % 2 ? seg(c, a, c + len, a) : seg(a, c, a, c + len));
    }
    return graph_from_segments(segs);
}

Polygon dot(const GridPoint& p) { return Polygon::from_rect(GridRect{p.x - 1, p.y - 1, 1, 1}); }

void corridor_optimality() {
    const auto cfg = GenConfig::defaults();
    int plans = 0, mismatches = 0;
    long candidates = 0;
    for (std::uint64_t s = 1; plans < 500 && s < 100000; ++s) {
        GenerationTrace tr;
        try {
            generate(s, cfg, &tr);
        } catch (const GenerationError&) {
            continue;
        }
        if (tr.corridor.candidates.empty()) continue;
        ++plans;
        const auto& pb = *tr.corridor_problem;
        auto all = tr.corridor.candidates;
        for (auto& c : all) c.valid = evaluate_candidate(pb, c.rects).valid;
        candidates += static_cast<long>(all.size());
        const auto want = filter_and_select(all);
        Coord min_area = -1;
        for (const auto& c : all)
            if (*c.valid && (min_area < 0 || c.area_mm2 < min_area)) min_area = c.area_mm2;
        const auto got = tr.corridor.winner;
        if (want != got || !got || tr.corridor.candidates[*got].area_mm2 != min_area) ++mismatches;
    }

    std::mt19937_64 gen(5);
    int graphs = 0, route_mismatches = 0;
    while (graphs < 2000) {
        const auto g = random_graph(gen, 4, 3 + static_cast<int>(gen() % 8));
        if (g.edges.size() > 12 || g.vertices.size() < 2) continue;
        const std::size_t a = gen() % g.vertices.size(), b = gen() % g.vertices.size();
        if (a == b) continue;
        ++graphs;
        const Coord want = brute_shortest(g, a, b);
        try {
            const auto p = route(g, dot(g.vertices[a]), {{1, dot(g.vertices[b])}});
            if (p.length != want) ++route_mismatches;
        } catch (const RoutingError&) {
            if (want >= 0) ++route_mismatches;
        }
    }
    report(5, "corridor optimality", plans == 500 && mismatches == 0 && route_mismatches == 0,
           fmt("%d corridor plans (%ld candidates), %d selection mismatches; %d routed graphs, %d length mismatches", plans,
               candidates, mismatches, graphs, route_mismatches));
}

// ---- 6

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void treemap() {
    LayoutRequest req{Rect{0, 0, 6, 4}, {}};
    const double areas[] = {6, 6, 4, 3, 2, 2, 1};
    for (int i = 0; i < 7; ++i) req.items.push_back({i, areas[i]});
    const double golden[7][4] = {
        {0, 0, 3, 2},
        {0, 2, 3, 2},
        {3, 0, 12.0 / 7, 7.0 / 3},
        {3 + 12.0 / 7, 0, 9.0 / 7, 7.0 / 3},
        {3, 7.0 / 3, 1.2, 5.0 / 3},
        {4.2, 7.0 / 3, 1.2, 5.0 / 3},
        {5.4, 7.0 / 3, 0.6, 5.0 / 3},
    };
    const auto out = squarify(req);
    bool golden_ok = out.size() == 7;
    for (std::size_t i = 0; golden_ok && i < 7; ++i) {
        const auto& r = out[i].rect;
        golden_ok = out[i].id == static_cast<int>(i) && near(r.x, golden[i][0], 1e-9) && near(r.y, golden[i][1], 1e-9) &&
                    near(r.width, golden[i][2], 1e-9) && near(r.height, golden[i][3], 1e-9);
    }

    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> a(0.01, 50.0), side(0.5, 30.0);
    int bad = 0;
    for (int t = 0; t < 10000; ++t) {
        const int n = 1 + static_cast<int>(gen() % 12);
        LayoutRequest r;
        double sum = 0;
        for (int i = 0; i < n; ++i) sum += r.items.emplace_back(LayoutItem{i, a(gen)}).area;
        const double w = side(gen);
        r.container = Rect{0, 0, w, sum / w};
        const auto placed = squarify(r);
        const double tol = 1e-9 * sum;
        double covered = 0;
        bool ok = placed.size() == r.items.size();
        for (std::size_t i = 0; ok && i < placed.size(); ++i) {
            const auto& p = placed[i].rect;
            covered += p.area();
            ok = near(p.area(), r.items[static_cast<std::size_t>(placed[i].id)].area, tol) && p.left() >= -1e-9 * w &&
                 p.right() <= w * (1 + 1e-9) && p.bottom() >= -1e-9 * r.container.height &&
                 p.top() <= r.container.height * (1 + 1e-9);
            for (std::size_t j = i + 1; ok && j < placed.size(); ++j) {
                const auto& q = placed[j].rect;
                const double ow = std::min(p.right(), q.right()) - std::max(p.left(), q.left());
                const double oh = std::min(p.top(), q.top()) - std::max(p.bottom(), q.bottom());
                ok = !(ow > 0 && oh > 0 && ow * oh > tol);
            }
        }
        if (!ok || !near(covered, sum, tol)) ++bad;
    }
    report(6, "treemap", golden_ok && bad == 0,
           fmt("golden layout %s; 10000 random requests, %d not partitioned exactly", golden_ok ? "matches" : "differs", bad));
}

// ---- 7

void pruning() {
    std::mt19937_64 gen(1);
    int bad = 0, nonempty = 0;
    for (int t = 0; t < 10000; ++t) {
        const auto g = random_graph(gen, 5, 2 + static_cast<int>(gen() % 14));
        const auto p = prune(g);
        if (!p.empty()) {
            ++nonempty;
            for (int d : p.degrees())
                if (d < 2) {
                    ++bad;
                    break;
                }
        }
        if (!(prune(p) == p)) ++bad;
    }
    report(7, "pruning", bad == 0, fmt("10000 graphs (%d with a nonempty core), %d violations", nonempty, bad));
}

// ---- 8 and 9 drive the command-line tool

std::string run(const std::string& cmd, int* status) {
    std::string out;
    FILE* f = ::popen(cmd.c_str(), "r");
    if (!f) {
        *status = -1;
        return out;
    }
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, f)) out.append(buf, n);
    *status = ::pclose(f);
    return out;
}

void realtime() {
    int status = 0;
    const auto out = run(std::string("\"") + PLANWRIGHT_CLI + "\" bench --count 1000", &status);
    double median = -1, p95 = -1;
    try {
        const auto j = nlohmann::json::parse(out);
        median = j["median_ms"].get<double>();
        p95 = j["p95_ms"].get<double>();
    } catch (const std::exception&) {
    }
    report(8, "generation time", status == 0 && median >= 0 && median < 10.0 && p95 < 50.0,
           fmt("1000 plans, median %.3f ms, p95 %.3f ms", median, p95));
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void determinism() {
    const fs::path root = fs::temp_directory_path() / ("planwright-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(root);
    int status_a = 0, status_b = 0;
    const std::string cli = std::string("\"") + PLANWRIGHT_CLI + "\" generate --seeds 1..100 --format both --out ";
    run(cli + "\"" + (root / "a").string() + "\"", &status_a);
    run(cli + "\"" + (root / "b").string() + "\"", &status_b);
    int compared = 0, differ = 0;
    if (fs::is_directory(root / "a")) {
        for (const auto& e : fs::directory_iterator(root / "a")) {
            ++compared;
            const auto other = root / "b" / e.path().filename();
            if (!fs::exists(other) || slurp(e.path()) != slurp(other)) ++differ;
        }
    }
    // Same seeds in process must match the files too.
    const auto cfg = GenConfig::defaults();
    for (std::uint64_t s = 1; s <= 100; ++s) {
        char name[32];
        std::snprintf(name, sizeof name, "plan-%06llu", static_cast<unsigned long long>(s));
        try {
            const auto p = generate(s, cfg);
            if (to_json(p) != slurp(root / "a" / (std::string(name) + ".json"))) ++differ;
            if (to_svg(p) != slurp(root / "a" / (std::string(name) + ".svg"))) ++differ;
        } catch (const GenerationError&) {
            ++differ;
        }
    }
    fs::remove_all(root);
    report(9, "determinism", status_a == 0 && status_b == 0 && compared == 200 && differ == 0,
           fmt("%d files from two runs of seeds 1..100, %d differences", compared, differ));
}

}  // namespace

int main() {
    distribution_fidelity();
    const auto batch = plans_for(10000);
    parameter_conformance(batch);
    partition(batch);
    connectivity(batch);
    corridor_optimality();
    treemap();
    pruning();
    realtime();
    determinism();
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
