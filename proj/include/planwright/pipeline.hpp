#pragma once

// generate(seed, config): the full pipeline with whole-house resampling.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planwright/config.hpp"
#include "planwright/corridor.hpp"
#include "planwright/hierarchy.hpp"
#include "planwright/openings.hpp"
#include "planwright/plan.hpp"
#include "planwright/random.hpp"
#include "planwright/sampling.hpp"
#include "planwright/treemap.hpp"

namespace planwright {

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AttemptFailure {
    int attempt = 0;
    std::string stage;
    std::string reason;
};

struct GenerationTrace {
    std::vector<AttemptFailure> failures;
    // Corridor stage of the successful attempt.
    std::optional<CorridorProblem> corridor_problem;
    std::vector<std::pair<RoomId, RoomId>> tree;
    CorridorTrace corridor;
};

namespace pipeline_detail {

struct StageFailure : std::runtime_error {
    std::string stage;
    StageFailure(std::string s, const std::string& what) : std::runtime_error(what), stage(std::move(s)) {}
};

inline void scale_tree(HierarchyNode& n, double k) {
    n.target_area *= k;
    for (auto& c : n.children) scale_tree(c, k);
}

inline FloorPlan attempt(std::uint64_t seed, int index, const GenConfig& cfg, GenerationTrace* trace) {
    RandomStream rng = RandomStream(seed).substream(static_cast<std::uint64_t>(index));
    RoomProgram program;
    try {
        const auto counts = sample_counts(rng, cfg.joint_table);
        program = assign_functions(counts.bedrooms, counts.rooms, cfg.priority);
    } catch (const std::invalid_argument& e) {
        throw StageFailure("program", e.what());
    }
    program = sample_areas(std::move(program), rng, cfg);
    const Rect fp = derive_footprint(program, rng, cfg);
    const bool kitchen_under_dining = rng.bernoulli(cfg.kitchen_via_dining_probability);
    HierarchyNode tree = build_hierarchy(program, kitchen_under_dining);

    // Lay out inside the grid footprint, target areas scaled to match it.
    const GridRect gfp = snap_footprint(fp);
    HierarchyNode scaled = tree;
    scale_tree(scaled, to_m2(gfp.area()) / scaled.aggregate_area);
    aggregate_areas(scaled);
    std::vector<PlacedRoom> placed;
    try {
        placed = layout_rooms(to_metres(gfp), scaled);
    } catch (const LayoutError& e) {
        throw StageFailure("layout", e.what());
    }
    const Coord min_width = to_mm(cfg.min_room_width);
    std::vector<PlanRoom> rooms;
    RoomId living = -1;
    for (const auto& p : placed) {
        const GridRect r = snap(p.rect);
        if (r.width < min_width || r.height < min_width || aspect_ratio(r) > cfg.max_room_aspect)
            throw StageFailure("layout", "room " + std::to_string(p.id) + " (" + std::string(to_string(p.kind)) + ") is too narrow");
        // Target areas are kept to 0.001 m^2 so documents round-trip exactly.
        const double target = std::round(program.entries[static_cast<std::size_t>(p.id)].target_area * 1000.0) / 1000.0;
        rooms.push_back({p.id, p.kind, target, Polygon::from_rect(r)});
        if (p.kind == RoomKind::LivingRoom) living = p.id;
    }

    CorridorProblem pb;
    pb.footprint = gfp;
    pb.rooms = rooms;
    pb.living = living;
    pb.corridor_width = to_mm(cfg.corridor_width);
    pb.door_width = to_mm(cfg.door_width);
    pb.min_room_width = min_width;
    pb.max_room_aspect = cfg.max_room_aspect;
    pb.max_candidates = cfg.max_corridor_candidates;
    const auto edges = tree_edges(tree);
    CorridorTrace ctrace;
    CorridorResult cor;
    try {
        cor = plan_corridor(pb, edges, trace ? &ctrace : nullptr);
    } catch (const RoutingError& e) {
        throw StageFailure("corridor", e.what());
    } catch (const GeometryError& e) {
        throw StageFailure("corridor", e.what());
    }
    for (std::size_t i = 0; i < rooms.size(); ++i) rooms[i].shape = cor.shapes[i];

    FloorPlan plan;
    plan.seed = seed;
    plan.config_fingerprint = fingerprint(cfg);
    plan.footprint = gfp;
    plan.rooms = rooms;
    plan.corridor = cor.corridor;
    try {
        plan.connections = build_connection_graph(rooms, cor.mandatory, rng, cfg);
        plan.openings = place_doors(rooms, plan.connections, gfp, rng, cfg);
        auto windows = place_windows(rooms, plan.openings, gfp, rng, cfg);
        plan.openings.insert(plan.openings.end(), windows.begin(), windows.end());
    } catch (const OpeningError& e) {
        throw StageFailure("openings", e.what());
    }
    plan.info.attempts = index + 1;
    plan.info.corridor_candidates = cor.candidates;
    plan.info.corridor_rooms = cor.corridor_rooms;

    const auto report = validate(plan, cfg);
    if (!report.ok()) throw StageFailure("validate", report.issues.front().code + ": " + report.issues.front().message);
    if (trace) {
        pb.mandatory = cor.mandatory;
        trace->corridor_problem = pb;
        trace->tree = edges;
        trace->corridor = std::move(ctrace);
    }
    return plan;
}

}  // namespace pipeline_detail

/// Deterministic in (seed, cfg). Attempt k draws from substream k of the
/// seed; a failed attempt is retried with the next substream up to
/// cfg.max_attempts. Throws GenerationError when every attempt fails.
inline FloorPlan generate(std::uint64_t seed, const GenConfig& cfg, GenerationTrace* trace = nullptr) {
    std::string last;
    for (int k = 0; k < cfg.max_attempts; ++k) {
        try {
            return pipeline_detail::attempt(seed, k, cfg, trace);
        } catch (const pipeline_detail::StageFailure& e) {
            last = e.stage + ": " + e.what();
            if (trace) trace->failures.push_back({k, e.stage, e.what()});
        }
    }
    throw GenerationError("seed " + std::to_string(seed) + ": no valid plan after " + std::to_string(cfg.max_attempts) +
                          " attempts (last failure: " + last + ")");
}

}  // namespace planwright
