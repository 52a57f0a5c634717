#pragma once

// Every random choice about what a house contains: bedroom/room counts, the
// function of each room, target areas, and the footprint rectangle.

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "planwright/config.hpp"
#include "planwright/geometry.hpp"
#include "planwright/random.hpp"
#include "planwright/rooms.hpp"

namespace planwright {

struct ProgramEntry {
    RoomKind kind;
    double target_area = 0.0;  // m^2
    bool operator==(const ProgramEntry&) const = default;
};

struct RoomProgram {
    int bedrooms = 0;
    int rooms = 0;
    std::vector<ProgramEntry> entries;

    double total_area() const {
        return std::accumulate(entries.begin(), entries.end(), 0.0,
                               [](double s, const ProgramEntry& e) { return s + e.target_area; });
    }
    bool operator==(const RoomProgram&) const = default;
};

struct RoomCounts {
    int bedrooms = 0;
    int rooms = 0;
    bool operator==(const RoomCounts&) const = default;
};

inline RoomCounts sample_counts(RandomStream& rng, const JointCountTable& table) {
    std::vector<double> weights;
    weights.reserve(JointCountTable::kBedroomRows * JointCountTable::kRoomColumns);
    for (const auto& row : table.grid())
        for (double v : row) weights.push_back(v);
    const std::size_t cell = rng.discrete(weights);
    return {static_cast<int>(cell) / JointCountTable::kRoomColumns, static_cast<int>(cell) % JointCountTable::kRoomColumns + 1};
}

/// The candidate sequence room functions are drawn from: the priority list
/// without Outside, followed by enough extra bedrooms and copies of the last
/// non-bedroom entry that any (bedrooms, rooms) pair can be filled.
inline std::vector<RoomKind> priority_pool(const std::vector<RoomKind>& priority, int bedrooms, int rooms) {
    std::vector<RoomKind> pool;
    RoomKind filler = RoomKind::Storage;
    for (auto k : priority) {
        if (k == RoomKind::Outside) continue;
        pool.push_back(k);
        if (!is_bedroom(k)) filler = k;
    }
    for (int i = 0; i < bedrooms; ++i) pool.push_back(RoomKind::Bedroom);
    for (int i = 0; i < rooms; ++i) pool.push_back(filler);
    return pool;
}

/// A house with bedrooms keeps one bathroom when there is a slot to spare.
inline bool needs_bathroom(const std::vector<RoomKind>& priority, int bedrooms, int rooms) {
    bool listed = false;
    for (auto k : priority) listed = listed || k == RoomKind::Bathroom;
    return listed && bedrooms > 0 && rooms >= bedrooms + 2;
}

/// Takes the first `rooms` entries of the priority list that keep the program
/// completable: exactly `bedrooms` bedroom-kind entries, one living room and,
/// when required, one bathroom. The first bedroom taken becomes the master.
inline RoomProgram assign_functions(int bedrooms, int rooms, const std::vector<RoomKind>& priority) {
    if (rooms < 1) throw std::invalid_argument("assign_functions: rooms must be >= 1");
    if (bedrooms < 0 || bedrooms >= rooms) throw std::invalid_argument("assign_functions: need bedrooms < rooms");
    const auto pool = priority_pool(priority, bedrooms, rooms);
    const bool want_bath = needs_bathroom(priority, bedrooms, rooms);

    int slots = rooms;
    int beds_taken = 0;
    bool have_living = false, have_bath = false;
    std::vector<RoomKind> living, beds, others;
    for (auto k : pool) {
        if (slots == 0) break;
        if (is_bedroom(k)) {
            if (beds_taken < bedrooms) {
                beds.push_back(beds_taken == 0 ? RoomKind::MasterBedroom : RoomKind::Bedroom);
                ++beds_taken;
                --slots;
            }
            continue;
        }
        const bool is_living = k == RoomKind::LivingRoom;
        if (is_living && have_living) {
            continue;
        }
        const int still_required = (bedrooms - beds_taken) +
                                   ((want_bath && !have_bath && k != RoomKind::Bathroom) ? 1 : 0) +
                                   ((!have_living && !is_living) ? 1 : 0);
        if (slots - 1 < still_required) continue;
        (is_living ? living : others).push_back(k);
        have_living = have_living || is_living;
        have_bath = have_bath || k == RoomKind::Bathroom;
        --slots;
    }
    if (slots != 0 || !have_living) throw std::invalid_argument("assign_functions: priority list cannot fill the program");

    RoomProgram prog;
    prog.bedrooms = bedrooms;
    prog.rooms = rooms;
    for (auto group : {&living, &beds, &others})
        for (auto k : *group) prog.entries.push_back({k, 0.0});
    return prog;
}

/// Draws each target area from its kind's distribution, rounded to 0.001 m^2.
inline RoomProgram sample_areas(RoomProgram program, RandomStream& rng, const GenConfig& cfg) {
    for (auto& e : program.entries) {
        auto it = cfg.area.find(e.kind);
        if (it == cfg.area.end()) throw ConfigError("no area distribution for " + std::string(to_string(e.kind)));
        const double a = rng.uniform(it->second.min, it->second.max);
        e.target_area = std::clamp(std::round(a * 1000.0) / 1000.0, it->second.min, it->second.max);
    }
    return program;
}

/// Rectangle of the given area with width/height = ar.
inline Rect footprint_with_aspect(double area, double ar) {
    const double width = std::sqrt(area * ar);
    return Rect{0.0, 0.0, width, area / width};
}

/// Footprint whose area is the sum of the target areas and whose aspect ratio
/// is drawn from the configured distribution (redrawn above the cap). The
/// longer side runs along x.
inline Rect derive_footprint(const RoomProgram& program, RandomStream& rng, const GenConfig& cfg) {
    const double area = program.total_area();
    double ar = 0.0;
    for (int tries = 0;; ++tries) {
        ar = rng.uniform(cfg.footprint_aspect.min, cfg.footprint_aspect.max);
        if (ar <= cfg.max_footprint_aspect) break;
        if (tries > 1000) {
            ar = cfg.max_footprint_aspect;
            break;
        }
    }
    return footprint_with_aspect(area, ar);
}

/// Grid footprint: width rounded down and height rounded up so the aspect
/// ratio never exceeds the drawn one.
inline GridRect snap_footprint(const Rect& r) {
    const Coord w = static_cast<Coord>(std::floor(r.width * 1000.0 + 1e-6));
    const Coord h = static_cast<Coord>(std::ceil(r.height * 1000.0 - 1e-6));
    return GridRect{0, 0, w, h};
}

}  // namespace planwright
