#pragma once

// The assembled floor plan document.

#include <cstdint>
#include <string>
#include <vector>

#include "planwright/geometry.hpp"
#include "planwright/rooms.hpp"

namespace planwright {

struct PlanRoom {
    RoomId id = 0;
    RoomKind kind = RoomKind::LivingRoom;
    double target_area = 0.0;  ///< sampled area, m^2
    Polygon shape;             ///< final outline; the living room includes the corridor

    bool operator==(const PlanRoom&) const = default;
};

enum class OpeningKind { Door, Window, EntryDoor };

constexpr std::string_view to_string(OpeningKind k) {
    switch (k) {
        case OpeningKind::Door: return "Door";
        case OpeningKind::Window: return "Window";
        case OpeningKind::EntryDoor: return "EntryDoor";
    }
    return "Door";
}

/// An opening occupies [offset, offset + width] along `wall` measured from
/// wall.a. Doors connect rooms a and b; windows and entry doors have
/// b == kOutsideId.
struct Opening {
    OpeningKind kind = OpeningKind::Door;
    Segment wall;
    Coord offset = 0;
    Coord width = 0;
    RoomId a = 0;
    RoomId b = kOutsideId;

    Segment span() const {
        const GridPoint d{wall.b.x > wall.a.x ? 1 : (wall.b.x < wall.a.x ? -1 : 0),
                          wall.b.y > wall.a.y ? 1 : (wall.b.y < wall.a.y ? -1 : 0)};
        return Segment{{wall.a.x + d.x * offset, wall.a.y + d.y * offset},
                       {wall.a.x + d.x * (offset + width), wall.a.y + d.y * (offset + width)}};
    }
    bool operator==(const Opening&) const = default;
};

struct Connection {
    RoomId a = 0;
    RoomId b = 0;
    bool mandatory = true;
    bool operator==(const Connection&) const = default;
};

struct GenerationInfo {
    int attempts = 0;
    int corridor_candidates = 0;
    std::vector<RoomId> corridor_rooms;
    bool operator==(const GenerationInfo&) const = default;
};

struct FloorPlan {
    std::uint64_t seed = 0;
    std::string config_fingerprint;
    GridRect footprint;
    std::vector<PlanRoom> rooms;     ///< ordered by id
    std::vector<Polygon> corridor;   ///< carved corridor pieces, already part of the living room
    std::vector<Opening> openings;
    std::vector<Connection> connections;
    GenerationInfo info;

    const PlanRoom* room(RoomId id) const {
        for (const auto& r : rooms)
            if (r.id == id) return &r;
        return nullptr;
    }
    const PlanRoom* living() const {
        for (const auto& r : rooms)
            if (r.kind == RoomKind::LivingRoom) return &r;
        return nullptr;
    }
    bool operator==(const FloorPlan&) const = default;
};

}  // namespace planwright
