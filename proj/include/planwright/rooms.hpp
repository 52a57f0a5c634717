#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace planwright {

enum class RoomKind {
    Outside,
    LivingRoom,
    Kitchen,
    DiningRoom,
    MasterBedroom,
    Bedroom,
    Bathroom,
    Laundry,
    Pantry,
    Storage,
};

enum class RoomCategory { Outside, Social, Service, Private };

using RoomId = int;
constexpr RoomId kOutsideId = -1;

inline constexpr std::array kAllRoomKinds = {
    RoomKind::Outside, RoomKind::LivingRoom, RoomKind::Kitchen, RoomKind::DiningRoom, RoomKind::MasterBedroom,
    RoomKind::Bedroom, RoomKind::Bathroom,   RoomKind::Laundry, RoomKind::Pantry,     RoomKind::Storage,
};

constexpr std::string_view to_string(RoomKind k) {
    switch (k) {
        case RoomKind::Outside: return "Outside";
        case RoomKind::LivingRoom: return "LivingRoom";
        case RoomKind::Kitchen: return "Kitchen";
        case RoomKind::DiningRoom: return "DiningRoom";
        case RoomKind::MasterBedroom: return "MasterBedroom";
        case RoomKind::Bedroom: return "Bedroom";
        case RoomKind::Bathroom: return "Bathroom";
        case RoomKind::Laundry: return "Laundry";
        case RoomKind::Pantry: return "Pantry";
        case RoomKind::Storage: return "Storage";
    }
    return "Outside";
}

inline std::optional<RoomKind> parse_room_kind(std::string_view s) {
    for (auto k : kAllRoomKinds)
        if (to_string(k) == s) return k;
    return std::nullopt;
}

constexpr RoomCategory category(RoomKind k) {
    switch (k) {
        case RoomKind::Outside: return RoomCategory::Outside;
        case RoomKind::LivingRoom:
        case RoomKind::DiningRoom: return RoomCategory::Social;
        case RoomKind::Kitchen:
        case RoomKind::Laundry:
        case RoomKind::Pantry:
        case RoomKind::Storage: return RoomCategory::Service;
        case RoomKind::MasterBedroom:
        case RoomKind::Bedroom:
        case RoomKind::Bathroom: return RoomCategory::Private;
    }
    return RoomCategory::Outside;
}

constexpr bool is_bedroom(RoomKind k) { return k == RoomKind::MasterBedroom || k == RoomKind::Bedroom; }

/// Short label used in drawings.
constexpr std::string_view label(RoomKind k) {
    switch (k) {
        case RoomKind::Outside: return "outside";
        case RoomKind::LivingRoom: return "living";
        case RoomKind::Kitchen: return "kitchen";
        case RoomKind::DiningRoom: return "dining";
        case RoomKind::MasterBedroom: return "master bed";
        case RoomKind::Bedroom: return "bedroom";
        case RoomKind::Bathroom: return "bath";
        case RoomKind::Laundry: return "laundry";
        case RoomKind::Pantry: return "pantry";
        case RoomKind::Storage: return "storage";
    }
    return "";
}

}  // namespace planwright
