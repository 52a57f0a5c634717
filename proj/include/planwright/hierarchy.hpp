#pragma once

// Rule-based room hierarchy rooted at Outside. The tree fixes which room each
// room must open onto and groups rooms for placement.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "planwright/rooms.hpp"
#include "planwright/sampling.hpp"

namespace planwright {

struct HierarchyNode {
    RoomId id = kOutsideId;
    RoomKind kind = RoomKind::Outside;
    double target_area = 0.0;
    double aggregate_area = 0.0;  ///< own area plus all descendants
    std::vector<HierarchyNode> children;

    bool operator==(const HierarchyNode&) const = default;
};

/// Fills aggregate_area bottom-up and returns the root's aggregate.
inline double aggregate_areas(HierarchyNode& node) {
    double total = node.target_area;
    for (auto& c : node.children) total += aggregate_areas(c);
    node.aggregate_area = total;
    return total;
}

/// Depth-first visit, parent before children.
template <class Fn>
void visit(const HierarchyNode& node, Fn&& fn, const HierarchyNode* parent = nullptr) {
    fn(node, parent);
    for (const auto& c : node.children) visit(c, fn, &node);
}

inline const HierarchyNode* find_node(const HierarchyNode& root, RoomId id) {
    if (root.id == id) return &root;
    for (const auto& c : root.children)
        if (auto* n = find_node(c, id)) return n;
    return nullptr;
}

/// Builds the tree:
///   Outside -> LivingRoom; kitchen under the living room, or under the dining
///   room when `kitchen_under_dining` and a dining room exist; the largest
///   bedroom becomes the master and sits under the living room, as do the
///   other bedrooms; a single bathroom goes under the living room, otherwise
///   the first does and the rest go under bedrooms largest-first; laundry and
///   pantry under the kitchen; anything else under the living room.
/// Room ids are program entry indices.
inline HierarchyNode build_hierarchy(const RoomProgram& program, bool kitchen_under_dining = false) {
    const auto& entries = program.entries;
    auto ids_of = [&](auto pred) {
        std::vector<RoomId> out;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (pred(entries[i].kind)) out.push_back(static_cast<RoomId>(i));
        return out;
    };
    const auto livings = ids_of([](RoomKind k) { return k == RoomKind::LivingRoom; });
    if (livings.empty()) throw std::invalid_argument("build_hierarchy: program has no living room");

    std::vector<RoomKind> kinds;
    for (const auto& e : entries) kinds.push_back(e.kind);

    // Bedrooms by area descending, ties by id; the first is the master.
    auto beds = ids_of(is_bedroom);
    std::stable_sort(beds.begin(), beds.end(), [&](RoomId a, RoomId b) { return entries[a].target_area > entries[b].target_area; });
    for (std::size_t i = 0; i < beds.size(); ++i) kinds[beds[i]] = i == 0 ? RoomKind::MasterBedroom : RoomKind::Bedroom;

    const RoomId living = livings.front();
    std::vector<RoomId> parent(entries.size(), living);
    const auto kitchens = ids_of([](RoomKind k) { return k == RoomKind::Kitchen; });
    const auto dinings = ids_of([](RoomKind k) { return k == RoomKind::DiningRoom; });
    const RoomId kitchen = kitchens.empty() ? -1 : kitchens.front();
    if (kitchen >= 0 && kitchen_under_dining && !dinings.empty()) parent[kitchen] = dinings.front();

    const auto baths = ids_of([](RoomKind k) { return k == RoomKind::Bathroom; });
    for (std::size_t i = 1; i < baths.size(); ++i) {
        if (!beds.empty()) parent[baths[i]] = beds[(i - 1) % beds.size()];
    }
    for (RoomId id : ids_of([](RoomKind k) { return k == RoomKind::Laundry || k == RoomKind::Pantry; })) {
        if (kitchen >= 0) parent[id] = kitchen;
    }

    std::function<HierarchyNode(RoomId)> make = [&](RoomId id) {
        HierarchyNode n{id, kinds[id], entries[id].target_area, 0.0, {}};
        for (std::size_t c = 0; c < entries.size(); ++c) {
            const auto cid = static_cast<RoomId>(c);
            if (cid != living && cid != id && parent[c] == id) n.children.push_back(make(cid));
        }
        return n;
    };
    HierarchyNode root{kOutsideId, RoomKind::Outside, 0.0, 0.0, {make(living)}};
    aggregate_areas(root);
    return root;
}

/// (child, parent) pairs of every tree edge, including (living, Outside).
inline std::vector<std::pair<RoomId, RoomId>> tree_edges(const HierarchyNode& root) {
    std::vector<std::pair<RoomId, RoomId>> out;
    visit(root, [&](const HierarchyNode& n, const HierarchyNode* p) {
        if (p) out.push_back({n.id, p->id});
    });
    return out;
}

}  // namespace planwright
