#pragma once

// Squarified treemap subdivision and hierarchical room placement.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "planwright/geometry.hpp"
#include "planwright/hierarchy.hpp"

namespace planwright {

class LayoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LayoutItem {
    int id = 0;
    double area = 0.0;
};

struct LayoutRequest {
    Rect container;
    std::vector<LayoutItem> items;
};

struct PlacedRect {
    int id = 0;
    Rect rect;
};

/// One closed row of the greedy pass, for inspecting the acceptance rule.
struct SquarifyRow {
    std::vector<int> ids;
    double side = 0.0;              ///< length of the side the row is laid along
    double worst = 0.0;             ///< worst aspect ratio of the accepted row
    double worst_with_next = 0.0;   ///< worst ratio had the next item been added (inf if none)
};

/// Worst aspect ratio of a row of `areas` laid along a side of length `side`.
inline double row_worst(std::span<const double> areas, double side) {
    const double s = std::accumulate(areas.begin(), areas.end(), 0.0);
    const auto [mn, mx] = std::minmax_element(areas.begin(), areas.end());
    const double s2 = s * s, w2 = side * side;
    return std::max(w2 * *mx / s2, s2 / (w2 * *mn));
}

namespace treemap_detail {

inline void check_request(const LayoutRequest& req) {
    if (req.items.empty()) throw LayoutError("squarify: no items");
    if (!(req.container.width > 0.0) || !(req.container.height > 0.0)) throw LayoutError("squarify: degenerate container");
    double total = 0.0;
    for (const auto& it : req.items) {
        if (!(it.area > 0.0)) throw LayoutError("squarify: item areas must be positive");
        total += it.area;
    }
    const double c = req.container.area();
    if (std::abs(total - c) > 1e-6 * c) throw LayoutError("squarify: item areas do not sum to the container area");
}

}  // namespace treemap_detail

/// Squarified layout that keeps the given item order. Rows run along the
/// shorter side of the remaining rectangle: a column at the left when the
/// rectangle is at least as wide as tall, otherwise a row at the bottom. An
/// item joins the current row while that does not worsen the row's worst
/// aspect ratio. Coordinates are accumulated so neighbouring rectangles share
/// bit-identical edges, and the last rectangle of each row and the last row
/// end exactly on the container boundary.
inline std::vector<PlacedRect> squarify_in_order(const LayoutRequest& req, std::vector<SquarifyRow>* trace = nullptr) {
    treemap_detail::check_request(req);
    const double total = std::accumulate(req.items.begin(), req.items.end(), 0.0,
                                         [](double s, const LayoutItem& i) { return s + i.area; });
    const double scale = req.container.area() / total;
    std::vector<double> areas;
    for (const auto& it : req.items) areas.push_back(it.area * scale);

    std::vector<PlacedRect> out(req.items.size());
    double x0 = req.container.left(), y0 = req.container.bottom();
    const double x1 = req.container.right(), y1 = req.container.top();
    std::size_t next = 0;
    const std::size_t n = areas.size();
    while (next < n) {
        const double w = x1 - x0, h = y1 - y0;
        const bool column = w >= h;
        const double side = column ? h : w;
        std::size_t end = next + 1;
        double worst = row_worst(std::span(areas).subspan(next, 1), side);
        double worst_next = std::numeric_limits<double>::infinity();
        while (end < n) {
            const double candidate = row_worst(std::span(areas).subspan(next, end - next + 1), side);
            if (candidate > worst) {
                worst_next = candidate;
                break;
            }
            worst = candidate;
            ++end;
        }
        const bool last_row = end == n;
        double row_area = 0.0;
        for (std::size_t k = next; k < end; ++k) row_area += areas[k];
        if (column) {
            const double xr = last_row ? x1 : x0 + row_area / h;
            double acc = 0.0;
            double yb = y0;
            for (std::size_t k = next; k < end; ++k) {
                acc += areas[k];
                const double yt = k + 1 == end ? y1 : y0 + h * (acc / row_area);
                out[k] = {req.items[k].id, Rect{x0, yb, xr - x0, yt - yb}};
                yb = yt;
            }
            x0 = xr;
        } else {
            const double yt = last_row ? y1 : y0 + row_area / w;
            double acc = 0.0;
            double xl = x0;
            for (std::size_t k = next; k < end; ++k) {
                acc += areas[k];
                const double xr = k + 1 == end ? x1 : x0 + w * (acc / row_area);
                out[k] = {req.items[k].id, Rect{xl, y0, xr - xl, yt - y0}};
                xl = xr;
            }
            y0 = yt;
        }
        if (trace) {
            SquarifyRow row{{}, side, worst, worst_next};
            for (std::size_t k = next; k < end; ++k) row.ids.push_back(req.items[k].id);
            trace->push_back(std::move(row));
        }
        next = end;
    }
    return out;
}

/// Standard squarify: items sorted by decreasing area (ties by id), output in
/// the caller's item order.
inline std::vector<PlacedRect> squarify(const LayoutRequest& req, std::vector<SquarifyRow>* trace = nullptr) {
    LayoutRequest sorted = req;
    std::stable_sort(sorted.items.begin(), sorted.items.end(), [](const LayoutItem& a, const LayoutItem& b) {
        return a.area > b.area || (a.area == b.area && a.id < b.id);
    });
    auto placed = squarify_in_order(sorted, trace);
    std::vector<PlacedRect> out;
    out.reserve(req.items.size());
    std::vector<bool> used(placed.size(), false);
    for (const auto& it : req.items) {
        for (std::size_t k = 0; k < placed.size(); ++k) {
            if (!used[k] && placed[k].id == it.id) {
                used[k] = true;
                out.push_back(placed[k]);
                break;
            }
        }
    }
    return out;
}

struct PlacedRoom {
    RoomId id = 0;
    RoomKind kind = RoomKind::LivingRoom;
    Rect rect;
};

/// Places the hierarchy inside the footprint. Each node's allotment is split
/// among the node's own area (first item) and its child subtrees by aggregate
/// area (decreasing); the process recurses into every child allotment. At the
/// living room the items are placed in size order instead.
/// Results are ordered by room id.
inline std::vector<PlacedRoom> layout_rooms(const Rect& footprint, const HierarchyNode& root) {
    const double c = footprint.area();
    if (std::abs(root.aggregate_area - c) > 1e-6 * c) throw LayoutError("layout_rooms: tree area does not match footprint");
    std::vector<PlacedRoom> out;
    std::function<void(const HierarchyNode&, const Rect&)> place = [&](const HierarchyNode& node, const Rect& box) {
        std::vector<const HierarchyNode*> kids;
        for (const auto& ch : node.children) kids.push_back(&ch);
        std::stable_sort(kids.begin(), kids.end(), [](auto* a, auto* b) { return a->aggregate_area > b->aggregate_area; });
        LayoutRequest req{box, {}};
        if (node.target_area > 0.0) req.items.push_back({0, node.target_area});
        for (std::size_t k = 0; k < kids.size(); ++k) req.items.push_back({static_cast<int>(req.items.size()), kids[k]->aggregate_area});
        if (req.items.size() == 1 && kids.empty()) {
            out.push_back({node.id, node.kind, box});
            return;
        }
        // Rescale so accumulated floating-point drift never trips the check.
        const double total = std::accumulate(req.items.begin(), req.items.end(), 0.0,
                                             [](double s, const LayoutItem& i) { return s + i.area; });
        for (auto& it : req.items) it.area *= box.area() / total;
        // The living room sits under Outside, so nothing needs its cell first;
        // sorted order keeps its own cell from being squeezed.
        const auto placed = node.kind == RoomKind::LivingRoom ? squarify(req) : squarify_in_order(req);
        std::size_t k0 = 0;
        if (node.target_area > 0.0) {
            out.push_back({node.id, node.kind, placed[0].rect});
            k0 = 1;
        }
        for (std::size_t k = k0; k < placed.size(); ++k) place(*kids[k - k0], placed[k].rect);
    };
    place(root, footprint);
    std::sort(out.begin(), out.end(), [](const PlacedRoom& a, const PlacedRoom& b) { return a.id < b.id; });
    return out;
}

}  // namespace planwright
