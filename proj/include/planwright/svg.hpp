#pragma once

// SVG 1.1 rendering of a plan and of a contact sheet of plans.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "planwright/plan.hpp"

namespace planwright {

struct SvgStyle {
    double scale = 40.0;       ///< pixels per metre
    double margin = 20.0;      ///< pixels
    double wall_width = 3.0;   ///< pixels
    bool labels = true;
    bool corridor_outline = true;
};

namespace svg_detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
}

inline const char* fill(RoomKind k) {
    switch (category(k)) {
        case RoomCategory::Social: return "#f3e4c4";
        case RoomCategory::Service: return "#d6e7ef";
        case RoomCategory::Private: return "#e3dcee";
        case RoomCategory::Outside: break;
    }
    return "#ffffff";
}

/// Maps grid millimetres to local pixels; y grows downwards.
struct Frame {
    double scale;
    double margin;
    Coord height_mm;
    double x(Coord v) const { return margin + static_cast<double>(v) / 1000.0 * scale; }
    double y(Coord v) const { return margin + static_cast<double>(height_mm - v) / 1000.0 * scale; }
};

struct Interval {
    Coord lo, hi;
};

// Wall pieces keyed by (horizontal, line).
using WallMap = std::map<std::pair<bool, Coord>, std::vector<Interval>>;

inline void add_segment(WallMap& m, const Segment& s) {
    if (s.horizontal())
        m[{true, s.a.y}].push_back({std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x)});
    else
        m[{false, s.a.x}].push_back({std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)});
}

inline std::vector<Interval> merged(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    std::vector<Interval> out;
    for (const auto& i : v) {
        if (!out.empty() && i.lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, i.hi);
        else
            out.push_back(i);
    }
    return out;
}

inline std::vector<Interval> minus(const std::vector<Interval>& walls, const std::vector<Interval>& gaps) {
    std::vector<Interval> out;
    for (auto w : walls) {
        Coord cur = w.lo;
        for (const auto& g : gaps) {
            if (g.hi <= cur || g.lo >= w.hi) continue;
            if (g.lo > cur) out.push_back({cur, g.lo});
            cur = std::max(cur, g.hi);
        }
        if (cur < w.hi) out.push_back({cur, w.hi});
    }
    return out;
}

// Centre of the largest cell of the polygon's own grid.
inline std::pair<double, double> label_anchor(const Polygon& p) {
    std::vector<Coord> xs, ys;
    detail::append_coords(p, xs, ys);
    const auto g = detail::CellGrid::build(xs, ys, [&](Coord x2, Coord y2) { return detail::contains_doubled(p, x2, y2); });
    Coord best = -1;
    std::pair<double, double> at{0.0, 0.0};
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            if (g.at(i, j) && g.cell_area(i, j) > best) {
                best = g.cell_area(i, j);
                at = {static_cast<double>(g.cx2(i)) / 2.0, static_cast<double>(g.cy2(j)) / 2.0};
            }
    return at;
}

inline std::string points(const Polygon& p, const Frame& f) {
    std::string s;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) s += ' ';
        s += num(f.x(p.vertices[i].x)) + "," + num(f.y(p.vertices[i].y));
    }
    return s;
}

// Unit normal of the span pointing into room `r`.
inline GridPoint inward(const Segment& span, const Polygon* r) {
    const Coord mx2 = span.a.x + span.b.x, my2 = span.a.y + span.b.y;
    const GridPoint n = span.horizontal() ? GridPoint{0, 1} : GridPoint{1, 0};
    if (r && detail::contains_doubled(*r, mx2 + 2 * n.x, my2 + 2 * n.y)) return n;
    if (r && detail::contains_doubled(*r, mx2 - 2 * n.x, my2 - 2 * n.y)) return {-n.x, -n.y};
    return n;
}

inline void render_body(std::string& out, const FloorPlan& plan, const SvgStyle& st, const Frame& f) {
    for (const auto& r : plan.rooms)
        out += "<polygon class=\"room\" points=\"" + points(r.shape, f) + "\" fill=\"" + fill(r.kind) + "\"/>\n";
    if (st.corridor_outline) {
        for (const auto& c : plan.corridor)
            out += "<polygon class=\"corridor\" points=\"" + points(c, f) +
                   "\" fill=\"#eeeeee\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }

    WallMap walls, gaps;
    for (const auto& r : plan.rooms)
        for (std::size_t i = 0; i < r.shape.size(); ++i) add_segment(walls, r.shape.edge(i));
    for (const auto& o : plan.openings) add_segment(gaps, o.span());
    std::string d;
    for (auto& [key, v] : walls) {
        const auto it = gaps.find(key);
        const auto pieces = minus(merged(v), it == gaps.end() ? std::vector<Interval>{} : merged(it->second));
        for (const auto& p : pieces) {
            if (key.first)
                d += "M" + num(f.x(p.lo)) + " " + num(f.y(key.second)) + "H" + num(f.x(p.hi));
            else
                d += "M" + num(f.x(key.second)) + " " + num(f.y(p.lo)) + "V" + num(f.y(p.hi));
        }
    }
    out += "<path class=\"walls\" d=\"" + d + "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"" + num(st.wall_width) +
           "\" stroke-linecap=\"square\"/>\n";

    for (const auto& o : plan.openings) {
        const Segment s = o.span();
        if (o.kind == OpeningKind::Window) {
            const double off = st.wall_width * 0.6;
            const double x0 = f.x(s.a.x), y0 = f.y(s.a.y), x1 = f.x(s.b.x), y1 = f.y(s.b.y);
            const double dx = s.horizontal() ? 0.0 : off, dy = s.horizontal() ? off : 0.0;
            out += "<path class=\"window\" d=\"M" + num(x0 - dx) + " " + num(y0 - dy) + "L" + num(x1 - dx) + " " + num(y1 - dy) +
                   "M" + num(x0 + dx) + " " + num(y0 + dy) + "L" + num(x1 + dx) + " " + num(y1 + dy) +
                   "\" fill=\"none\" stroke=\"#3a6ea5\" stroke-width=\"1\"/>\n";
            continue;
        }
        // Leaf hinged at the span start, swinging into room a.
        const PlanRoom* host = plan.room(o.a);
        const GridPoint n = inward(s, host ? &host->shape : nullptr);
        const GridPoint hinge = s.a;
        const GridPoint open{hinge.x + n.x * o.width, hinge.y + n.y * o.width};
        const double hx = f.x(hinge.x), hy = f.y(hinge.y);
        const double sx = f.x(open.x), sy = f.y(open.y);
        const double ex = f.x(s.b.x), ey = f.y(s.b.y);
        const double cross = (sx - hx) * (ey - hy) - (sy - hy) * (ex - hx);
        const std::string radius = num(static_cast<double>(o.width) / 1000.0 * f.scale);
        out += "<path class=\"" + std::string(o.kind == OpeningKind::EntryDoor ? "entry door" : "door") + "\" d=\"M" + num(hx) +
               " " + num(hy) + "L" + num(sx) + " " + num(sy) + "A" + radius + " " + radius + " 0 0 " + (cross > 0 ? "1" : "0") +
               " " + num(ex) + " " + num(ey) + "\" fill=\"none\" stroke=\"#8a4b2a\" stroke-width=\"1\"/>\n";
    }

    if (!st.labels) return;
    for (const auto& r : plan.rooms) {
        const auto [ax, ay] = label_anchor(r.shape);
        const double px = f.margin + ax / 1000.0 * f.scale;
        const double py = f.margin + (static_cast<double>(f.height_mm) - ay) / 1000.0 * f.scale;
        char area[32];
        std::snprintf(area, sizeof area, "%.1f m\xC2\xB2", polygon_area(r.shape));
        const std::string size = num(std::clamp(f.scale * 0.28, 6.0, 12.0));
        out += "<text class=\"label\" x=\"" + num(px) + "\" y=\"" + num(py) + "\" font-size=\"" + size +
               "\" text-anchor=\"middle\"><tspan x=\"" + num(px) + "\">" + std::string(label(r.kind)) + "</tspan><tspan x=\"" +
               num(px) + "\" dy=\"1.2em\">" + area + "</tspan></text>\n";
    }
}

inline std::string header(double w, double h) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) +
           "\" font-family=\"Helvetica, Arial, sans-serif\">\n";
}

}  // namespace svg_detail

inline std::string to_svg(const FloorPlan& plan, const SvgStyle& style = {}) {
    using namespace svg_detail;
    const Frame f{style.scale, style.margin, plan.footprint.top()};
    const double w = 2 * style.margin + static_cast<double>(plan.footprint.right()) / 1000.0 * style.scale;
    const double h = 2 * style.margin + static_cast<double>(plan.footprint.top()) / 1000.0 * style.scale;
    std::string out = header(w, h);
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    render_body(out, plan, style, f);
    out += "</svg>\n";
    return out;
}

/// Contact sheet, row-major, `columns` plans per row. Each plan is scaled to
/// fit a cell of cell_w x cell_h pixels and captioned with its seed.
inline std::string gallery_svg(const std::vector<FloorPlan>& plans, int columns = 5, double cell_w = 260.0, double cell_h = 220.0,
                               SvgStyle style = {}) {
    using namespace svg_detail;
    columns = std::max(columns, 1);
    const int rows = (static_cast<int>(plans.size()) + columns - 1) / columns;
    const double caption = 18.0;
    std::string out = header(cell_w * columns, (cell_h + caption) * std::max(rows, 1));
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (std::size_t k = 0; k < plans.size(); ++k) {
        const auto& p = plans[k];
        const double ox = cell_w * static_cast<double>(static_cast<int>(k) % columns);
        const double oy = (cell_h + caption) * static_cast<double>(static_cast<int>(k) / columns);
        SvgStyle st = style;
        st.margin = 10.0;
        const double fw = static_cast<double>(p.footprint.right()) / 1000.0;
        const double fh = static_cast<double>(p.footprint.top()) / 1000.0;
        st.scale = std::min((cell_w - 2 * st.margin) / fw, (cell_h - 2 * st.margin) / fh);
        st.wall_width = 2.0;
        out += "<g class=\"plan\" transform=\"translate(" + num(ox) + "," + num(oy) + ")\">\n";
        render_body(out, p, st, Frame{st.scale, st.margin, p.footprint.top()});
        out += "<text class=\"caption\" x=\"" + num(cell_w / 2) + "\" y=\"" + num(cell_h + caption * 0.7) +
               "\" font-size=\"11\" text-anchor=\"middle\">seed " + std::to_string(p.seed) + "</text>\n</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace planwright
