#pragma once

// Axis-aligned rectilinear geometry.
//
// Continuous layouts (treemap output, sampled footprints) use metres in
// double precision. Everything downstream of placement lives on a 1 mm integer
// grid, which makes adjacency, coincidence and area bookkeeping exact.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planwright {

/// Integer millimetres.
using Coord = std::int64_t;

constexpr Coord kMillimetresPerMetre = 1000;

inline Coord to_mm(double metres) { return static_cast<Coord>(std::llround(metres * 1000.0)); }
inline double to_m(Coord mm) { return static_cast<double>(mm) / 1000.0; }
inline double to_m2(Coord mm2) { return static_cast<double>(mm2) / 1.0e6; }

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class T>
struct BasicPoint {
    T x{};
    T y{};
    auto operator<=>(const BasicPoint&) const = default;
};

template <class T>
struct BasicRect {
    T x{};
    T y{};
    T width{};
    T height{};

    T left() const { return x; }
    T right() const { return x + width; }
    T bottom() const { return y; }
    T top() const { return y + height; }
    T area() const { return width * height; }
    bool operator==(const BasicRect&) const = default;
};

using Point = BasicPoint<double>;
using Rect = BasicRect<double>;
using GridPoint = BasicPoint<Coord>;
using GridRect = BasicRect<Coord>;

/// max(w/h, h/w); always >= 1 for a non-degenerate rectangle.
template <class T>
double aspect_ratio(const BasicRect<T>& r) {
    const double w = static_cast<double>(r.width);
    const double h = static_cast<double>(r.height);
    return std::max(w / h, h / w);
}

inline GridRect grid_rect_from_corners(Coord x0, Coord y0, Coord x1, Coord y1) {
    return GridRect{std::min(x0, x1), std::min(y0, y1), std::abs(x1 - x0), std::abs(y1 - y0)};
}

/// Snaps a metre rectangle by rounding its corner coordinates, so two
/// rectangles that share an edge in metres share it exactly on the grid.
inline GridRect snap(const Rect& r) {
    const Coord x0 = to_mm(r.left());
    const Coord y0 = to_mm(r.bottom());
    const Coord x1 = to_mm(r.right());
    const Coord y1 = to_mm(r.top());
    return grid_rect_from_corners(x0, y0, x1, y1);
}

inline Rect to_metres(const GridRect& r) {
    return Rect{to_m(r.x), to_m(r.y), to_m(r.width), to_m(r.height)};
}

// ---------------------------------------------------------------------------
// Segments

struct Segment {
    GridPoint a;
    GridPoint b;

    bool horizontal() const { return a.y == b.y; }
    bool vertical() const { return a.x == b.x; }
    Coord length() const { return std::abs(b.x - a.x) + std::abs(b.y - a.y); }
    /// Endpoints ordered so that a < b.
    Segment normalized() const { return b < a ? Segment{b, a} : *this; }
    bool operator==(const Segment&) const = default;
    auto operator<=>(const Segment&) const = default;
};

inline bool is_axis_aligned(const Segment& s) {
    return (s.a.x == s.b.x) != (s.a.y == s.b.y);
}

/// True when p lies on the closed segment s (s axis-aligned).
inline bool on_segment(const GridPoint& p, const Segment& s) {
    if (s.a.y == s.b.y) {
        return p.y == s.a.y && p.x >= std::min(s.a.x, s.b.x) && p.x <= std::max(s.a.x, s.b.x);
    }
    return p.x == s.a.x && p.y >= std::min(s.a.y, s.b.y) && p.y <= std::max(s.a.y, s.b.y);
}

/// Collinear overlap of two axis-aligned segments, if it has positive length.
inline std::optional<Segment> collinear_overlap(const Segment& s, const Segment& t) {
    if (s.horizontal() && t.horizontal() && s.a.y == t.a.y) {
        const Coord lo = std::max(std::min(s.a.x, s.b.x), std::min(t.a.x, t.b.x));
        const Coord hi = std::min(std::max(s.a.x, s.b.x), std::max(t.a.x, t.b.x));
        if (hi > lo) return Segment{{lo, s.a.y}, {hi, s.a.y}};
    } else if (s.vertical() && t.vertical() && s.a.x == t.a.x) {
        const Coord lo = std::max(std::min(s.a.y, s.b.y), std::min(t.a.y, t.b.y));
        const Coord hi = std::min(std::max(s.a.y, s.b.y), std::max(t.a.y, t.b.y));
        if (hi > lo) return Segment{{s.a.x, lo}, {s.a.x, hi}};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rectilinear polygons

/// Simple rectilinear polygon, counter-clockwise, no repeated or collinear
/// consecutive vertices.
struct Polygon {
    std::vector<GridPoint> vertices;

    static Polygon from_rect(const GridRect& r) {
        return Polygon{{{r.left(), r.bottom()}, {r.right(), r.bottom()}, {r.right(), r.top()}, {r.left(), r.top()}}};
    }

    std::size_t size() const { return vertices.size(); }
    Segment edge(std::size_t i) const { return Segment{vertices[i], vertices[(i + 1) % vertices.size()]}; }

    GridRect bounds() const {
        Coord x0 = vertices.front().x, x1 = x0, y0 = vertices.front().y, y1 = y0;
        for (const auto& p : vertices) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
        return grid_rect_from_corners(x0, y0, x1, y1);
    }

    bool is_rectangle() const { return vertices.size() == 4; }
    bool operator==(const Polygon&) const = default;
};

/// Shoelace area in mm^2 (positive for counter-clockwise polygons).
inline Coord polygon_area_mm2(const Polygon& p) {
    Coord twice = 0;
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = p.vertices[i];
        const auto& v = p.vertices[(i + 1) % n];
        twice += u.x * v.y - v.x * u.y;
    }
    return twice / 2;
}

inline double polygon_area(const Polygon& p) { return to_m2(polygon_area_mm2(p)); }

inline Coord perimeter_mm(const Polygon& p) {
    Coord total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) total += p.edge(i).length();
    return total;
}

/// Checks the structural invariants: axis-aligned edges, positive CCW area,
/// no self-intersection.
inline bool is_valid_polygon(const Polygon& p) {
    if (p.vertices.size() < 4 || p.vertices.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!is_axis_aligned(p.edge(i))) return false;
        const auto e0 = p.edge(i);
        const auto e1 = p.edge((i + 1) % p.size());
        if (e0.horizontal() == e1.horizontal()) return false;
    }
    if (polygon_area_mm2(p) <= 0) return false;
    // Non-adjacent edges must not touch.
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            const auto s = p.edge(i);
            const auto t = p.edge(j);
            const Coord sx0 = std::min(s.a.x, s.b.x), sx1 = std::max(s.a.x, s.b.x);
            const Coord sy0 = std::min(s.a.y, s.b.y), sy1 = std::max(s.a.y, s.b.y);
            const Coord tx0 = std::min(t.a.x, t.b.x), tx1 = std::max(t.a.x, t.b.x);
            const Coord ty0 = std::min(t.a.y, t.b.y), ty1 = std::max(t.a.y, t.b.y);
            if (sx0 <= tx1 && tx0 <= sx1 && sy0 <= ty1 && ty0 <= sy1) return false;
        }
    }
    return true;
}

inline bool on_boundary(const GridPoint& q, const Polygon& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (on_segment(q, p.edge(i))) return true;
    }
    return false;
}

/// Whether segment s lies entirely on the boundary of p.
inline bool segment_on_boundary(const Segment& s, const Polygon& p) {
    Coord covered = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (auto ov = collinear_overlap(s, p.edge(i))) covered += ov->length();
    }
    return covered == s.length();
}

namespace detail {

// Point-in-polygon for doubled coordinates that never fall on an edge.
inline bool contains_doubled(const Polygon& p, Coord x2, Coord y2) {
    bool inside = false;
    const std::size_t n = p.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = p.vertices[i];
        const auto& v = p.vertices[(i + 1) % n];
        if (u.x != v.x) continue;
        const Coord ylo = 2 * std::min(u.y, v.y);
        const Coord yhi = 2 * std::max(u.y, v.y);
        if (y2 > ylo && y2 < yhi && 2 * u.x > x2) inside = !inside;
    }
    return inside;
}

inline bool rect_contains_doubled(const GridRect& r, Coord x2, Coord y2) {
    return x2 > 2 * r.left() && x2 < 2 * r.right() && y2 > 2 * r.bottom() && y2 < 2 * r.top();
}

inline void sort_unique(std::vector<Coord>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// A boolean raster over the cells of a non-uniform grid. All region
/// operations reduce to building one of these from the coordinates of the
/// participating shapes.
struct CellGrid {
    std::vector<Coord> xs;
    std::vector<Coord> ys;
    std::vector<std::uint8_t> cells;

    int nx() const { return static_cast<int>(xs.size()) - 1; }
    int ny() const { return static_cast<int>(ys.size()) - 1; }
    bool at(int i, int j) const {
        return i >= 0 && j >= 0 && i < nx() && j < ny() && cells[static_cast<std::size_t>(j * nx() + i)] != 0;
    }
    void set(int i, int j, bool v) { cells[static_cast<std::size_t>(j * nx() + i)] = v ? 1 : 0; }
    Coord cx2(int i) const { return xs[static_cast<std::size_t>(i)] + xs[static_cast<std::size_t>(i) + 1]; }
    Coord cy2(int j) const { return ys[static_cast<std::size_t>(j)] + ys[static_cast<std::size_t>(j) + 1]; }
    Coord cell_area(int i, int j) const {
        return (xs[static_cast<std::size_t>(i) + 1] - xs[static_cast<std::size_t>(i)]) *
               (ys[static_cast<std::size_t>(j) + 1] - ys[static_cast<std::size_t>(j)]);
    }

    template <class Pred>
    static CellGrid build(std::vector<Coord> xs, std::vector<Coord> ys, Pred&& inside) {
        sort_unique(xs);
        sort_unique(ys);
        CellGrid g{std::move(xs), std::move(ys), {}};
        if (g.xs.size() < 2 || g.ys.size() < 2) {
            g.xs.resize(std::max<std::size_t>(g.xs.size(), 1));
            g.ys.resize(std::max<std::size_t>(g.ys.size(), 1));
            return g;
        }
        g.cells.assign(static_cast<std::size_t>(g.nx() * g.ny()), 0);
        for (int j = 0; j < g.ny(); ++j) {
            for (int i = 0; i < g.nx(); ++i) g.set(i, j, inside(g.cx2(i), g.cy2(j)));
        }
        return g;
    }

    Coord area() const {
        Coord total = 0;
        for (int j = 0; j < ny(); ++j)
            for (int i = 0; i < nx(); ++i)
                if (at(i, j)) total += cell_area(i, j);
        return total;
    }

    bool empty() const { return std::none_of(cells.begin(), cells.end(), [](auto c) { return c != 0; }); }
};

inline void append_coords(const Polygon& p, std::vector<Coord>& xs, std::vector<Coord>& ys) {
    for (const auto& v : p.vertices) {
        xs.push_back(v.x);
        ys.push_back(v.y);
    }
}

inline void append_coords(const GridRect& r, std::vector<Coord>& xs, std::vector<Coord>& ys) {
    xs.push_back(r.left());
    xs.push_back(r.right());
    ys.push_back(r.bottom());
    ys.push_back(r.top());
}

/// Labels 4-connected components of filled cells; returns component count.
inline int label_components(const CellGrid& g, std::vector<int>& label) {
    label.assign(g.cells.size(), -1);
    int count = 0;
    std::vector<std::pair<int, int>> stack;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            if (!g.at(i, j) || label[static_cast<std::size_t>(j * g.nx() + i)] >= 0) continue;
            stack.push_back({i, j});
            label[static_cast<std::size_t>(j * g.nx() + i)] = count;
            while (!stack.empty()) {
                auto [ci, cj] = stack.back();
                stack.pop_back();
                const int di[4] = {1, -1, 0, 0};
                const int dj[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int ni = ci + di[k], nj = cj + dj[k];
                    if (!g.at(ni, nj)) continue;
                    auto& l = label[static_cast<std::size_t>(nj * g.nx() + ni)];
                    if (l >= 0) continue;
                    l = count;
                    stack.push_back({ni, nj});
                }
            }
            ++count;
        }
    }
    return count;
}

/// True when the empty cells (plus an implicit frame around the grid) form a
/// single 4-connected region, i.e. the filled cells enclose no hole.
inline bool has_hole(const CellGrid& g) {
    const int nx = g.nx() + 2, ny = g.ny() + 2;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(nx * ny), 0);
    auto filled = [&](int i, int j) { return g.at(i - 1, j - 1); };
    std::vector<std::pair<int, int>> stack{{0, 0}};
    seen[0] = 1;
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const int ni = i + di[k], nj = j + dj[k];
            if (ni < 0 || nj < 0 || ni >= nx || nj >= ny) continue;
            auto& s = seen[static_cast<std::size_t>(nj * nx + ni)];
            if (s || filled(ni, nj)) continue;
            s = 1;
            stack.push_back({ni, nj});
        }
    }
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (!filled(i, j) && !seen[static_cast<std::size_t>(j * nx + i)]) return true;
    return false;
}

/// Traces the boundary of the cells whose label equals `which` (or all filled
/// cells when which < 0). Requires a single hole-free 4-connected region.
inline std::optional<Polygon> trace(const CellGrid& g, const std::vector<int>* label = nullptr, int which = -1) {
    auto in = [&](int i, int j) {
        if (!g.at(i, j)) return false;
        if (label == nullptr || which < 0) return true;
        return (*label)[static_cast<std::size_t>(j * g.nx() + i)] == which;
    };
    // Directed boundary edges between grid vertices, CCW around filled cells.
    std::map<std::pair<int, int>, std::pair<int, int>> next;
    bool pinched = false;
    auto add = [&](int i0, int j0, int i1, int j1) {
        auto [it, inserted] = next.emplace(std::pair{i0, j0}, std::pair{i1, j1});
        if (!inserted) pinched = true;
    };
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            if (!in(i, j)) continue;
            if (!in(i, j - 1)) add(i, j, i + 1, j);
            if (!in(i + 1, j)) add(i + 1, j, i + 1, j + 1);
            if (!in(i, j + 1)) add(i + 1, j + 1, i, j + 1);
            if (!in(i - 1, j)) add(i, j + 1, i, j);
        }
    }
    if (next.empty() || pinched) return std::nullopt;
    std::vector<std::pair<int, int>> loop;
    const auto start = next.begin()->first;
    auto cur = start;
    do {
        loop.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end()) return std::nullopt;
        cur = it->second;
    } while (cur != start && loop.size() <= next.size());
    if (loop.size() != next.size()) return std::nullopt;  // more than one loop

    Polygon poly;
    const std::size_t n = loop.size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& prev = loop[(k + n - 1) % n];
        const auto& here = loop[k];
        const auto& succ = loop[(k + 1) % n];
        const bool collinear = (prev.first == here.first && here.first == succ.first) ||
                               (prev.second == here.second && here.second == succ.second);
        if (!collinear) {
            poly.vertices.push_back({g.xs[static_cast<std::size_t>(here.first)], g.ys[static_cast<std::size_t>(here.second)]});
        }
    }
    // Canonical start: lowest (y, x) vertex.
    auto lowest = std::min_element(poly.vertices.begin(), poly.vertices.end(),
                                   [](const GridPoint& a, const GridPoint& b) { return std::pair{a.y, a.x} < std::pair{b.y, b.x}; });
    std::rotate(poly.vertices.begin(), lowest, poly.vertices.end());
    return poly;
}

}  // namespace detail

/// Interior-overlap area of two polygons in mm^2.
inline Coord intersection_area_mm2(const Polygon& a, const Polygon& b) {
    const auto ba = a.bounds();
    const auto bb = b.bounds();
    if (ba.right() <= bb.left() || bb.right() <= ba.left() || ba.top() <= bb.bottom() || bb.top() <= ba.bottom()) {
        return 0;
    }
    if (a.is_rectangle() && b.is_rectangle()) {
        const Coord w = std::min(ba.right(), bb.right()) - std::max(ba.left(), bb.left());
        const Coord h = std::min(ba.top(), bb.top()) - std::max(ba.bottom(), bb.bottom());
        return w * h;
    }
    std::vector<Coord> xs, ys;
    detail::append_coords(a, xs, ys);
    detail::append_coords(b, xs, ys);
    auto g = detail::CellGrid::build(xs, ys, [&](Coord x2, Coord y2) {
        return detail::contains_doubled(a, x2, y2) && detail::contains_doubled(b, x2, y2);
    });
    return g.area();
}

/// Subtracts a union of rectangles from a polygon. Throws GeometryError when
/// the result would be empty, disconnected, or holed.
inline Polygon subtract(const Polygon& room, std::span<const GridRect> cut) {
    const auto rb = room.bounds();
    std::vector<Coord> xs, ys;
    detail::append_coords(room, xs, ys);
    bool touches = false;
    for (const auto& r : cut) {
        if (r.right() <= rb.left() || rb.right() <= r.left() || r.top() <= rb.bottom() || rb.top() <= r.bottom()) continue;
        touches = true;
        xs.push_back(std::clamp(r.left(), rb.left(), rb.right()));
        xs.push_back(std::clamp(r.right(), rb.left(), rb.right()));
        ys.push_back(std::clamp(r.bottom(), rb.bottom(), rb.top()));
        ys.push_back(std::clamp(r.top(), rb.bottom(), rb.top()));
    }
    if (!touches) return room;
    auto g = detail::CellGrid::build(xs, ys, [&](Coord x2, Coord y2) {
        if (!detail::contains_doubled(room, x2, y2)) return false;
        for (const auto& r : cut)
            if (detail::rect_contains_doubled(r, x2, y2)) return false;
        return true;
    });
    if (g.empty()) throw GeometryError("subtraction annihilates the room");
    std::vector<int> label;
    if (detail::label_components(g, label) != 1) throw GeometryError("subtraction disconnects the room");
    if (detail::has_hole(g)) throw GeometryError("subtraction leaves a hole");
    auto poly = detail::trace(g);
    if (!poly) throw GeometryError("subtraction produced a non-simple boundary");
    return *poly;
}

inline Polygon subtract(const Polygon& room, const Polygon& corridor) {
    // Decompose the corridor into its cells' rectangles.
    std::vector<Coord> xs, ys;
    detail::append_coords(corridor, xs, ys);
    auto g = detail::CellGrid::build(xs, ys, [&](Coord x2, Coord y2) { return detail::contains_doubled(corridor, x2, y2); });
    std::vector<GridRect> rects;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            if (g.at(i, j))
                rects.push_back(grid_rect_from_corners(g.xs[static_cast<std::size_t>(i)], g.ys[static_cast<std::size_t>(j)],
                                                       g.xs[static_cast<std::size_t>(i) + 1], g.ys[static_cast<std::size_t>(j) + 1]));
    return subtract(room, std::span<const GridRect>(rects));
}

/// Union of a polygon and rectangles; nullopt unless the result is a single
/// simple polygon.
inline std::optional<Polygon> unite(const Polygon& base, std::span<const GridRect> extra) {
    std::vector<Coord> xs, ys;
    detail::append_coords(base, xs, ys);
    for (const auto& r : extra) detail::append_coords(r, xs, ys);
    auto g = detail::CellGrid::build(xs, ys, [&](Coord x2, Coord y2) {
        if (detail::contains_doubled(base, x2, y2)) return true;
        for (const auto& r : extra)
            if (detail::rect_contains_doubled(r, x2, y2)) return true;
        return false;
    });
    std::vector<int> label;
    if (detail::label_components(g, label) != 1 || detail::has_hole(g)) return std::nullopt;
    return detail::trace(g);
}

/// Every positive-length collinear overlap between the boundaries of a and b,
/// normalised and sorted.
inline std::vector<Segment> shared_walls(const Polygon& a, const Polygon& b) {
    std::vector<Segment> out;
    const auto ba = a.bounds();
    const auto bb = b.bounds();
    if (ba.right() < bb.left() || bb.right() < ba.left() || ba.top() < bb.bottom() || bb.top() < ba.bottom()) return out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto ea = a.edge(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (auto ov = collinear_overlap(ea, b.edge(j))) out.push_back(ov->normalized());
        }
    }
    std::sort(out.begin(), out.end());
    // Merge touching collinear pieces.
    std::vector<Segment> merged;
    for (const auto& s : out) {
        if (!merged.empty()) {
            auto& m = merged.back();
            if (m.horizontal() && s.horizontal() && m.a.y == s.a.y && s.a.x <= m.b.x) {
                m.b.x = std::max(m.b.x, s.b.x);
                continue;
            }
            if (m.vertical() && s.vertical() && m.a.x == s.a.x && s.a.y <= m.b.y) {
                m.b.y = std::max(m.b.y, s.b.y);
                continue;
            }
        }
        merged.push_back(s);
    }
    return merged;
}

inline Coord longest_shared_wall_mm(const Polygon& a, const Polygon& b) {
    Coord best = 0;
    for (const auto& s : shared_walls(a, b)) best = std::max(best, s.length());
    return best;
}

struct Contact {
    std::optional<Segment> edge;      ///< longest shared boundary piece
    std::optional<GridPoint> vertex;  ///< set when contact is a single point
};

/// Boundary contact between two interior-disjoint polygons.
inline Contact shared_edge(const Polygon& a, const Polygon& b) {
    if (intersection_area_mm2(a, b) > 0) throw GeometryError("polygons overlap");
    Contact c;
    const auto walls = shared_walls(a, b);
    for (const auto& s : walls) {
        if (!c.edge || s.length() > c.edge->length()) c.edge = s;
    }
    if (c.edge) return c;
    std::optional<GridPoint> best;
    for (const auto& v : a.vertices)
        if (on_boundary(v, b) && (!best || v < *best)) best = v;
    for (const auto& v : b.vertices)
        if (on_boundary(v, a) && (!best || v < *best)) best = v;
    c.vertex = best;
    return c;
}

/// Edges of p (normalised) lying on the boundary of the rectangle `outer`.
inline std::vector<Segment> exterior_edges(const Polygon& p, const GridRect& outer) {
    std::vector<Segment> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto e = p.edge(i).normalized();
        const bool on = (e.horizontal() && (e.a.y == outer.bottom() || e.a.y == outer.top())) ||
                        (e.vertical() && (e.a.x == outer.left() || e.a.x == outer.right()));
        if (on) out.push_back(e);
    }
    return out;
}

/// Every point of p lies in an axis-aligned square of side `side` contained
/// in p (morphological opening). Evaluated exactly on the grid with a 1 mm
/// slack so rectangles of width exactly `side` pass.
inline bool admits_square_cover(const Polygon& p, Coord side) {
    if (p.is_rectangle()) {
        const auto b = p.bounds();
        return b.width >= side && b.height >= side;
    }
    const Coord m = side - 1;
    std::vector<Coord> px, py;
    detail::append_coords(p, px, py);
    detail::sort_unique(px);
    detail::sort_unique(py);
    std::vector<Coord> cx = px, cy = py;  // lines bounding the feasible-corner set
    for (Coord x : px) cx.push_back(x - m);
    for (Coord y : py) cy.push_back(y - m);
    detail::sort_unique(cx);
    detail::sort_unique(cy);
    std::vector<Coord> xs = cx, ys = cy;
    for (Coord x : px) xs.push_back(x + m);
    for (Coord y : py) ys.push_back(y + m);
    auto grid = detail::CellGrid::build(xs, ys, [&](Coord x2, Coord y2) { return detail::contains_doubled(p, x2, y2); });
    const int nx = grid.nx(), ny = grid.ny();
    // 2D prefix sums over filled cells.
    std::vector<int> pre(static_cast<std::size_t>((nx + 1) * (ny + 1)), 0);
    auto P = [&](int i, int j) -> int& { return pre[static_cast<std::size_t>(j * (nx + 1) + i)]; };
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) P(i + 1, j + 1) = P(i, j + 1) + P(i + 1, j) - P(i, j) + (grid.at(i, j) ? 1 : 0);
    auto index_of = [](const std::vector<Coord>& v, Coord c) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
    };
    auto full = [&](int i0, int j0, int i1, int j1) {
        const int n = (i1 - i0) * (j1 - j0);
        return P(i1, j1) - P(i0, j1) - P(i1, j0) + P(i0, j0) == n;
    };
    // Coverage via 2D difference array.
    std::vector<int> diff(static_cast<std::size_t>((nx + 1) * (ny + 1)), 0);
    auto D = [&](int i, int j) -> int& { return diff[static_cast<std::size_t>(j * (nx + 1) + i)]; };
    for (std::size_t b = 0; b + 1 < cy.size(); ++b) {
        const Coord y1 = cy[b + 1] + m;
        if (y1 > grid.ys.back()) continue;
        const int j0 = index_of(grid.ys, cy[b]);
        const int j1 = index_of(grid.ys, y1);
        for (std::size_t a = 0; a + 1 < cx.size(); ++a) {
            // Corner cell [cx[a], cx[a+1]] x [cy[b], cy[b+1]] is feasible iff
            // the region swept by its squares lies in p.
            const Coord x1 = cx[a + 1] + m;
            if (x1 > grid.xs.back()) continue;
            const int i0 = index_of(grid.xs, cx[a]);
            const int i1 = index_of(grid.xs, x1);
            if (!full(i0, j0, i1, j1)) continue;
            D(i0, j0) += 1;
            D(i1, j0) -= 1;
            D(i0, j1) -= 1;
            D(i1, j1) += 1;
        }
    }
    for (int j = 0; j < ny; ++j) {
        int run = 0;
        for (int i = 0; i <= nx; ++i) {
            run += D(i, j);
            D(i, j) = run;
        }
    }
    for (int i = 0; i <= nx; ++i) {
        int run = 0;
        for (int j = 0; j <= ny; ++j) {
            run += D(i, j);
            D(i, j) = run;
        }
    }
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (grid.at(i, j) && D(i, j) <= 0) return false;
    return true;
}

/// Rejects narrow, elongated, or thin-limbed room shapes.
inline bool is_usable_room_shape(const Polygon& p, Coord min_width, double max_aspect) {
    const auto b = p.bounds();
    if (b.width < min_width || b.height < min_width) return false;
    if (aspect_ratio(b) > max_aspect) return false;
    return admits_square_cover(p, min_width);
}

}  // namespace planwright
