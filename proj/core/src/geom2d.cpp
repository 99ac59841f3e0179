// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "maxspace/geom2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "maxspace/predicates.hpp"

namespace maxspace {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

inline int orient(Point2 a, Point2 b, Point2 c) {
    return orient2d(a.x, a.y, b.x, b.y, c.x, c.y);
}

inline int in_circle(Point2 a, Point2 b, Point2 c, Point2 d) {
    return incircle(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y);
}
} // namespace

BBox bounding_box(std::span<const Point2> pts) {
    BBox b{{kInf, kInf}, {-kInf, -kInf}};
    for (const Point2& p : pts) {
        b.lo.x = std::min(b.lo.x, p.x);
        b.lo.y = std::min(b.lo.y, p.y);
        b.hi.x = std::max(b.hi.x, p.x);
        b.hi.y = std::max(b.hi.y, p.y);
    }
    return b;
}

double segment_distance(Point2 p, Point2 a, Point2 b) {
    Point2 ab = b - a;
    double len2 = norm2(ab);
    if (len2 == 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + t * ab);
}

DedupResult dedup_points(std::span<const Point2> pts) {
    DedupResult out;
    out.points.reserve(pts.size());
    if (pts.empty()) return out;

    BBox box = bounding_box(pts);
    double tol = 1e-12 * std::max(box.width(), box.height());

    if (tol <= 0.0) {
        // zero extent or a single distinct location: exact dedup
        for (const Point2& p : pts) {
            bool dup = false;
            for (const Point2& q : out.points) {
                if (p == q) {
                    dup = true;
                    break;
                }
            }
            if (dup)
                ++out.removed;
            else
                out.points.push_back(p);
        }
        return out;
    }

    auto key_of = [&](double x, double y) {
        auto ix = static_cast<std::int64_t>(std::floor(x / tol));
        auto iy = static_cast<std::int64_t>(std::floor(y / tol));
        return (static_cast<std::uint64_t>(ix) * 0x9E3779B97F4A7C15ULL) ^
               static_cast<std::uint64_t>(iy);
    };
    std::unordered_multimap<std::uint64_t, int> seen;
    seen.reserve(pts.size() * 2);
    for (const Point2& p : pts) {
        bool dup = false;
        for (int dx = -1; dx <= 1 && !dup; ++dx) {
            for (int dy = -1; dy <= 1 && !dup; ++dy) {
                auto range = seen.equal_range(key_of(p.x + dx * tol, p.y + dy * tol));
                for (auto it = range.first; it != range.second; ++it) {
                    if (distance(p, out.points[it->second]) <= tol) {
                        dup = true;
                        break;
                    }
                }
            }
        }
        if (dup) {
            ++out.removed;
        } else {
            seen.emplace(key_of(p.x, p.y), static_cast<int>(out.points.size()));
            out.points.push_back(p);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// ConvexPolygon

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw DegenerateInput("polygon needs at least 3 vertices");
    for (const Point2& v : vertices_) {
        if (!is_finite(v)) throw DegenerateInput("polygon vertex is not finite");
    }
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        const Point2& c = vertices_[(i + 2) % n];
        if (orient(a, b, c) <= 0) {
            throw DegenerateInput("polygon is not strictly convex CCW");
        }
        twice_area += cross(a, b);
    }
    area_ = 0.5 * twice_area;
    if (!(area_ > 0.0)) throw DegenerateInput("polygon area is not positive");
}

bool ConvexPolygon::contains(Point2 p) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
    }
    return true;
}

BoundaryDistance ConvexPolygon::boundary_distance(Point2 p) const {
    const std::size_t n = vertices_.size();
    double d = kInf;
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        d = std::min(d, segment_distance(p, a, b));
        if (inside && orient(a, b, p) < 0) inside = false;
    }
    return {d, inside};
}

BBox ConvexPolygon::bounding_box() const { return maxspace::bounding_box(vertices_); }

Point2 ConvexPolygon::centroid() const {
    double cx = 0.0, cy = 0.0, a2 = 0.0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        double w = cross(a, b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
        a2 += w;
    }
    return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

ConvexPolygon convex_hull(std::span<const Point2> points) {
    for (const Point2& p : points) {
        if (!is_finite(p)) throw DegenerateInput("input point is not finite");
    }
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(),
              [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw DegenerateInput("convex hull needs at least 3 distinct points");

    const std::size_t n = pts.size();
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) { // upper chain
        while (k >= lo && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw DegenerateInput("all points are collinear");
    return ConvexPolygon(std::move(hull));
}

double polygon_area(const ConvexPolygon& poly) { return poly.area(); }

BoundaryDistance boundary_distance(const ConvexPolygon& poly, Point2 p) {
    return poly.boundary_distance(p);
}

// ---------------------------------------------------------------------------
// PointGrid

PointGrid::PointGrid(std::span<const Point2> pts) : sites_(pts.begin(), pts.end()) {
    const int n = static_cast<int>(sites_.size());
    if (n == 0) return;
    box_ = maxspace::bounding_box(sites_);
    int k = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
    nx_ = ny_ = k;
    cw_ = box_.width() > 0 ? box_.width() / nx_ : 1.0;
    ch_ = box_.height() > 0 ? box_.height() / ny_ : 1.0;

    std::vector<int> cell(n);
    std::vector<std::int32_t> count(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
    for (int i = 0; i < n; ++i) {
        cell[i] = cell_of(sites_[i]);
        ++count[cell[i] + 1];
    }
    for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
    cell_start_ = count;
    items_.resize(n);
    std::vector<std::int32_t> cursor(cell_start_.begin(), cell_start_.end() - 1);
    for (int i = 0; i < n; ++i) items_[cursor[cell[i]]++] = i;
}

int PointGrid::cell_of(Point2 p) const {
    int cx = static_cast<int>(std::floor((p.x - box_.lo.x) / cw_));
    int cy = static_cast<int>(std::floor((p.y - box_.lo.y) / ch_));
    cx = std::clamp(cx, 0, nx_ - 1);
    cy = std::clamp(cy, 0, ny_ - 1);
    return cy * nx_ + cx;
}

int PointGrid::nearest(Point2 q, double* dist) const {
    if (sites_.empty()) {
        if (dist) *dist = kInf;
        return -1;
    }
    int cx = std::clamp(static_cast<int>(std::floor((q.x - box_.lo.x) / cw_)), 0, nx_ - 1);
    int cy = std::clamp(static_cast<int>(std::floor((q.y - box_.lo.y) / ch_)), 0, ny_ - 1);

    int best = -1;
    double best_d2 = kInf;
    auto scan_cell = [&](int gx, int gy) {
        if (gx < 0 || gy < 0 || gx >= nx_ || gy >= ny_) return;
        int c = gy * nx_ + gx;
        for (std::int32_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
            int i = items_[k];
            double d2 = norm2(q - sites_[i]);
            if (d2 < best_d2) {
                best_d2 = d2;
                best = i;
            }
        }
    };

    int rmax = std::max(nx_, ny_);
    for (int r = 0;; ++r) {
        if (r == 0) {
            scan_cell(cx, cy);
        } else {
            for (int gx = cx - r; gx <= cx + r; ++gx) {
                scan_cell(gx, cy - r);
                scan_cell(gx, cy + r);
            }
            for (int gy = cy - r + 1; gy <= cy + r - 1; ++gy) {
                scan_cell(cx - r, gy);
                scan_cell(cx + r, gy);
            }
        }
        bool covered = (cx - r <= 0 && cy - r <= 0 && cx + r >= nx_ - 1 && cy + r >= ny_ - 1);
        if (best >= 0) {
            // minimal distance from q to anything beyond the covered cell box
            double m = std::min(std::min(q.x - (box_.lo.x + (cx - r) * cw_),
                                         (box_.lo.x + (cx + r + 1) * cw_) - q.x),
                                std::min(q.y - (box_.lo.y + (cy - r) * ch_),
                                         (box_.lo.y + (cy + r + 1) * ch_) - q.y));
            if ((m > 0.0 && m * m >= best_d2) || covered) break;
        } else if (covered && r >= rmax) {
            break;
        }
    }
    if (dist) *dist = std::sqrt(best_d2);
    return best;
}

double PointGrid::nearest_distance(Point2 q) const {
    double d;
    nearest(q, &d);
    return d;
}

void PointGrid::within(Point2 q, double radius, std::vector<int>& out) const {
    out.clear();
    if (sites_.empty() || radius < 0.0) return;
    int x0 = std::clamp(static_cast<int>(std::floor((q.x - radius - box_.lo.x) / cw_)), 0, nx_ - 1);
    int x1 = std::clamp(static_cast<int>(std::floor((q.x + radius - box_.lo.x) / cw_)), 0, nx_ - 1);
    int y0 = std::clamp(static_cast<int>(std::floor((q.y - radius - box_.lo.y) / ch_)), 0, ny_ - 1);
    int y1 = std::clamp(static_cast<int>(std::floor((q.y + radius - box_.lo.y) / ch_)), 0, ny_ - 1);
    double r2 = radius * radius;
    for (int gy = y0; gy <= y1; ++gy) {
        for (int gx = x0; gx <= x1; ++gx) {
            int c = gy * nx_ + gx;
            for (std::int32_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
                int i = items_[k];
                if (norm2(q - sites_[i]) <= r2) out.push_back(i);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Delaunay triangulation: incremental Bowyer-Watson over a ghost-augmented
// triangulation. Every hull edge a->b (interior on the left) carries a ghost
// triangle (b, a, GHOST), so each edge always has two incident triangles and
// cavities have closed boundaries.

namespace {

constexpr int GHOST = -1;

struct DelaunayBuilder {
    const std::vector<Point2>& pts;
    struct Tri {
        std::array<int, 3> v;
        std::array<int, 3> nb; // across edge (v[e], v[(e+1)%3])
    };
    std::vector<Tri> tris;
    std::vector<char> alive;
    std::vector<int> free_list;
    std::vector<int> visit_mark;
    std::vector<char> in_cavity;
    int epoch = 0;
    int last_real = -1;

    explicit DelaunayBuilder(const std::vector<Point2>& p) : pts(p) {}

    bool is_ghost(int t) const { return tris[t].v[2] == GHOST; }

    int new_tri(std::array<int, 3> v) {
        int id;
        if (!free_list.empty()) {
            id = free_list.back();
            free_list.pop_back();
            tris[id].v = v;
            tris[id].nb = {-1, -1, -1};
            alive[id] = 1;
            in_cavity[id] = 0;
            visit_mark[id] = 0;
        } else {
            id = static_cast<int>(tris.size());
            tris.push_back({v, {-1, -1, -1}});
            alive.push_back(1);
            visit_mark.push_back(0);
            in_cavity.push_back(0);
        }
        return id;
    }

    bool conflicts(int t, Point2 p) const {
        const Tri& tr = tris[t];
        if (tr.v[2] != GHOST) {
            return in_circle(pts[tr.v[0]], pts[tr.v[1]], pts[tr.v[2]], p) > 0;
        }
        // ghost (b, a, GHOST) for hull edge a->b; conflict when p is strictly
        // outside across that edge, or exactly on the open segment ab
        Point2 b = pts[tr.v[0]], a = pts[tr.v[1]];
        int o = orient(b, a, p);
        if (o > 0) return true;
        if (o < 0) return false;
        return dot_sign(p.x, p.y, a.x, a.y, b.x, b.y) > 0 &&
               dot_sign(p.x, p.y, b.x, b.y, a.x, a.y) > 0;
    }

    int locate_conflict(Point2 p) {
        int t = last_real;
        int prev = -1;
        std::size_t guard = 4 * tris.size() + 16;
        while (guard-- > 0) {
            const Tri& tr = tris[t];
            int crossed = -1, fallback = -1;
            for (int e = 0; e < 3; ++e) {
                if (orient(pts[tr.v[e]], pts[tr.v[(e + 1) % 3]], p) < 0) {
                    if (tr.nb[e] != prev) {
                        crossed = e;
                        break;
                    }
                    fallback = e;
                }
            }
            if (crossed < 0 && fallback < 0) return t; // p in closed triangle
            int e = crossed >= 0 ? crossed : fallback;
            int nt = tr.nb[e];
            if (is_ghost(nt)) return nt; // p strictly outside the hull here
            prev = t;
            t = nt;
        }
        for (std::size_t i = 0; i < tris.size(); ++i) {
            if (alive[i] && conflicts(static_cast<int>(i), p)) return static_cast<int>(i);
        }
        throw DegenerateInput("triangulation walk failed to locate point");
    }

    static std::uint64_t edge_key(int a, int b) {
        auto ua = static_cast<std::uint32_t>(std::min(a, b) + 1);
        auto ub = static_cast<std::uint32_t>(std::max(a, b) + 1);
        return (static_cast<std::uint64_t>(ua) << 32) | ub;
    }

    void insert(int ip) {
        Point2 p = pts[ip];
        int seed = locate_conflict(p);

        // flood-fill the conflict cavity
        ++epoch;
        std::vector<int> cavity;
        std::vector<int> stack{seed};
        visit_mark[seed] = epoch;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            cavity.push_back(t);
            in_cavity[t] = 1;
            for (int e = 0; e < 3; ++e) {
                int n = tris[t].nb[e];
                if (n < 0 || visit_mark[n] == epoch) continue;
                visit_mark[n] = epoch;
                if (conflicts(n, p)) stack.push_back(n);
            }
        }

        struct BEdge {
            int u, w, outside;
        };
        std::vector<BEdge> boundary;
        for (int t : cavity) {
            for (int e = 0; e < 3; ++e) {
                int n = tris[t].nb[e];
                if (n >= 0 && in_cavity[n]) continue;
                boundary.push_back({tris[t].v[e], tris[t].v[(e + 1) % 3], n});
            }
        }
        for (int t : cavity) {
            alive[t] = 0;
            in_cavity[t] = 0;
            free_list.push_back(t);
        }

        std::unordered_map<std::uint64_t, std::pair<int, int>> open_edges;
        open_edges.reserve(boundary.size() * 2);
        for (const BEdge& be : boundary) {
            std::array<int, 3> v;
            if (be.u == GHOST)
                v = {be.w, ip, GHOST};
            else if (be.w == GHOST)
                v = {ip, be.u, GHOST};
            else
                v = {be.u, be.w, ip};
            int nt = new_tri(v);
            if (v[2] != GHOST) last_real = nt;

            for (int e = 0; e < 3; ++e) {
                int a = tris[nt].v[e], b = tris[nt].v[(e + 1) % 3];
                if (a == be.u && b == be.w) {
                    tris[nt].nb[e] = be.outside;
                    // relink the outside triangle's matching slot
                    for (int oe = 0; oe < 3; ++oe) {
                        if (tris[be.outside].v[oe] == be.w &&
                            tris[be.outside].v[(oe + 1) % 3] == be.u) {
                            tris[be.outside].nb[oe] = nt;
                            break;
                        }
                    }
                } else {
                    auto key = edge_key(a, b);
                    auto it = open_edges.find(key);
                    if (it == open_edges.end()) {
                        open_edges.emplace(key, std::make_pair(nt, e));
                    } else {
                        tris[nt].nb[e] = it->second.first;
                        tris[it->second.first].nb[it->second.second] = nt;
                        open_edges.erase(it);
                    }
                }
            }
        }
    }
};

std::vector<int> spatial_order(const std::vector<Point2>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    if (n < 8) return order;
    BBox box = bounding_box(pts);
    int k = std::max(1, static_cast<int>(std::sqrt(n / 2.0)));
    double cw = box.width() > 0 ? box.width() / k : 1.0;
    double ch = box.height() > 0 ? box.height() / k : 1.0;
    std::vector<std::int64_t> key(n);
    for (int i = 0; i < n; ++i) {
        int cx = std::clamp(static_cast<int>((pts[i].x - box.lo.x) / cw), 0, k - 1);
        int cy = std::clamp(static_cast<int>((pts[i].y - box.lo.y) / ch), 0, k - 1);
        if (cy & 1) cx = k - 1 - cx; // serpentine
        key[i] = static_cast<std::int64_t>(cy) * k + cx;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key[a] < key[b]; });
    return order;
}

} // namespace

Triangulation delaunay(std::span<const Point2> points) {
    for (const Point2& p : points) {
        if (!is_finite(p)) throw DegenerateInput("input point is not finite");
    }
    DedupResult dd = dedup_points(points);
    const std::vector<Point2>& pts = dd.points;
    if (pts.size() < 3) throw DegenerateInput("triangulation needs at least 3 distinct points");

    std::vector<int> order = spatial_order(pts);

    // seed triangle: first two points plus the first non-collinear third
    int i0 = order[0], i1 = order[1], i2 = -1;
    std::size_t seed_pos = 0;
    for (std::size_t j = 2; j < order.size(); ++j) {
        if (orient(pts[i0], pts[i1], pts[order[j]]) != 0) {
            i2 = order[j];
            seed_pos = j;
            break;
        }
    }
    if (i2 < 0) throw DegenerateInput("all points are collinear");
    if (orient(pts[i0], pts[i1], pts[i2]) < 0) std::swap(i1, i2);

    DelaunayBuilder builder(pts);
    builder.tris.reserve(2 * pts.size() + 8);
    builder.alive.reserve(2 * pts.size() + 8);
    int t0 = builder.new_tri({i0, i1, i2});
    int gab = builder.new_tri({i1, i0, GHOST});
    int gbc = builder.new_tri({i2, i1, GHOST});
    int gca = builder.new_tri({i0, i2, GHOST});
    builder.tris[t0].nb = {gab, gbc, gca};
    builder.tris[gab].nb = {t0, gca, gbc};
    builder.tris[gbc].nb = {t0, gab, gca};
    builder.tris[gca].nb = {t0, gbc, gab};
    builder.last_real = t0;

    for (std::size_t j = 2; j < order.size(); ++j) {
        if (j == seed_pos) continue;
        builder.insert(order[j]);
    }

    Triangulation out;
    out.sites = pts;
    out.dedup_removed = dd.removed;
    std::vector<int> remap(builder.tris.size(), -1);
    for (std::size_t t = 0; t < builder.tris.size(); ++t) {
        if (builder.alive[t] && !builder.is_ghost(static_cast<int>(t))) {
            remap[t] = static_cast<int>(out.triangles.size());
            out.triangles.push_back(builder.tris[t].v);
        }
    }
    out.neighbors.resize(out.triangles.size());
    for (std::size_t t = 0; t < builder.tris.size(); ++t) {
        if (remap[t] < 0) continue;
        for (int e = 0; e < 3; ++e) {
            int n = builder.tris[t].nb[e];
            out.neighbors[remap[t]][e] = (n >= 0 && remap[n] >= 0) ? remap[n] : -1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Voronoi dual

Point2 circumcenter(Point2 a, Point2 b, Point2 c) {
    double abx = b.x - a.x, aby = b.y - a.y;
    double acx = c.x - a.x, acy = c.y - a.y;
    double d = 2.0 * (abx * acy - aby * acx);
    double ab2 = abx * abx + aby * aby;
    double ac2 = acx * acx + acy * acy;
    double ux = (acy * ab2 - aby * ac2) / d;
    double uy = (abx * ac2 - acx * ab2) / d;
    return {a.x + ux, a.y + uy};
}

VoronoiDiagram voronoi(const Triangulation& tri) {
    VoronoiDiagram vd;
    vd.sites = tri.sites;
    vd.vertices.reserve(tri.triangles.size());
    for (const auto& t : tri.triangles) {
        vd.vertices.push_back(circumcenter(tri.sites[t[0]], tri.sites[t[1]], tri.sites[t[2]]));
    }
    vd.cells.resize(tri.sites.size());
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
        for (int e = 0; e < 3; ++e) {
            int n = tri.neighbors[t][e];
            int a = tri.triangles[t][e];
            int b = tri.triangles[t][(e + 1) % 3];
            if (n >= 0) {
                if (n < static_cast<int>(t)) continue; // each pair once
                VoronoiEdge ve;
                ve.site_a = a;
                ve.site_b = b;
                ve.origin = vd.vertices[t];
                ve.second = vd.vertices[n];
                ve.is_ray = false;
                vd.cells[a].push_back(static_cast<int>(vd.edges.size()));
                vd.cells[b].push_back(static_cast<int>(vd.edges.size()));
                vd.edges.push_back(ve);
            } else {
                // hull edge a->b: ray along its perpendicular bisector, outward
                Point2 dvec = tri.sites[b] - tri.sites[a];
                double len = norm(dvec);
                VoronoiEdge ve;
                ve.site_a = a;
                ve.site_b = b;
                ve.origin = vd.vertices[t];
                ve.second = {dvec.y / len, -dvec.x / len};
                ve.is_ray = true;
                vd.cells[a].push_back(static_cast<int>(vd.edges.size()));
                vd.cells[b].push_back(static_cast<int>(vd.edges.size()));
                vd.edges.push_back(ve);
            }
        }
    }
    vd.grid = PointGrid(vd.sites);
    return vd;
}

std::vector<int> nearest_sites(const VoronoiDiagram& vd, Point2 p) {
    if (vd.sites.empty()) throw EmptyInput("nearest_sites requires at least one site");
    double d;
    vd.grid.nearest(p, &d);
    double band = d * (1.0 + 1e-9);
    std::vector<int> out;
    vd.grid.within(p, band, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace maxspace
