// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_GEOM2D_HPP
#define MAXSPACE_GEOM2D_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "maxspace/errors.hpp"

namespace maxspace {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(Point2 a) { return std::sqrt(norm2(a)); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct BBox {
    Point2 lo{0, 0};
    Point2 hi{0, 0};

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double diagonal() const { return std::hypot(width(), height()); }
};

BBox bounding_box(std::span<const Point2> pts);

/// Euclidean distance from `p` to the segment [a, b].
double segment_distance(Point2 p, Point2 a, Point2 b);

struct DedupResult {
    std::vector<Point2> points; // retained points, input order preserved
    int removed = 0;
};

/// Removes near-coincident points. The tolerance is 1e-12 relative to the
/// bounding-box extent (absolute 1e-12 once the data is at unit scale);
/// the first occurrence wins.
DedupResult dedup_points(std::span<const Point2> pts);

struct BoundaryDistance {
    double distance = 0.0;
    bool inside = false;
};

/// Strictly convex polygon with CCW vertex order and positive area.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    /// Validates CCW strict convexity; throws DegenerateInput otherwise.
    explicit ConvexPolygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    double area() const { return area_; }
    bool empty() const { return vertices_.empty(); }

    /// Closed containment test (boundary counts as inside), exact.
    bool contains(Point2 p) const;

    /// Distance from p to the nearest boundary edge or vertex, plus a
    /// closed containment flag.
    BoundaryDistance boundary_distance(Point2 p) const;

    BBox bounding_box() const;
    Point2 centroid() const;

private:
    std::vector<Point2> vertices_;
    double area_ = 0.0;
};

/// Minimal convex polygon containing all input points (monotone chain).
/// Vertices are a subset of the inputs. Throws DegenerateInput for fewer
/// than 3 distinct points or an all-collinear configuration.
ConvexPolygon convex_hull(std::span<const Point2> points);

/// Shoelace area of a valid polygon.
double polygon_area(const ConvexPolygon& poly);

/// Distance from p to the polygon boundary with a containment flag.
BoundaryDistance boundary_distance(const ConvexPolygon& poly, Point2 p);

/// Uniform bucket grid over a point set for exact nearest-site queries.
class PointGrid {
public:
    PointGrid() = default;
    explicit PointGrid(std::span<const Point2> pts);

    /// Index of a nearest site and its distance. Exact (ring search with a
    /// certified stopping bound).
    int nearest(Point2 q, double* dist = nullptr) const;
    double nearest_distance(Point2 q) const;

    /// All site indices within `radius` of q (inclusive).
    void within(Point2 q, double radius, std::vector<int>& out) const;

    std::span<const Point2> sites() const { return sites_; }

private:
    std::vector<Point2> sites_;
    BBox box_{};
    int nx_ = 0, ny_ = 0;
    double cw_ = 1.0, ch_ = 1.0;
    std::vector<std::int32_t> cell_start_;
    std::vector<std::int32_t> items_;

    int cell_of(Point2 p) const;
};

/// Delaunay triangulation of the deduplicated site set.
struct Triangulation {
    std::vector<Point2> sites;                    // after dedup, input order
    int dedup_removed = 0;
    std::vector<std::array<int, 3>> triangles;    // CCW vertex triples
    std::vector<std::array<int, 3>> neighbors;    // across edge (v[e], v[e+1]); -1 on hull
};

/// Delaunay triangulation via incremental insertion with ghost triangles
/// and exact predicates. Cocircular ties resolve deterministically by
/// insertion order. Throws DegenerateInput when no triangle exists.
Triangulation delaunay(std::span<const Point2> points);

struct VoronoiEdge {
    int site_a = -1;
    int site_b = -1;       // the two generating sites
    Point2 origin{};       // segment endpoint / ray origin
    Point2 second{};       // segment endpoint, or unit direction when is_ray
    bool is_ray = false;
};

struct VoronoiDiagram {
    std::vector<Point2> sites;
    std::vector<Point2> vertices;          // circumcenters, one per triangle
    std::vector<VoronoiEdge> edges;
    std::vector<std::vector<int>> cells;   // site -> incident edge indices
    PointGrid grid;                        // accelerator over sites
};

/// Dual of a Delaunay triangulation. Hull edges emit outward rays.
VoronoiDiagram voronoi(const Triangulation& tri);

/// All sites attaining the minimal distance to p within a relative tie
/// tolerance of 1e-9.
std::vector<int> nearest_sites(const VoronoiDiagram& vd, Point2 p);

Point2 circumcenter(Point2 a, Point2 b, Point2 c);

} // namespace maxspace

#endif
