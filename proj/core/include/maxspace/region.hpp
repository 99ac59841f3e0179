// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_REGION_HPP
#define MAXSPACE_REGION_HPP

#include <variant>

#include "maxspace/geom2d.hpp"

namespace maxspace {

struct Disk {
    Point2 center{0, 0};
    double radius = 1.0;
};

/// Convex region a spacing statistic is computed over: a convex polygon or
/// a disk (rectangles are polygons). Exposes membership, boundary distance
/// and area uniformly.
class ConvexRegion {
public:
    static ConvexRegion polygon(ConvexPolygon poly);
    static ConvexRegion disk(Point2 center, double radius);
    static ConvexRegion rectangle(Point2 corner, double width, double height);

    bool contains(Point2 p) const;
    double boundary_distance(Point2 p) const; // >= 0 on both sides
    double area() const;
    BBox bounding_box() const;
    double diameter() const;
    Point2 inner_point() const; // centroid / center

    const ConvexPolygon* as_polygon() const { return std::get_if<ConvexPolygon>(&shape_); }
    const Disk* as_disk() const { return std::get_if<Disk>(&shape_); }

private:
    std::variant<ConvexPolygon, Disk> shape_;
};

} // namespace maxspace

#endif
