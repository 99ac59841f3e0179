// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "maxspace/region.hpp"

#include <cmath>

namespace maxspace {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ConvexRegion ConvexRegion::polygon(ConvexPolygon poly) {
    if (poly.empty()) throw DegenerateInput("empty polygon region");
    ConvexRegion r;
    r.shape_ = std::move(poly);
    return r;
}

ConvexRegion ConvexRegion::disk(Point2 center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !is_finite(center)) {
        throw InvalidParams("disk region requires a finite center and radius > 0");
    }
    ConvexRegion r;
    r.shape_ = Disk{center, radius};
    return r;
}

ConvexRegion ConvexRegion::rectangle(Point2 corner, double width, double height) {
    if (!(width > 0.0) || !(height > 0.0)) {
        throw InvalidParams("rectangle region requires positive width and height");
    }
    std::vector<Point2> v{corner,
                          {corner.x + width, corner.y},
                          {corner.x + width, corner.y + height},
                          {corner.x, corner.y + height}};
    return polygon(ConvexPolygon(std::move(v)));
}

bool ConvexRegion::contains(Point2 p) const {
    if (const auto* poly = as_polygon()) return poly->contains(p);
    const Disk& d = std::get<Disk>(shape_);
    return distance(p, d.center) <= d.radius;
}

double ConvexRegion::boundary_distance(Point2 p) const {
    if (const auto* poly = as_polygon()) return poly->boundary_distance(p).distance;
    const Disk& d = std::get<Disk>(shape_);
    return std::fabs(d.radius - distance(p, d.center));
}

double ConvexRegion::area() const {
    if (const auto* poly = as_polygon()) return poly->area();
    const Disk& d = std::get<Disk>(shape_);
    return kPi * d.radius * d.radius;
}

BBox ConvexRegion::bounding_box() const {
    if (const auto* poly = as_polygon()) return poly->bounding_box();
    const Disk& d = std::get<Disk>(shape_);
    return {{d.center.x - d.radius, d.center.y - d.radius},
            {d.center.x + d.radius, d.center.y + d.radius}};
}

double ConvexRegion::diameter() const {
    if (as_polygon()) return bounding_box().diagonal(); // tight within sqrt(2)
    return 2.0 * std::get<Disk>(shape_).radius;
}

Point2 ConvexRegion::inner_point() const {
    if (const auto* poly = as_polygon()) return poly->centroid();
    return std::get<Disk>(shape_).center;
}

} // namespace maxspace
