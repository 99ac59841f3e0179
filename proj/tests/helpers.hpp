// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_TESTS_HELPERS_HPP
#define MAXSPACE_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "maxspace/geom2d.hpp"
#include "maxspace/region.hpp"
#include "maxspace/sampling.hpp"

namespace maxspace::testing {

// Linear-scan nearest distance, independent of PointGrid.
inline double scan_nearest(std::span<const Point2> pts, Point2 q) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point2& p : pts) best = std::min(best, distance(q, p));
    return best;
}

struct GridMax {
    Point2 argmax{0, 0};
    double value = -1.0;
    double cell_diagonal = 0.0;
};

// Brute-force maximization of an objective over the cell centers of an
// N x N grid spanning the region's bounding box. The objective is evaluated
// directly (no solver machinery).
inline GridMax grid_maximize(const ConvexRegion& region, int cells,
                             const std::function<double(Point2)>& objective) {
    BBox box = region.bounding_box();
    double dx = box.width() / cells;
    double dy = box.height() / cells;
    GridMax out;
    out.cell_diagonal = std::hypot(dx, dy);
    for (int iy = 0; iy < cells; ++iy) {
        double y = box.lo.y + (iy + 0.5) * dy;
        for (int ix = 0; ix < cells; ++ix) {
            Point2 p{box.lo.x + (ix + 0.5) * dx, y};
            if (!region.contains(p)) continue;
            double v = objective(p);
            if (v > out.value) {
                out.value = v;
                out.argmax = p;
            }
        }
    }
    return out;
}

// Brute-force largest-empty-ball value max g(x) = min(nearest, boundary),
// with linear scans everywhere.
inline GridMax grid_largest_empty_ball(std::span<const Point2> pts, const ConvexRegion& region,
                                       int cells) {
    return grid_maximize(region, cells, [&](Point2 p) {
        return std::min(scan_nearest(pts, p), region.boundary_distance(p));
    });
}

struct Similarity {
    double c = 1.0, s = 0.0; // scale * rotation
    Point2 t{0, 0};

    Point2 operator()(Point2 p) const {
        return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y};
    }
};

inline Similarity random_similarity(Rng& rng, double scale_lo = 0.25, double scale_hi = 4.0) {
    double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    double scale = std::exp(rng.uniform(std::log(scale_lo), std::log(scale_hi)));
    Similarity sim;
    sim.c = scale * std::cos(theta);
    sim.s = scale * std::sin(theta);
    sim.t = {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    return sim;
}

inline std::vector<Point2> apply(const Similarity& sim, std::span<const Point2> pts) {
    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const Point2& p : pts) out.push_back(sim(p));
    return out;
}

} // namespace maxspace::testing

#endif
