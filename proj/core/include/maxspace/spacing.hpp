// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_SPACING_HPP
#define MAXSPACE_SPACING_HPP

#include "maxspace/constants.hpp"
#include "maxspace/density.hpp"
#include "maxspace/region.hpp"
#include "maxspace/sample.hpp"

namespace maxspace {

/// A ball contained in a region and empty of sample points.
struct EmptyBall {
    Point2 center{0, 0};
    double radius = 0.0;
};

/// Maximal-spacing quantities of a sample within a support.
struct SpacingStatistics {
    double R = 0.0;     // maximal inner radius of support minus sample
    double Delta = 0.0; // maximal spacing, V^{1/d}
    double V = 0.0;     // Delta^d
    double U = 0.0;     // Gumbel-normalized statistic
    LimitParams params;
    EmptyBall witness;
    double support_area = 0.0;
    int dedup_removed = 0;
};

/// Largest ball contained in `region` whose interior avoids every point.
/// Maximizes g(x) = min(nearest point distance, boundary distance) by
/// candidate seeding on the sample's Voronoi diagram followed by local
/// refinement; the returned radius is the certified value g(center).
EmptyBall largest_empty_ball(std::span<const Point2> points, const ConvexRegion& region);

/// Spacing statistics for a (presumed uniform) sample on a known support:
/// V = omega_d R^d / |support|, Delta = V^{1/d}, U = u_statistic with
/// params.alpha. params.n is taken from `params`.
SpacingStatistics uniform_spacing(std::span<const Point2> points, const ConvexRegion& support,
                                  const LimitParams& params);

/// The hull-based statistic: support is the convex hull of the sample,
/// alpha = alpha_ball(2), n the deduplicated sample size.
SpacingStatistics semi_parametric_statistic(const Sample& points);

/// Density-weighted spacing: Delta = sup_x f(x)^{1/d} omega_d^{1/d} g(x)
/// over the hull, with f piecewise constant on Voronoi cells; V = Delta^d.
/// Reduces exactly to the uniform statistic when f is constant 1 / |hull|.
SpacingStatistics weighted_spacing(const Sample& points, const ConvexPolygon& hull,
                                   const DensityEstimate& dens, const LimitParams& params);

} // namespace maxspace

#endif
