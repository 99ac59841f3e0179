// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_DENSITY_HPP
#define MAXSPACE_DENSITY_HPP

#include <span>
#include <vector>

#include "maxspace/geom2d.hpp"
#include "maxspace/sample.hpp"

namespace maxspace {

enum class Kernel { gaussian, uniform };

/// A planar kernel: nonnegative, integrates to one, zero first moment.
struct KernelSpec {
    Kernel kind = Kernel::gaussian;
    double normalization = 0.0; // value scale for d = 2

    static KernelSpec gaussian();
    static KernelSpec uniform();

    /// K(u) for u = (x - X_i) / h.
    double value(Point2 u) const;
};

/// Bandwidth selection: a fixed h, or the scaled rule
/// h_n = h0 * sigma_hat * n^{-1/(d+4)} with sigma_hat the mean of the
/// per-coordinate sample standard deviations.
struct BandwidthSpec {
    enum class Rule { fixed, scaled };
    Rule rule = Rule::scaled;
    double value = 1.0; // h for fixed, h0 for scaled

    static BandwidthSpec fixed(double h);
    static BandwidthSpec scaled(double h0 = 1.0);
};

/// Kernel density estimate at x: (1 / (n h^d)) sum_i K((x - X_i) / h), d = 2.
double kde_at(const Sample& points, double h, const KernelSpec& k, Point2 x);

/// Resolves a BandwidthSpec against the sample. Throws ZeroSpread when all
/// points coincide under the scaled rule.
double default_bandwidth(const Sample& points, const BandwidthSpec& spec);

/// Density estimate that is constant on each Voronoi cell: the kernel
/// estimate at the cell's site, max over ties, zero outside the hull.
class DensityEstimate {
public:
    DensityEstimate() = default;

    /// Cell value at x: max of cell_values over all nearest sites when x is
    /// inside the hull (boundary included), 0 outside.
    double value_at(Point2 x) const;

    std::span<const Point2> sites() const { return sites_; }
    std::span<const double> cell_values() const { return cell_values_; }
    const ConvexPolygon& hull() const { return hull_; }
    double max_cell_value() const { return max_cell_value_; }
    double bandwidth() const { return bandwidth_; }

    /// Constant density on the hull of `sites` (test hook; also the exact
    /// reduction to the uniform statistic when value = 1 / hull area).
    static DensityEstimate constant(const Sample& sites, double value);

    /// Piecewise-constant density with explicit cell values and domain.
    static DensityEstimate piecewise(std::vector<Point2> sites, std::vector<double> values,
                                     ConvexPolygon hull);

    friend DensityEstimate voronoi_max_estimator(const Sample&, double, const KernelSpec&);

private:
    std::vector<Point2> sites_;
    std::vector<double> cell_values_;
    ConvexPolygon hull_;
    PointGrid grid_;
    double max_cell_value_ = 0.0;
    double bandwidth_ = 0.0;
};

/// The Voronoi-max plug-in estimator: piecewise constant on Voronoi cells,
/// deliberately biased upward on empty territory inside the hull.
DensityEstimate voronoi_max_estimator(const Sample& points, double h, const KernelSpec& k);

} // namespace maxspace

#endif
