// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "maxspace/density.hpp"

#include <algorithm>
#include <cmath>

namespace maxspace {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTieTol = 1e-9; // relative tie tolerance for cell membership
} // namespace

KernelSpec KernelSpec::gaussian() { return {Kernel::gaussian, 1.0 / (2.0 * kPi)}; }

KernelSpec KernelSpec::uniform() { return {Kernel::uniform, 1.0 / kPi}; }

double KernelSpec::value(Point2 u) const {
    double r2 = norm2(u);
    if (kind == Kernel::gaussian) return normalization * std::exp(-0.5 * r2);
    return r2 <= 1.0 ? normalization : 0.0;
}

BandwidthSpec BandwidthSpec::fixed(double h) { return {Rule::fixed, h}; }

BandwidthSpec BandwidthSpec::scaled(double h0) { return {Rule::scaled, h0}; }

double kde_at(const Sample& points, double h, const KernelSpec& k, Point2 x) {
    if (points.points.empty()) throw EmptyInput("kde_at requires at least one point");
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidBandwidth("bandwidth must be positive");
    const double inv_h = 1.0 / h;
    double sum = 0.0;
    for (const Point2& p : points.points) {
        sum += k.value({(x.x - p.x) * inv_h, (x.y - p.y) * inv_h});
    }
    return sum / (points.points.size() * h * h);
}

double default_bandwidth(const Sample& points, const BandwidthSpec& spec) {
    if (spec.rule == BandwidthSpec::Rule::fixed) {
        if (!(spec.value > 0.0)) throw InvalidBandwidth("fixed bandwidth must be positive");
        return spec.value;
    }
    const auto& pts = points.points;
    const std::size_t n = pts.size();
    if (n < 2) throw InvalidParams("scaled bandwidth requires n >= 2");
    if (!(spec.value > 0.0)) throw InvalidBandwidth("h0 must be positive");

    double mx = 0.0, my = 0.0;
    for (const Point2& p : pts) {
        mx += p.x;
        my += p.y;
    }
    mx /= n;
    my /= n;
    double vx = 0.0, vy = 0.0;
    for (const Point2& p : pts) {
        vx += (p.x - mx) * (p.x - mx);
        vy += (p.y - my) * (p.y - my);
    }
    double sigma = 0.5 * (std::sqrt(vx / (n - 1)) + std::sqrt(vy / (n - 1)));
    if (!(sigma > 0.0)) throw ZeroSpread("all points identical; no scale for bandwidth");
    // d = 2: h_n = h0 * sigma * n^{-1/(d+4)}
    return spec.value * sigma * std::pow(static_cast<double>(n), -1.0 / 6.0);
}

double DensityEstimate::value_at(Point2 x) const {
    if (sites_.empty() || !hull_.contains(x)) return 0.0;
    double d;
    grid_.nearest(x, &d);
    thread_local std::vector<int> ties;
    grid_.within(x, d * (1.0 + kTieTol), ties);
    double v = 0.0;
    for (int i : ties) v = std::max(v, cell_values_[i]);
    return v;
}

DensityEstimate DensityEstimate::constant(const Sample& sites, double value) {
    DedupResult dd = dedup_points(sites.points);
    if (dd.points.size() < 3) throw DegenerateInput("density estimate requires >= 3 points");
    ConvexPolygon hull = convex_hull(dd.points);
    std::vector<double> values(dd.points.size(), value);
    return piecewise(std::move(dd.points), std::move(values), std::move(hull));
}

DensityEstimate DensityEstimate::piecewise(std::vector<Point2> sites, std::vector<double> values,
                                           ConvexPolygon hull) {
    if (sites.empty()) throw EmptyInput("piecewise density requires at least one site");
    if (sites.size() != values.size()) {
        throw InvalidParams("piecewise density needs one value per site");
    }
    double mx = 0.0;
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidParams("cell values must be finite and nonnegative");
        }
        mx = std::max(mx, v);
    }
    for (const Point2& s : sites) {
        if (!hull.contains(s)) throw DensityDomainMismatch("site outside the density domain");
    }
    DensityEstimate est;
    est.sites_ = std::move(sites);
    est.cell_values_ = std::move(values);
    est.hull_ = std::move(hull);
    est.grid_ = PointGrid(est.sites_);
    est.max_cell_value_ = mx;
    est.bandwidth_ = 0.0;
    return est;
}

DensityEstimate voronoi_max_estimator(const Sample& points, double h, const KernelSpec& k) {
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidBandwidth("bandwidth must be positive");
    DedupResult dd = dedup_points(points.points);
    if (dd.points.size() < 3) throw DegenerateInput("density estimate requires >= 3 points");

    DensityEstimate est;
    est.hull_ = convex_hull(dd.points);
    est.sites_ = std::move(dd.points);
    est.bandwidth_ = h;

    Sample deduped;
    deduped.points = est.sites_;
    est.cell_values_.resize(est.sites_.size());
    double mx = 0.0;
    for (std::size_t i = 0; i < est.sites_.size(); ++i) {
        est.cell_values_[i] = kde_at(deduped, h, k, est.sites_[i]);
        mx = std::max(mx, est.cell_values_[i]);
    }
    est.max_cell_value_ = mx;
    est.grid_ = PointGrid(est.sites_);
    return est;
}

} // namespace maxspace
