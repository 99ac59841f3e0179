// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "maxspace/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

namespace maxspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct LineSpan {
    Point2 origin;
    Point2 dir; // unit
    double t0 = 0.0, t1 = 0.0;
    int site = -1; // a generating site (distance reference along the span)
};

int solve_quadratic(double a, double b, double c, double* r0, double* r1) {
    if (std::fabs(a) < 1e-300) {
        if (std::fabs(b) < 1e-300) return 0;
        *r0 = -c / b;
        return 1;
    }
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return 0;
    double sq = std::sqrt(disc);
    double q = (b >= 0.0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
    *r0 = q / a;
    if (q != 0.0) {
        *r1 = c / q;
        return 2;
    }
    *r1 = *r0;
    return disc > 0.0 ? 2 : 1;
}

// Clip x(t) = o + t*dir, t in [t0, t1], against the region. Returns false
// when the intersection is empty.
bool clip_span(const ConvexRegion& region, Point2 o, Point2 dir, double& t0, double& t1) {
    if (const ConvexPolygon* poly = region.as_polygon()) {
        const auto& v = poly->vertices();
        const std::size_t m = v.size();
        for (std::size_t i = 0; i < m; ++i) {
            Point2 a = v[i];
            Point2 b = v[(i + 1) % m];
            Point2 e = b - a;
            double len = norm(e);
            Point2 n{-e.y / len, e.x / len}; // inward for CCW
            double c0 = dot(n, o - a);
            double c1 = dot(n, dir);
            if (std::fabs(c1) < 1e-300) {
                if (c0 < 0.0) return false;
                continue;
            }
            double t = -c0 / c1;
            if (c1 > 0.0)
                t0 = std::max(t0, t);
            else
                t1 = std::min(t1, t);
            if (t0 > t1) return false;
        }
        return true;
    }
    const Disk& d = *region.as_disk();
    Point2 oc = o - d.center;
    double b = 2.0 * dot(dir, oc);
    double c = norm2(oc) - d.radius * d.radius;
    double r0, r1;
    int k = solve_quadratic(1.0, b, c, &r0, &r1);
    if (k < 2) return false;
    if (r0 > r1) std::swap(r0, r1);
    t0 = std::max(t0, r0);
    t1 = std::min(t1, r1);
    return t0 <= t1;
}

struct Candidate {
    Point2 x;
    double value;
};

class SpacingSolver {
public:
    SpacingSolver(std::span<const Point2> sites, const ConvexRegion& region,
                  const DensityEstimate* dens)
        : sites_(sites), region_(region), dens_(dens), grid_(sites) {
        diam_ = region.diameter();
        if (dens_) dens_ref_ = dens_->max_cell_value();
    }

    // min(nearest site distance, boundary distance); valid inside the region
    double gap(Point2 x) const {
        return std::min(grid_.nearest_distance(x), region_.boundary_distance(x));
    }

    double objective(Point2 x) const {
        double g = gap(x);
        if (!dens_) return g;
        if (!(dens_ref_ > 0.0)) return 0.0;
        return g * std::sqrt(dens_->value_at(x) / dens_ref_);
    }

    Candidate solve() {
        collect_candidates();
        std::stable_sort(candidates_.begin(), candidates_.end(),
                         [](const Candidate& a, const Candidate& b) { return a.value > b.value; });

        Candidate best{region_.inner_point(), -kInf};
        if (region_.contains(best.x)) best.value = objective(best.x);

        const double min_sep = 1e-7 * diam_;
        std::vector<Point2> seeds;
        for (const Candidate& c : candidates_) {
            if (static_cast<int>(seeds.size()) >= kMaxSeeds) break;
            bool close = false;
            for (const Point2& s : seeds) {
                if (distance(s, c.x) < min_sep) {
                    close = true;
                    break;
                }
            }
            if (close) continue;
            seeds.push_back(c.x);
            if (c.value > best.value) best = c;
        }
        if (seeds.empty()) seeds.push_back(best.x);

        for (const Point2& s : seeds) {
            Candidate r = refine(s);
            if (r.value > best.value) best = r;
            Candidate p = polish(r.x);
            if (p.value > best.value) best = p;
        }
        return best;
    }

private:
    static constexpr int kMaxSeeds = 16;
    static constexpr int kMaxRounds = 256;

    std::span<const Point2> sites_;
    const ConvexRegion& region_;
    const DensityEstimate* dens_;
    PointGrid grid_;
    double diam_ = 1.0;
    double dens_ref_ = 1.0;
    std::vector<Candidate> candidates_;
    std::optional<VoronoiDiagram> vd_;

    void add_candidate(Point2 x) {
        if (!is_finite(x) || !region_.contains(x)) return;
        candidates_.push_back({x, objective(x)});
    }

    void collect_candidates() {
        // Voronoi vertices and edges of the sample
        if (sites_.size() >= 3) {
            try {
                vd_.emplace(voronoi(delaunay(sites_)));
            } catch (const DegenerateInput&) {
                vd_.reset();
            }
        }

        std::vector<LineSpan> spans;
        if (vd_) {
            for (const Point2& v : vd_->vertices) add_candidate(v);
            spans.reserve(vd_->edges.size());
            for (const VoronoiEdge& e : vd_->edges) {
                LineSpan s;
                s.origin = e.origin;
                s.site = e.site_a;
                if (e.is_ray) {
                    s.dir = e.second;
                    s.t0 = 0.0;
                    s.t1 = 2.0 * (distance(e.origin, region_.inner_point()) + diam_);
                } else {
                    Point2 d = e.second - e.origin;
                    double len = norm(d);
                    if (!(len > 0.0)) continue;
                    s.dir = {d.x / len, d.y / len};
                    s.t0 = 0.0;
                    s.t1 = len;
                }
                if (!is_finite(s.origin) || !is_finite(s.dir)) continue;
                if (clip_span(region_, s.origin, s.dir, s.t0, s.t1)) spans.push_back(s);
            }
        } else if (sites_.size() >= 2) {
            // no triangulation (collinear or tiny input): bisectors of all
            // pairs when few sites, of lexicographic neighbors otherwise
            auto add_bisector = [&](std::size_t i, std::size_t j) {
                Point2 mid = 0.5 * (sites_[i] + sites_[j]);
                Point2 d = sites_[j] - sites_[i];
                double len = norm(d);
                if (!(len > 0.0)) return;
                LineSpan s;
                s.origin = mid;
                s.dir = {-d.y / len, d.x / len};
                s.site = static_cast<int>(i);
                s.t0 = -2.0 * diam_;
                s.t1 = 2.0 * diam_;
                if (clip_span(region_, s.origin, s.dir, s.t0, s.t1)) spans.push_back(s);
            };
            if (sites_.size() <= 8) {
                for (std::size_t i = 0; i < sites_.size(); ++i)
                    for (std::size_t j = i + 1; j < sites_.size(); ++j) add_bisector(i, j);
            } else {
                std::vector<std::size_t> order(sites_.size());
                for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                    return sites_[a].x < sites_[b].x ||
                           (sites_[a].x == sites_[b].x && sites_[a].y < sites_[b].y);
                });
                for (std::size_t i = 0; i + 1 < order.size(); ++i) {
                    add_bisector(order[i], order[i + 1]);
                }
            }
        }

        // probe span endpoints and midpoints; remember the strongest spans
        std::vector<std::pair<double, int>> span_rank;
        span_rank.reserve(spans.size());
        for (std::size_t i = 0; i < spans.size(); ++i) {
            const LineSpan& s = spans[i];
            double v = -kInf;
            for (double t : {s.t0, 0.5 * (s.t0 + s.t1), s.t1}) {
                Point2 x = s.origin + t * s.dir;
                if (!is_finite(x) || !region_.contains(x)) continue;
                double val = objective(x);
                candidates_.push_back({x, val});
                v = std::max(v, val);
            }
            span_rank.emplace_back(v, static_cast<int>(i));
        }
        std::stable_sort(span_rank.begin(), span_rank.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        const ConvexPolygon* poly = region_.as_polygon();
        int budget = std::min<int>(32, static_cast<int>(span_rank.size()));
        for (int k = 0; k < budget; ++k) {
            const LineSpan& s = spans[span_rank[k].second];
            if (poly && s.site >= 0) {
                for_each_edge_balance(*poly, s, sites_[s.site]);
            }
        }

        // boundary-only optima: incenter candidates from edge triples
        if (poly) {
            const auto& v = poly->vertices();
            std::vector<int> eidx;
            int m = static_cast<int>(v.size());
            if (m <= 16) {
                for (int i = 0; i < m; ++i) eidx.push_back(i);
            } else {
                for (int i = 0; i < 16; ++i) eidx.push_back(i * m / 16);
            }
            for (std::size_t a = 0; a < eidx.size(); ++a)
                for (std::size_t b = a + 1; b < eidx.size(); ++b)
                    for (std::size_t c = b + 1; c < eidx.size(); ++c)
                        add_incenter(*poly, eidx[a], eidx[b], eidx[c]);
        }
        add_candidate(region_.inner_point());

        // coarse scan for basins the structured candidates miss
        BBox box = region_.bounding_box();
        const int kGrid = 24;
        for (int iy = 0; iy < kGrid; ++iy) {
            for (int ix = 0; ix < kGrid; ++ix) {
                add_candidate({box.lo.x + (ix + 0.5) * box.width() / kGrid,
                               box.lo.y + (iy + 0.5) * box.height() / kGrid});
            }
        }
    }

    // points on the span where distance-to-site equals distance to a region
    // edge line (the closed-form quadratic)
    void for_each_edge_balance(const ConvexPolygon& poly, const LineSpan& s, Point2 site) {
        const auto& v = poly.vertices();
        const std::size_t m = v.size();
        Point2 os = s.origin - site;
        for (std::size_t i = 0; i < m; ++i) {
            Point2 a = v[i];
            Point2 e = v[(i + 1) % m] - a;
            double len = norm(e);
            Point2 n{-e.y / len, e.x / len};
            double beta = dot(n, s.origin - a);
            double alpha = dot(n, s.dir);
            // |os + t dir|^2 = (beta + alpha t)^2
            double qa = 1.0 - alpha * alpha;
            double qb = 2.0 * (dot(s.dir, os) - alpha * beta);
            double qc = norm2(os) - beta * beta;
            double r0, r1;
            int k = solve_quadratic(qa, qb, qc, &r0, &r1);
            for (int j = 0; j < k; ++j) {
                double t = (j == 0) ? r0 : r1;
                if (t >= s.t0 && t <= s.t1) add_candidate(s.origin + t * s.dir);
            }
        }
    }

    void add_incenter(const ConvexPolygon& poly, int i, int j, int k) {
        const auto& v = poly.vertices();
        const std::size_t m = v.size();
        Point2 n[3], a[3];
        int idx[3] = {i, j, k};
        for (int q = 0; q < 3; ++q) {
            Point2 p0 = v[idx[q]];
            Point2 e = v[(idx[q] + 1) % m] - p0;
            double len = norm(e);
            n[q] = {-e.y / len, e.x / len};
            a[q] = p0;
        }
        // n_q . x - r = n_q . a_q
        double A[3][4];
        for (int q = 0; q < 3; ++q) {
            A[q][0] = n[q].x;
            A[q][1] = n[q].y;
            A[q][2] = -1.0;
            A[q][3] = dot(n[q], a[q]);
        }
        // Gaussian elimination, 3x3
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int r = col + 1; r < 3; ++r)
                if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
            if (std::fabs(A[piv][col]) < 1e-14) return;
            for (int c = 0; c < 4; ++c) std::swap(A[col][c], A[piv][c]);
            for (int r = 0; r < 3; ++r) {
                if (r == col) continue;
                double f = A[r][col] / A[col][col];
                for (int c = col; c < 4; ++c) A[r][c] -= f * A[col][c];
            }
        }
        double x = A[0][3] / A[0][0];
        double y = A[1][3] / A[1][1];
        double r = A[2][3] / A[2][2];
        if (r > 0.0) add_candidate({x, y});
    }

    Candidate refine(Point2 seed) const {
        static const Point2 kDirs[8] = {{1, 0},
                                        {-1, 0},
                                        {0, 1},
                                        {0, -1},
                                        {M_SQRT1_2, M_SQRT1_2},
                                        {M_SQRT1_2, -M_SQRT1_2},
                                        {-M_SQRT1_2, M_SQRT1_2},
                                        {-M_SQRT1_2, -M_SQRT1_2}};
        Point2 x = seed;
        double f = objective(x);
        double h = 0.05 * diam_;
        const double h_min = 1e-12 * diam_;
        for (int round = 0; round < kMaxRounds && h > h_min; ++round) {
            Point2 best_x = x;
            double best_f = f;
            for (const Point2& d : kDirs) {
                Point2 y = x + h * d;
                if (!region_.contains(y)) continue;
                double v = objective(y);
                if (v > best_f) {
                    best_f = v;
                    best_x = y;
                }
            }
            if (best_f > f) {
                x = best_x;
                f = best_f;
            } else {
                h *= 0.5;
            }
        }
        return {x, f};
    }

    // Equalize the active constraints at x in closed form; the solved point
    // is similarity-covariant, which pins the optimum well below the compass
    // step resolution.
    Candidate polish(Point2 x) const {
        Candidate best{x, objective(x)};
        double g = gap(x);
        if (!(g > 0.0)) return best;
        double tol = std::max(1e-6 * diam_, 1e-9 * g);

        thread_local std::vector<int> near_sites;
        grid_.within(x, g + tol, near_sites);
        if (near_sites.size() > 6) near_sites.resize(6);

        const ConvexPolygon* poly = region_.as_polygon();
        std::vector<int> near_edges;
        if (poly) {
            const auto& v = poly->vertices();
            const std::size_t m = v.size();
            for (std::size_t i = 0; i < m; ++i) {
                if (segment_distance(x, v[i], v[(i + 1) % m]) <= g + tol) {
                    near_edges.push_back(static_cast<int>(i));
                }
            }
        }
        const Disk* disk = region_.as_disk();
        bool circle_active = disk && region_.boundary_distance(x) <= g + tol;

        auto try_point = [&](Point2 p) {
            if (!is_finite(p) || !region_.contains(p)) return;
            double v = objective(p);
            if (v > best.value) best = {p, v};
        };

        // three sites: circumcenter
        for (std::size_t a = 0; a < near_sites.size(); ++a)
            for (std::size_t b = a + 1; b < near_sites.size(); ++b)
                for (std::size_t c = b + 1; c < near_sites.size(); ++c)
                    try_point(circumcenter(sites_[near_sites[a]], sites_[near_sites[b]],
                                           sites_[near_sites[c]]));

        // two sites + one boundary feature: balance along the bisector
        for (std::size_t a = 0; a < near_sites.size(); ++a) {
            for (std::size_t b = a + 1; b < near_sites.size(); ++b) {
                Point2 s1 = sites_[near_sites[a]];
                Point2 s2 = sites_[near_sites[b]];
                Point2 d = s2 - s1;
                double len = norm(d);
                if (!(len > 0.0)) continue;
                LineSpan span;
                span.origin = 0.5 * (s1 + s2);
                span.dir = {-d.y / len, d.x / len};
                span.t0 = -2.0 * diam_;
                span.t1 = 2.0 * diam_;
                if (poly) {
                    for (int ei : near_edges) balance_on_line(*poly, ei, span, s1, try_point);
                }
                if (circle_active) circle_balance_on_line(*disk, span, s1, try_point);
            }
        }

        // one site + two edge lines: balance along the equal-distance line
        if (poly && !near_sites.empty() && near_edges.size() >= 2) {
            const auto& v = poly->vertices();
            const std::size_t m = v.size();
            for (std::size_t a = 0; a < near_edges.size(); ++a) {
                for (std::size_t b = a + 1; b < near_edges.size(); ++b) {
                    Point2 pa = v[near_edges[a]];
                    Point2 ea = v[(near_edges[a] + 1) % m] - pa;
                    Point2 pb = v[near_edges[b]];
                    Point2 eb = v[(near_edges[b] + 1) % m] - pb;
                    Point2 na{-ea.y / norm(ea), ea.x / norm(ea)};
                    Point2 nb{-eb.y / norm(eb), eb.x / norm(eb)};
                    // locus: (na - nb) . p = na.pa - nb.pb
                    Point2 w = na - nb;
                    double rhs = dot(na, pa) - dot(nb, pb);
                    double wn = norm2(w);
                    if (wn < 1e-24) continue;
                    Point2 p0 = (rhs / wn) * w;
                    Point2 u{-w.y / std::sqrt(wn), w.x / std::sqrt(wn)};
                    LineSpan span;
                    span.origin = p0;
                    span.dir = u;
                    span.t0 = -4.0 * diam_ - norm(p0 - region_.inner_point());
                    span.t1 = -span.t0;
                    for (int s : near_sites) {
                        balance_on_line(*poly, near_edges[a], span, sites_[s], try_point);
                    }
                }
            }
        }

        // one site + the disk rim: balance on the line through center and site
        if (circle_active && !near_sites.empty()) {
            for (int s : near_sites) {
                Point2 site = sites_[s];
                Point2 d = site - disk->center;
                double ds = norm(d);
                Point2 u = ds > 0.0 ? Point2{d.x / ds, d.y / ds} : Point2{1.0, 0.0};
                double t = 0.5 * (ds - disk->radius);
                try_point(disk->center + t * u);
            }
        }
        return best;
    }

    template <typename F>
    void balance_on_line(const ConvexPolygon& poly, int edge, const LineSpan& span, Point2 site,
                         F&& try_point) const {
        const auto& v = poly.vertices();
        const std::size_t m = v.size();
        Point2 a = v[edge];
        Point2 e = v[(edge + 1) % m] - a;
        double len = norm(e);
        Point2 n{-e.y / len, e.x / len};
        double beta = dot(n, span.origin - a);
        double alpha = dot(n, span.dir);
        Point2 os = span.origin - site;
        double qa = 1.0 - alpha * alpha;
        double qb = 2.0 * (dot(span.dir, os) - alpha * beta);
        double qc = norm2(os) - beta * beta;
        double r0, r1;
        int k = solve_quadratic(qa, qb, qc, &r0, &r1);
        for (int j = 0; j < k; ++j) {
            double t = (j == 0) ? r0 : r1;
            if (t >= span.t0 && t <= span.t1) try_point(span.origin + t * span.dir);
        }
    }

    template <typename F>
    void circle_balance_on_line(const Disk& disk, const LineSpan& span, Point2 site,
                                F&& try_point) const {
        // site distance equals rim distance along the span; the locus is an
        // ellipse with foci at the site and the disk center, so bracket the
        // sign changes and bisect
        auto f = [&](double t) {
            Point2 x = span.origin + t * span.dir;
            return distance(x, site) - (disk.radius - distance(x, disk.center));
        };
        double lo = span.t0, hi = span.t1;
        const int kSamples = 16;
        double prev_t = lo, prev_f = f(lo);
        for (int i = 1; i <= kSamples; ++i) {
            double t = lo + (hi - lo) * i / kSamples;
            double ft = f(t);
            if ((prev_f <= 0.0 && ft >= 0.0) || (prev_f >= 0.0 && ft <= 0.0)) {
                double x0 = prev_t, x1 = t, f0 = prev_f;
                for (int it = 0; it < 60; ++it) {
                    double mid = 0.5 * (x0 + x1);
                    double fm = f(mid);
                    if ((f0 <= 0.0) == (fm <= 0.0)) {
                        x0 = mid;
                        f0 = fm;
                    } else {
                        x1 = mid;
                    }
                }
                try_point(span.origin + 0.5 * (x0 + x1) * span.dir);
            }
            prev_t = t;
            prev_f = ft;
        }
    }
};

void validate_points_in_region(std::span<const Point2> points, const ConvexRegion& region) {
    for (const Point2& p : points) {
        if (!is_finite(p)) throw DegenerateInput("sample point is not finite");
        if (!region.contains(p)) throw PointOutsideRegion("sample point lies outside the region");
    }
}

} // namespace

EmptyBall largest_empty_ball(std::span<const Point2> points, const ConvexRegion& region) {
    if (points.empty()) throw EmptyInput("largest_empty_ball requires at least one point");
    validate_points_in_region(points, region);

    SpacingSolver solver(points, region, nullptr);
    Candidate best = solver.solve();
    return {best.x, solver.gap(best.x)};
}

SpacingStatistics uniform_spacing(std::span<const Point2> points, const ConvexRegion& support,
                                  const LimitParams& params) {
    params.validate();
    if (params.n < 3) throw InvalidParams("uniform_spacing requires n >= 3");
    if (params.d != 2) throw InvalidParams("the planar geometry supports d = 2 only");

    EmptyBall ball = largest_empty_ball(points, support);
    double area = support.area();

    SpacingStatistics st;
    st.R = ball.radius;
    st.V = omega(2) * ball.radius * ball.radius / area;
    st.Delta = std::sqrt(st.V);
    st.U = u_statistic(params.n, st.V, params.d, params.alpha);
    st.params = params;
    st.witness = ball;
    st.support_area = area;
    return st;
}

SpacingStatistics semi_parametric_statistic(const Sample& points) {
    DedupResult dd = dedup_points(points.points);
    if (dd.points.size() < 3) {
        throw DegenerateInput("semi-parametric statistic requires >= 3 distinct points");
    }
    ConvexPolygon hull = convex_hull(dd.points);
    LimitParams params = LimitParams::for_sample(static_cast<int>(dd.points.size()), 2,
                                                 alpha_ball(2));
    SpacingStatistics st =
        uniform_spacing(dd.points, ConvexRegion::polygon(std::move(hull)), params);
    st.dedup_removed = dd.removed;
    return st;
}

SpacingStatistics weighted_spacing(const Sample& points, const ConvexPolygon& hull,
                                   const DensityEstimate& dens, const LimitParams& params) {
    params.validate();
    if (params.n < 3) throw InvalidParams("weighted_spacing requires n >= 3");
    if (params.d != 2) throw InvalidParams("the planar geometry supports d = 2 only");
    for (const Point2& v : hull.vertices()) {
        if (!dens.hull().contains(v)) {
            throw DensityDomainMismatch("density estimate does not cover the hull");
        }
    }

    DedupResult dd = dedup_points(points.points);
    ConvexRegion region = ConvexRegion::polygon(hull);
    validate_points_in_region(dd.points, region);

    SpacingSolver solver(dd.points, region, &dens);
    Candidate best = solver.solve();

    SpacingStatistics st;
    double dens_ref = dens.max_cell_value();
    st.Delta = std::sqrt(omega(2) * dens_ref) * best.value;
    st.V = st.Delta * st.Delta;
    st.R = solver.gap(best.x);
    st.U = u_statistic(params.n, st.V, params.d, params.alpha);
    st.params = params;
    st.witness = {best.x, st.R};
    st.support_area = hull.area();
    st.dedup_removed = dd.removed;
    return st;
}

} // namespace maxspace
