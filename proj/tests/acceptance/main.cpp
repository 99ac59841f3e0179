// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: end-to-end checks of the statistical and geometric
// behavior at full scale. Each criterion prints one PASS/FAIL line; the
// process exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "maxspace/convexity.hpp"
#include "maxspace/sampling.hpp"
#include "maxspace/spacing.hpp"
#include "maxspace/studies.hpp"

using namespace maxspace;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [FAIL]");
    }
};

std::string fmt(double v, int prec = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    return buf;
}

// --- criterion 1: closed-form constants -----------------------------------

Outcome constants_criterion() {
    Outcome out;
    bool cube_ok = true;
    for (int d = 1; d <= 10; ++d) cube_ok = cube_ok && (alpha_cube(d) == 1.0);
    out.require(cube_ok, "alpha_cube(1..10)=1 exactly");
    double a2 = alpha_ball(2);
    double a3 = alpha_ball(3);
    out.require(std::fabs(a2 - 1.0) <= 1e-10, "alpha_ball(2)=" + fmt(a2, 12));
    out.require(std::fabs(a3 - 3.0 * kPi * kPi / 32.0) <= 1e-10,
                "alpha_ball(3)=" + fmt(a3, 12));
    return out;
}

// --- criterion 2: solver vs 2000x2000 brute-force grid --------------------

// dense brute force: a min-squared-site-distance field and a min-signed
// edge-distance field over the cell centers, then max of the pointwise min
double grid_oracle_radius(const std::vector<Point2>& pts, const ConvexPolygon& hull, int N,
                          double* cell_diag) {
    BBox box = hull.bounding_box();
    double dx = box.width() / N;
    double dy = box.height() / N;
    *cell_diag = std::hypot(dx, dy);

    static std::vector<double> site_d2, edge_d;
    site_d2.assign(static_cast<std::size_t>(N) * N, std::numeric_limits<double>::infinity());
    edge_d.assign(static_cast<std::size_t>(N) * N, std::numeric_limits<double>::infinity());

    std::vector<double> xs(N), ys(N);
    for (int i = 0; i < N; ++i) xs[i] = box.lo.x + (i + 0.5) * dx;
    for (int i = 0; i < N; ++i) ys[i] = box.lo.y + (i + 0.5) * dy;

    std::vector<double> col(N);
    for (const Point2& s : pts) {
        for (int ix = 0; ix < N; ++ix) {
            double d = xs[ix] - s.x;
            col[ix] = d * d;
        }
        for (int iy = 0; iy < N; ++iy) {
            double dyy = ys[iy] - s.y;
            double dy2 = dyy * dyy;
            double* row = site_d2.data() + static_cast<std::size_t>(iy) * N;
            for (int ix = 0; ix < N; ++ix) {
                double d2 = col[ix] + dy2;
                if (d2 < row[ix]) row[ix] = d2;
            }
        }
    }

    const auto& v = hull.vertices();
    const std::size_t m = v.size();
    for (std::size_t e = 0; e < m; ++e) {
        Point2 a = v[e];
        Point2 dvec = v[(e + 1) % m] - a;
        double len = norm(dvec);
        double nx = -dvec.y / len, ny = dvec.x / len; // inward
        double c0 = nx * a.x + ny * a.y;
        for (int ix = 0; ix < N; ++ix) col[ix] = nx * xs[ix] - c0;
        for (int iy = 0; iy < N; ++iy) {
            double base = ny * ys[iy];
            double* row = edge_d.data() + static_cast<std::size_t>(iy) * N;
            for (int ix = 0; ix < N; ++ix) {
                double d = col[ix] + base;
                if (d < row[ix]) row[ix] = d;
            }
        }
    }

    double best = -1.0;
    for (std::size_t i = 0; i < site_d2.size(); ++i) {
        double bd = edge_d[i];
        if (bd < 0.0) continue; // outside the hull
        double g = std::min(std::sqrt(site_d2[i]), bd);
        if (g > best) best = g;
    }
    return best;
}

Outcome oracle_criterion() {
    Outcome out;
    double worst = 0.0;
    int fails = 0;
    for (int inst = 0; inst < 100; ++inst) {
        Rng rng(1000 + inst);
        int n = 10 + static_cast<int>(rng.next_u64() % 41);
        std::vector<Point2> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) pts.push_back({rng.uniform01(), rng.uniform01()});
        ConvexPolygon hull = convex_hull(pts);
        ConvexRegion region = ConvexRegion::polygon(hull);

        EmptyBall ball = largest_empty_ball(pts, region);
        double diag;
        double grid_r = grid_oracle_radius(pts, hull, 2000, &diag);
        double err = std::fabs(ball.radius - grid_r);
        double tol = 2.0 * diag + 1e-4 * region.diameter();
        worst = std::max(worst, err / tol);
        if (err > tol) ++fails;
    }
    out.require(fails == 0,
                "100 instances vs 2000x2000 grid, worst err/tol=" + fmt(worst));
    return out;
}

// --- criterion 3: Gumbel limit on the disk --------------------------------

Outcome limit_criterion() {
    Outcome out;
    StudyConfig cfg;
    cfg.kind = StudyKind::limit;
    cfg.shapes = {ShapeSpec::disk(1.0)};
    cfg.sample_sizes = {2000};
    cfg.replications = 1000;
    cfg.master_seed = 20260801;
    cfg.workers = 1;
    EcdfReport rep = run_limit_study(cfg);
    double band_median = median(rep.band_values);
    out.require(rep.ks_to_gumbel <= 0.08, "KS=" + fmt(rep.ks_to_gumbel));
    out.require(band_median >= 1.0 && band_median <= 3.0,
                "band median=" + fmt(band_median));
    return out;
}

// --- criterion 4: asymptotic level on a smooth convex support -------------

Outcome level_criterion() {
    Outcome out;
    StudyConfig cfg;
    cfg.kind = StudyKind::level;
    cfg.shapes = {ShapeSpec::disk(1.0)};
    cfg.sample_sizes = {1000};
    cfg.replications = 1000;
    cfg.gamma = 0.05;
    cfg.methods = {TestMethod::semi_parametric};
    cfg.master_seed = 20260802;
    cfg.workers = 1;
    PowerTable t = run_power_study(cfg);
    double rate = t.rows[0].proportion;
    out.require(rate >= 0.02 && rate <= 0.09, "rejection rate=" + fmt(rate));
    return out;
}

// --- criteria 5-7: notched-square and curved-shape power tables ------------

double power_cell(const ShapeSpec& shape, int n, TestMethod method, int B,
                  std::uint64_t seed) {
    StudyConfig cfg;
    cfg.kind = StudyKind::power;
    cfg.shapes = {shape};
    cfg.sample_sizes = {n};
    cfg.replications = B;
    cfg.gamma = 0.05;
    cfg.methods = {method};
    cfg.master_seed = seed;
    cfg.workers = 1;
    return run_power_study(cfg).rows[0].proportion;
}

Outcome notched_square_power_criterion() {
    Outcome out;
    const int B = 1000;
    const auto semi = TestMethod::semi_parametric;

    double p1 = power_cell(ShapeSpec::square_minus_triangle(kPi / 4.0), 200, semi, B, 11);
    out.require(std::fabs(p1 - 0.946) <= 0.10, "phi=pi/4,n=200: " + fmt(p1));

    double p2 = power_cell(ShapeSpec::square_minus_triangle(kPi / 4.0), 300, semi, B, 12);
    out.require(p2 >= 0.95, "phi=pi/4,n=300: " + fmt(p2));

    double p3 = power_cell(ShapeSpec::square_minus_triangle(kPi / 6.0), 500, semi, B, 13);
    out.require(p3 >= 0.95, "phi=pi/6,n=500: " + fmt(p3));

    double p4 = power_cell(ShapeSpec::square_minus_triangle(kPi / 8.0), 300, semi, B, 14);
    out.require(std::fabs(p4 - 0.543) <= 0.15, "phi=pi/8,n=300: " + fmt(p4));
    return out;
}

Outcome curved_uniform_power_criterion() {
    Outcome out;
    const int B = 100;
    const auto np = TestMethod::nonparametric;
    const double inf = std::numeric_limits<double>::infinity();

    double p1 = power_cell(ShapeSpec::s_shape(1.5, NoiseSpec::uniform()), 250, np, B, 21);
    out.require(p1 >= 0.95, "R=1.5,N=250: " + fmt(p1));

    double p2 = power_cell(ShapeSpec::s_shape(3.0, NoiseSpec::uniform()), 250, np, B, 22);
    out.require(p2 >= 0.95, "R=3,N=250: " + fmt(p2));

    double p3 = power_cell(ShapeSpec::s_shape(inf, NoiseSpec::uniform()), 500, np, B, 23);
    out.require(p3 <= 0.10, "R=inf,N=500: " + fmt(p3));
    return out;
}

Outcome curved_tnormal_power_criterion() {
    Outcome out;
    const int B = 100;
    const auto np = TestMethod::nonparametric;

    double p1 = power_cell(ShapeSpec::s_shape(1.0, NoiseSpec::truncated_normal()), 100, np, B, 31);
    out.require(p1 >= 0.9, "R=1,N=100: " + fmt(p1));

    double p2 = power_cell(ShapeSpec::s_shape(3.0, NoiseSpec::truncated_normal()), 250, np, B, 32);
    out.require(p2 >= 0.9, "R=3,N=250: " + fmt(p2));
    return out;
}

// --- criterion 8: invariance and stability --------------------------------

Outcome invariance_criterion() {
    Outcome out;

    double worst_rel = 0.0;
    Rng trng(808);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(4000 + seed);
        Sample s = sample_region(ConvexRegion::disk({0, 0}, 1.0), 120, rng);
        SpacingStatistics base = semi_parametric_statistic(s);
        for (int rep = 0; rep < 20; ++rep) {
            double theta = trng.uniform(0.0, 2.0 * kPi);
            double scale = std::exp(trng.uniform(std::log(0.25), std::log(4.0)));
            double c = scale * std::cos(theta), sn = scale * std::sin(theta);
            Point2 shift{trng.uniform(-5, 5), trng.uniform(-5, 5)};
            Sample t;
            t.points.reserve(s.points.size());
            for (const Point2& p : s.points) {
                t.points.push_back({c * p.x - sn * p.y + shift.x, sn * p.x + c * p.y + shift.y});
            }
            SpacingStatistics st = semi_parametric_statistic(t);
            worst_rel = std::max(worst_rel, std::fabs(st.V - base.V) / base.V);
        }
    }
    out.require(worst_rel <= 1e-9, "20 transforms x 5 datasets, worst rel dev=" + fmt(worst_rel));

    double worst_excess = -1.0;
    for (double eps : {1e-3, 1e-2}) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Rng rng(5000 + seed);
            Sample s = sample_region(ConvexRegion::rectangle({0, 0}, 1, 1), 60, rng);
            ConvexRegion region = ConvexRegion::polygon(convex_hull(s.points));
            EmptyBall base = largest_empty_ball(s.points, region);

            std::vector<Point2> moved;
            for (const Point2& p : s.points) {
                double ang = rng.uniform(0.0, 2.0 * kPi);
                double rad = eps * std::sqrt(rng.uniform01());
                moved.push_back({p.x + rad * std::cos(ang), p.y + rad * std::sin(ang)});
            }
            ConvexRegion moved_region = ConvexRegion::polygon(convex_hull(moved));
            EmptyBall shifted = largest_empty_ball(moved, moved_region);
            double excess = std::fabs(shifted.radius - base.radius) -
                            (2.0 * eps + 1e-6 * region.diameter());
            worst_excess = std::max(worst_excess, excess);
        }
    }
    out.require(worst_excess <= 0.0,
                "perturbation stability, worst excess=" + fmt(worst_excess));
    return out;
}

// --- criterion 9: constant-density reduction ------------------------------

Outcome reduction_criterion() {
    Outcome out;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Rng rng(6000 + seed);
        int n = 20 + static_cast<int>(rng.next_u64() % 120);
        Sample s = sample_region(ConvexRegion::disk({0, 0}, 1.0), n, rng);
        SpacingStatistics semi = semi_parametric_statistic(s);

        DedupResult dd = dedup_points(s.points);
        ConvexPolygon hull = convex_hull(dd.points);
        DensityEstimate dens = DensityEstimate::constant(s, 1.0 / hull.area());
        LimitParams params = LimitParams::for_sample(static_cast<int>(dd.points.size()), 2,
                                                     alpha_ball(2));
        SpacingStatistics np = weighted_spacing(s, hull, dens, params);
        worst = std::max(worst, std::fabs(np.V - semi.V) / std::max(1.0, semi.V));
    }
    out.require(worst <= 1e-12, "50 datasets, worst |dV|=" + fmt(worst));
    return out;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"1 constants: alpha_cube / alpha_ball closed forms", constants_criterion},
        {"2 largest-empty-ball solver vs brute-force grid", oracle_criterion},
        {"3 Gumbel limit on the unit disk (n=2000, B=1000)", limit_criterion},
        {"4 semi-parametric level on the disk (n=1000, B=1000)", level_criterion},
        {"5 notched-square power table (semi, B=1000)", notched_square_power_criterion},
        {"6 curved-shape power, uniform noise (np, B=100)", curved_uniform_power_criterion},
        {"7 curved-shape power, truncated normal (np, B=100)", curved_tnormal_power_criterion},
        {"8 similarity invariance and perturbation stability", invariance_criterion},
        {"9 constant-density reduction identity", reduction_criterion},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = e.fn();
        } catch (const std::exception& ex) {
            out.pass = false;
            out.detail = std::string("exception: ") + ex.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s — %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", e.name,
                    out.detail.c_str(), secs);
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
