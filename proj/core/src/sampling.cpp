// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "maxspace/sampling.hpp"

#include <cmath>
#include <limits>

namespace maxspace {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
} // namespace

Rng::Rng(std::uint64_t master_seed, std::uint64_t stream) {
    std::uint64_t s = master_seed ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    engine_.seed(a ^ (b << 1));
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

bool Rng::coin() { return (engine_() & 1ULL) != 0; }

double Rng::normal(double sigma) {
    if (has_spare_) {
        has_spare_ = false;
        return sigma * spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return sigma * u * f;
}

NoiseSpec NoiseSpec::uniform(double bound) {
    if (!(bound > 0.0)) throw InvalidShape("noise bound must be positive");
    NoiseSpec n;
    n.kind = Kind::uniform;
    n.bound = bound;
    return n;
}

NoiseSpec NoiseSpec::truncated_normal(double sigma, double bound) {
    if (!(bound > 0.0) || !(sigma > 0.0)) {
        throw InvalidShape("noise sigma and bound must be positive");
    }
    NoiseSpec n;
    n.kind = Kind::truncated_normal;
    n.sigma = sigma;
    n.bound = bound;
    return n;
}

double truncated_normal_draw(double sigma, double bound, Rng& rng) {
    if (!(sigma > 0.0) || !(bound > 0.0)) {
        throw InvalidShape("truncated normal requires sigma > 0 and bound > 0");
    }
    double v;
    do {
        v = rng.normal(sigma);
    } while (std::fabs(v) > bound);
    return v;
}

namespace {

double radial_noise(const NoiseSpec& noise, Rng& rng) {
    if (noise.kind == NoiseSpec::Kind::uniform) return rng.uniform(-noise.bound, noise.bound);
    return truncated_normal_draw(noise.sigma, noise.bound, rng);
}

// Triangle removed from the unit square: apex (1/2, 1/2), height 1/2, apex
// angle phi, base on y = 0 with vertices (1/2 +- tan(phi/2)/2, 0).
struct Triangle {
    Point2 a, b, c; // CCW

    explicit Triangle(double phi) {
        double w = 0.5 * std::tan(0.5 * phi);
        a = {0.5 - w, 0.0};
        b = {0.5 + w, 0.0};
        c = {0.5, 0.5};
    }

    bool contains_closed(Point2 p) const {
        auto side = [](Point2 u, Point2 v, Point2 q) {
            return cross(v - u, q - u);
        };
        return side(a, b, p) >= 0.0 && side(b, c, p) >= 0.0 && side(c, a, p) >= 0.0;
    }
};

// Angle of q in [0, 2pi).
double angle_of(Point2 q) {
    double t = std::atan2(q.y, q.x);
    return t < 0.0 ? t + 2.0 * kPi : t;
}

bool in_curl(Point2 q, double R, double bound, double theta_min) {
    double r = norm(q);
    if (r < R - bound || r > R + bound) return false;
    double t = angle_of(q);
    return t >= theta_min && t <= 1.5 * kPi;
}

} // namespace

Sample sample_square_minus_triangle(double phi, int n, Rng& rng) {
    if (!(phi > 0.0) || !(phi < kPi)) throw InvalidShape("phi must lie in (0, pi)");
    if (n < 1) throw InvalidShape("sample size must be >= 1");
    Triangle tri(phi);
    Sample s;
    s.provenance = Sample::Provenance::generated;
    s.label = "square_minus_triangle";
    s.points.reserve(n);
    while (static_cast<int>(s.points.size()) < n) {
        ++s.proposals;
        Point2 p{rng.uniform01(), rng.uniform01()};
        if (!tri.contains_closed(p)) s.points.push_back(p);
    }
    return s;
}

Sample sample_s_shape(double R, const NoiseSpec& noise, int n, Rng& rng) {
    bool infinite = std::isinf(R);
    if (!infinite && !(R >= 1.0)) throw InvalidShape("curl radius must be >= 1 or infinite");
    if (n < 1) throw InvalidShape("sample size must be >= 1");

    Sample s;
    s.provenance = Sample::Provenance::generated;
    s.label = "s_shape";
    s.points.reserve(n);

    if (infinite) {
        // rectangle limit [0, 3pi/2] x [-bound, bound], centered at x = 0
        double half_len = 0.75 * kPi;
        for (int i = 0; i < n; ++i) {
            ++s.proposals;
            double x = rng.uniform(-half_len, half_len);
            double y = radial_noise(noise, rng);
            s.points.push_back({x, y});
        }
        return s;
    }

    double theta_min = 1.5 * kPi * (R - 1.0) / R;
    for (int i = 0; i < n; ++i) {
        ++s.proposals;
        bool upper = rng.coin();
        double theta = rng.uniform(theta_min, 1.5 * kPi);
        double u = radial_noise(noise, rng);
        double r = R + u;
        if (upper) {
            s.points.push_back({r * std::cos(theta), r * std::sin(theta) + R});
        } else {
            // reflection along the y axis, then translation by (0, -R)
            s.points.push_back({-r * std::cos(theta), r * std::sin(theta) - R});
        }
    }
    return s;
}

Sample sample_region(const ConvexRegion& region, int n, Rng& rng) {
    if (n < 1) throw InvalidShape("sample size must be >= 1");
    BBox box = region.bounding_box();
    Sample s;
    s.provenance = Sample::Provenance::generated;
    s.label = "region";
    s.points.reserve(n);
    while (static_cast<int>(s.points.size()) < n) {
        ++s.proposals;
        Point2 p{rng.uniform(box.lo.x, box.hi.x), rng.uniform(box.lo.y, box.hi.y)};
        if (region.contains(p)) s.points.push_back(p);
    }
    return s;
}

ShapeSpec ShapeSpec::square_minus_triangle(double phi) {
    if (!(phi > 0.0) || !(phi < kPi)) throw InvalidShape("phi must lie in (0, pi)");
    ShapeSpec s;
    s.kind = Kind::square_minus_triangle;
    s.phi = phi;
    return s;
}

ShapeSpec ShapeSpec::s_shape(double R, NoiseSpec noise) {
    if (!std::isinf(R) && !(R >= 1.0)) throw InvalidShape("curl radius must be >= 1 or infinite");
    ShapeSpec s;
    s.kind = Kind::s_shape;
    s.curl_radius = R;
    s.noise = noise;
    return s;
}

ShapeSpec ShapeSpec::disk(double radius) {
    if (!(radius > 0.0)) throw InvalidShape("disk radius must be positive");
    ShapeSpec s;
    s.kind = Kind::disk;
    s.disk_radius = radius;
    return s;
}

ShapeSpec ShapeSpec::unit_square() {
    ShapeSpec s;
    s.kind = Kind::rectangle;
    s.rect_corner = {0, 0};
    s.rect_w = 1.0;
    s.rect_h = 1.0;
    return s;
}

ShapeSpec ShapeSpec::rectangle(Point2 corner, double w, double h) {
    if (!(w > 0.0) || !(h > 0.0)) throw InvalidShape("rectangle sides must be positive");
    ShapeSpec s;
    s.kind = Kind::rectangle;
    s.rect_corner = corner;
    s.rect_w = w;
    s.rect_h = h;
    return s;
}

ShapeSpec ShapeSpec::polygon(ConvexPolygon p) {
    ShapeSpec s;
    s.kind = Kind::polygon;
    s.poly = std::move(p);
    return s;
}

std::string ShapeSpec::label() const {
    switch (kind) {
        case Kind::square_minus_triangle:
            return "smt(phi=" + std::to_string(phi) + ")";
        case Kind::s_shape: {
            std::string r = std::isinf(curl_radius) ? "inf" : std::to_string(curl_radius);
            std::string nk = noise.kind == NoiseSpec::Kind::uniform ? "uniform" : "tnormal";
            return "sshape(R=" + r + ",noise=" + nk + ")";
        }
        case Kind::disk:
            return "disk(r=" + std::to_string(disk_radius) + ")";
        case Kind::rectangle:
            return "rect(" + std::to_string(rect_w) + "x" + std::to_string(rect_h) + ")";
        case Kind::polygon:
            return "polygon";
    }
    return "?";
}

bool ShapeSpec::contains(Point2 p) const {
    switch (kind) {
        case Kind::square_minus_triangle: {
            if (p.x < 0.0 || p.x > 1.0 || p.y < 0.0 || p.y > 1.0) return false;
            return !Triangle(phi).contains_closed(p);
        }
        case Kind::s_shape: {
            if (std::isinf(curl_radius)) {
                return std::fabs(p.x) <= 0.75 * kPi && std::fabs(p.y) <= noise.bound;
            }
            double tmin = 1.5 * kPi * (curl_radius - 1.0) / curl_radius;
            Point2 upper = {p.x, p.y - curl_radius};
            Point2 lower = {-p.x, p.y + curl_radius};
            return in_curl(upper, curl_radius, noise.bound, tmin) ||
                   in_curl(lower, curl_radius, noise.bound, tmin);
        }
        case Kind::disk:
            return norm(p) <= disk_radius;
        case Kind::rectangle:
            return p.x >= rect_corner.x && p.x <= rect_corner.x + rect_w &&
                   p.y >= rect_corner.y && p.y <= rect_corner.y + rect_h;
        case Kind::polygon:
            return poly.contains(p);
    }
    return false;
}

Sample ShapeSpec::draw(int n, Rng& rng) const {
    switch (kind) {
        case Kind::square_minus_triangle:
            return sample_square_minus_triangle(phi, n, rng);
        case Kind::s_shape:
            return sample_s_shape(curl_radius, noise, n, rng);
        default: {
            Sample s = sample_region(as_region(), n, rng);
            s.label = label();
            return s;
        }
    }
}

ConvexRegion ShapeSpec::as_region() const {
    switch (kind) {
        case Kind::disk:
            return ConvexRegion::disk({0, 0}, disk_radius);
        case Kind::rectangle:
            return ConvexRegion::rectangle(rect_corner, rect_w, rect_h);
        case Kind::polygon:
            return ConvexRegion::polygon(poly);
        default:
            throw InvalidShape("shape has no convex region form");
    }
}

bool ShapeSpec::is_convex_support() const {
    return kind == Kind::disk || kind == Kind::rectangle || kind == Kind::polygon;
}

} // namespace maxspace
