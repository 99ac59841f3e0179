// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_SAMPLING_HPP
#define MAXSPACE_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string>

#include "maxspace/region.hpp"
#include "maxspace/sample.hpp"

namespace maxspace {

/// Deterministic stream RNG: identical (seed, stream) pairs produce bitwise
/// identical sequences on every run and under any parallel schedule. The
/// engine is mt19937_64 (fully specified by the standard); all variates are
/// derived in-repo so no library distribution enters the stream.
class Rng {
public:
    explicit Rng(std::uint64_t master_seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    double uniform01();                  // [0, 1)
    double uniform(double a, double b);  // [a, b)
    bool coin();                         // fair bit
    double normal(double sigma);         // Marsaglia polar

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Radial noise of the curved benchmark shapes: uniform on [-bound, bound]
/// or a centered normal truncated to that interval.
struct NoiseSpec {
    enum class Kind { uniform, truncated_normal };
    Kind kind = Kind::uniform;
    double bound = 0.6;
    double sigma = 0.15;

    static NoiseSpec uniform(double bound = 0.6);
    static NoiseSpec truncated_normal(double sigma = 0.15, double bound = 0.6);
};

/// One draw from a centered normal truncated to [-bound, bound] (rejection).
double truncated_normal_draw(double sigma, double bound, Rng& rng);

/// A benchmark support to sample from.
struct ShapeSpec {
    enum class Kind { square_minus_triangle, s_shape, disk, rectangle, polygon };

    Kind kind = Kind::disk;
    double phi = 0.0;          // apex angle, square_minus_triangle
    double curl_radius = 1.5;  // R of the S-shape; +infinity for the rectangle limit
    NoiseSpec noise{};         // S-shape radial noise
    double disk_radius = 1.0;
    Point2 rect_corner{0, 0};
    double rect_w = 1.0, rect_h = 1.0;
    ConvexPolygon poly;

    static ShapeSpec square_minus_triangle(double phi);
    static ShapeSpec s_shape(double R, NoiseSpec noise);
    static ShapeSpec disk(double radius = 1.0);
    static ShapeSpec unit_square();
    static ShapeSpec rectangle(Point2 corner, double w, double h);
    static ShapeSpec polygon(ConvexPolygon p);

    std::string label() const;
    bool contains(Point2 p) const;
    Sample draw(int n, Rng& rng) const;

    /// Known-support region for limit/level studies; throws InvalidShape for
    /// non-convex shapes.
    ConvexRegion as_region() const;
    bool is_convex_support() const;
};

/// n iid points uniform on the unit square minus the closed isosceles
/// triangle with apex (1/2, 1/2), height 1/2, apex angle phi, base on y = 0.
Sample sample_square_minus_triangle(double phi, int n, Rng& rng);

/// n points along the two mirrored circular curls of curl radius R (or the
/// rectangle limit when R is infinite), with radial noise.
Sample sample_s_shape(double R, const NoiseSpec& noise, int n, Rng& rng);

/// n iid points uniform on a convex region, by rejection from its box.
Sample sample_region(const ConvexRegion& region, int n, Rng& rng);

} // namespace maxspace

#endif
