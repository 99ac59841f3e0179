// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "maxspace/predicates.hpp"

#include <cmath>
#include <vector>

namespace maxspace {
namespace {

// Error-free transformations (Dekker/Knuth). `two_sum` and `two_diff` are
// unconditional; `two_prod` uses Veltkamp splitting so no FMA is required.

constexpr double kSplitter = 134217729.0; // 2^27 + 1

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double bv = s - a;
    double av = s - bv;
    e = (a - av) + (b - bv);
}

inline void fast_two_sum(double a, double b, double& s, double& e) {
    // requires |a| >= |b|
    s = a + b;
    e = b - (s - a);
}

inline void two_diff(double a, double b, double& s, double& e) {
    s = a - b;
    double bv = a - s;
    double av = s + bv;
    e = (a - av) - (b - bv);
}

inline void split(double a, double& hi, double& lo) {
    double c = kSplitter * a;
    hi = c - (c - a);
    lo = a - hi;
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    double ahi, alo, bhi, blo;
    split(a, ahi, alo);
    split(b, bhi, blo);
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
}

// A nonoverlapping expansion ordered by increasing magnitude. Operations
// follow Shewchuk's GROW-EXPANSION / SCALE-EXPANSION; exact as long as the
// inputs are nonoverlapping, which all constructors below guarantee.
using Expansion = std::vector<double>;

Expansion make2(double lo, double hi) { return {lo, hi}; }

Expansion grow(const Expansion& e, double b) {
    Expansion h;
    h.reserve(e.size() + 1);
    double q = b;
    for (double ei : e) {
        double s, err;
        two_sum(q, ei, s, err);
        h.push_back(err);
        q = s;
    }
    h.push_back(q);
    return h;
}

Expansion add(const Expansion& e, const Expansion& f) {
    Expansion h = e;
    for (double fi : f) h = grow(h, fi);
    return h;
}

Expansion scale(const Expansion& e, double b) {
    if (e.empty()) return {};
    Expansion h;
    h.reserve(2 * e.size());
    double q, err;
    two_prod(e[0], b, q, err);
    h.push_back(err);
    for (std::size_t i = 1; i < e.size(); ++i) {
        double t, terr;
        two_prod(e[i], b, t, terr);
        double q2, e2;
        two_sum(q, terr, q2, e2);
        h.push_back(e2);
        double q3, e3;
        fast_two_sum(t, q2, q3, e3);
        h.push_back(e3);
        q = q3;
    }
    h.push_back(q);
    return h;
}

Expansion mul(const Expansion& e, const Expansion& f) {
    Expansion acc;
    for (double fi : f) acc = add(acc, scale(e, fi));
    return acc;
}

Expansion negate(Expansion e) {
    for (double& v : e) v = -v;
    return e;
}

int sign_of(const Expansion& e) {
    for (std::size_t i = e.size(); i-- > 0;) {
        if (e[i] > 0.0) return 1;
        if (e[i] < 0.0) return -1;
    }
    return 0;
}

Expansion diff_expansion(double a, double b) {
    double s, e;
    two_diff(a, b, s, e);
    return make2(e, s);
}

int orient2d_exact(double ax, double ay, double bx, double by, double cx, double cy) {
    Expansion acx = diff_expansion(ax, cx);
    Expansion acy = diff_expansion(ay, cy);
    Expansion bcx = diff_expansion(bx, cx);
    Expansion bcy = diff_expansion(by, cy);
    Expansion det = add(mul(acx, bcy), negate(mul(acy, bcx)));
    return sign_of(det);
}

int incircle_exact(double ax, double ay, double bx, double by, double cx, double cy,
                   double dx, double dy) {
    Expansion adx = diff_expansion(ax, dx);
    Expansion ady = diff_expansion(ay, dy);
    Expansion bdx = diff_expansion(bx, dx);
    Expansion bdy = diff_expansion(by, dy);
    Expansion cdx = diff_expansion(cx, dx);
    Expansion cdy = diff_expansion(cy, dy);

    Expansion alift = add(mul(adx, adx), mul(ady, ady));
    Expansion blift = add(mul(bdx, bdx), mul(bdy, bdy));
    Expansion clift = add(mul(cdx, cdx), mul(cdy, cdy));

    Expansion bxcy = add(mul(bdx, cdy), negate(mul(cdx, bdy)));
    Expansion cxay = add(mul(cdx, ady), negate(mul(adx, cdy)));
    Expansion axby = add(mul(adx, bdy), negate(mul(bdx, ady)));

    Expansion det = add(add(mul(alift, bxcy), mul(blift, cxay)), mul(clift, axby));
    return sign_of(det);
}

// Static filter constants (Shewchuk, "Adaptive Precision Floating-Point
// Arithmetic and Fast Robust Geometric Predicates").
constexpr double kEps = 1.1102230246251565e-16; // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

} // namespace

int orient2d(double ax, double ay, double bx, double by, double cx, double cy) {
    double detleft = (ax - cx) * (by - cy);
    double detright = (ay - cy) * (bx - cx);
    double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = -detleft - detright;
    } else {
        return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    }
    double errbound = kCcwErrBound * detsum;
    if (det >= errbound) return 1;
    if (-det >= errbound) return -1;
    return orient2d_exact(ax, ay, bx, by, cx, cy);
}

int incircle(double ax, double ay, double bx, double by, double cx, double cy,
             double dx, double dy) {
    double adx = ax - dx, ady = ay - dy;
    double bdx = bx - dx, bdy = by - dy;
    double cdx = cx - dx, cdy = cy - dy;

    double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    double cdxady = cdx * ady, adxcdy = adx * cdy;
    double adxbdy = adx * bdy, bdxady = bdx * ady;
    double alift = adx * adx + ady * ady;
    double blift = bdx * bdx + bdy * bdy;
    double clift = cdx * cdx + cdy * cdy;

    double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                 clift * (adxbdy - bdxady);
    double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                       (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                       (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    double errbound = kIccErrBound * permanent;
    if (det > errbound) return 1;
    if (-det > errbound) return -1;
    return incircle_exact(ax, ay, bx, by, cx, cy, dx, dy);
}

int dot_sign(double px, double py, double ax, double ay, double bx, double by) {
    double d = (px - ax) * (bx - ax) + (py - ay) * (by - ay);
    double mag = std::fabs((px - ax) * (bx - ax)) + std::fabs((py - ay) * (by - ay));
    double errbound = kCcwErrBound * mag;
    if (d > errbound) return 1;
    if (-d > errbound) return -1;

    Expansion pax = diff_expansion(px, ax);
    Expansion pay = diff_expansion(py, ay);
    Expansion bax = diff_expansion(bx, ax);
    Expansion bay = diff_expansion(by, ay);
    return sign_of(add(mul(pax, bax), mul(pay, bay)));
}

} // namespace maxspace
