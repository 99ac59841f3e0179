// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_PREDICATES_HPP
#define MAXSPACE_PREDICATES_HPP

namespace maxspace {

// Filtered exact geometric predicates. The fast double-precision path is
// guarded by a forward error bound; when the bound cannot certify the sign,
// the determinant is re-evaluated with floating-point expansion arithmetic,
// which is exact for IEEE-754 doubles.

/// Sign of the signed area of triangle (a, b, c):
/// +1 if CCW, -1 if CW, 0 if exactly collinear.
int orient2d(double ax, double ay, double bx, double by, double cx, double cy);

/// Sign of the incircle determinant for CCW triangle (a, b, c) and query d:
/// +1 if d is strictly inside the circumcircle, -1 if strictly outside,
/// 0 if exactly cocircular. For a CW triangle the sign is flipped.
int incircle(double ax, double ay, double bx, double by, double cx, double cy,
             double dx, double dy);

/// Sign of dot(p - a, b - a), computed exactly.
/// > 0 when p projects strictly beyond a toward b.
int dot_sign(double px, double py, double ax, double ay, double bx, double by);

} // namespace maxspace

#endif
