// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_CONSTANTS_HPP
#define MAXSPACE_CONSTANTS_HPP

#include "maxspace/errors.hpp"

namespace maxspace {

/// Gamma function via a Lanczos approximation (g = 7, 9 terms).
/// Relative accuracy is better than 1e-12 on [0.5, 25].
double gamma_function(double x);

/// Volume of the d-dimensional unit ball, pi^{d/2} / Gamma(d/2 + 1).
double omega(int d);

/// Geometric constant of the unit ball entering the Gumbel centering:
/// (1/d!) * (sqrt(pi) Gamma(d/2+1) / Gamma((d+1)/2))^{d-1}.
double alpha_ball(int d);

/// Geometric constant of the unit cube: exactly 1 in every dimension.
double alpha_cube(int d);

/// Parameters of the limiting Gumbel law for spacing statistics.
struct LimitParams {
    int n = 3;             // sample size, >= 2 (>= 3 for critical values)
    int d = 2;             // dimension, >= 1
    double alpha = 1.0;    // body constant alpha_A, > 0
    double gamma_level = 0.05; // test level in (0, 1)

    void validate() const;
    static LimitParams for_sample(int n, int d, double alpha, double gamma_level = 0.05);
};

/// Critical value
///   c_{n,gamma} = (1/n) (-log(-log(1-gamma)) + log n + (d-1) log log n + log alpha).
/// Natural logarithms throughout; requires n >= 3.
double critical_value(const LimitParams& p);

/// Gumbel CDF exp(-exp(-t)).
double gumbel_cdf(double t);

/// Gumbel quantile -log(-log(q)) for q in (0, 1).
double gumbel_quantile(double q);

/// Normalized spacing statistic
///   u = n V - log n - (d-1) log log n - log alpha.
double u_statistic(int n, double v, int d, double alpha);

} // namespace maxspace

#endif
