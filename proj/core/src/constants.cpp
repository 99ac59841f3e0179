// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "maxspace/constants.hpp"

#include <cmath>

namespace maxspace {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients for g = 7, n = 9 (double precision set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}
} // namespace

double gamma_function(double x) {
    if (x < 0.5) {
        // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
        return kPi / (std::sin(kPi * x) * gamma_function(1.0 - x));
    }
    x -= 1.0;
    double a = kLanczos[0];
    double t = x + kLanczosG + 0.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double omega(int d) {
    if (d < 1) throw InvalidDimension("omega requires d >= 1");
    return std::pow(kPi, 0.5 * d) / gamma_function(0.5 * d + 1.0);
}

double alpha_ball(int d) {
    if (d < 1) throw InvalidDimension("alpha_ball requires d >= 1");
    double ratio = std::sqrt(kPi) * gamma_function(0.5 * d + 1.0) /
                   gamma_function(0.5 * (d + 1.0));
    return std::pow(ratio, d - 1) / factorial(d);
}

double alpha_cube(int d) {
    if (d < 1) throw InvalidDimension("alpha_cube requires d >= 1");
    return 1.0;
}

void LimitParams::validate() const {
    if (n < 2) throw InvalidParams("sample size n must be >= 2");
    if (d < 1) throw InvalidParams("dimension d must be >= 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidParams("alpha must be positive");
    if (!(gamma_level > 0.0) || !(gamma_level < 1.0)) {
        throw InvalidParams("gamma level must lie in (0, 1)");
    }
}

LimitParams LimitParams::for_sample(int n, int d, double alpha, double gamma_level) {
    LimitParams p{n, d, alpha, gamma_level};
    p.validate();
    return p;
}

double critical_value(const LimitParams& p) {
    p.validate();
    if (p.n < 3) throw InvalidParams("critical_value requires n >= 3");
    double loglog_n = std::log(std::log(static_cast<double>(p.n)));
    double q = -std::log(-std::log(1.0 - p.gamma_level));
    return (q + std::log(static_cast<double>(p.n)) + (p.d - 1) * loglog_n +
            std::log(p.alpha)) / p.n;
}

double gumbel_cdf(double t) { return std::exp(-std::exp(-t)); }

double gumbel_quantile(double q) {
    if (!(q > 0.0) || !(q < 1.0)) throw InvalidParams("gumbel_quantile requires q in (0, 1)");
    return -std::log(-std::log(q));
}

double u_statistic(int n, double v, int d, double alpha) {
    if (n < 3) throw InvalidParams("u_statistic requires n >= 3");
    if (d < 1) throw InvalidDimension("u_statistic requires d >= 1");
    if (!(alpha > 0.0)) throw InvalidParams("u_statistic requires alpha > 0");
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidParams("u_statistic requires finite V >= 0");
    return n * v - std::log(static_cast<double>(n)) -
           (d - 1) * std::log(std::log(static_cast<double>(n))) - std::log(alpha);
}

} // namespace maxspace
