// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "maxspace/convexity.hpp"

namespace maxspace {

namespace {

TestResult finalize(TestMethod method, const SpacingStatistics& st, double gamma_level,
                    bool closed_region) {
    LimitParams p = st.params;
    p.gamma_level = gamma_level;
    TestResult r;
    r.method = method;
    r.statistic = st.V;
    r.critical = critical_value(p);
    r.u_value = st.U;
    r.p_value = 1.0 - gumbel_cdf(st.U);
    r.reject = closed_region ? (st.V >= r.critical) : (st.V > r.critical);
    r.gamma_level = gamma_level;
    r.witness = st.witness;
    r.hull_area = st.support_area;
    r.R = st.R;
    r.n = p.n;
    r.level_note = method == TestMethod::semi_parametric
                       ? "asymptotic level <= gamma; equals gamma for smooth convex supports"
                       : "asymptotic level < gamma";
    return r;
}

void check_gamma(double gamma_level) {
    if (!(gamma_level > 0.0) || !(gamma_level < 1.0)) {
        throw InvalidParams("gamma level must lie in (0, 1)");
    }
}

} // namespace

const char* to_string(TestMethod m) {
    return m == TestMethod::semi_parametric ? "semi_parametric" : "nonparametric";
}

TestResult test_semi_parametric(const Sample& points, double gamma_level) {
    check_gamma(gamma_level);
    SpacingStatistics st = semi_parametric_statistic(points);
    return finalize(TestMethod::semi_parametric, st, gamma_level, /*closed_region=*/false);
}

TestResult test_nonparametric(const Sample& points, double gamma_level, const KernelSpec& kernel,
                              const BandwidthSpec& bw) {
    check_gamma(gamma_level);
    double h = default_bandwidth(points, bw);
    DensityEstimate dens = voronoi_max_estimator(points, h, kernel);
    LimitParams params = LimitParams::for_sample(static_cast<int>(dens.sites().size()), 2,
                                                 alpha_ball(2), gamma_level);
    SpacingStatistics st = weighted_spacing(points, dens.hull(), dens, params);
    TestResult r = finalize(TestMethod::nonparametric, st, gamma_level, /*closed_region=*/true);
    r.bandwidth = h;
    return r;
}

TestResult test_nonparametric_with_density(const Sample& points, double gamma_level,
                                           const DensityEstimate& dens) {
    check_gamma(gamma_level);
    LimitParams params = LimitParams::for_sample(static_cast<int>(dens.sites().size()), 2,
                                                 alpha_ball(2), gamma_level);
    SpacingStatistics st = weighted_spacing(points, dens.hull(), dens, params);
    TestResult r = finalize(TestMethod::nonparametric, st, gamma_level, /*closed_region=*/true);
    if (dens.bandwidth() > 0.0) r.bandwidth = dens.bandwidth();
    return r;
}

} // namespace maxspace
