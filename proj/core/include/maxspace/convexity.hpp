// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_CONVEXITY_HPP
#define MAXSPACE_CONVEXITY_HPP

#include <optional>
#include <string>

#include "maxspace/spacing.hpp"

namespace maxspace {

enum class TestMethod { semi_parametric, nonparametric };

const char* to_string(TestMethod m);

/// Outcome of a support-convexity test. `reject` means the support is
/// declared non-convex at level gamma. The p-value is asymptotic (Gumbel);
/// for general supports the level is an upper bound, see `level_note`.
struct TestResult {
    TestMethod method = TestMethod::semi_parametric;
    double statistic = 0.0;    // hull-normalized spacing measure
    double critical = 0.0;     // c_{n,gamma}
    double u_value = 0.0;
    double p_value = 1.0;
    bool reject = false;
    double gamma_level = 0.05;
    EmptyBall witness;
    double hull_area = 0.0;
    double R = 0.0;
    int n = 0;
    std::optional<double> bandwidth;
    const char* level_note = "";
};

/// Convexity test for a sample presumed uniform on its support. Rejects when
/// the statistic strictly exceeds c_{n,gamma}; exact asymptotic level for
/// smooth convex supports, conservative otherwise.
TestResult test_semi_parametric(const Sample& points, double gamma_level);

/// Convexity test with unknown density, using the Voronoi-max plug-in.
/// Rejects when the statistic reaches c_{n,gamma} (closed critical region).
TestResult test_nonparametric(const Sample& points, double gamma_level, const KernelSpec& kernel,
                              const BandwidthSpec& bw);

/// Nonparametric test with a caller-supplied density estimate.
TestResult test_nonparametric_with_density(const Sample& points, double gamma_level,
                                           const DensityEstimate& dens);

} // namespace maxspace

#endif
