// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_STUDIES_HPP
#define MAXSPACE_STUDIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxspace/convexity.hpp"
#include "maxspace/sampling.hpp"

namespace maxspace {

enum class StudyKind { power, level, limit };

/// Configuration of a Monte Carlo study. Replication r of grid cell g
/// (cell = shape x sample size) uses the RNG stream g * replications + r,
/// so results are independent of the worker count.
struct StudyConfig {
    StudyKind kind = StudyKind::power;
    std::vector<ShapeSpec> shapes;
    std::vector<int> sample_sizes;
    int replications = 100;
    double gamma = 0.05;
    std::vector<TestMethod> methods{TestMethod::semi_parametric};
    KernelSpec kernel = KernelSpec::gaussian();
    BandwidthSpec bandwidth = BandwidthSpec::scaled(1.0);
    std::uint64_t master_seed = 1;
    int workers = 1;

    void validate() const;
    std::string hash() const; // FNV-1a over the canonical text form
};

struct PowerRow {
    std::string shape;
    int n = 0;
    TestMethod method = TestMethod::semi_parametric;
    int rejections = 0;
    int replications = 0;
    double proportion = 0.0;
    double std_error = 0.0; // sqrt(p(1-p)/B)
};

struct PowerTable {
    std::vector<PowerRow> rows;
    std::uint64_t seed = 0;
    std::string config_hash;
    double wall_ms = 0.0;
};

/// Rejection proportions over the shape x n grid; deterministic for a fixed
/// seed regardless of `workers`.
PowerTable run_power_study(const StudyConfig& cfg);

struct EcdfReport {
    std::vector<double> u_values;    // sorted
    double ks_to_gumbel = 0.0;
    std::vector<double> band_values; // (n V - log n) / log log n per replication
    int n = 0;
    int replications = 0;
    std::uint64_t seed = 0;
};

/// Distribution of the normalized spacing statistic on a known convex
/// support: Kolmogorov-Smirnov distance of the U sample to the Gumbel CDF
/// plus the law-of-iterated-logarithm band values.
EcdfReport run_limit_study(const StudyConfig& cfg);

/// Median of a non-empty vector (copies, then selects).
double median(std::vector<double> v);

/// Kolmogorov-Smirnov distance of a sample to the Gumbel CDF.
double ks_distance_to_gumbel(std::vector<double> sorted_values);

} // namespace maxspace

#endif
