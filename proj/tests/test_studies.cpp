// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "maxspace/studies.hpp"

using namespace maxspace;

namespace {
constexpr double kPi = 3.14159265358979323846;

StudyConfig small_power_config() {
    StudyConfig cfg;
    cfg.kind = StudyKind::power;
    cfg.shapes = {ShapeSpec::square_minus_triangle(kPi / 4.0), ShapeSpec::disk(1.0)};
    cfg.sample_sizes = {60, 90};
    cfg.replications = 12;
    cfg.gamma = 0.05;
    cfg.methods = {TestMethod::semi_parametric, TestMethod::nonparametric};
    cfg.master_seed = 99;
    cfg.workers = 1;
    return cfg;
}
} // namespace

TEST_CASE("power study is reproducible across worker counts") {
    StudyConfig cfg = small_power_config();
    PowerTable t1 = run_power_study(cfg);
    cfg.workers = 4;
    PowerTable t2 = run_power_study(cfg);
    REQUIRE(t1.rows.size() == t2.rows.size());
    for (std::size_t i = 0; i < t1.rows.size(); ++i) {
        CHECK(t1.rows[i].shape == t2.rows[i].shape);
        CHECK(t1.rows[i].n == t2.rows[i].n);
        CHECK(t1.rows[i].method == t2.rows[i].method);
        CHECK(t1.rows[i].rejections == t2.rows[i].rejections);
        CHECK(t1.rows[i].proportion == t2.rows[i].proportion); // bitwise
    }
    CHECK(t1.config_hash == t2.config_hash);
}

TEST_CASE("power table rows cover the full grid in order") {
    PowerTable t = run_power_study(small_power_config());
    REQUIRE(t.rows.size() == 2 * 2 * 2); // shapes x sizes x methods
    CHECK(t.rows[0].shape == t.rows[1].shape);
    CHECK(t.rows[0].n == 60);
    CHECK(t.rows[2].n == 90);
    for (const PowerRow& r : t.rows) {
        CHECK(r.replications == 12);
        CHECK(r.proportion >= 0.0);
        CHECK(r.proportion <= 1.0);
        CHECK(r.std_error ==
              doctest::Approx(std::sqrt(r.proportion * (1.0 - r.proportion) / 12.0)));
    }
}

TEST_CASE("config hash tracks the inputs") {
    StudyConfig a = small_power_config();
    StudyConfig b = a;
    CHECK(a.hash() == b.hash());
    b.master_seed += 1;
    CHECK(a.hash() != b.hash());
    StudyConfig c = a;
    c.gamma = 0.1;
    CHECK(a.hash() != c.hash());
}

TEST_CASE("study config validation") {
    StudyConfig cfg;
    CHECK_THROWS_AS(cfg.validate(), InvalidParams); // no shapes
    cfg = small_power_config();
    cfg.replications = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);
    cfg = small_power_config();
    cfg.gamma = 1.0;
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);
    cfg = small_power_config();
    cfg.sample_sizes = {2};
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);
    cfg = small_power_config();
    cfg.kind = StudyKind::limit;
    // non-convex shape in a limit study
    CHECK_THROWS_AS(cfg.validate(), InvalidParams);
}

TEST_CASE("limit study on the disk produces a plausible Gumbel sample") {
    StudyConfig cfg;
    cfg.kind = StudyKind::limit;
    cfg.shapes = {ShapeSpec::disk(1.0)};
    cfg.sample_sizes = {300};
    cfg.replications = 60;
    cfg.master_seed = 17;
    cfg.workers = 1;
    EcdfReport rep = run_limit_study(cfg);
    REQUIRE(rep.u_values.size() == 60);
    REQUIRE(rep.band_values.size() == 60);
    CHECK(std::is_sorted(rep.u_values.begin(), rep.u_values.end()));
    CHECK(rep.ks_to_gumbel > 0.0);
    CHECK(rep.ks_to_gumbel < 0.35);
    for (double b : rep.band_values) CHECK(std::isfinite(b));
    double med = median(rep.band_values);
    CHECK(med > 0.0);
    CHECK(med < 4.0);
}

TEST_CASE("KS distance to Gumbel shrinks as n grows") {
    int improved = 0;
    for (int batch = 0; batch < 10; ++batch) {
        StudyConfig cfg;
        cfg.kind = StudyKind::limit;
        cfg.shapes = {ShapeSpec::disk(1.0)};
        cfg.replications = 100;
        cfg.workers = 1;
        cfg.master_seed = 7100 + batch;

        cfg.sample_sizes = {200};
        double ks_small = run_limit_study(cfg).ks_to_gumbel;
        cfg.sample_sizes = {1600};
        double ks_big = run_limit_study(cfg).ks_to_gumbel;
        if (ks_small > ks_big) ++improved;
    }
    CHECK(improved >= 8);
}

TEST_CASE("median helper") {
    CHECK(median({3.0}) == 3.0);
    CHECK(median({1.0, 2.0}) == doctest::Approx(1.5));
    CHECK(median({5.0, 1.0, 9.0}) == 5.0);
    CHECK(median({4.0, 1.0, 3.0, 2.0}) == doctest::Approx(2.5));
}

TEST_CASE("ks distance of a perfect Gumbel grid is small") {
    std::vector<double> q;
    const int m = 1000;
    for (int i = 0; i < m; ++i) {
        double p = (i + 0.5) / m;
        q.push_back(gumbel_quantile(p));
    }
    CHECK(ks_distance_to_gumbel(q) <= 0.5 / m + 1e-12);
}
