// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "maxspace/studies.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

namespace maxspace {

void StudyConfig::validate() const {
    if (shapes.empty()) throw InvalidParams("study needs at least one shape");
    if (sample_sizes.empty()) throw InvalidParams("study needs at least one sample size");
    for (int n : sample_sizes) {
        if (n < 3) throw InvalidParams("sample sizes must be >= 3");
    }
    if (replications < 1) throw InvalidParams("replications must be >= 1");
    if (!(gamma > 0.0) || !(gamma < 1.0)) throw InvalidParams("gamma must lie in (0, 1)");
    if (methods.empty()) throw InvalidParams("study needs at least one method");
    if (workers < 1) throw InvalidParams("workers must be >= 1");
    if (kind == StudyKind::limit) {
        for (const ShapeSpec& s : shapes) {
            if (!s.is_convex_support()) {
                throw InvalidParams("limit study requires a known convex support");
            }
        }
    }
}

std::string StudyConfig::hash() const {
    std::string text;
    text += std::to_string(static_cast<int>(kind)) + "|";
    for (const ShapeSpec& s : shapes) text += s.label() + ";";
    text += "|";
    for (int n : sample_sizes) text += std::to_string(n) + ",";
    text += "|" + std::to_string(replications) + "|" + std::to_string(gamma) + "|";
    for (TestMethod m : methods) text += to_string(m) + std::string(",");
    text += "|" + std::to_string(static_cast<int>(kernel.kind)) + "|" +
            std::to_string(static_cast<int>(bandwidth.rule)) + ":" +
            std::to_string(bandwidth.value) + "|" + std::to_string(master_seed);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

// static round-robin over a flat index space; results land in preallocated
// slots so the merge order is fixed by index, not completion order
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    workers = std::max(1, std::min(workers, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < count; i += workers) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

} // namespace

PowerTable run_power_study(const StudyConfig& cfg) {
    cfg.validate();
    auto t_start = std::chrono::steady_clock::now();

    struct Cell {
        int shape_idx;
        int n;
    };
    std::vector<Cell> cells;
    for (std::size_t s = 0; s < cfg.shapes.size(); ++s) {
        for (int n : cfg.sample_sizes) cells.push_back({static_cast<int>(s), n});
    }

    const int B = cfg.replications;
    const int total = static_cast<int>(cells.size()) * B;
    // rejects[task * methods + m]
    std::vector<unsigned char> rejects(static_cast<std::size_t>(total) * cfg.methods.size(), 0);

    parallel_for(total, cfg.workers, [&](int task) {
        int cell_idx = task / B;
        int rep = task % B;
        const Cell& cell = cells[cell_idx];
        Rng rng(cfg.master_seed,
                static_cast<std::uint64_t>(cell_idx) * static_cast<std::uint64_t>(B) + rep);
        Sample sample = cfg.shapes[cell.shape_idx].draw(cell.n, rng);
        for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
            TestResult r;
            if (cfg.methods[m] == TestMethod::semi_parametric) {
                r = test_semi_parametric(sample, cfg.gamma);
            } else {
                r = test_nonparametric(sample, cfg.gamma, cfg.kernel, cfg.bandwidth);
            }
            rejects[static_cast<std::size_t>(task) * cfg.methods.size() + m] = r.reject ? 1 : 0;
        }
    });

    PowerTable table;
    table.seed = cfg.master_seed;
    table.config_hash = cfg.hash();
    for (std::size_t c = 0; c < cells.size(); ++c) {
        for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
            int k = 0;
            for (int rep = 0; rep < B; ++rep) {
                k += rejects[(c * B + rep) * cfg.methods.size() + m];
            }
            PowerRow row;
            row.shape = cfg.shapes[cells[c].shape_idx].label();
            row.n = cells[c].n;
            row.method = cfg.methods[m];
            row.rejections = k;
            row.replications = B;
            row.proportion = static_cast<double>(k) / B;
            row.std_error = std::sqrt(row.proportion * (1.0 - row.proportion) / B);
            table.rows.push_back(std::move(row));
        }
    }
    table.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              t_start)
                        .count();
    return table;
}

EcdfReport run_limit_study(const StudyConfig& cfg) {
    cfg.validate();
    if (cfg.kind != StudyKind::limit) throw InvalidParams("config kind must be limit");
    if (cfg.shapes.size() != 1 || cfg.sample_sizes.size() != 1) {
        throw InvalidParams("limit study takes a single shape and sample size");
    }
    const ShapeSpec& shape = cfg.shapes[0];
    const int n = cfg.sample_sizes[0];
    const int B = cfg.replications;
    ConvexRegion region = shape.as_region();
    LimitParams params = LimitParams::for_sample(n, 2, alpha_ball(2), cfg.gamma);

    EcdfReport rep;
    rep.n = n;
    rep.replications = B;
    rep.seed = cfg.master_seed;
    rep.u_values.resize(B);
    rep.band_values.resize(B);

    double loglog_n = std::log(std::log(static_cast<double>(n)));
    parallel_for(B, cfg.workers, [&](int r) {
        Rng rng(cfg.master_seed, static_cast<std::uint64_t>(r));
        Sample s = sample_region(region, n, rng);
        SpacingStatistics st = uniform_spacing(s.points, region, params);
        rep.u_values[r] = st.U;
        rep.band_values[r] = (n * st.V - std::log(static_cast<double>(n))) / loglog_n;
    });

    std::sort(rep.u_values.begin(), rep.u_values.end());
    rep.ks_to_gumbel = ks_distance_to_gumbel(rep.u_values);
    return rep;
}

double median(std::vector<double> v) {
    if (v.empty()) throw InvalidParams("median of empty vector");
    std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double hi = v[mid];
    if (v.size() % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + mid - 1, v.end());
    return 0.5 * (v[mid - 1] + hi);
}

double ks_distance_to_gumbel(std::vector<double> sorted_values) {
    const std::size_t m = sorted_values.size();
    if (m == 0) throw InvalidParams("KS distance of empty sample");
    double d = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double f = gumbel_cdf(sorted_values[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / m,
                                 static_cast<double>(i + 1) / m - f));
    }
    return d;
}

} // namespace maxspace
