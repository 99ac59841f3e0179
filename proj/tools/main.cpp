// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "cli_io.hpp"
#include "maxspace/convexity.hpp"
#include "maxspace/sampling.hpp"
#include "maxspace/spacing.hpp"
#include "maxspace/studies.hpp"

namespace {

using namespace maxspace;

std::uint64_t env_seed_or(std::uint64_t fallback) {
    const char* env = std::getenv("MAXSPACE_SEED");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env) return fallback;
    return v;
}

struct CommonOpts {
    std::string input;
    std::string output;
    std::string out_format = "json";
    std::string method = "semi";
    std::string kernel = "gaussian";
    std::string noise = "uniform";
    std::string shape = "disk";
    std::string phi_text = "pi/4";
    std::string radius_text = "1.5";
    double gamma = 0.05;
    double h0 = 1.0;
    std::vector<int> sizes;
    int n = 100;
    int reps = 100;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(output);
    if (!f) throw ParseError("cannot open output file: " + output);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

KernelSpec kernel_of(const std::string& name) {
    if (name == "gaussian") return KernelSpec::gaussian();
    if (name == "uniform") return KernelSpec::uniform();
    throw InvalidParams("unknown kernel: " + name);
}

NoiseSpec noise_of(const std::string& name) {
    if (name == "uniform") return NoiseSpec::uniform();
    if (name == "tnormal") return NoiseSpec::truncated_normal();
    throw InvalidParams("unknown noise kind: " + name);
}

ShapeSpec shape_of(const CommonOpts& o) {
    if (o.shape == "disk") return ShapeSpec::disk(1.0);
    if (o.shape == "square") return ShapeSpec::unit_square();
    if (o.shape == "rect") {
        // the rectangle limit of the curved benchmark family
        constexpr double kPi = 3.14159265358979323846;
        return ShapeSpec::rectangle({-0.75 * kPi, -0.6}, 1.5 * kPi, 1.2);
    }
    if (o.shape == "smt") {
        return ShapeSpec::square_minus_triangle(cli::parse_angle(o.phi_text));
    }
    if (o.shape == "sshape") {
        return ShapeSpec::s_shape(cli::parse_radius(o.radius_text), noise_of(o.noise));
    }
    throw InvalidParams("unknown shape: " + o.shape);
}

int run_stat(const CommonOpts& o) {
    Sample s = cli::read_csv_file(o.input);
    SpacingStatistics st = semi_parametric_statistic(s);
    emit(cli::to_json(st, o.seed), o.output);
    std::cerr << "n=" << st.params.n << " R=" << st.R << " V=" << st.V << " U=" << st.U
              << " hull_area=" << st.support_area << "\n";
    return 0;
}

int run_test(const CommonOpts& o) {
    Sample s = cli::read_csv_file(o.input);
    TestResult r;
    if (o.method == "semi") {
        r = test_semi_parametric(s, o.gamma);
    } else if (o.method == "np") {
        r = test_nonparametric(s, o.gamma, kernel_of(o.kernel), BandwidthSpec::scaled(o.h0));
    } else {
        throw InvalidParams("unknown method: " + o.method);
    }
    emit(cli::to_json(r, o.seed), o.output);
    std::cerr << to_string(r.method) << " test at gamma=" << r.gamma_level << ": "
              << (r.reject ? "reject convexity" : "no rejection") << " (statistic=" << r.statistic
              << ", critical=" << r.critical << ", p=" << r.p_value << "); " << r.level_note
              << "\n";
    return 0;
}

int run_simulate(const CommonOpts& o) {
    ShapeSpec shape = shape_of(o);
    Rng rng(o.seed);
    Sample s = shape.draw(o.n, rng);
    emit(cli::to_csv(s), o.output);
    std::cerr << "generated " << s.points.size() << " points on " << shape.label()
              << " (proposals=" << s.proposals << ", seed=" << o.seed << ")\n";
    return 0;
}

int run_power(const CommonOpts& o) {
    StudyConfig cfg;
    cfg.kind = StudyKind::power;
    cfg.shapes = {shape_of(o)};
    cfg.sample_sizes = o.sizes.empty() ? std::vector<int>{o.n} : o.sizes;
    cfg.replications = o.reps;
    cfg.gamma = o.gamma;
    cfg.methods.clear();
    if (o.method == "semi") {
        cfg.methods = {TestMethod::semi_parametric};
    } else if (o.method == "np") {
        cfg.methods = {TestMethod::nonparametric};
    } else if (o.method == "both") {
        cfg.methods = {TestMethod::semi_parametric, TestMethod::nonparametric};
    } else {
        throw InvalidParams("unknown method: " + o.method);
    }
    cfg.kernel = kernel_of(o.kernel);
    cfg.bandwidth = BandwidthSpec::scaled(o.h0);
    cfg.master_seed = o.seed;
    cfg.workers = std::max(1, o.workers);

    PowerTable table = run_power_study(cfg);
    emit(o.out_format == "csv" ? cli::to_csv(table) : cli::to_json(table, cfg.gamma), o.output);
    std::cerr << "power study done in " << table.wall_ms / 1000.0 << " s (config "
              << table.config_hash << ")\n";
    return 0;
}

int run_limit(const CommonOpts& o) {
    StudyConfig cfg;
    cfg.kind = StudyKind::limit;
    cfg.shapes = {shape_of(o)};
    cfg.sample_sizes = {o.n};
    cfg.replications = o.reps;
    cfg.gamma = o.gamma;
    cfg.master_seed = o.seed;
    cfg.workers = std::max(1, o.workers);

    EcdfReport rep = run_limit_study(cfg);
    emit(o.out_format == "csv" ? cli::to_csv(rep) : cli::to_json(rep), o.output);
    std::cerr << "limit study: KS=" << rep.ks_to_gumbel
              << " band_median=" << median(rep.band_values) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    int rc = 0;
    CLI::App app{"maximal-spacing statistics and support-convexity tests"};
    app.require_subcommand(1);

    CommonOpts o;
    o.seed = env_seed_or(1);

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "master seed (fallback: MAXSPACE_SEED, then 1)");
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out_format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", o.output, "output file (default stdout)");
    };
    auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("--shape", o.shape, "disk | square | rect | smt | sshape")
            ->check(CLI::IsMember({"disk", "square", "rect", "smt", "sshape"}));
        cmd->add_option("--phi", o.phi_text, "triangle apex angle (radians; accepts pi/4)");
        cmd->add_option("--R", o.radius_text, "curl radius of the S-shape (accepts inf)");
        cmd->add_option("--noise", o.noise, "S-shape radial noise")
            ->check(CLI::IsMember({"uniform", "tnormal"}));
    };

    CLI::App* stat = app.add_subcommand("stat", "spacing statistics of a CSV sample");
    stat->add_option("--input", o.input, "CSV file with x,y rows ('-' for stdin)")->required();
    add_seed(stat);
    stat->add_option("--output", o.output, "output file (default stdout)");
    stat->callback([&]() { rc = run_stat(o); });

    CLI::App* test = app.add_subcommand("test", "support-convexity test of a CSV sample");
    test->add_option("--input", o.input, "CSV file with x,y rows ('-' for stdin)")->required();
    test->add_option("--method", o.method, "semi | np")->check(CLI::IsMember({"semi", "np"}));
    test->add_option("--gamma", o.gamma, "test level in (0, 1)");
    test->add_option("--kernel", o.kernel, "np kernel")
        ->check(CLI::IsMember({"gaussian", "uniform"}));
    test->add_option("--h0", o.h0, "np bandwidth prefactor");
    add_seed(test);
    test->add_option("--output", o.output, "output file (default stdout)");
    test->callback([&]() { rc = run_test(o); });

    CLI::App* sim = app.add_subcommand("simulate", "draw a sample and emit CSV");
    add_shape(sim);
    sim->add_option("--n", o.n, "sample size")->required();
    add_seed(sim);
    sim->add_option("--output", o.output, "output file (default stdout)");
    sim->callback([&]() { rc = run_simulate(o); });

    CLI::App* power = app.add_subcommand("power", "Monte Carlo rejection-rate study");
    add_shape(power);
    power->add_option("--n", o.sizes, "sample sizes (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    power->add_option("--reps", o.reps, "replications per cell");
    power->add_option("--gamma", o.gamma, "test level");
    power->add_option("--method", o.method, "semi | np | both")
        ->check(CLI::IsMember({"semi", "np", "both"}));
    power->add_option("--kernel", o.kernel, "np kernel")
        ->check(CLI::IsMember({"gaussian", "uniform"}));
    power->add_option("--h0", o.h0, "np bandwidth prefactor");
    power->add_option("--workers", o.workers, "worker threads");
    add_seed(power);
    add_out(power);
    power->callback([&]() { rc = run_power(o); });

    CLI::App* limit = app.add_subcommand("limit", "Gumbel-limit validation on a known support");
    add_shape(limit);
    limit->add_option("--n", o.n, "sample size")->required();
    limit->add_option("--reps", o.reps, "replications");
    limit->add_option("--workers", o.workers, "worker threads");
    add_seed(limit);
    add_out(limit);
    limit->callback([&]() { rc = run_limit(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const maxspace::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidShape& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidBandwidth& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidDimension& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroSpread& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // degenerate geometry or numerical failure
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
