// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#include "cli_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string_view>

namespace maxspace::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool parse_field(std::string_view field, double& out) {
    field = trim(field);
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

Sample read_csv(std::istream& in) {
    Sample s;
    s.provenance = Sample::Provenance::ingested;
    std::string line;
    long lineno = 0;
    bool maybe_header = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view = trim(line);
        if (view.empty()) continue;

        std::size_t comma = view.find(',');
        if (comma == std::string_view::npos) {
            if (maybe_header) {
                maybe_header = false;
                double tmp;
                if (!parse_field(view, tmp)) continue; // header without comma
            }
            throw ParseError("line " + std::to_string(lineno) + ": expected two comma-separated values",
                             lineno);
        }
        std::string_view fx = view.substr(0, comma);
        std::string_view rest = view.substr(comma + 1);
        if (rest.find(',') != std::string_view::npos) {
            throw ParseError("line " + std::to_string(lineno) + ": expected exactly two columns",
                             lineno);
        }

        double x, y;
        bool ok_x = parse_field(fx, x);
        bool ok_y = parse_field(rest, y);
        if (maybe_header && !ok_x) {
            maybe_header = false;
            continue; // header row, first token non-numeric
        }
        maybe_header = false;
        if (!ok_x || !ok_y) {
            throw ParseError("line " + std::to_string(lineno) + ": malformed number", lineno);
        }
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw ParseError("line " + std::to_string(lineno) + ": non-finite coordinate",
                             lineno);
        }
        s.points.push_back({x, y});
    }
    return s;
}

Sample read_csv_file(const std::string& path) {
    if (path == "-") return read_csv(std::cin);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file: " + path);
    return read_csv(f);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string witness_json(const EmptyBall& w) {
    return "{\"cx\":" + format_double(w.center.x) + ",\"cy\":" + format_double(w.center.y) +
           ",\"r\":" + format_double(w.radius) + "}";
}

} // namespace

std::string to_json(const SpacingStatistics& st, std::uint64_t seed) {
    std::string out = "{";
    out += "\"n\":" + std::to_string(st.params.n);
    out += ",\"R\":" + format_double(st.R);
    out += ",\"delta\":" + format_double(st.Delta);
    out += ",\"V\":" + format_double(st.V);
    out += ",\"u\":" + format_double(st.U);
    out += ",\"hull_area\":" + format_double(st.support_area);
    out += ",\"witness\":" + witness_json(st.witness);
    out += ",\"dedup_removed\":" + std::to_string(st.dedup_removed);
    out += ",\"seed\":" + std::to_string(seed);
    out += "}";
    return out;
}

std::string to_json(const TestResult& r, std::uint64_t seed) {
    std::string out = "{";
    out += "\"method\":\"" + std::string(to_string(r.method)) + "\"";
    out += ",\"n\":" + std::to_string(r.n);
    out += ",\"statistic\":" + format_double(r.statistic);
    out += ",\"critical_value\":" + format_double(r.critical);
    out += ",\"u\":" + format_double(r.u_value);
    out += ",\"p_value\":" + format_double(r.p_value);
    out += std::string(",\"reject\":") + (r.reject ? "true" : "false");
    out += ",\"hull_area\":" + format_double(r.hull_area);
    out += ",\"R\":" + format_double(r.R);
    out += ",\"witness\":" + witness_json(r.witness);
    out += ",\"seed\":" + std::to_string(seed);
    out += "}";
    return out;
}

std::string to_json(const PowerTable& t, double gamma) {
    std::string out = "{\"study\":\"power\"";
    out += ",\"seed\":" + std::to_string(t.seed);
    out += ",\"config_hash\":\"" + t.config_hash + "\"";
    out += ",\"gamma\":" + format_double(gamma);
    out += ",\"wall_ms\":" + format_double(t.wall_ms);
    out += ",\"rows\":[";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const PowerRow& r = t.rows[i];
        if (i) out += ",";
        out += "{\"shape\":\"" + r.shape + "\"";
        out += ",\"n\":" + std::to_string(r.n);
        out += ",\"method\":\"" + std::string(to_string(r.method)) + "\"";
        out += ",\"rejections\":" + std::to_string(r.rejections);
        out += ",\"reps\":" + std::to_string(r.replications);
        out += ",\"power\":" + format_double(r.proportion);
        out += ",\"se\":" + format_double(r.std_error);
        out += "}";
    }
    out += "]}";
    return out;
}

std::string to_csv(const PowerTable& t) {
    std::string out = "shape,n,method,rejections,reps,power,se\n";
    for (const PowerRow& r : t.rows) {
        out += r.shape + "," + std::to_string(r.n) + "," + to_string(r.method) + "," +
               std::to_string(r.rejections) + "," + std::to_string(r.replications) + "," +
               format_double(r.proportion) + "," + format_double(r.std_error) + "\n";
    }
    return out;
}

std::string to_json(const EcdfReport& r) {
    std::string out = "{\"study\":\"limit\"";
    out += ",\"seed\":" + std::to_string(r.seed);
    out += ",\"n\":" + std::to_string(r.n);
    out += ",\"reps\":" + std::to_string(r.replications);
    out += ",\"ks\":" + format_double(r.ks_to_gumbel);
    out += ",\"band_median\":" + format_double(median(r.band_values));
    out += ",\"u\":[";
    for (std::size_t i = 0; i < r.u_values.size(); ++i) {
        if (i) out += ",";
        out += format_double(r.u_values[i]);
    }
    out += "],\"band\":[";
    for (std::size_t i = 0; i < r.band_values.size(); ++i) {
        if (i) out += ",";
        out += format_double(r.band_values[i]);
    }
    out += "]}";
    return out;
}

std::string to_csv(const EcdfReport& r) {
    std::string out = "index,u_sorted,band\n";
    for (std::size_t i = 0; i < r.u_values.size(); ++i) {
        out += std::to_string(i) + "," + format_double(r.u_values[i]) + "," +
               format_double(r.band_values[i]) + "\n";
    }
    return out;
}

std::string to_csv(const Sample& s) {
    std::string out = "x,y\n";
    for (const Point2& p : s.points) {
        out += format_double(p.x) + "," + format_double(p.y) + "\n";
    }
    return out;
}

double parse_angle(const std::string& text) {
    constexpr double kPi = 3.14159265358979323846;
    std::string_view v = trim(text);
    auto pos = v.find("pi");
    if (pos == std::string_view::npos) {
        double out;
        if (!parse_field(v, out)) throw InvalidParams("cannot parse angle: " + text);
        return out;
    }
    double num = 1.0;
    std::string_view head = trim(v.substr(0, pos));
    if (!head.empty()) {
        if (!parse_field(head, num)) throw InvalidParams("cannot parse angle: " + text);
    }
    double den = 1.0;
    std::string_view tail = trim(v.substr(pos + 2));
    if (!tail.empty()) {
        if (tail.front() != '/') throw InvalidParams("cannot parse angle: " + text);
        if (!parse_field(trim(tail.substr(1)), den) || den == 0.0) {
            throw InvalidParams("cannot parse angle: " + text);
        }
    }
    return num * kPi / den;
}

double parse_radius(const std::string& text) {
    std::string_view v = trim(text);
    if (v == "inf" || v == "Inf" || v == "INF" || v == "infinity") {
        return std::numeric_limits<double>::infinity();
    }
    double out;
    if (!parse_field(v, out)) throw InvalidParams("cannot parse radius: " + text);
    return out;
}

} // namespace maxspace::cli
