// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_TOOLS_CLI_IO_HPP
#define MAXSPACE_TOOLS_CLI_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "maxspace/convexity.hpp"
#include "maxspace/sample.hpp"
#include "maxspace/spacing.hpp"
#include "maxspace/studies.hpp"

namespace maxspace::cli {

/// Reads "x,y" lines. A single header line is auto-detected by a non-numeric
/// first token; LF and CRLF both accepted. Throws ParseError (with the
/// 1-based line number) on malformed or non-finite rows.
Sample read_csv(std::istream& in);
Sample read_csv_file(const std::string& path); // "-" reads stdin

/// Shortest-width exact text for a double: 17 significant digits.
std::string format_double(double v);

std::string to_json(const SpacingStatistics& st, std::uint64_t seed);
std::string to_json(const TestResult& r, std::uint64_t seed);
std::string to_json(const PowerTable& t, double gamma);
std::string to_csv(const PowerTable& t);
std::string to_json(const EcdfReport& r);
std::string to_csv(const EcdfReport& r);
std::string to_csv(const Sample& s);

/// Accepts plain decimals plus "pi", "pi/4", "3pi/2" style angle text.
double parse_angle(const std::string& text);

/// Accepts a decimal or "inf".
double parse_radius(const std::string& text);

} // namespace maxspace::cli

#endif
