// Copyright (c) 2026 maxspace contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAXSPACE_SAMPLE_HPP
#define MAXSPACE_SAMPLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxspace/geom2d.hpp"

namespace maxspace {

/// An ordered 2-D point sample with provenance.
struct Sample {
    enum class Provenance { generated, ingested };

    std::vector<Point2> points;
    Provenance provenance = Provenance::ingested;
    std::string label;
    std::uint64_t proposals = 0; // rejection-sampling proposals, when generated

    int size() const { return static_cast<int>(points.size()); }
};

} // namespace maxspace

#endif
