#pragma once

#include <cstdint>
#include <vector>

#include "dwedge/geometry.hpp"

namespace dwedge {

struct RandomWedgeConfig {
    int n = 10;
    int hourglass_percent = 50;  // probability of parity +1, in percent
    int coord_range = 9;         // slopes and intercepts drawn from [-range, range]
    bool closed = true;
    // Keep a gap around slope 0 uncovered: bowtie slopes share a sign,
    // hourglass slope pairs straddle zero.
    bool ensure_uncovered = false;
    std::uint64_t seed = 1;
};

std::vector<DoubleWedge> random_wedges(const RandomWedgeConfig& cfg);

}  // namespace dwedge
