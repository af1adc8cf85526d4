#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwedge/arrangement.hpp"
#include "dwedge/convex_chain.hpp"
#include "dwedge/geometry.hpp"

namespace dwedge {

// Slope coverage over R u {inf}: a bowtie with slopes a1 < a2 covers [a1, a2];
// an hourglass covers (-inf, a1] u [a2, inf) u {inf}.
struct SlopeCoverage {
    enum class Verdict { AllBowties, Uncovered, FullyCovered };
    Verdict verdict = Verdict::AllBowties;
    std::optional<Rational> uncovered_slope;  // midpoint of the first maximal gap

    struct Event {
        Rational slope;
        int delta;  // coverage change for slopes just above this one
    };
    std::vector<Event> events;  // sorted by slope, merged per slope
};

SlopeCoverage find_uncovered_slope(const std::vector<DoubleWedge>& wedges);

struct IntersectionResult {
    bool nonempty = false;
    int component_count = 0;
    std::vector<Point> witnesses;  // one per component
    std::string algorithm;
    std::optional<std::vector<ConvexCell>> convex_regions;  // bowtie path only
    std::optional<CellSet> cells;                           // arrangement paths only
};

// O(n log n) divide-and-conquer over sorted convex-cell lists; input must be
// all bowties. Degenerate (segment/point) cells are refined exactly against
// every wedge before counting.
IntersectionResult intersect_bowties(const std::vector<DoubleWedge>& wedges);

// O(n^2) arrangement + depth labeling; works for any mix of parities and flags.
IntersectionResult intersect_general(const std::vector<DoubleWedge>& wedges);

// Bowtie intersection overlaid with the hourglass intersection; output agrees
// with intersect_general.
IntersectionResult intersect_parameterized(const std::vector<DoubleWedge>& wedges);

// Cells contained in at least b bowties and h hourglasses.
IntersectionResult threshold_cells(const std::vector<DoubleWedge>& wedges, int b, int h);

// Dispatch per slope coverage: shear + bowtie path when some slope is
// uncovered, the general algorithm otherwise. Witnesses are mapped back
// through the inverse shear.
IntersectionResult decide_intersection(const std::vector<DoubleWedge>& wedges);

}  // namespace dwedge
