#pragma once

#include <optional>
#include <vector>

#include "dwedge/geometry.hpp"
#include "dwedge/intersect.hpp"

namespace dwedge {

// Stabbing and Avoiding Segments: find a line meeting every segment in
// `stab` and missing every segment in `avoid`.
struct SasInstance {
    std::vector<Segment> stab;
    std::vector<Segment> avoid;
};

struct SasResult {
    enum class Kind { Line, Vertical, None } kind = Kind::None;
    Line line;   // valid when kind == Line
    Rational x;  // valid when kind == Vertical
};

// Exact meet tests honoring inclusion flags.
bool line_meets_segment(const Line& l, const Segment& s);
bool vertical_meets_segment(const Rational& x, const Segment& s);

bool sas_verify_line(const SasInstance& inst, const Line& l);
bool sas_verify_vertical(const SasInstance& inst, const Rational& x);

// Dualizes (stab -> bowties, avoid -> complement hourglasses), decides the
// wedge intersection, re-verifies witnesses in the primal plane, then falls
// back to stab carrier lines and the 1-D vertical pass. Prefers a
// non-vertical witness when both exist.
SasResult solve_sas(const SasInstance& inst);

// The dual wedge set solve_sas operates on.
std::vector<DoubleWedge> sas_dual_wedges(const SasInstance& inst);

}  // namespace dwedge
