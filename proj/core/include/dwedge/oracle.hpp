#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dwedge/geometry.hpp"
#include "dwedge/intersect.hpp"

namespace dwedge {

using FamilyElement = std::variant<Segment, AntiSegment>;

// A candidate stabbing line: either y = a*x + b or the vertical x = x0.
struct PiercingLine {
    bool vertical = false;
    Line line;
    Rational x;

    static PiercingLine non_vertical(Line l) { return {false, std::move(l), 0}; }
    static PiercingLine at_x(Rational x0) { return {true, Line{0, 0}, std::move(x0)}; }
};

// Sample points hitting every cell (face, edge, vertex) of the arrangement of
// a line set: all pairwise intersections, on-line samples between and beyond
// them, vertical perturbations of the on-line samples into the flanking
// faces, diagonal perturbations of the vertices, and one base point.
// On-line samples are nudged off the x-values in `avoid_xs` so candidate
// masks stay cell-generic.
struct CandidatePool {
    std::vector<Point> points;
};

CandidatePool build_candidate_pool(const std::vector<Line>& lines,
                                   const std::vector<Rational>& avoid_xs = {});

// Vertical-line candidates for a segment family: all endpoint x-coordinates,
// midpoints of consecutive distinct ones, and one beyond each extreme.
std::vector<Rational> vertical_candidates(const std::vector<FamilyElement>& family);

struct OracleIntersection {
    bool nonempty = false;
    std::optional<Point> witness;
    int component_count = 0;
};

// Ground truth for the intersection algorithms: emptiness and witness from a
// pool scan, component count from per-cell re-evaluation (no BFS propagation).
OracleIntersection oracle_intersect(const std::vector<DoubleWedge>& wedges);

// Exact piercing predicate. A line pierces an anti-segment iff it meets the
// carrier minus the complement; distinct parallels to the carrier miss it.
bool pierces(const PiercingLine& l, const FamilyElement& e);

struct TripleReport {
    bool all_pierceable = true;
    std::array<std::size_t, 3> failing = {0, 0, 0};
};

// Checks every 3-subset via the dual wedge intersection with primal
// re-verification, restoring carrier and vertical candidates.
TripleReport triple_pierceable_all(const std::vector<FamilyElement>& family);

bool triple_pierceable(const FamilyElement& a, const FamilyElement& b, const FamilyElement& c);

// Exhaustive search for p <= 3 piercing lines over the cell-sampling
// candidate set; returns std::nullopt when impossible. With a prune set for
// p == 2, the first line must pierce at least half of it.
std::optional<std::vector<PiercingLine>> piercing_with_lines(
    const std::vector<FamilyElement>& family, int p,
    const std::vector<Segment>& prune_set = {});

// Experiment hook: random segment families in which every triple is
// pierceable, tested for coverage by two lines. Reports outcomes only.
struct Oq1Outcome {
    int families_tested = 0;
    int three_pierceable = 0;
    int two_line_coverable = 0;
};
Oq1Outcome oq1_experiment(std::uint64_t seed, int trials, int family_size);

}  // namespace dwedge
