#pragma once

#include <cstdint>
#include <vector>

#include "dwedge/geometry.hpp"
#include "dwedge/oracle.hpp"
#include "dwedge/stabbing.hpp"

namespace dwedge {

// Grating of k bowties (steep, slopes +-2) crossed with k near-horizontal
// hourglasses, arranged so the common intersection splits into exactly
// (k+1)^2 components that are pairwise disjoint as closed sets. The generator
// re-counts the components and throws if the count is off.
std::vector<DoubleWedge> make_grating(int k);

// Points on the rows y = 0, 1, 2; x-coordinates normalized to start at 1.
struct GeomBaseInstance {
    struct RowPoint {
        long long x;
        int row;  // 0, 1 or 2
        friend bool operator<(const RowPoint& a, const RowPoint& b) {
            if (a.row != b.row) return a.row < b.row;
            return a.x < b.x;
        }
        friend bool operator==(const RowPoint& a, const RowPoint& b) {
            return a.x == b.x && a.row == b.row;
        }
    };
    std::vector<RowPoint> points;
};

// Each value v contributes (2v, row 0), (2v, row 2) and (-v, row 1); the
// instance has three collinear points on a non-horizontal line iff some
// a + b + c = 0 over the input values (repetitions allowed).
GeomBaseInstance geombase_from_3sum(const std::vector<long long>& numbers);

// Cubic reference decision for the repetition-allowed 3SUM variant.
bool brute_force_3sum(const std::vector<long long>& numbers);

// Does some non-horizontal line pass through three instance points?
bool brute_force_geombase(const GeomBaseInstance& u);

// Rectangle-with-punctures reduction: the avoid set is the boundary of
// [0, X+1] x [0, 2] plus the middle line, each punctured by an open gap of
// radius 1/4 around every instance point; the stab set is the single segment
// across the middle. Everything is passed through a rational near-identity
// map so no segment is vertical or horizontal.
SasInstance sas_from_geombase(const GeomBaseInstance& u);

// The near-identity map used by sas_from_geombase and its inverse.
Point sas_frame_map(const Point& p);
Point sas_frame_unmap(const Point& p);

// Exact x-coordinates at which the (unmapped) witness crosses the rows
// y = 0, 1, 2; empty if the line is horizontal in the unmapped frame.
std::vector<Rational> sas_witness_row_crossings(const SasResult& witness);

// Gallai family on a rationalized regular 9-gon: 9 closed green segments
// (k, k+3 chords), 9 red anti-segments with open complements (k, k+4 chords),
// and 18 purple anti-segments with closed complements fanning out of the
// w_k points. A tiny rational shear removes the 9-gon's vertical chord.
struct NonagonFamily {
    int precision = 0;
    std::vector<Point> base_points;  // p_0 .. p_8
    std::vector<Point> w_points;     // w_0 .. w_8
    std::vector<Segment> greens;
    std::vector<AntiSegment> reds;
    std::vector<AntiSegment> purples;  // q_0, qt_0, q_1, qt_1, ...

    std::vector<FamilyElement> all() const;
};

NonagonFamily make_nonagon_family(int precision);

}  // namespace dwedge
