#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "dwedge/rational.hpp"

namespace dwedge {

struct Point {
    Rational x, y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Non-vertical line y = a*x + b. Vertical lines are unrepresentable by this
// type; passes that need vertical candidates handle them separately.
struct Line {
    Rational a, b;

    Rational eval(const Rational& x) const { return a * x + b; }

    friend bool operator==(const Line& l, const Line& m) { return l.a == m.a && l.b == m.b; }
    friend bool operator!=(const Line& l, const Line& m) { return !(l == m); }
    friend bool operator<(const Line& l, const Line& m) {
        if (l.a != m.a) return l.a < m.a;
        return l.b < m.b;
    }
};

// Sign of p.y - l(p.x): +1 above, 0 on, -1 below.
int side_of(const Line& l, const Point& p);

// Orientation of the triple (a,b,c): +1 counter-clockwise, 0 collinear, -1 clockwise.
int orient(const Point& a, const Point& b, const Point& c);

// Non-vertical segment, stored with p.x < q.x. Inclusion flags say whether
// each endpoint belongs to the segment. Construction normalizes endpoint
// order (flags travel with their endpoints) and rejects p.x == q.x.
struct Segment {
    Point p, q;
    bool include_p = true, include_q = true;

    Segment(Point p_, Point q_, bool incp = true, bool incq = true);

    Line carrier() const;

    friend bool operator==(const Segment& s, const Segment& t) {
        return s.p == t.p && s.q == t.q && s.include_p == t.include_p && s.include_q == t.include_q;
    }
};

// A full line minus a segment of it. An OPEN complement (both flags false)
// means the complement's endpoints belong to the anti-segment.
struct AntiSegment {
    Segment complement;

    explicit AntiSegment(Segment c) : complement(std::move(c)) {}

    friend bool operator==(const AntiSegment& a, const AntiSegment& b) { return a.complement == b.complement; }
};

enum class WedgeKind { Bowtie, Hourglass };

// Double-wedge spanned by two non-parallel lines. parity selects the wedge
// pair: with s_i(p) = sign(p.y - l_i(p.x)), p is strictly inside iff
// s1*s2 == parity. parity -1 is the bowtie pair (no vertical line), +1 the
// hourglass pair. Boundary membership is per bounding line: a point with
// s_i == 0 only is inside iff l<i>_closed; on both lines iff both bits.
struct DoubleWedge {
    Line l1, l2;
    int parity = -1;
    bool l1_closed = true, l2_closed = true;

    DoubleWedge(Line l1_, Line l2_, int parity_, bool closed = true);
    DoubleWedge(Line l1_, Line l2_, int parity_, bool l1c, bool l2c);

    WedgeKind kind() const { return parity < 0 ? WedgeKind::Bowtie : WedgeKind::Hourglass; }
    bool closed() const { return l1_closed && l2_closed; }
    Point origin() const;

    friend bool operator==(const DoubleWedge& a, const DoubleWedge& b) {
        return a.l1 == b.l1 && a.l2 == b.l2 && a.parity == b.parity &&
               a.l1_closed == b.l1_closed && a.l2_closed == b.l2_closed;
    }
};

bool contains(const DoubleWedge& d, const Point& p);
// Requires p off both bounding lines (asserted).
bool contains_strict(const DoubleWedge& d, const Point& p);
// A point known to lie strictly inside d (on the mean-slope direction for
// bowties, straight above the origin for hourglasses).
Point strict_interior_point(const DoubleWedge& d);

// ---------------------------------------------------------------------------
// Projective duality T: point (px, py) <-> line y = px*x - py.

Line dual_point_to_line(const Point& p);
Point dual_line_to_point(const Line& l);

// Bowtie dual to a segment: a point x lies in the wedge iff the line dual to
// x meets the segment (endpoint inclusion follows the segment's flags).
DoubleWedge dual_segment_to_bowtie(const Segment& s);

// Hourglass dual to an anti-segment; boundary inclusion is the logical
// complement of the removed segment's openness.
DoubleWedge dual_antisegment_to_hourglass(const AntiSegment& a);

// ---------------------------------------------------------------------------

struct Parallel {
    bool coincident = false;
};
using LineMeet = std::variant<Point, Parallel>;

LineMeet line_intersection(const Line& l1, const Line& l2);

struct Ray {
    Point origin;
    Rational dx, dy;  // direction, dx != 0
};

// The four boundary rays of a wedge from its origin, split by the line of
// mean slope through the origin.
struct Traces {
    std::array<Ray, 2> upper, lower;
    Rational mean_slope;
};

Traces traces(const DoubleWedge& d);

// Membership evaluated through the trace conditions (vertical-ray hits)
// rather than the sign product. Used to cross-check `contains`.
bool trace_contains(const DoubleWedge& d, const Point& p);

// ---------------------------------------------------------------------------
// Shear normalization (x, y) -> (y - a*x, x): sends lines of slope a to
// vertical ones, so wedges that do not cover slope a become bowties.

Point shear_point(const Point& p, const Rational& a);
Point unshear_point(const Point& p, const Rational& a);
Line shear_line(const Line& l, const Rational& a);
DoubleWedge shear_wedge(const DoubleWedge& d, const Rational& a);

// Applies the shear to every wedge. Throws if a equals some bounding slope.
std::vector<DoubleWedge> shear_to_bowties(const std::vector<DoubleWedge>& wedges, const Rational& a);

}  // namespace dwedge
