#include "dwedge/geometry.hpp"

#include <stdexcept>

namespace dwedge {

int side_of(const Line& l, const Point& p) {
    return (p.y - l.eval(p.x)).sign();
}

int orient(const Point& a, const Point& b, const Point& c) {
    Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return det.sign();
}

Segment::Segment(Point p_, Point q_, bool incp, bool incq)
    : p(std::move(p_)), q(std::move(q_)), include_p(incp), include_q(incq) {
    if (p.x == q.x) {
        throw std::invalid_argument(p == q ? "Segment: degenerate (p == q)"
                                           : "Segment: vertical segments are not representable");
    }
    if (q.x < p.x) {
        std::swap(p, q);
        std::swap(include_p, include_q);
    }
}

Line Segment::carrier() const {
    Rational a = (q.y - p.y) / (q.x - p.x);
    return Line{a, p.y - a * p.x};
}

DoubleWedge::DoubleWedge(Line l1_, Line l2_, int parity_, bool closed)
    : DoubleWedge(std::move(l1_), std::move(l2_), parity_, closed, closed) {}

DoubleWedge::DoubleWedge(Line l1_, Line l2_, int parity_, bool l1c, bool l2c)
    : l1(std::move(l1_)), l2(std::move(l2_)), parity(parity_), l1_closed(l1c), l2_closed(l2c) {
    if (l1.a == l2.a)
        throw std::invalid_argument("DoubleWedge: bounding lines must have distinct slopes");
    if (parity != 1 && parity != -1)
        throw std::invalid_argument("DoubleWedge: parity must be +1 or -1");
}

Point DoubleWedge::origin() const {
    Rational x = (l2.b - l1.b) / (l1.a - l2.a);
    return Point{x, l1.eval(x)};
}

bool contains(const DoubleWedge& d, const Point& p) {
    int s1 = side_of(d.l1, p);
    int s2 = side_of(d.l2, p);
    if (s1 == 0 && s2 == 0) return d.l1_closed && d.l2_closed;
    if (s1 == 0) return d.l1_closed;
    if (s2 == 0) return d.l2_closed;
    return s1 * s2 == d.parity;
}

bool contains_strict(const DoubleWedge& d, const Point& p) {
    int s1 = side_of(d.l1, p);
    int s2 = side_of(d.l2, p);
    return s1 != 0 && s2 != 0 && s1 * s2 == d.parity;
}

Point strict_interior_point(const DoubleWedge& d) {
    Point o = d.origin();
    if (d.parity > 0) return Point{o.x, o.y + 1};
    // Mean-slope direction from the origin lies strictly between the lines.
    return Point{o.x + 2, o.y + d.l1.a + d.l2.a};
}

Line dual_point_to_line(const Point& p) {
    return Line{p.x, -p.y};
}

Point dual_line_to_point(const Line& l) {
    return Point{l.a, -l.b};
}

DoubleWedge dual_segment_to_bowtie(const Segment& s) {
    return DoubleWedge(dual_point_to_line(s.p), dual_point_to_line(s.q), -1,
                       s.include_p, s.include_q);
}

DoubleWedge dual_antisegment_to_hourglass(const AntiSegment& a) {
    const Segment& c = a.complement;
    return DoubleWedge(dual_point_to_line(c.p), dual_point_to_line(c.q), +1,
                       !c.include_p, !c.include_q);
}

LineMeet line_intersection(const Line& l1, const Line& l2) {
    if (l1.a == l2.a) return Parallel{l1.b == l2.b};
    Rational x = (l2.b - l1.b) / (l1.a - l2.a);
    return Point{x, l1.eval(x)};
}

Traces traces(const DoubleWedge& d) {
    Point o = d.origin();
    Rational mean = (d.l1.a + d.l2.a) / 2;
    Traces t;
    t.mean_slope = mean;
    // For each line, the ray direction (1, a) is above the mean-slope line
    // iff a > mean; the opposite ray is then below. Slopes are distinct so
    // neither difference is zero.
    auto classify = [&](const Line& l, int which) {
        Ray fwd{o, 1, l.a};
        Ray bwd{o, -1, -l.a};
        if ((l.a - mean).sign() > 0) {
            t.upper[which] = fwd;
            t.lower[which] = bwd;
        } else {
            t.upper[which] = bwd;
            t.lower[which] = fwd;
        }
    };
    classify(d.l1, 0);
    classify(d.l2, 1);
    return t;
}

namespace {

// Does the vertical ray from p (up if dir > 0, down if dir < 0) hit the ray?
// Returns +1 for a strict hit, 0 when p lies on the ray, -1 for a miss.
int vertical_ray_hit(const Point& p, const Ray& r, int dir) {
    // Ray point at x = p.x requires t = (p.x - o.x)/dx >= 0.
    Rational t = (p.x - r.origin.x) / r.dx;
    if (t.sign() < 0) return -1;
    Rational y_at = r.origin.y + t * r.dy;
    int c = (y_at - p.y).sign();
    if (c == 0) return 0;
    return c == dir ? +1 : -1;
}

}  // namespace

bool trace_contains(const DoubleWedge& d, const Point& p) {
    Traces t = traces(d);
    int up0 = vertical_ray_hit(p, t.upper[0], +1);
    int up1 = vertical_ray_hit(p, t.upper[1], +1);
    int lo0 = vertical_ray_hit(p, t.lower[0], -1);
    int lo1 = vertical_ray_hit(p, t.lower[1], -1);

    // On-boundary cases defer to the per-line inclusion bits.
    if (up0 == 0 || lo0 == 0 || up1 == 0 || lo1 == 0) {
        bool on1 = (up0 == 0 || lo0 == 0);
        bool on2 = (up1 == 0 || lo1 == 0);
        if (on1 && on2) return d.l1_closed && d.l2_closed;
        return on1 ? d.l1_closed : d.l2_closed;
    }

    bool below_upper = (up0 > 0 || up1 > 0);
    bool above_lower = (lo0 > 0 || lo1 > 0);
    if (d.parity < 0) return below_upper && above_lower;
    return !below_upper || !above_lower;
}

Point shear_point(const Point& p, const Rational& a) {
    return Point{p.y - a * p.x, p.x};
}

Point unshear_point(const Point& p, const Rational& a) {
    return Point{p.y, p.x + a * p.y};
}

Line shear_line(const Line& l, const Rational& a) {
    if (l.a == a) throw std::invalid_argument("shear_line: line of slope a maps to a vertical line");
    Rational d = l.a - a;
    return Line{Rational(1) / d, -l.b / d};
}

DoubleWedge shear_wedge(const DoubleWedge& d, const Rational& a) {
    Line m1 = shear_line(d.l1, a);
    Line m2 = shear_line(d.l2, a);
    // Parity of the image is re-derived from an interior witness; the linear
    // map preserves membership but not the sign product's label.
    Point inside = shear_point(strict_interior_point(d), a);
    int s1 = side_of(m1, inside);
    int s2 = side_of(m2, inside);
    DoubleWedge out(m1, m2, s1 * s2, d.l1_closed, d.l2_closed);
    return out;
}

std::vector<DoubleWedge> shear_to_bowties(const std::vector<DoubleWedge>& wedges, const Rational& a) {
    std::vector<DoubleWedge> out;
    out.reserve(wedges.size());
    for (const DoubleWedge& d : wedges) out.push_back(shear_wedge(d, a));
    return out;
}

}  // namespace dwedge
