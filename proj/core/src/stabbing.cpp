#include "dwedge/stabbing.hpp"

#include "dwedge/convex_chain.hpp"

namespace dwedge {

bool line_meets_segment(const Line& l, const Segment& s) {
    int rp = (s.p.y - l.eval(s.p.x)).sign();
    int rq = (s.q.y - l.eval(s.q.x)).sign();
    if (rp == 0 && rq == 0) return true;  // carrier, meets the open part
    if (rp == 0) return s.include_p;
    if (rq == 0) return s.include_q;
    return rp != rq;
}

bool vertical_meets_segment(const Rational& x, const Segment& s) {
    if (x == s.p.x) return s.include_p;
    if (x == s.q.x) return s.include_q;
    return s.p.x < x && x < s.q.x;
}

bool sas_verify_line(const SasInstance& inst, const Line& l) {
    for (const Segment& s : inst.stab)
        if (!line_meets_segment(l, s)) return false;
    for (const Segment& a : inst.avoid)
        if (line_meets_segment(l, a)) return false;
    return true;
}

bool sas_verify_vertical(const SasInstance& inst, const Rational& x) {
    for (const Segment& s : inst.stab)
        if (!vertical_meets_segment(x, s)) return false;
    for (const Segment& a : inst.avoid)
        if (vertical_meets_segment(x, a)) return false;
    return true;
}

std::vector<DoubleWedge> sas_dual_wedges(const SasInstance& inst) {
    std::vector<DoubleWedge> wedges;
    wedges.reserve(inst.stab.size() + inst.avoid.size());
    for (const Segment& s : inst.stab) wedges.push_back(dual_segment_to_bowtie(s));
    for (const Segment& a : inst.avoid) {
        // Lines avoiding a segment are dual to the complement hourglass with
        // negated inclusion bits: a line through an endpoint avoids the
        // segment iff the endpoint does not belong to it.
        wedges.push_back(DoubleWedge(dual_point_to_line(a.p), dual_point_to_line(a.q), +1,
                                     !a.include_p, !a.include_q));
    }
    return wedges;
}

namespace {

std::optional<Rational> vertical_pass(const SasInstance& inst) {
    IntervalSet1D feasible = IntervalSet1D::all();
    for (const Segment& s : inst.stab) {
        feasible = intersect(feasible, IntervalSet1D::single(Interval1D{
                                           Bound::at(s.p.x), Bound::at(s.q.x),
                                           s.include_p, s.include_q}));
        if (feasible.is_empty()) return std::nullopt;
    }
    for (const Segment& a : inst.avoid) {
        // Complement of a's x-interval, endpoint inclusion negated.
        IntervalSet1D outside;
        outside.parts.push_back(Interval1D{Bound::neg_inf(), Bound::at(a.p.x), false, !a.include_p});
        outside.parts.push_back(Interval1D{Bound::at(a.q.x), Bound::pos_inf(), !a.include_q, false});
        feasible = intersect(feasible, outside);
        if (feasible.is_empty()) return std::nullopt;
    }
    const Interval1D& part = feasible.parts.front();
    if (part.lo.finite() && part.hi.finite()) {
        if (part.lo == part.hi) return part.lo.x;
        return (part.lo.x + part.hi.x) / 2;
    }
    if (part.lo.finite()) return part.lo.x + 1;
    if (part.hi.finite()) return part.hi.x - 1;
    return Rational(0);
}

}  // namespace

SasResult solve_sas(const SasInstance& inst) {
    SasResult res;

    IntersectionResult dual = decide_intersection(sas_dual_wedges(inst));
    for (const Point& w : dual.witnesses) {
        Line cand = dual_point_to_line(w);
        if (sas_verify_line(inst, cand)) {
            res.kind = SasResult::Kind::Line;
            res.line = cand;
            return res;
        }
    }
    // The wedge model can miss solutions only at dual points of stab
    // carriers, so test those directly.
    for (const Segment& s : inst.stab) {
        Line cand = s.carrier();
        if (sas_verify_line(inst, cand)) {
            res.kind = SasResult::Kind::Line;
            res.line = cand;
            return res;
        }
    }
    if (auto x = vertical_pass(inst)) {
        res.kind = SasResult::Kind::Vertical;
        res.x = *x;
        return res;
    }
    return res;
}

}  // namespace dwedge
