#include "dwedge/convex_chain.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace dwedge {

std::size_t PieceChain::piece_index_at(const Bound& x) const {
    if (x.kind == Bound::NegInf) return 0;
    if (x.kind == Bound::PosInf) return pieces.size() - 1;
    // Piece covering (x, x + eps): number of breaks <= x.
    std::size_t i = std::upper_bound(breaks.begin(), breaks.end(), x.x,
                                     [](const Rational& v, const Rational& b) { return v < b; }) -
                    breaks.begin();
    return std::min(i, pieces.size() - 1);
}

Rational PieceChain::eval(const Rational& x) const {
    return pieces[piece_index_at(Bound::at(x))].ln.eval(x);
}

bool ConvexCell::is_degenerate() const {
    if (lower.empty() || upper.empty()) return false;
    if (is_point()) return true;
    // lower == upper as functions iff every active piece pair shares a line.
    std::size_t ia = 0, ib = 0;
    while (true) {
        if (lower.pieces[ia].ln != upper.pieces[ib].ln) return false;
        Bound a_end = ia < lower.breaks.size() ? Bound::at(lower.breaks[ia]) : xhi;
        Bound b_end = ib < upper.breaks.size() ? Bound::at(upper.breaks[ib]) : xhi;
        Bound e = a_end < b_end ? a_end : b_end;
        if (!(e < xhi)) return true;
        if (a_end == e) ++ia;
        if (b_end == e) ++ib;
        if (ia >= lower.pieces.size() || ib >= upper.pieces.size()) return true;
    }
}

Point ConvexCell::point() const {
    assert(is_point() && xlo.finite());
    return Point{xlo.x, lower.eval(xlo.x)};
}

Point ConvexCell::pinch_point_left() const {
    return Point{xlo.x, lower.eval(xlo.x)};
}

Point ConvexCell::pinch_point_right() const {
    return Point{xhi.x, lower.eval(xhi.x)};
}

bool ConvexCell::contains_closed(const Point& p) const {
    Bound px = Bound::at(p.x);
    if (px < xlo || xhi < px) return false;
    if (!lower.empty() && p.y < lower.eval(p.x)) return false;
    if (!upper.empty() && upper.eval(p.x) < p.y) return false;
    return true;
}

Point ConvexCell::interior_point() const {
    Rational x;
    if (xlo.finite() && xhi.finite())
        x = (xlo.x + xhi.x) / 2;
    else if (xlo.finite())
        x = xlo.x + 1;
    else if (xhi.finite())
        x = xhi.x - 1;
    else
        x = 0;
    Rational lo = lower.empty() ? Rational(0) : lower.eval(x);
    Rational hi = upper.empty() ? Rational(0) : upper.eval(x);
    if (lower.empty() && upper.empty()) return Point{x, 0};
    if (lower.empty()) return Point{x, hi - 1};
    if (upper.empty()) return Point{x, lo + 1};
    return Point{x, (lo + hi) / 2};
}

ConvexCell whole_plane_cell() {
    return ConvexCell{};
}

std::vector<ConvexCell> base_cells(const DoubleWedge& d) {
    if (d.parity != -1) throw std::invalid_argument("base_cells: wedge is not a bowtie");
    Point o = d.origin();
    CellPiece p1{d.l1, d.l1_closed};
    CellPiece p2{d.l2, d.l2_closed};
    const CellPiece& hi_slope = (d.l1.a < d.l2.a) ? p2 : p1;
    const CellPiece& lo_slope = (d.l1.a < d.l2.a) ? p1 : p2;

    ConvexCell left;
    left.xlo = Bound::neg_inf();
    left.xhi = Bound::at(o.x);
    left.lower.pieces = {hi_slope};  // steeper line is below, left of the origin
    left.upper.pieces = {lo_slope};

    ConvexCell right;
    right.xlo = Bound::at(o.x);
    right.xhi = Bound::pos_inf();
    right.lower.pieces = {lo_slope};
    right.upper.pieces = {hi_slope};
    return {left, right};
}

// ---------------------------------------------------------------------------

namespace {

void emit_piece(PieceChain& out, const CellPiece& piece, const Bound& from) {
    if (!out.pieces.empty() && out.pieces.back().ln == piece.ln && out.pieces.back().closed == piece.closed)
        return;  // extend previous piece
    if (!out.pieces.empty()) {
        assert(from.finite());
        out.breaks.push_back(from.x);
    }
    out.pieces.push_back(piece);
}

// Pointwise max (take_max) or min of two chains over [lo, hi].
PieceChain merge_envelope(const PieceChain& a, const PieceChain& b, const Bound& lo, const Bound& hi, bool take_max) {
    auto clip = [&](const PieceChain& c) {
        PieceChain out;
        std::size_t first = c.piece_index_at(lo);
        std::size_t last = c.piece_index_at(hi);
        if (hi.finite()) {
            // Piece covering (hi - eps, hi): number of breaks strictly below hi.
            std::size_t i = std::lower_bound(c.breaks.begin(), c.breaks.end(), hi.x) - c.breaks.begin();
            last = std::min(i, c.pieces.size() - 1);
        }
        if (first > last) first = last;
        out.pieces.assign(c.pieces.begin() + first, c.pieces.begin() + last + 1);
        out.breaks.assign(c.breaks.begin() + first, c.breaks.begin() + last);
        return out;
    };
    if (a.empty()) return clip(b);
    if (b.empty()) return clip(a);

    PieceChain out;
    std::size_t ia = a.piece_index_at(lo);
    std::size_t ib = b.piece_index_at(lo);
    Bound cur = lo;
    while (true) {
        const CellPiece& pa = a.pieces[ia];
        const CellPiece& pb = b.pieces[ib];
        Bound a_end = ia < a.breaks.size() ? Bound::at(a.breaks[ia]) : Bound::pos_inf();
        Bound b_end = ib < b.breaks.size() ? Bound::at(b.breaks[ib]) : Bound::pos_inf();
        Bound seg_end = a_end < b_end ? a_end : b_end;
        if (hi < seg_end) seg_end = hi;

        if (pa.ln == pb.ln) {
            emit_piece(out, CellPiece{pa.ln, pa.closed && pb.closed}, cur);
        } else if (pa.ln.a == pb.ln.a) {
            bool a_wins = (pa.ln.b > pb.ln.b) == take_max;
            emit_piece(out, a_wins ? pa : pb, cur);
        } else {
            Rational xstar = (pb.ln.b - pa.ln.b) / (pa.ln.a - pb.ln.a);
            Bound bx = Bound::at(xstar);
            // Left of the crossing, the smaller-slope line is the larger one.
            const CellPiece& left_win = ((pa.ln.a < pb.ln.a) == take_max) ? pa : pb;
            const CellPiece& right_win = (&left_win == &pa) ? pb : pa;
            if (cur < bx && bx < seg_end) {
                emit_piece(out, left_win, cur);
                emit_piece(out, right_win, bx);
            } else if (bx <= cur) {
                emit_piece(out, right_win, cur);
            } else {
                emit_piece(out, left_win, cur);
            }
        }

        if (!(seg_end < hi)) break;
        if (a_end == seg_end) ++ia;
        if (b_end == seg_end) ++ib;
        cur = seg_end;
    }
    return out;
}

struct FeasibleRange {
    Bound lo, hi;
};

int sign_at(const Rational& ga, const Rational& gb, const Bound& x) {
    switch (x.kind) {
        case Bound::NegInf: return ga.is_zero() ? gb.sign() : -ga.sign();
        case Bound::PosInf: return ga.is_zero() ? gb.sign() : ga.sign();
        default: return (ga * x.x + gb).sign();
    }
}

// The interval {x in [lo, hi] : upper(x) - lower(x) >= 0}. The difference is
// concave, so the feasible set is a single interval (possibly empty).
std::optional<FeasibleRange> feasible_range(const PieceChain& L, const PieceChain& U, const Bound& lo, const Bound& hi) {
    if (L.empty() || U.empty()) return FeasibleRange{lo, hi};

    std::optional<Bound> r1, r2;
    std::size_t il = L.piece_index_at(lo);
    std::size_t iu = U.piece_index_at(lo);
    Bound cur = lo;
    while (true) {
        const Line& ll = L.pieces[il].ln;
        const Line& lu = U.pieces[iu].ln;
        Rational ga = lu.a - ll.a;
        Rational gb = lu.b - ll.b;
        Bound l_end = il < L.breaks.size() ? Bound::at(L.breaks[il]) : Bound::pos_inf();
        Bound u_end = iu < U.breaks.size() ? Bound::at(U.breaks[iu]) : Bound::pos_inf();
        Bound seg_end = l_end < u_end ? l_end : u_end;
        if (hi < seg_end) seg_end = hi;

        int ss = sign_at(ga, gb, cur);
        int se = sign_at(ga, gb, seg_end);
        if (!r1) {
            if (ss >= 0) {
                r1 = cur;
                // Falls through: the difference may drop below zero in this
                // same segment.
            } else if (se >= 0) {
                // Up-crossing inside the segment; the remainder is feasible.
                r1 = Bound::at(-gb / ga);
                ss = 0;
            }
        }
        if (r1 && !r2 && ss >= 0 && se < 0) {
            r2 = Bound::at(-gb / ga);  // down-crossing ends the interval
        }
        if (r2) break;
        if (!(seg_end < hi)) break;
        if (l_end == seg_end) ++il;
        if (u_end == seg_end) ++iu;
        cur = seg_end;
    }
    if (!r1) return std::nullopt;
    if (!r2) r2 = hi;
    return FeasibleRange{*r1, *r2};
}

PieceChain clip_chain(const PieceChain& c, const Bound& lo, const Bound& hi) {
    if (c.empty()) return c;
    std::size_t first = c.piece_index_at(lo);
    std::size_t last;
    if (hi.kind == Bound::PosInf) {
        last = c.pieces.size() - 1;
    } else if (hi.kind == Bound::NegInf) {
        last = 0;
    } else {
        std::size_t i = std::lower_bound(c.breaks.begin(), c.breaks.end(), hi.x) - c.breaks.begin();
        last = std::min(i, c.pieces.size() - 1);
    }
    if (first > last) first = last;
    PieceChain out;
    out.pieces.assign(c.pieces.begin() + first, c.pieces.begin() + last + 1);
    out.breaks.assign(c.breaks.begin() + first, c.breaks.begin() + last);
    return out;
}

}  // namespace

std::optional<ConvexCell> intersect_cells(const ConvexCell& a, const ConvexCell& b) {
    Bound lo = a.xlo < b.xlo ? b.xlo : a.xlo;
    Bound hi = a.xhi < b.xhi ? a.xhi : b.xhi;
    if (hi < lo) return std::nullopt;

    PieceChain L = merge_envelope(a.lower, b.lower, lo, hi, /*take_max=*/true);
    PieceChain U = merge_envelope(a.upper, b.upper, lo, hi, /*take_max=*/false);
    auto range = feasible_range(L, U, lo, hi);
    if (!range) return std::nullopt;

    ConvexCell out;
    out.xlo = range->lo;
    out.xhi = range->hi;
    out.lower = clip_chain(L, range->lo, range->hi);
    out.upper = clip_chain(U, range->lo, range->hi);
    return out;
}

std::vector<ConvexCell> merge_cell_lists(const std::vector<ConvexCell>& a, const std::vector<ConvexCell>& b) {
    std::vector<ConvexCell> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (auto cell = intersect_cells(a[i], b[j])) {
            // Drop a point cell subsumed by the previous cell.
            bool subsumed = cell->is_point() && !out.empty() && out.back().contains_closed(cell->point());
            if (!subsumed) {
                if (!out.empty() && out.back().is_point() && cell->contains_closed(out.back().point()))
                    out.pop_back();
                out.push_back(std::move(*cell));
            }
        }
        if (a[i].xhi < b[j].xhi) {
            ++i;
        } else if (b[j].xhi < a[i].xhi) {
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

IntervalSet1D IntervalSet1D::all() {
    IntervalSet1D s;
    s.parts.push_back(Interval1D{Bound::neg_inf(), Bound::pos_inf(), false, false});
    return s;
}

IntervalSet1D IntervalSet1D::empty() {
    return IntervalSet1D{};
}

IntervalSet1D IntervalSet1D::single(Interval1D iv) {
    IntervalSet1D s;
    s.parts.push_back(std::move(iv));
    return s;
}

IntervalSet1D intersect(const IntervalSet1D& a, const IntervalSet1D& b) {
    IntervalSet1D out;
    std::size_t i = 0, j = 0;
    while (i < a.parts.size() && j < b.parts.size()) {
        const Interval1D& x = a.parts[i];
        const Interval1D& y = b.parts[j];
        Bound lo = x.lo < y.lo ? y.lo : x.lo;
        Bound hi = x.hi < y.hi ? x.hi : y.hi;
        bool lo_closed = (x.lo == y.lo) ? (x.lo_closed && y.lo_closed) : (lo == x.lo ? x.lo_closed : y.lo_closed);
        bool hi_closed = (x.hi == y.hi) ? (x.hi_closed && y.hi_closed) : (hi == x.hi ? x.hi_closed : y.hi_closed);
        bool nonempty = lo < hi || (lo == hi && lo.finite() && lo_closed && hi_closed);
        if (nonempty) out.parts.push_back(Interval1D{lo, hi, lo_closed, hi_closed});
        if (x.hi < y.hi) {
            ++i;
        } else if (y.hi < x.hi) {
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return out;
}

IntervalSet1D wedge_slice(const DoubleWedge& d, const Line& carrier) {
    // sigma_i(x) = carrier(x) - l_i(x), linear; zero iff the point is on l_i.
    Rational a1 = carrier.a - d.l1.a, b1 = carrier.b - d.l1.b;
    Rational a2 = carrier.a - d.l2.a, b2 = carrier.b - d.l2.b;

    auto coincident = [](const Rational& a, const Rational& b) { return a.is_zero() && b.is_zero(); };

    if (coincident(a1, b1) || coincident(a2, b2)) {
        // Carrier equals one bounding line; membership is that line's bit,
        // except at the wedge origin where both bits apply.
        bool on_first = coincident(a1, b1);
        bool bit = on_first ? d.l1_closed : d.l2_closed;
        bool other_bit = on_first ? d.l2_closed : d.l1_closed;
        if (!bit) return IntervalSet1D::empty();
        Rational oa = on_first ? a2 : a1;
        Rational ob = on_first ? b2 : b1;
        Rational z = -ob / oa;  // slopes distinct, so oa != 0
        if (other_bit) return IntervalSet1D::all();
        IntervalSet1D s;
        s.parts.push_back(Interval1D{Bound::neg_inf(), Bound::at(z), false, false});
        s.parts.push_back(Interval1D{Bound::at(z), Bound::pos_inf(), false, false});
        return s;
    }

    // Breakpoints where membership can change.
    std::vector<Rational> cuts;
    if (!a1.is_zero()) cuts.push_back(-b1 / a1);
    if (!a2.is_zero()) cuts.push_back(-b2 / a2);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto sig = [&](const Rational& a, const Rational& b, const Rational& x) { return (a * x + b).sign(); };
    auto member = [&](const Rational& x) {
        int s1 = sig(a1, b1, x);
        int s2 = sig(a2, b2, x);
        if (s1 == 0 && s2 == 0) return d.l1_closed && d.l2_closed;
        if (s1 == 0) return d.l1_closed;
        if (s2 == 0) return d.l2_closed;
        return s1 * s2 == d.parity;
    };

    // Sample each open interval between cuts plus the cuts themselves and
    // assemble maximal intervals.
    struct Piece {
        Bound lo, hi;
        bool lo_closed, hi_closed, in;
    };
    std::vector<Piece> pieces;
    auto interval_member = [&](const Bound& lo, const Bound& hi) {
        Rational probe;
        if (lo.kind == Bound::NegInf && hi.kind == Bound::PosInf) probe = 0;
        else if (lo.kind == Bound::NegInf) probe = hi.x - 1;
        else if (hi.kind == Bound::PosInf) probe = lo.x + 1;
        else probe = (lo.x + hi.x) / 2;
        return member(probe);
    };
    Bound prev = Bound::neg_inf();
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        Bound next = i < cuts.size() ? Bound::at(cuts[i]) : Bound::pos_inf();
        pieces.push_back(Piece{prev, next, false, false, interval_member(prev, next)});
        if (i < cuts.size()) pieces.push_back(Piece{next, next, true, true, member(cuts[i])});
        prev = next;
    }

    IntervalSet1D out;
    for (const Piece& pc : pieces) {
        if (!pc.in) continue;
        if (!out.parts.empty()) {
            Interval1D& last = out.parts.back();
            // An open end glues to a following piece only through an included
            // junction point.
            if (last.hi == pc.lo && (last.hi_closed || pc.lo_closed)) {
                last.hi = pc.hi;
                last.hi_closed = pc.hi_closed;
                continue;
            }
        }
        out.parts.push_back(Interval1D{pc.lo, pc.hi, pc.lo_closed, pc.hi_closed});
    }
    return out;
}

}  // namespace dwedge
