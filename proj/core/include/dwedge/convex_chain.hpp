#pragma once

#include <optional>
#include <vector>

#include "dwedge/geometry.hpp"

namespace dwedge {

// Extended x-coordinate for unbounded cells.
struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rational x;

    static Bound neg_inf() { return {NegInf, 0}; }
    static Bound pos_inf() { return {PosInf, 0}; }
    static Bound at(Rational v) { return {Finite, std::move(v)}; }

    bool finite() const { return kind == Finite; }
    friend bool operator<(const Bound& a, const Bound& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.kind == Finite && a.x < b.x;
    }
    friend bool operator==(const Bound& a, const Bound& b) {
        return a.kind == b.kind && (a.kind != Finite || a.x == b.x);
    }
    friend bool operator<=(const Bound& a, const Bound& b) { return a < b || a == b; }
};

struct CellPiece {
    Line ln;
    bool closed = true;
};

// Piecewise-linear chain: pieces[i] is active on [breaks[i-1], breaks[i]]
// within the owning cell's x-window. A lower chain is the max of lines
// (convex, slopes increasing); an upper chain the min (concave, decreasing).
struct PieceChain {
    std::vector<CellPiece> pieces;
    std::vector<Rational> breaks;

    bool empty() const { return pieces.empty(); }
    std::size_t piece_index_at(const Bound& x) const;
    Rational eval(const Rational& x) const;
};

// One maximal convex region of a bowtie intersection: the set
// {x in [xlo, xhi], lower(x) <= y <= upper(x)}. Flags on pieces record
// boundary inclusion conservatively; exact membership checks go through the
// original wedges. Empty chains stand for -inf / +inf bounds.
struct ConvexCell {
    Bound xlo = Bound::neg_inf(), xhi = Bound::pos_inf();
    PieceChain lower, upper;

    bool is_point() const { return xlo == xhi; }
    // True when lower == upper as functions over the window (cell is a
    // segment of one line, or a single point).
    bool is_degenerate() const;
    Point point() const;  // requires is_point()
    Point pinch_point_left() const;   // requires finite xlo
    Point pinch_point_right() const;  // requires finite xhi
    bool contains_closed(const Point& p) const;
    // Interior witness of a full-dimensional cell.
    Point interior_point() const;
};

ConvexCell whole_plane_cell();
// The two convex cells of a single bowtie, left then right of its origin.
std::vector<ConvexCell> base_cells(const DoubleWedge& bowtie);

// Intersection of two cells over the overlap of their windows; nullopt when
// empty. The result's point set may exceed the true region only on piece
// boundaries (open flags are preserved conservatively).
std::optional<ConvexCell> intersect_cells(const ConvexCell& a, const ConvexCell& b);

// Intersection of two x-sorted cell lists (the divide-and-conquer merge).
std::vector<ConvexCell> merge_cell_lists(const std::vector<ConvexCell>& a, const std::vector<ConvexCell>& b);

// ---------------------------------------------------------------------------
// Exact 1-D point sets on a carrier line, as disjoint sorted intervals.

struct Interval1D {
    Bound lo, hi;
    bool lo_closed = true, hi_closed = true;
};

struct IntervalSet1D {
    std::vector<Interval1D> parts;  // sorted, disjoint, non-touching

    static IntervalSet1D all();
    static IntervalSet1D empty();
    static IntervalSet1D single(Interval1D iv);

    bool is_empty() const { return parts.empty(); }
};

IntervalSet1D intersect(const IntervalSet1D& a, const IntervalSet1D& b);

// The set {x : (x, carrier(x)) in d}.
IntervalSet1D wedge_slice(const DoubleWedge& d, const Line& carrier);

}  // namespace dwedge
