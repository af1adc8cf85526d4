#include "dwedge/intersect.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace dwedge {

// ---------------------------------------------------------------------------
// Slope coverage

SlopeCoverage find_uncovered_slope(const std::vector<DoubleWedge>& wedges) {
    SlopeCoverage out;
    int hourglasses = 0;
    std::map<Rational, int> deltas;
    for (const DoubleWedge& d : wedges) {
        Rational lo = min(d.l1.a, d.l2.a);
        Rational hi = max(d.l1.a, d.l2.a);
        if (d.kind() == WedgeKind::Bowtie) {
            deltas[lo] += 1;  // covers [lo, hi]
            deltas[hi] -= 1;
        } else {
            ++hourglasses;
            deltas[lo] -= 1;  // covers (-inf, lo] and [hi, inf)
            deltas[hi] += 1;
        }
    }
    for (auto& [slope, delta] : deltas) out.events.push_back({slope, delta});

    if (hourglasses == 0) {
        out.verdict = SlopeCoverage::Verdict::AllBowties;
        return out;
    }
    // Coverage on the open interval above each event slope; event slopes
    // themselves are always covered by the wedge owning the event.
    int running = hourglasses;
    for (std::size_t i = 0; i < out.events.size(); ++i) {
        running += out.events[i].delta;
        if (running == 0 && i + 1 < out.events.size()) {
            out.verdict = SlopeCoverage::Verdict::Uncovered;
            out.uncovered_slope = (out.events[i].slope + out.events[i + 1].slope) / 2;
            return out;
        }
    }
    out.verdict = SlopeCoverage::Verdict::FullyCovered;
    return out;
}

// ---------------------------------------------------------------------------
// Bowtie-only path

namespace {

bool in_all(const std::vector<DoubleWedge>& wedges, const Point& p) {
    for (const DoubleWedge& d : wedges)
        if (!contains(d, p)) return false;
    return true;
}

// One piece of the refined intersection: a full-dimensional convex cell, a
// 1-D interval on a carrier line, or a single point.
struct RegionUnit {
    enum class Kind { Area, Seg, Pt } kind;
    ConvexCell cell;      // Area
    Line carrier;         // Seg
    Interval1D iv;        // Seg
    Point pt;             // Pt
    Point witness;
    std::vector<Point> ends;  // finite boundary points where neighbors may touch

    bool closure_contains(const Point& p) const {
        switch (kind) {
            case Kind::Area: return cell.contains_closed(p);
            case Kind::Pt: return pt == p;
            case Kind::Seg: {
                if (side_of(carrier, p) != 0) return false;
                Bound px = Bound::at(p.x);
                return !(px < iv.lo) && !(iv.hi < px);
            }
        }
        return false;
    }
};

std::vector<ConvexCell> bowtie_cells(const std::vector<DoubleWedge>& wedges) {
    if (wedges.empty()) return {whole_plane_cell()};
    std::vector<std::vector<ConvexCell>> work;
    work.reserve(wedges.size());
    for (const DoubleWedge& d : wedges) work.push_back(base_cells(d));
    while (work.size() > 1) {
        std::vector<std::vector<ConvexCell>> next;
        for (std::size_t i = 0; i + 1 < work.size(); i += 2)
            next.push_back(merge_cell_lists(work[i], work[i + 1]));
        if (work.size() % 2 == 1) next.push_back(std::move(work.back()));
        work = std::move(next);
    }
    return work.front();
}

Point point_on(const Line& l, const Rational& x) {
    return Point{x, l.eval(x)};
}

// Interior x of the interval, distinct from every value in `bad` (finite).
// Downstream consumers dualize witnesses back to lines, and wedge origins on
// the carrier are exactly the points where the dual model can be spurious.
Rational pick_interior_x(const Interval1D& iv, std::vector<Rational> bad) {
    std::sort(bad.begin(), bad.end());
    auto inside = [&](const Rational& v) { return iv.lo < Bound::at(v) && Bound::at(v) < iv.hi; };
    bad.erase(std::remove_if(bad.begin(), bad.end(), [&](const Rational& v) { return !inside(v); }), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    if (bad.empty()) {
        if (iv.lo.finite() && iv.hi.finite()) return (iv.lo.x + iv.hi.x) / 2;
        if (iv.lo.finite()) return iv.lo.x + 1;
        if (iv.hi.finite()) return iv.hi.x - 1;
        return Rational(0);
    }
    if (iv.lo.finite()) return (iv.lo.x + bad.front()) / 2;
    return bad.front() - 1;
}

std::vector<RegionUnit> refine_cells(const std::vector<ConvexCell>& cells, const std::vector<DoubleWedge>& wedges) {
    std::vector<RegionUnit> units;
    for (const ConvexCell& c : cells) {
        if (!c.is_degenerate()) {
            RegionUnit u;
            u.kind = RegionUnit::Kind::Area;
            u.cell = c;
            u.witness = c.interior_point();
            if (c.xlo.finite()) u.ends.push_back(c.pinch_point_left());
            if (c.xhi.finite()) u.ends.push_back(c.pinch_point_right());
            units.push_back(std::move(u));
            continue;
        }
        if (c.is_point()) {
            Point p = c.point();
            if (!in_all(wedges, p)) continue;
            RegionUnit u;
            u.kind = RegionUnit::Kind::Pt;
            u.pt = p;
            u.witness = p;
            u.ends = {p};
            units.push_back(std::move(u));
            continue;
        }
        // Segment cell: re-derive the exact 1-D region on the carrier within
        // the cell's window; inclusion bits may carve it into pieces.
        Line carrier = c.lower.pieces.front().ln;
        IntervalSet1D set = IntervalSet1D::single(Interval1D{c.xlo, c.xhi, true, true});
        for (const DoubleWedge& d : wedges) {
            set = intersect(set, wedge_slice(d, carrier));
            if (set.is_empty()) break;
        }
        std::vector<Rational> origin_xs;
        for (const DoubleWedge& d : wedges) {
            Point o = d.origin();
            if (side_of(carrier, o) == 0) origin_xs.push_back(o.x);
        }
        for (const Interval1D& part : set.parts) {
            RegionUnit u;
            u.carrier = carrier;
            if (part.lo == part.hi) {
                u.kind = RegionUnit::Kind::Pt;
                u.pt = point_on(carrier, part.lo.x);
                u.witness = u.pt;
                u.ends = {u.pt};
            } else {
                u.kind = RegionUnit::Kind::Seg;
                u.iv = part;
                u.witness = point_on(carrier, pick_interior_x(part, origin_xs));
                if (part.lo.finite()) u.ends.push_back(point_on(carrier, part.lo.x));
                if (part.hi.finite()) u.ends.push_back(point_on(carrier, part.hi.x));
            }
            units.push_back(std::move(u));
        }
    }
    return units;
}

struct UnitComponents {
    int count = 0;
    std::vector<Point> witnesses;
    std::vector<int> component_of_unit;
};

UnitComponents glue_units(const std::vector<RegionUnit>& units, const std::vector<DoubleWedge>& wedges) {
    std::vector<int> parent(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) parent[i] = int(i);
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    // Units are x-sorted with interiors in disjoint windows, so only
    // neighbors can share a touch point.
    for (std::size_t i = 0; i + 1 < units.size(); ++i) {
        for (const Point& p : units[i].ends) {
            if (units[i + 1].closure_contains(p) && units[i].closure_contains(p) && in_all(wedges, p))
                parent[find(int(i))] = find(int(i + 1));
        }
        for (const Point& p : units[i + 1].ends) {
            if (units[i].closure_contains(p) && units[i + 1].closure_contains(p) && in_all(wedges, p))
                parent[find(int(i))] = find(int(i + 1));
        }
    }
    UnitComponents out;
    out.component_of_unit.assign(units.size(), -1);
    std::map<int, int> root_to_id;
    for (std::size_t i = 0; i < units.size(); ++i) {
        int r = find(int(i));
        auto it = root_to_id.find(r);
        if (it == root_to_id.end()) {
            it = root_to_id.emplace(r, int(root_to_id.size())).first;
            out.witnesses.push_back(units[i].witness);
        }
        out.component_of_unit[i] = it->second;
    }
    out.count = int(root_to_id.size());
    return out;
}

std::vector<ConvexCell> units_as_cells(const std::vector<RegionUnit>& units) {
    std::vector<ConvexCell> cells;
    for (const RegionUnit& u : units) {
        switch (u.kind) {
            case RegionUnit::Kind::Area: cells.push_back(u.cell); break;
            case RegionUnit::Kind::Pt: {
                ConvexCell c;
                c.xlo = c.xhi = Bound::at(u.pt.x);
                c.lower.pieces = {CellPiece{Line{0, u.pt.y}, true}};
                c.upper = c.lower;
                cells.push_back(std::move(c));
                break;
            }
            case RegionUnit::Kind::Seg: {
                ConvexCell c;
                c.xlo = u.iv.lo;
                c.xhi = u.iv.hi;
                c.lower.pieces = {CellPiece{u.carrier, u.iv.lo_closed && u.iv.hi_closed}};
                c.upper = c.lower;
                cells.push_back(std::move(c));
                break;
            }
        }
    }
    return cells;
}

}  // namespace

IntersectionResult intersect_bowties(const std::vector<DoubleWedge>& wedges) {
    for (const DoubleWedge& d : wedges)
        if (d.kind() != WedgeKind::Bowtie)
            throw std::invalid_argument("intersect_bowties: input contains an hourglass");

    std::vector<ConvexCell> cells = bowtie_cells(wedges);
    std::vector<RegionUnit> units = refine_cells(cells, wedges);
    UnitComponents comps = glue_units(units, wedges);

    IntersectionResult r;
    r.algorithm = "bowtie";
    r.nonempty = !units.empty();
    r.component_count = comps.count;
    r.witnesses = std::move(comps.witnesses);
    r.convex_regions = units_as_cells(units);
    return r;
}

// ---------------------------------------------------------------------------
// General path

IntersectionResult intersect_general(const std::vector<DoubleWedge>& wedges) {
    std::vector<Line> lines;
    lines.reserve(wedges.size() * 2);
    for (const DoubleWedge& d : wedges) {
        lines.push_back(d.l1);
        lines.push_back(d.l2);
    }
    Arrangement arr = build_arrangement(lines);
    DepthLabels labels = depth_labels(arr, wedges);
    CellSet sel = select_cells_depth_eq(arr, labels, int(wedges.size()));
    Components comps = components_of(arr, sel);

    IntersectionResult r;
    r.algorithm = "general";
    r.nonempty = !(sel.faces.empty() && sel.edge_pairs.empty() && sel.vertex_ids.empty());
    r.component_count = comps.count;
    r.witnesses = std::move(comps.witnesses);
    r.cells = std::move(sel);
    return r;
}

IntersectionResult threshold_cells(const std::vector<DoubleWedge>& wedges, int b, int h) {
    int nb = 0, nh = 0;
    for (const DoubleWedge& d : wedges) (d.kind() == WedgeKind::Bowtie ? nb : nh)++;
    if (b < 0 || b > nb || h < 0 || h > nh)
        throw std::invalid_argument("threshold_cells: thresholds out of range");

    std::vector<Line> lines;
    for (const DoubleWedge& d : wedges) {
        lines.push_back(d.l1);
        lines.push_back(d.l2);
    }
    Arrangement arr = build_arrangement(lines);
    DepthLabels labels = depth_labels(arr, wedges);
    CellSet sel = select_cells_threshold(arr, labels, b, h);
    Components comps = components_of(arr, sel);

    IntersectionResult r;
    r.algorithm = "general";
    r.nonempty = !(sel.faces.empty() && sel.edge_pairs.empty() && sel.vertex_ids.empty());
    r.component_count = comps.count;
    r.witnesses = std::move(comps.witnesses);
    r.cells = std::move(sel);
    return r;
}

// ---------------------------------------------------------------------------
// Parameterized overlay

namespace {

// Component structure of (2-D cell C) intersected with the full wedge set,
// via a local line arrangement refined by C's own boundary lines.
struct LocalPieces {
    int components = 0;
    std::vector<Point> witnesses;          // per local component, interior-first
    std::vector<char> witness_is_face;     // parallel to witnesses
    // component index at a given contact point, or -1
    std::map<Point, int> component_at;
};

LocalPieces overlay_cell(const ConvexCell& C, const std::vector<DoubleWedge>& wedges,
                         const std::vector<Line>& hourglass_lines,
                         const std::vector<Point>& contact_points) {
    std::vector<Line> lines = hourglass_lines;
    for (const CellPiece& p : C.lower.pieces) lines.push_back(p.ln);
    for (const CellPiece& p : C.upper.pieces) lines.push_back(p.ln);
    Arrangement arr = build_arrangement(lines);

    CellSet sel;
    auto keep = [&](const Point& pt) { return C.contains_closed(pt) && in_all(wedges, pt); };
    for (std::size_t f = 1; f < arr.faces.size(); ++f)
        if (keep(arr.face_sample(int32_t(f)))) sel.faces.push_back(int32_t(f));
    for (std::size_t pair = 0; pair < arr.half_edges.size() / 2; ++pair) {
        if (arr.is_box_edge(int32_t(pair * 2))) continue;
        if (keep(arr.edge_midpoint(int32_t(pair * 2)))) sel.edge_pairs.push_back(int32_t(pair));
    }
    for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
        if (arr.on_box_boundary(arr.vertices[v].p)) continue;
        if (keep(arr.vertices[v].p)) sel.vertex_ids.push_back(int32_t(v));
    }

    // Union-find mirroring components_of, but keeping per-cell roots so the
    // contact points can be located.
    const std::size_t F = arr.faces.size();
    const std::size_t E = arr.half_edges.size() / 2;
    const std::size_t V = arr.vertices.size();
    std::vector<int> parent(F + E + V);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    std::vector<char> fsel(F, 0), vsel(V, 0);
    for (int32_t f : sel.faces) fsel[f] = 1;
    for (int32_t v : sel.vertex_ids) vsel[v] = 1;
    auto eid = [&](int32_t pe) { return int(F) + pe; };
    auto vid = [&](int32_t v) { return int(F + E) + v; };
    for (int32_t pe : sel.edge_pairs) {
        int32_t h = pe * 2;
        int32_t fa = arr.half_edges[h].face;
        int32_t fb = arr.half_edges[Arrangement::twin(h)].face;
        if (!arr.faces[fa].outer && fsel[fa]) parent[find(eid(pe))] = find(fa);
        if (!arr.faces[fb].outer && fsel[fb]) parent[find(eid(pe))] = find(fb);
        int32_t v1 = arr.half_edges[h].target;
        int32_t v2 = arr.origin(h);
        if (vsel[v1]) parent[find(eid(pe))] = find(vid(v1));
        if (vsel[v2]) parent[find(eid(pe))] = find(vid(v2));
    }

    LocalPieces out;
    std::map<int, int> root_to_id;
    auto comp_id = [&](int cell, const Point& witness, bool is_face) {
        int r = find(cell);
        auto it = root_to_id.find(r);
        if (it == root_to_id.end()) {
            it = root_to_id.emplace(r, int(root_to_id.size())).first;
            out.witnesses.push_back(witness);
            out.witness_is_face.push_back(is_face);
        } else if (is_face && !out.witness_is_face[it->second]) {
            out.witnesses[it->second] = witness;
            out.witness_is_face[it->second] = 1;
        }
        return it->second;
    };
    for (int32_t f : sel.faces) comp_id(f, arr.face_sample(f), true);
    for (int32_t pe : sel.edge_pairs) comp_id(eid(pe), arr.edge_midpoint(pe * 2), false);
    for (int32_t v : sel.vertex_ids) comp_id(vid(v), arr.vertices[v].p, false);
    out.components = int(root_to_id.size());

    for (const Point& p : contact_points) {
        int found = -1;
        for (std::size_t v = 0; v < V; ++v) {
            if (arr.vertices[v].p == p) {
                if (vsel[v]) {
                    auto it = root_to_id.find(find(vid(int32_t(v))));
                    if (it != root_to_id.end()) found = it->second;
                }
                break;
            }
        }
        out.component_at[p] = found;
    }
    return out;
}

}  // namespace

IntersectionResult intersect_parameterized(const std::vector<DoubleWedge>& wedges) {
    std::vector<DoubleWedge> bowties, hourglasses;
    for (const DoubleWedge& d : wedges)
        (d.kind() == WedgeKind::Bowtie ? bowties : hourglasses).push_back(d);

    if (hourglasses.empty()) {
        IntersectionResult rb = intersect_bowties(bowties);
        rb.algorithm = "parameterized";
        return rb;
    }

    std::vector<Line> hlines;
    for (const DoubleWedge& d : hourglasses) {
        hlines.push_back(d.l1);
        hlines.push_back(d.l2);
    }

    std::vector<ConvexCell> cells = bowtie_cells(bowties);
    std::vector<RegionUnit> units = refine_cells(cells, bowties);

    // Global components: (unit, local component) pairs glued at contact points.
    struct Node {
        Point witness;
        bool is_face;
    };
    std::vector<Node> nodes;
    std::vector<int> parent;
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto add_node = [&](const Point& w, bool is_face) {
        nodes.push_back({w, is_face});
        parent.push_back(int(parent.size()));
        return int(parent.size()) - 1;
    };

    // component handle for each unit at each of its contact points
    std::map<Point, std::vector<int>> at_point;

    for (const RegionUnit& u : units) {
        switch (u.kind) {
            case RegionUnit::Kind::Pt: {
                if (!in_all(hourglasses, u.pt)) break;
                int id = add_node(u.pt, false);
                at_point[u.pt].push_back(id);
                break;
            }
            case RegionUnit::Kind::Seg: {
                IntervalSet1D set = IntervalSet1D::single(u.iv);
                for (const DoubleWedge& d : hourglasses) {
                    set = intersect(set, wedge_slice(d, u.carrier));
                    if (set.is_empty()) break;
                }
                for (const Interval1D& part : set.parts) {
                    Rational wx;
                    if (part.lo.finite() && part.hi.finite())
                        wx = (part.lo.x + part.hi.x) / 2;
                    else if (part.lo.finite())
                        wx = part.lo.x + 1;
                    else if (part.hi.finite())
                        wx = part.hi.x - 1;
                    else
                        wx = 0;
                    int id = add_node(point_on(u.carrier, wx), false);
                    if (part.lo.finite()) at_point[point_on(u.carrier, part.lo.x)].push_back(id);
                    if (part.hi.finite()) at_point[point_on(u.carrier, part.hi.x)].push_back(id);
                }
                break;
            }
            case RegionUnit::Kind::Area: {
                LocalPieces pieces = overlay_cell(u.cell, wedges, hlines, u.ends);
                std::vector<int> ids;
                for (int c = 0; c < pieces.components; ++c)
                    ids.push_back(add_node(pieces.witnesses[c], pieces.witness_is_face[c]));
                for (const Point& p : u.ends) {
                    auto it = pieces.component_at.find(p);
                    if (it != pieces.component_at.end() && it->second >= 0)
                        at_point[p].push_back(ids[it->second]);
                }
                break;
            }
        }
    }

    for (auto& [p, ids] : at_point) {
        if (ids.size() < 2) continue;
        if (!in_all(wedges, p)) continue;
        for (std::size_t i = 1; i < ids.size(); ++i) parent[find(ids[0])] = find(ids[i]);
    }

    IntersectionResult r;
    r.algorithm = "parameterized";
    std::map<int, int> root_to_id;
    std::vector<char> witness_is_face;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        int root = find(int(i));
        auto it = root_to_id.find(root);
        if (it == root_to_id.end()) {
            root_to_id.emplace(root, int(root_to_id.size()));
            r.witnesses.push_back(nodes[i].witness);
            witness_is_face.push_back(nodes[i].is_face);
        } else if (nodes[i].is_face && !witness_is_face[it->second]) {
            r.witnesses[it->second] = nodes[i].witness;
            witness_is_face[it->second] = 1;
        }
    }
    r.component_count = int(root_to_id.size());
    r.nonempty = !nodes.empty();
    return r;
}

// ---------------------------------------------------------------------------

IntersectionResult decide_intersection(const std::vector<DoubleWedge>& wedges) {
    SlopeCoverage cov = find_uncovered_slope(wedges);
    if (cov.verdict == SlopeCoverage::Verdict::AllBowties) {
        return intersect_bowties(wedges);
    }
    if (cov.verdict == SlopeCoverage::Verdict::Uncovered) {
        const Rational& a = *cov.uncovered_slope;
        IntersectionResult r = intersect_bowties(shear_to_bowties(wedges, a));
        for (Point& w : r.witnesses) w = unshear_point(w, a);
        r.convex_regions.reset();  // regions live in the sheared frame
        return r;
    }
    return intersect_general(wedges);
}

}  // namespace dwedge
