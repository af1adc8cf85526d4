#include "dwedge/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "dwedge/arrangement.hpp"
#include "dwedge/stabbing.hpp"

namespace dwedge {

namespace {

Rational nudge_off(const Rational& x, const Rational& lo_gap, const Rational& hi_gap,
                   const std::vector<Rational>& avoid) {
    // Move x within (x - lo_gap, x + hi_gap) until it misses every avoided value.
    if (std::find(avoid.begin(), avoid.end(), x) == avoid.end()) return x;
    Rational step = min(lo_gap, hi_gap) / 2;
    Rational cand = x + step;
    while (std::find(avoid.begin(), avoid.end(), cand) != avoid.end()) {
        step /= 2;
        cand = x + step;
    }
    return cand;
}

}  // namespace

CandidatePool build_candidate_pool(const std::vector<Line>& lines_in,
                                   const std::vector<Rational>& avoid_xs) {
    std::vector<Line> lines = lines_in;
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    CandidatePool pool;
    pool.points.push_back(Point{0, 0});  // base point

    // Pairwise crossings, grouped per line.
    std::vector<std::vector<Rational>> xs(lines.size());
    std::vector<Point> vertices;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].a == lines[j].a) continue;
            Rational x = (lines[j].b - lines[i].b) / (lines[i].a - lines[j].a);
            xs[i].push_back(x);
            xs[j].push_back(x);
            vertices.push_back(Point{x, lines[i].eval(x)});
        }
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (const Point& v : vertices) pool.points.push_back(v);

    // Diagonal perturbations of every vertex, delta from the largest pairwise
    // coordinate separation.
    if (!vertices.empty()) {
        Rational sep = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j) {
                sep = max(sep, (vertices[i].x - vertices[j].x).abs());
                sep = max(sep, (vertices[i].y - vertices[j].y).abs());
            }
        Rational delta = Rational(1) / (2 * (1 + sep));
        for (const Point& v : vertices) {
            pool.points.push_back(Point{v.x + delta, v.y + delta});
            pool.points.push_back(Point{v.x + delta, v.y - delta});
            pool.points.push_back(Point{v.x - delta, v.y + delta});
            pool.points.push_back(Point{v.x - delta, v.y - delta});
        }
    }

    // On-line samples: between consecutive crossings, one beyond each extreme,
    // and the intercept point for crossing-free lines. Each sample also gets
    // vertical perturbations below the smallest vertical gap to other lines,
    // which lands one point in each face flanking the sample's edge.
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::sort(xs[i].begin(), xs[i].end());
        xs[i].erase(std::unique(xs[i].begin(), xs[i].end()), xs[i].end());
        std::vector<std::pair<Rational, std::pair<Rational, Rational>>> samples;  // x, (logap, higap)
        if (xs[i].empty()) {
            samples.push_back({0, {1, 1}});
        } else {
            samples.push_back({xs[i].front() - 1, {1, 1}});
            samples.push_back({xs[i].back() + 1, {1, 1}});
            for (std::size_t k = 0; k + 1 < xs[i].size(); ++k) {
                Rational gap = (xs[i][k + 1] - xs[i][k]) / 2;
                samples.push_back({(xs[i][k] + xs[i][k + 1]) / 2, {gap, gap}});
            }
        }
        for (auto& [sx, gaps] : samples) {
            Rational x = nudge_off(sx, gaps.first, gaps.second, avoid_xs);
            Point on{x, lines[i].eval(x)};
            pool.points.push_back(on);
            // smallest vertical distance to any other line at this x
            Rational dmin;
            bool have = false;
            for (std::size_t j = 0; j < lines.size(); ++j) {
                if (j == i) continue;
                Rational d = (lines[j].eval(x) - on.y).abs();
                if (!have || d < dmin) {
                    dmin = d;
                    have = true;
                }
            }
            Rational dy = have ? dmin / 2 : Rational(1);
            if (dy.is_zero()) continue;  // sample sits on another line; vertices cover it
            pool.points.push_back(Point{on.x, on.y + dy});
            pool.points.push_back(Point{on.x, on.y - dy});
        }
    }

    std::sort(pool.points.begin(), pool.points.end());
    pool.points.erase(std::unique(pool.points.begin(), pool.points.end()), pool.points.end());
    return pool;
}

namespace {

const Segment& complement_of(const FamilyElement& e) {
    if (std::holds_alternative<Segment>(e)) return std::get<Segment>(e);
    return std::get<AntiSegment>(e).complement;
}

std::vector<Point> family_endpoints(const std::vector<FamilyElement>& family) {
    std::vector<Point> pts;
    for (const FamilyElement& e : family) {
        const Segment& s = complement_of(e);
        pts.push_back(s.p);
        pts.push_back(s.q);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

std::vector<Rational> vertical_candidates(const std::vector<FamilyElement>& family) {
    std::vector<Rational> xs;
    for (const Point& p : family_endpoints(family)) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.empty()) return {};
    std::vector<Rational> out;
    out.push_back(xs.front() - 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out.push_back(xs[i]);
        if (i + 1 < xs.size()) out.push_back((xs[i] + xs[i + 1]) / 2);
    }
    out.push_back(xs.back() + 1);
    return out;
}

OracleIntersection oracle_intersect(const std::vector<DoubleWedge>& wedges) {
    std::vector<Line> lines;
    for (const DoubleWedge& d : wedges) {
        lines.push_back(d.l1);
        lines.push_back(d.l2);
    }
    auto in_all = [&](const Point& p) {
        for (const DoubleWedge& d : wedges)
            if (!contains(d, p)) return false;
        return true;
    };

    OracleIntersection out;
    CandidatePool pool = build_candidate_pool(lines);
    for (const Point& p : pool.points) {
        if (in_all(p)) {
            out.nonempty = true;
            out.witness = p;
            break;
        }
    }

    // Component count by independent per-cell evaluation.
    Arrangement arr = build_arrangement(lines);
    CellSet sel;
    for (std::size_t f = 1; f < arr.faces.size(); ++f)
        if (in_all(arr.face_sample(int32_t(f)))) sel.faces.push_back(int32_t(f));
    for (std::size_t pair = 0; pair < arr.half_edges.size() / 2; ++pair) {
        if (arr.is_box_edge(int32_t(pair * 2))) continue;
        if (in_all(arr.edge_midpoint(int32_t(pair * 2)))) sel.edge_pairs.push_back(int32_t(pair));
    }
    for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
        if (arr.on_box_boundary(arr.vertices[v].p)) continue;
        if (in_all(arr.vertices[v].p)) sel.vertex_ids.push_back(int32_t(v));
    }
    Components comps = components_of(arr, sel);
    out.component_count = comps.count;
    return out;
}

// ---------------------------------------------------------------------------

bool pierces(const PiercingLine& l, const FamilyElement& e) {
    if (std::holds_alternative<Segment>(e)) {
        const Segment& s = std::get<Segment>(e);
        if (l.vertical) return vertical_meets_segment(l.x, s);
        return line_meets_segment(l.line, s);
    }
    const Segment& c = std::get<AntiSegment>(e).complement;
    Line carrier = c.carrier();
    Rational zx;  // x of the crossing with the carrier
    if (l.vertical) {
        zx = l.x;
    } else {
        if (l.line.a == carrier.a) return l.line.b == carrier.b;  // parallel: only the carrier itself
        zx = (carrier.b - l.line.b) / (l.line.a - carrier.a);
    }
    // Pierces iff the crossing lies outside the complement (endpoints belong
    // to the anti-segment exactly when the complement excludes them).
    if (zx == c.p.x) return !c.include_p;
    if (zx == c.q.x) return !c.include_q;
    return zx < c.p.x || c.q.x < zx;
}

namespace {

DoubleWedge dual_element(const FamilyElement& e) {
    if (std::holds_alternative<Segment>(e)) return dual_segment_to_bowtie(std::get<Segment>(e));
    return dual_antisegment_to_hourglass(std::get<AntiSegment>(e));
}

bool pierces_all(const PiercingLine& l, const std::vector<FamilyElement>& family) {
    for (const FamilyElement& e : family)
        if (!pierces(l, e)) return false;
    return true;
}

std::vector<PiercingLine> candidate_lines(const std::vector<FamilyElement>& family) {
    std::vector<Point> endpoints = family_endpoints(family);
    std::vector<Line> duals;
    duals.reserve(endpoints.size());
    for (const Point& p : endpoints) duals.push_back(dual_point_to_line(p));

    // Masks must be cell-generic: nudge dual samples off the carrier slopes,
    // where piercing degenerates to the parallel case.
    std::vector<Rational> carrier_slopes;
    for (const FamilyElement& e : family) carrier_slopes.push_back(complement_of(e).carrier().a);

    CandidatePool pool = build_candidate_pool(duals, carrier_slopes);
    std::vector<PiercingLine> cands;
    cands.reserve(pool.points.size());
    for (const Point& w : pool.points) cands.push_back(PiercingLine::non_vertical(dual_point_to_line(w)));
    for (const Rational& x : vertical_candidates(family)) cands.push_back(PiercingLine::at_x(x));
    return cands;
}

}  // namespace

bool triple_pierceable(const FamilyElement& a, const FamilyElement& b, const FamilyElement& c) {
    std::vector<FamilyElement> triple{a, b, c};
    std::vector<DoubleWedge> wedges;
    for (const FamilyElement& e : triple) wedges.push_back(dual_element(e));

    IntersectionResult r = decide_intersection(wedges);
    for (const Point& w : r.witnesses) {
        if (pierces_all(PiercingLine::non_vertical(dual_point_to_line(w)), triple)) return true;
    }
    // Wedge membership and true piercing differ only on carriers, parallels
    // and verticals; sweep those exactly.
    for (const FamilyElement& e : triple) {
        if (pierces_all(PiercingLine::non_vertical(complement_of(e).carrier()), triple)) return true;
    }
    for (const Rational& x : vertical_candidates(triple)) {
        if (pierces_all(PiercingLine::at_x(x), triple)) return true;
    }
    if (!r.nonempty) return false;
    // Complete fallback: one sample per cell of the dual arrangement.
    for (const PiercingLine& cand : candidate_lines(triple)) {
        if (pierces_all(cand, triple)) return true;
    }
    return false;
}

TripleReport triple_pierceable_all(const std::vector<FamilyElement>& family) {
    TripleReport rep;
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!triple_pierceable(family[i], family[j], family[k])) {
                    rep.all_pierceable = false;
                    rep.failing = {i, j, k};
                    return rep;
                }
            }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint64_t;

Mask pierce_mask(const PiercingLine& l, const std::vector<FamilyElement>& family) {
    Mask m = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (pierces(l, family[i])) m |= Mask(1) << i;
    return m;
}

int popcount(Mask m) {
    return __builtin_popcountll(m);
}

}  // namespace

std::optional<std::vector<PiercingLine>> piercing_with_lines(
    const std::vector<FamilyElement>& family, int p, const std::vector<Segment>& prune_set) {
    if (p < 1 || p > 3) throw std::invalid_argument("piercing_with_lines: p must be 1, 2 or 3");
    if (family.empty() || family.size() > 64)
        throw std::invalid_argument("piercing_with_lines: family size must be in [1, 64]");

    const Mask full = family.size() == 64 ? ~Mask(0) : (Mask(1) << family.size()) - 1;
    std::vector<PiercingLine> cands = candidate_lines(family);

    // Deduplicate candidates by mask; a candidate dominated by another with a
    // superset mask could be dropped too, but plain mask dedup is enough.
    std::vector<PiercingLine> lines;
    std::vector<Mask> masks;
    {
        std::set<Mask> seen;
        for (const PiercingLine& c : cands) {
            Mask m = pierce_mask(c, family);
            if (seen.insert(m).second) {
                lines.push_back(c);
                masks.push_back(m);
            }
        }
    }

    auto certified = [&](std::vector<PiercingLine> sol) -> std::optional<std::vector<PiercingLine>> {
        for (const FamilyElement& e : family) {
            bool hit = false;
            for (const PiercingLine& l : sol)
                if (pierces(l, e)) hit = true;
            if (!hit) throw std::logic_error("piercing_with_lines: solution failed certification");
        }
        return sol;
    };

    if (p == 1) {
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (masks[i] == full) return certified({lines[i]});
        return std::nullopt;
    }

    // Pigeonhole filter: in any solution, some line pierces at least
    // ceil(m/2) (p=2) of the prune set, or ceil(n/p) of the family.
    Mask prune_mask = 0;
    if (!prune_set.empty()) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (const Segment* s = std::get_if<Segment>(&family[i])) {
                for (const Segment& ps : prune_set)
                    if (*s == ps) prune_mask |= Mask(1) << i;
            }
        }
    }

    if (p == 2) {
        int need = prune_mask ? (popcount(prune_mask) + 1) / 2 : (int(family.size()) + 1) / 2;
        Mask filter = prune_mask ? prune_mask : full;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (popcount(masks[i] & filter) < need) continue;
            Mask rest = full & ~masks[i];
            for (std::size_t j = 0; j < masks.size(); ++j) {
                if ((masks[j] & rest) == rest) return certified({lines[i], lines[j]});
            }
        }
        return std::nullopt;
    }

    // p == 3
    std::vector<std::size_t> order(masks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return popcount(masks[a]) > popcount(masks[b]); });
    int need1 = (int(family.size()) + 2) / 3;
    for (std::size_t oi : order) {
        if (popcount(masks[oi]) < need1) break;
        Mask r1 = full & ~masks[oi];
        int need2 = (popcount(r1) + 1) / 2;
        for (std::size_t oj : order) {
            if (popcount(masks[oj] & r1) < need2) continue;
            Mask r2 = r1 & ~masks[oj];
            for (std::size_t ok = 0; ok < masks.size(); ++ok) {
                if ((masks[ok] & r2) == r2) return certified({lines[oi], lines[oj], lines[ok]});
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Oq1Outcome oq1_experiment(std::uint64_t seed, int trials, int family_size) {
    std::mt19937_64 rng(seed);
    auto rnd = [&](long lo, long hi) { return long(lo + rng() % std::uint64_t(hi - lo + 1)); };

    Oq1Outcome out;
    for (int t = 0; t < trials; ++t) {
        std::vector<FamilyElement> family;
        while (int(family.size()) < family_size) {
            Point p{Rational(rnd(-12, 12)), Rational(rnd(-12, 12))};
            Point q{Rational(rnd(-12, 12)), Rational(rnd(-12, 12))};
            if (p.x == q.x) continue;
            family.push_back(Segment(p, q, true, true));
        }
        ++out.families_tested;
        if (!triple_pierceable_all(family).all_pierceable) continue;
        ++out.three_pierceable;
        std::vector<Segment> segs;
        for (const FamilyElement& e : family) segs.push_back(std::get<Segment>(e));
        if (piercing_with_lines(family, 2, segs)) ++out.two_line_coverable;
    }
    return out;
}

}  // namespace dwedge
