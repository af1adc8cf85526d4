#include "dwedge/constructions.hpp"

#include <mpfr.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dwedge/intersect.hpp"

namespace dwedge {

// ---------------------------------------------------------------------------
// Grating

namespace {

std::vector<DoubleWedge> grating_attempt(int k, const Rational& lambda) {
    std::vector<DoubleWedge> wedges;
    if (k == 1) {
        // With closed wedges and full slope coverage a 2-wedge intersection
        // tops out at 3 closed components, so the k = 1 grating is open.
        Line b1{2, 0}, b2{-2, 0};
        wedges.emplace_back(b1, b2, -1, false);
        Rational s = Rational(1) / (2 * lambda);
        Rational cx(1, 5);
        wedges.emplace_back(Line{s, -s * cx}, Line{-s, s * cx}, +1, false);
        return wedges;
    }

    // Bowtie origins (k*i, 0); the last one is lifted to just under height 1
    // so the exclusion hourglasses can separate every touching point.
    Rational eps = (Rational(k) - Rational(1, 5)) / (8 * lambda);
    for (int i = 0; i < k; ++i) {
        Rational ox = Rational(k) * i;
        Rational oy = (i == k - 1) ? Rational(1) - eps : Rational(0);
        wedges.emplace_back(Line{2, oy - 2 * ox}, Line{-2, oy + 2 * ox}, -1, true);
    }
    // Hourglasses at integer heights; the height-0 one sits to the right of
    // the lifted bowtie, all others share x = 1/5.
    Rational s = Rational(1) / (2 * lambda);
    int j0 = (k - 1) / 2;
    for (int j = 0; j < k; ++j) {
        Rational h = Rational(j - j0);
        Rational cx = h.is_zero() ? Rational(k) * (k - 1) + Rational(1, 5) : Rational(1, 5);
        wedges.emplace_back(Line{s, h - s * cx}, Line{-s, h + s * cx}, +1, true);
    }
    return wedges;
}

}  // namespace

std::vector<DoubleWedge> make_grating(int k) {
    if (k < 1) throw std::invalid_argument("make_grating: k must be positive");
    Rational lambda = 2 * Rational(k) * Rational(k);
    const int expected = (k + 1) * (k + 1);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<DoubleWedge> wedges = grating_attempt(k, lambda);
        // The component count is the construction's authority.
        IntersectionResult check = intersect_general(wedges);
        bool distinct = true;
        for (std::size_t i = 0; i < wedges.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < wedges.size(); ++j)
                if (wedges[i] == wedges[j]) {
                    distinct = false;
                    break;
                }
        bool covered = find_uncovered_slope(wedges).verdict == SlopeCoverage::Verdict::FullyCovered;
        if (check.component_count == expected && distinct && covered) return wedges;
        lambda *= 2;
    }
    throw std::runtime_error("make_grating: self-validation failed");
}

// ---------------------------------------------------------------------------
// GeomBase and the SAS reduction

GeomBaseInstance geombase_from_3sum(const std::vector<long long>& numbers) {
    if (numbers.empty()) throw std::invalid_argument("geombase_from_3sum: empty input");
    std::set<GeomBaseInstance::RowPoint> pts;
    for (long long v : numbers) {
        pts.insert({2 * v, 0});
        pts.insert({2 * v, 2});
        pts.insert({-v, 1});
    }
    long long minx = pts.begin()->x;
    for (const auto& p : pts) minx = std::min(minx, p.x);
    GeomBaseInstance u;
    for (const auto& p : pts) u.points.push_back({p.x + 1 - minx, p.row});
    std::sort(u.points.begin(), u.points.end());
    return u;
}

bool brute_force_3sum(const std::vector<long long>& numbers) {
    for (long long a : numbers)
        for (long long b : numbers)
            for (long long c : numbers)
                if (a + b + c == 0) return true;
    return false;
}

bool brute_force_geombase(const GeomBaseInstance& u) {
    std::vector<long long> row[3];
    for (const auto& p : u.points) row[p.row].push_back(p.x);
    for (long long a : row[0])
        for (long long b : row[1])
            for (long long c : row[2])
                if (a + c == 2 * b) return true;
    return false;
}

namespace {

const Rational kSasEps(1, 1000000);

}  // namespace

Point sas_frame_map(const Point& p) {
    return Point{p.x + kSasEps * p.y, kSasEps * p.x + p.y};
}

Point sas_frame_unmap(const Point& p) {
    Rational det = Rational(1) - kSasEps * kSasEps;
    return Point{(p.x - kSasEps * p.y) / det, (p.y - kSasEps * p.x) / det};
}

SasInstance sas_from_geombase(const GeomBaseInstance& u) {
    if (u.points.empty()) throw std::invalid_argument("sas_from_geombase: empty instance");
    long long minx = u.points.front().x, maxx = u.points.front().x;
    for (const auto& p : u.points) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
    }
    if (minx != 1) throw std::invalid_argument("sas_from_geombase: instance not normalized to min x = 1");
    const Rational X(maxx);
    const Rational quarter(1, 4);

    auto seg = [](const Point& a, const Point& b) {
        return Segment(sas_frame_map(a), sas_frame_map(b), true, true);
    };

    SasInstance inst;
    // Vertical sides of the rectangle (never punctured).
    inst.avoid.push_back(seg(Point{0, 0}, Point{0, 2}));
    inst.avoid.push_back(seg(Point{X + 1, 0}, Point{X + 1, 2}));
    // Rows y = 0, 1, 2 punctured by an open gap of radius 1/4 at each point.
    for (int row = 0; row <= 2; ++row) {
        std::vector<Rational> cuts;
        for (const auto& p : u.points)
            if (p.row == row) cuts.push_back(Rational(p.x));
        std::sort(cuts.begin(), cuts.end());
        Rational y(row);
        Rational start(0);
        for (const Rational& c : cuts) {
            inst.avoid.push_back(seg(Point{start, y}, Point{c - quarter, y}));
            start = c + quarter;
        }
        inst.avoid.push_back(seg(Point{start, y}, Point{X + 1, y}));
    }
    inst.stab.push_back(seg(Point{quarter, Rational(1, 2)}, Point{X + 1 - quarter, Rational(1, 2)}));
    return inst;
}

std::vector<Rational> sas_witness_row_crossings(const SasResult& witness) {
    Point a, b;  // two points of the witness line in the mapped frame
    if (witness.kind == SasResult::Kind::Line) {
        a = Point{0, witness.line.b};
        b = Point{1, witness.line.a + witness.line.b};
    } else if (witness.kind == SasResult::Kind::Vertical) {
        a = Point{witness.x, 0};
        b = Point{witness.x, 1};
    } else {
        return {};
    }
    Point ua = sas_frame_unmap(a);
    Point ub = sas_frame_unmap(b);
    Rational dy = ub.y - ua.y;
    if (dy.is_zero()) return {};
    std::vector<Rational> xs;
    for (int row = 0; row <= 2; ++row) {
        Rational t = (Rational(row) - ua.y) / dy;
        xs.push_back(ua.x + t * (ub.x - ua.x));
    }
    return xs;
}

// ---------------------------------------------------------------------------
// Nonagon family

namespace {

// cos/sin of 2*pi*k/9 rounded to `digits` decimal digits, computed with MPFR.
Point ninth_root_point(int k, int digits) {
    mpfr_t angle, c, s, scale;
    mpfr_inits2(256, angle, c, s, scale, (mpfr_ptr) nullptr);
    mpfr_const_pi(angle, MPFR_RNDN);
    mpfr_mul_si(angle, angle, 2 * k, MPFR_RNDN);
    mpfr_div_si(angle, angle, 9, MPFR_RNDN);
    mpfr_cos(c, angle, MPFR_RNDN);
    mpfr_sin(s, angle, MPFR_RNDN);
    mpz_class den = 1;
    for (int i = 0; i < digits; ++i) den *= 10;
    mpfr_set_z(scale, den.get_mpz_t(), MPFR_RNDN);
    mpfr_mul(c, c, scale, MPFR_RNDN);
    mpfr_mul(s, s, scale, MPFR_RNDN);
    mpz_class cz, sz;
    mpfr_get_z(cz.get_mpz_t(), c, MPFR_RNDN);
    mpfr_get_z(sz.get_mpz_t(), s, MPFR_RNDN);
    mpfr_clears(angle, c, s, scale, (mpfr_ptr) nullptr);
    return Point{Rational(cz, den), Rational(sz, den)};
}

Line through(const Point& a, const Point& b) {
    Rational slope = (b.y - a.y) / (b.x - a.x);
    return Line{slope, a.y - slope * a.x};
}

Point segment_crossing(const Segment& a, const Segment& b) {
    LineMeet m = line_intersection(a.carrier(), b.carrier());
    if (!std::holds_alternative<Point>(m))
        throw std::runtime_error("make_nonagon_family: expected crossing segments");
    return std::get<Point>(m);
}

}  // namespace

std::vector<FamilyElement> NonagonFamily::all() const {
    std::vector<FamilyElement> out;
    for (const Segment& g : greens) out.push_back(g);
    for (const AntiSegment& r : reds) out.push_back(r);
    for (const AntiSegment& q : purples) out.push_back(q);
    return out;
}

NonagonFamily make_nonagon_family(int precision) {
    if (precision < 4) throw std::invalid_argument("make_nonagon_family: precision must be >= 4");

    NonagonFamily fam;
    fam.precision = precision;
    // Rounded 9-gon vertices, then a tiny shear x += y/10^4: the regular
    // 9-gon with a vertex at angle 0 has the vertical chord p2-p7, which the
    // segment type cannot carry. The shear fixes that, keeps p_0 = (1, 0) and
    // preserves the order type.
    const Rational sigma(1, 10000);
    for (int k = 0; k < 9; ++k) {
        Point p = ninth_root_point(k, precision);
        fam.base_points.push_back(Point{p.x + sigma * p.y, p.y});
    }
    const auto& P = fam.base_points;

    // Order-type validation against the ideal 9-gon: counter-clockwise convex
    // position makes every increasing triple positively oriented.
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            for (int k = j + 1; k < 9; ++k)
                if (orient(P[i], P[j], P[k]) <= 0)
                    throw std::runtime_error(
                        "make_nonagon_family: order type deviates from the regular 9-gon; increase precision");

    for (int k = 0; k < 9; ++k)
        fam.greens.push_back(Segment(P[k], P[(k + 3) % 9], true, true));
    for (int k = 0; k < 9; ++k)
        fam.reds.push_back(AntiSegment(Segment(P[k], P[(k + 4) % 9], false, false)));

    for (int k = 0; k < 9; ++k) {
        Line e1 = through(P[(k + 8) % 9], P[k]);
        Line e2 = through(P[(k + 1) % 9], P[(k + 2) % 9]);
        LineMeet m = line_intersection(e1, e2);
        if (!std::holds_alternative<Point>(m))
            throw std::runtime_error("make_nonagon_family: parallel 9-gon edges; increase precision");
        fam.w_points.push_back(std::get<Point>(m));
    }
    for (int k = 0; k < 9; ++k) {
        Point qk = segment_crossing(fam.greens[(k + 2) % 9], fam.greens[(k + 4) % 9]);
        Point qtk = segment_crossing(fam.greens[(k + 3) % 9], fam.greens[(k + 5) % 9]);
        fam.purples.push_back(AntiSegment(Segment(fam.w_points[k], qk, true, true)));
        fam.purples.push_back(AntiSegment(Segment(fam.w_points[k], qtk, true, true)));
    }
    return fam;
}

}  // namespace dwedge
