// Acceptance suite. Each criterion runs standalone (argv[1] in 1..8, or
// "all") and prints one PASS/FAIL line; the process exits nonzero if any
// executed criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dwedge/constructions.hpp"
#include "dwedge/intersect.hpp"
#include "dwedge/json_io.hpp"
#include "dwedge/oracle.hpp"
#include "dwedge/random_instances.hpp"
#include "dwedge/stabbing.hpp"

using namespace dwedge;

namespace {

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

bool in_all(const std::vector<DoubleWedge>& wedges, const Point& p) {
    for (const DoubleWedge& d : wedges)
        if (!contains(d, p)) return false;
    return true;
}

bool in_all_by_traces(const std::vector<DoubleWedge>& wedges, const Point& p) {
    for (const DoubleWedge& d : wedges)
        if (!trace_contains(d, p)) return false;
    return true;
}

// Least-squares slope of log2(seconds) against log2(n).
double loglog_slope(const std::vector<std::pair<int, double>>& samples) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [n, t] : samples) {
        double x = std::log2(double(n));
        double y = std::log2(t);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = double(samples.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

// --------------------------------------------------------------------------

bool criterion1() {
    // Grating counts, exact: (k+1)^2 components for k = 1..6, < 5 s per k.
    bool ok = true;
    for (int k = 1; k <= 6; ++k) {
        double t0 = now_seconds();
        std::vector<DoubleWedge> g = make_grating(k);
        IntersectionResult r = intersect_general(g);
        double dt = now_seconds() - t0;
        int expected = (k + 1) * (k + 1);
        bool this_ok = r.component_count == expected && dt < 5.0;
        std::cout << "  k=" << k << ": components=" << r.component_count << " expected=" << expected
                  << " time=" << dt << "s" << (this_ok ? "" : "  <-- FAIL") << "\n";
        ok = ok && this_ok;
    }
    return ok;
}

bool criterion2() {
    // 200 random closed instances, n <= 20: general vs oracle, with witness
    // cross-containment checked through both membership formulations.
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        RandomWedgeConfig cfg;
        cfg.n = 1 + int(seed % 20);
        cfg.hourglass_percent = 50;
        cfg.coord_range = 8;
        cfg.closed = true;
        cfg.seed = 1000 + seed;
        std::vector<DoubleWedge> wedges = random_wedges(cfg);
        IntersectionResult g = intersect_general(wedges);
        OracleIntersection o = oracle_intersect(wedges);
        bool this_ok = g.nonempty == o.nonempty && g.component_count == o.component_count;
        for (const Point& w : g.witnesses)
            this_ok = this_ok && in_all(wedges, w) && in_all_by_traces(wedges, w);
        if (o.witness) this_ok = this_ok && in_all(wedges, *o.witness) && in_all_by_traces(wedges, *o.witness);
        if (!this_ok) {
            std::cout << "  seed " << seed << ": general=(" << g.nonempty << "," << g.component_count
                      << ") oracle=(" << o.nonempty << "," << o.component_count << ")\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion3() {
    // 200 random instances with an uncovered slope, n <= 100: shear +
    // bowtie-only algorithm vs the general one.
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        RandomWedgeConfig cfg;
        cfg.n = 1 + int((seed * 37) % 100);
        cfg.hourglass_percent = 40;
        cfg.coord_range = 9;
        cfg.closed = true;
        cfg.ensure_uncovered = true;
        cfg.seed = 5000 + seed;
        std::vector<DoubleWedge> wedges = random_wedges(cfg);

        SlopeCoverage cov = find_uncovered_slope(wedges);
        IntersectionResult rb;
        if (cov.verdict == SlopeCoverage::Verdict::AllBowties) {
            rb = intersect_bowties(wedges);
        } else if (cov.verdict == SlopeCoverage::Verdict::Uncovered) {
            rb = intersect_bowties(shear_to_bowties(wedges, *cov.uncovered_slope));
        } else {
            std::cout << "  seed " << seed << ": unexpectedly fully covered\n";
            ok = false;
            continue;
        }
        IntersectionResult rg = intersect_general(wedges);
        if (rb.nonempty != rg.nonempty || rb.component_count != rg.component_count) {
            std::cout << "  seed " << seed << ": bowtie=(" << rb.nonempty << "," << rb.component_count
                      << ") general=(" << rg.nonempty << "," << rg.component_count << ")\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion4() {
    // 100 random instances, n <= 100, at most 5 hourglasses: parameterized
    // overlay vs general.
    bool ok = true;
    std::mt19937_64 mix(424242);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + int(mix() % 100);
        int k = int(mix() % 6);
        k = std::min(k, n);
        RandomWedgeConfig bows;
        bows.n = n - k;
        bows.hourglass_percent = 0;
        bows.coord_range = 9;
        bows.seed = 9000 + std::uint64_t(t);
        RandomWedgeConfig hours;
        hours.n = k;
        hours.hourglass_percent = 100;
        hours.coord_range = 9;
        hours.seed = 90000 + std::uint64_t(t);
        std::vector<DoubleWedge> wedges = random_wedges(bows);
        for (DoubleWedge& d : random_wedges(hours)) wedges.push_back(d);

        IntersectionResult rp = intersect_parameterized(wedges);
        IntersectionResult rg = intersect_general(wedges);
        if (rp.nonempty != rg.nonempty || rp.component_count != rg.component_count) {
            std::cout << "  t=" << t << " n=" << n << " k=" << k << ": parameterized=(" << rp.nonempty << ","
                      << rp.component_count << ") general=(" << rg.nonempty << "," << rg.component_count << ")\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion5() {
    // Nonagon family at precision 6: all triples pierceable, no two lines
    // suffice, an explicit certified 3-line solution exists.
    NonagonFamily fam = make_nonagon_family(6);
    std::vector<FamilyElement> family = fam.all();
    bool ok = family.size() == 36;

    TripleReport triples = triple_pierceable_all(family);
    std::cout << "  triple_pierceable_all = " << (triples.all_pierceable ? "true" : "false") << "\n";
    ok = ok && triples.all_pierceable;

    auto two = piercing_with_lines(family, 2, fam.greens);
    std::cout << "  two-line cover: " << (two ? "FOUND (unexpected)" : "impossible") << "\n";
    ok = ok && !two.has_value();

    auto three = piercing_with_lines(family, 3);
    bool three_ok = three.has_value();
    if (three_ok) {
        for (const FamilyElement& e : family) {
            bool hit = false;
            for (const PiercingLine& l : *three)
                if (pierces(l, e)) hit = true;
            three_ok = three_ok && hit;
        }
    }
    std::cout << "  three-line cover: " << (three_ok ? "found and certified" : "MISSING") << "\n";
    return ok && three_ok;
}

bool criterion6() {
    // 50 random integer sets: the reduction chain agrees with brute-force
    // 3SUM, and YES witnesses snap to three collinear instance points.
    std::mt19937_64 rng(777);
    auto rnd = [&](long lo, long hi) { return long(lo + long(rng() % std::uint64_t(hi - lo + 1))); };
    bool ok = true;
    for (int t = 0; t < 50; ++t) {
        std::vector<long long> nums;
        int n = int(rnd(1, 12));
        for (int i = 0; i < n; ++i) nums.push_back(rnd(-20, 20));
        bool expected = brute_force_3sum(nums);
        GeomBaseInstance u = geombase_from_3sum(nums);
        SasResult r = solve_sas(sas_from_geombase(u));
        bool got = r.kind != SasResult::Kind::None;
        bool this_ok = got == expected;
        if (this_ok && got) {
            auto xs = sas_witness_row_crossings(r);
            this_ok = xs.size() == 3;
            if (this_ok) {
                long long a = xs[0].round_nearest().get_si();
                long long b = xs[1].round_nearest().get_si();
                long long c = xs[2].round_nearest().get_si();
                std::set<GeomBaseInstance::RowPoint> pts(u.points.begin(), u.points.end());
                this_ok = a + c == 2 * b && pts.count({a, 0}) && pts.count({b, 1}) && pts.count({c, 2});
            }
        }
        if (!this_ok) {
            std::cout << "  set " << t << ": expected " << expected << ", got " << got << "\n";
            ok = false;
        }
    }
    return ok;
}

bool criterion7() {
    // Duality and predicate suites: 10^4 involution round trips, 10^4
    // primal-dual transports, trace agreement including boundary cases.
    std::mt19937_64 rng(31337);
    auto rnd = [&](long lo, long hi) { return long(lo + long(rng() % std::uint64_t(hi - lo + 1))); };
    auto rnd_rat = [&](long lo, long hi) {
        long den = rnd(1, 8);
        return Rational(rnd(lo * den, hi * den), den);
    };
    auto rnd_point = [&] { return Point{rnd_rat(-10, 10), rnd_rat(-10, 10)}; };
    auto rnd_segment = [&]() -> Segment {
        while (true) {
            Point p = rnd_point(), q = rnd_point();
            if (p.x == q.x) continue;
            return Segment(p, q, rnd(0, 1) == 1, rnd(0, 1) == 1);
        }
    };
    auto rnd_wedge = [&]() -> DoubleWedge {
        while (true) {
            Line l1{rnd_rat(-8, 8), rnd_rat(-8, 8)};
            Line l2{rnd_rat(-8, 8), rnd_rat(-8, 8)};
            if (l1.a == l2.a) continue;
            return DoubleWedge(l1, l2, rnd(0, 1) == 1 ? 1 : -1, rnd(0, 1) == 1, rnd(0, 1) == 1);
        }
    };
    auto primal_meets = [](const Line& l, const Segment& s) {
        int rp = (s.p.y - l.eval(s.p.x)).sign();
        int rq = (s.q.y - l.eval(s.q.x)).sign();
        if (rp == 0 && rq == 0) return true;
        if (rp == 0) return s.include_p;
        if (rq == 0) return s.include_q;
        return rp != rq;
    };

    bool ok = true;
    for (int i = 0; i < 10000; ++i) {
        Point p = rnd_point();
        if (dual_line_to_point(dual_point_to_line(p)) != p) ok = false;
        Line l{rnd_rat(-10, 10), rnd_rat(-10, 10)};
        if (dual_point_to_line(dual_line_to_point(l)) != l) ok = false;
    }
    std::cout << "  involution round trips: " << (ok ? "ok" : "FAIL") << "\n";

    bool transport_ok = true;
    for (int i = 0; i < 10000; ++i) {
        Segment s = rnd_segment();
        DoubleWedge d = dual_segment_to_bowtie(s);
        Point x = rnd_point();
        if (x == d.origin()) continue;
        if (contains(d, x) != primal_meets(dual_point_to_line(x), s)) transport_ok = false;
    }
    std::cout << "  primal-dual transport: " << (transport_ok ? "ok" : "FAIL") << "\n";

    bool trace_ok = true;
    for (int i = 0; i < 10000; ++i) {
        DoubleWedge d = rnd_wedge();
        Point p = rnd_point();
        if (trace_contains(d, p) != contains(d, p)) trace_ok = false;
    }
    for (int i = 0; i < 1000; ++i) {
        DoubleWedge d = rnd_wedge();
        Rational t = rnd_rat(-9, 9);
        Point on1{t, d.l1.eval(t)};
        Point on2{t, d.l2.eval(t)};
        Point o = d.origin();
        if (trace_contains(d, on1) != contains(d, on1)) trace_ok = false;
        if (trace_contains(d, on2) != contains(d, on2)) trace_ok = false;
        if (trace_contains(d, o) != contains(d, o)) trace_ok = false;
    }
    std::cout << "  trace vs sign product (incl. boundaries): " << (trace_ok ? "ok" : "FAIL") << "\n";
    return ok && transport_ok && trace_ok;
}

bool criterion8() {
    // Informational performance: 10^4 bowties within 10 s, 500 general
    // wedges (1000 lines) within 120 s, log-log slopes <= 1.3 and <= 2.3.
    bool ok = true;

    std::vector<std::pair<int, double>> bow_samples;
    for (int n : {1250, 2500, 5000, 10000}) {
        RandomWedgeConfig cfg;
        cfg.n = n;
        cfg.hourglass_percent = 0;
        cfg.coord_range = 1000;
        cfg.seed = 4242;
        std::vector<DoubleWedge> wedges = random_wedges(cfg);
        double t0 = now_seconds();
        IntersectionResult r = intersect_bowties(wedges);
        double dt = now_seconds() - t0;
        (void)r;
        bow_samples.push_back({n, dt});
        std::cout << "  bowtie n=" << n << ": " << dt << "s\n";
    }
    double bow_last = bow_samples.back().second;
    double bow_slope = loglog_slope(bow_samples);
    std::cout << "  bowtie slope=" << bow_slope << " (limit 1.3), n=10^4 time=" << bow_last
              << "s (limit 10)\n";
    ok = ok && bow_last <= 10.0 && bow_slope <= 1.3;

    std::vector<std::pair<int, double>> gen_samples;
    for (int n : {125, 250, 500}) {
        RandomWedgeConfig cfg;
        cfg.n = n;
        cfg.hourglass_percent = 50;
        cfg.coord_range = 1000;
        cfg.seed = 777;
        std::vector<DoubleWedge> wedges = random_wedges(cfg);
        double t0 = now_seconds();
        IntersectionResult r = intersect_general(wedges);
        double dt = now_seconds() - t0;
        (void)r;
        gen_samples.push_back({n, dt});
        std::cout << "  general n=" << n << ": " << dt << "s\n";
    }
    double gen_last = gen_samples.back().second;
    double gen_slope = loglog_slope(gen_samples);
    std::cout << "  general slope=" << gen_slope << " (limit 2.3), n=500 time=" << gen_last
              << "s (limit 120)\n";
    ok = ok && gen_last <= 120.0 && gen_slope <= 2.3;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    if (argc < 2 || std::string(argv[1]) == "all") {
        which = {1, 2, 3, 4, 5, 6, 7, 8};
    } else {
        which.push_back(std::atoi(argv[1]));
    }

    bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                            criterion5, criterion6, criterion7, criterion8};
    const char* names[] = {
        "grating component counts (k+1)^2 for k=1..6",
        "general vs oracle on 200 random closed instances (n<=20)",
        "shear+bowtie vs general on 200 uncovered instances (n<=100)",
        "parameterized vs general on 100 instances (n<=100, k<=5)",
        "nonagon family: triples pierceable, 2 lines impossible, 3 lines found",
        "3SUM reduction equivalence on 50 random sets",
        "duality, transport and trace predicate suites (10^4 cases each)",
        "performance: bowtie n=10^4, general n=500, log-log slopes",
    };

    bool all_ok = true;
    for (int c : which) {
        if (c < 1 || c > 8) {
            std::cerr << "unknown criterion " << c << "\n";
            return 2;
        }
        double t0 = now_seconds();
        bool ok = criteria[c - 1]();
        double dt = now_seconds() - t0;
        std::cout << "CRITERION " << c << " [" << names[c - 1] << "]: " << (ok ? "PASS" : "FAIL")
                  << " (" << dt << "s)\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
