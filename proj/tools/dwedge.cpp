// Command-line front end: instance I/O, algorithm selection, generators,
// verification suites, SVG rendering and benchmarking.
//
// Exit codes: 0 success (including "empty"/"none" answers), 2 input error,
// 3 verification failure, 1 internal invariant violation.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dwedge/arrangement.hpp"
#include "dwedge/constructions.hpp"
#include "dwedge/intersect.hpp"
#include "dwedge/json_io.hpp"
#include "dwedge/oracle.hpp"
#include "dwedge/random_instances.hpp"
#include "dwedge/stabbing.hpp"
#include "dwedge/svg.hpp"

using namespace dwedge;
using nlohmann::json;

namespace {

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        io::save_json(out_path, j);
}

double seconds_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

IntersectionResult run_algorithm(const std::vector<DoubleWedge>& wedges, const std::string& algo) {
    if (algo == "bowtie") {
        SlopeCoverage cov = find_uncovered_slope(wedges);
        if (cov.verdict == SlopeCoverage::Verdict::FullyCovered)
            throw std::runtime_error("bowtie algorithm rejected: the input covers all slopes");
        return decide_intersection(wedges);
    }
    if (algo == "general") return intersect_general(wedges);
    if (algo == "parameterized") return intersect_parameterized(wedges);
    if (algo == "oracle") {
        OracleIntersection o = oracle_intersect(wedges);
        IntersectionResult r;
        r.algorithm = "oracle";
        r.nonempty = o.nonempty;
        r.component_count = o.component_count;
        if (o.witness) r.witnesses.push_back(*o.witness);
        return r;
    }
    if (algo != "auto") throw std::runtime_error("unknown algorithm: " + algo);
    SlopeCoverage cov = find_uncovered_slope(wedges);
    if (cov.verdict != SlopeCoverage::Verdict::FullyCovered) return decide_intersection(wedges);
    int k = 0;
    for (const DoubleWedge& d : wedges)
        if (d.kind() == WedgeKind::Hourglass) ++k;
    if (double(k) * double(k) <= double(wedges.size())) return intersect_parameterized(wedges);
    return intersect_general(wedges);
}

void write_svg_file(const std::vector<DoubleWedge>& wedges, const std::string& path, int width, int decimals) {
    std::vector<Line> lines;
    for (const DoubleWedge& d : wedges) {
        lines.push_back(d.l1);
        lines.push_back(d.l2);
    }
    Arrangement arr = build_arrangement(lines);
    DepthLabels labels = depth_labels(arr, wedges);
    CellSet sel = select_cells_depth_eq(arr, labels, int(wedges.size()));
    SvgOptions opt;
    opt.width = width;
    opt.decimals = decimals;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_svg(arr, sel, opt);
}

void report_line(const std::string& check, bool pass, json extra = {}) {
    json j{{"check", check}, {"result", pass ? "pass" : "fail"}};
    if (extra.is_object()) j.update(extra);
    std::cout << j.dump() << "\n";
}

std::vector<long long> parse_numbers(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw std::runtime_error("empty --numbers list");
    return out;
}

long parse_size_value(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty size value");
    if (s.back() == 'k' || s.back() == 'K') return std::stol(s.substr(0, s.size() - 1)) * 1000;
    return std::stol(s);
}

std::vector<int> parse_sizes(const std::string& spec) {
    // "1000..64000" (or "1k..64k") doubles from lo to hi; "a,b,c" lists.
    std::vector<int> out;
    auto dots = spec.find("..");
    if (dots != std::string::npos) {
        long lo = parse_size_value(spec.substr(0, dots));
        long hi = parse_size_value(spec.substr(dots + 2));
        for (long v = lo; v <= hi; v *= 2) out.push_back(int(v));
    } else {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(int(parse_size_value(item)));
        }
    }
    if (out.empty()) throw std::runtime_error("empty --sizes list");
    return out;
}

// ---------------------------------------------------------------------------
// verify suites

void verify_grating(int k) {
    std::vector<DoubleWedge> g = make_grating(k);  // self-validates
    IntersectionResult r = intersect_general(g);
    int expected = (k + 1) * (k + 1);
    bool count_ok = r.component_count == expected;
    report_line("grating_component_count", count_ok,
                {{"k", k}, {"expected", expected}, {"actual", r.component_count}});
    bool covered = find_uncovered_slope(g).verdict == SlopeCoverage::Verdict::FullyCovered;
    report_line("grating_fully_covered", covered, {{"k", k}});
    bool witnesses_ok = int(r.witnesses.size()) == r.component_count;
    for (const Point& w : r.witnesses)
        for (const DoubleWedge& d : g)
            if (!contains(d, w)) witnesses_ok = false;
    report_line("grating_witnesses_contained", witnesses_ok, {{"k", k}});
    if (!count_ok || !covered || !witnesses_ok) throw VerificationFailure("grating checks failed");
}

void verify_nonagon(int precision) {
    NonagonFamily fam = make_nonagon_family(precision);
    std::vector<FamilyElement> family = fam.all();
    bool size_ok = family.size() == 36;
    report_line("nonagon_family_size", size_ok, {{"size", family.size()}});

    TripleReport triples = triple_pierceable_all(family);
    report_line("nonagon_triples_pierceable", triples.all_pierceable, {{"precision", precision}});

    auto two = piercing_with_lines(family, 2, fam.greens);
    json extra{{"precision", precision}};
    if (two) {
        // Report the certified cover so the failure is reproducible.
        json lines = json::array();
        for (const PiercingLine& l : *two) {
            if (l.vertical)
                lines.push_back(json{{"vertical", l.x.str()}});
            else
                lines.push_back(json{{"a", l.line.a.str()}, {"b", l.line.b.str()}});
        }
        extra["counterexample"] = lines;
    }
    report_line("nonagon_two_lines_impossible", !two.has_value(), extra);

    auto three = piercing_with_lines(family, 3);
    bool three_ok = three.has_value();
    if (three_ok) {
        for (const FamilyElement& e : family) {
            bool hit = false;
            for (const PiercingLine& l : *three)
                if (pierces(l, e)) hit = true;
            if (!hit) three_ok = false;
        }
    }
    report_line("nonagon_three_lines_found", three_ok, {{"precision", precision}});
    if (!size_ok || !triples.all_pierceable || two.has_value() || !three_ok)
        throw VerificationFailure("nonagon checks failed");
}

void verify_reduction(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rnd = [&](long lo, long hi) { return long(lo + long(rng() % std::uint64_t(hi - lo + 1))); };
    bool all_ok = true;
    for (int t = 0; t < count; ++t) {
        std::vector<long long> nums;
        int n = int(rnd(1, 12));
        for (int i = 0; i < n; ++i) nums.push_back(rnd(-20, 20));
        bool expected = brute_force_3sum(nums);
        GeomBaseInstance u = geombase_from_3sum(nums);
        SasResult r = solve_sas(sas_from_geombase(u));
        bool got = r.kind != SasResult::Kind::None;
        bool ok = got == expected;
        if (ok && got) {
            // Snap the witness to the integer centers: the slack argument
            // makes them three collinear instance points.
            auto xs = sas_witness_row_crossings(r);
            ok = xs.size() == 3;
            if (ok) {
                long long a = xs[0].round_nearest().get_si();
                long long b = xs[1].round_nearest().get_si();
                long long c = xs[2].round_nearest().get_si();
                std::set<GeomBaseInstance::RowPoint> pts(u.points.begin(), u.points.end());
                ok = a + c == 2 * b && pts.count({a, 0}) && pts.count({b, 1}) && pts.count({c, 2});
            }
        }
        if (!ok) all_ok = false;
    }
    report_line("reduction_equivalence", all_ok, {{"instances", count}, {"seed", seed}});
    if (!all_ok) throw VerificationFailure("reduction checks failed");
}

void verify_oracle(int count, int n, std::uint64_t seed) {
    bool all_ok = true;
    for (int t = 0; t < count; ++t) {
        RandomWedgeConfig cfg;
        cfg.n = 1 + int((seed + std::uint64_t(t)) % std::uint64_t(n));
        cfg.hourglass_percent = 50;
        cfg.coord_range = 6;
        cfg.seed = seed + 7919 * std::uint64_t(t);
        std::vector<DoubleWedge> wedges = random_wedges(cfg);
        OracleIntersection o = oracle_intersect(wedges);
        IntersectionResult g = intersect_general(wedges);
        if (o.nonempty != g.nonempty || o.component_count != g.component_count) all_ok = false;
    }
    report_line("oracle_agreement", all_ok, {{"instances", count}, {"max_n", n}, {"seed", seed}});
    if (!all_ok) throw VerificationFailure("oracle checks failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-wedge intersection toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, algo = "auto", svg_path, numbers, sizes = "1000..16000", kind;
    int k = 2, precision = 6, n = 10, hourglasses = 50, width = 800, svg_decimals = 3, count = 50;
    std::uint64_t seed = 1;
    bool open_flags = false;

    CLI::App* c_intersect = app.add_subcommand("intersect", "compute the common intersection of double-wedges");
    c_intersect->add_option("--in", in_path, "instance file {\"wedges\": [...]}")->required();
    c_intersect->add_option("--out", out_path, "result file (stdout when omitted)");
    c_intersect->add_option("--algo", algo, "auto|bowtie|general|parameterized|oracle");
    c_intersect->add_option("--svg", svg_path, "write an SVG with the intersection cells filled");
    c_intersect->add_option("--width", width, "SVG width in pixels");
    c_intersect->add_option("--svg-precision", svg_decimals, "decimal digits in SVG coordinates");

    CLI::App* c_decide = app.add_subcommand("decide", "report one intersection point or empty");
    c_decide->add_option("--in", in_path)->required();
    c_decide->add_option("--out", out_path);

    CLI::App* c_stab = app.add_subcommand("stab", "find a line stabbing 'stab' and avoiding 'avoid'");
    c_stab->add_option("--in", in_path)->required();
    c_stab->add_option("--out", out_path);

    CLI::App* c_generate = app.add_subcommand("generate", "emit instances");
    c_generate->add_option("kind", kind, "grating|nonagon|sas-from-3sum|random")->required();
    c_generate->add_option("--k", k, "grating parameter");
    c_generate->add_option("--precision", precision, "nonagon decimal digits");
    c_generate->add_option("--numbers", numbers, "comma-separated integers for sas-from-3sum");
    c_generate->add_option("--n", n, "random instance size");
    c_generate->add_option("--hourglasses", hourglasses, "hourglass percentage for random instances");
    c_generate->add_option("--seed", seed, "random seed (recorded in the file)");
    c_generate->add_flag("--open", open_flags, "generate open wedges");
    c_generate->add_option("--out", out_path);

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("kind", kind, "grating|nonagon|reduction|oracle")->required();
    c_verify->add_option("--k", k);
    c_verify->add_option("--precision", precision);
    c_verify->add_option("--count", count, "number of random instances");
    c_verify->add_option("--n", n, "max random instance size");
    c_verify->add_option("--seed", seed);

    CLI::App* c_render = app.add_subcommand("render", "render an instance file to SVG");
    c_render->add_option("--in", in_path)->required();
    c_render->add_option("--out", out_path, "SVG path")->required();
    c_render->add_option("--width", width);
    c_render->add_option("--svg-precision", svg_decimals);

    CLI::App* c_bench = app.add_subcommand("bench", "time an algorithm over doubling sizes, CSV output");
    c_bench->add_option("--algo", algo, "bowtie|general|parameterized")->required();
    c_bench->add_option("--sizes", sizes, "lo..hi (doubling) or comma list");
    c_bench->add_option("--hourglasses", hourglasses, "hourglass percentage (ignored for bowtie)");
    c_bench->add_option("--seed", seed);
    c_bench->add_option("--out", out_path, "CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_intersect) {
            std::vector<DoubleWedge> wedges = io::decode_wedge_instance(io::load_json(in_path));
            IntersectionResult r = run_algorithm(wedges, algo);
            json j = io::encode_result(r);
            if (r.algorithm == "general" && r.cells) {
                std::vector<Line> lines;
                for (const DoubleWedge& d : wedges) {
                    lines.push_back(d.l1);
                    lines.push_back(d.l2);
                }
                Arrangement arr = build_arrangement(lines);
                j["arrangement"] = json{{"vertices", arr.vertex_count()},
                                        {"edges", arr.edge_count()},
                                        {"faces", arr.face_count()},
                                        {"component_count", r.component_count}};
            }
            emit(j, out_path);
            if (!svg_path.empty()) write_svg_file(wedges, svg_path, width, svg_decimals);
        } else if (*c_decide) {
            std::vector<DoubleWedge> wedges = io::decode_wedge_instance(io::load_json(in_path));
            IntersectionResult r = decide_intersection(wedges);
            json j = io::encode_result(r);
            if (r.nonempty) j["witness"] = io::encode(r.witnesses.front());
            emit(j, out_path);
        } else if (*c_stab) {
            SasInstance inst = io::decode_sas_instance(io::load_json(in_path));
            SasResult r = solve_sas(inst);
            if (r.kind == SasResult::Kind::Line)
                std::cout << "line y = " << r.line.a << "*x + " << r.line.b << "\n";
            else if (r.kind == SasResult::Kind::Vertical)
                std::cout << "vertical x = " << r.x << "\n";
            else
                std::cout << "none\n";
            if (!out_path.empty()) io::save_json(out_path, io::encode_sas_result(r, "general"));
        } else if (*c_generate) {
            if (kind == "grating") {
                json j = io::encode_wedge_instance(make_grating(k));
                j["k"] = k;
                emit(j, out_path);
            } else if (kind == "nonagon") {
                json j = io::encode_family(make_nonagon_family(precision));
                j["precision"] = precision;
                emit(j, out_path);
            } else if (kind == "sas-from-3sum") {
                GeomBaseInstance u = geombase_from_3sum(parse_numbers(numbers));
                json j = io::encode_sas_instance(sas_from_geombase(u));
                j["geombase"] = io::encode_geombase(u);
                emit(j, out_path);
            } else if (kind == "random") {
                RandomWedgeConfig cfg;
                cfg.n = n;
                cfg.hourglass_percent = hourglasses;
                cfg.closed = !open_flags;
                cfg.seed = seed;
                json j = io::encode_wedge_instance(random_wedges(cfg));
                j["seed"] = seed;
                emit(j, out_path);
            } else {
                throw std::runtime_error("unknown generate kind: " + kind);
            }
        } else if (*c_verify) {
            if (kind == "grating")
                verify_grating(k);
            else if (kind == "nonagon")
                verify_nonagon(precision);
            else if (kind == "reduction")
                verify_reduction(count, seed);
            else if (kind == "oracle")
                verify_oracle(count, n, seed);
            else
                throw std::runtime_error("unknown verify kind: " + kind);
        } else if (*c_render) {
            std::vector<DoubleWedge> wedges = io::decode_wedge_instance(io::load_json(in_path));
            write_svg_file(wedges, out_path, width, svg_decimals);
        } else if (*c_bench) {
            if (algo != "bowtie" && algo != "general" && algo != "parameterized")
                throw std::runtime_error("bench: --algo must be bowtie, general or parameterized");
            std::ostringstream csv;
            csv << "n,algorithm,seconds\n";
            for (int size : parse_sizes(sizes)) {
                RandomWedgeConfig cfg;
                cfg.n = size;
                cfg.hourglass_percent = algo == "bowtie" ? 0 : hourglasses;
                cfg.coord_range = 1000;
                cfg.seed = seed;
                std::vector<DoubleWedge> wedges = random_wedges(cfg);
                double secs = seconds_of([&] { run_algorithm(wedges, algo); });
                csv << size << "," << algo << "," << secs << "\n";
            }
            if (out_path.empty()) {
                std::cout << csv.str();
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot write " + out_path);
                out << csv.str();
            }
        }
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
