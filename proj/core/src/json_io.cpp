#include "dwedge/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dwedge::io {

json encode(const Rational& r) {
    return r.str();
}

json encode(const Point& p) {
    return json::array({encode(p.x), encode(p.y)});
}

json encode(const Line& l) {
    return json{{"a", encode(l.a)}, {"b", encode(l.b)}};
}

json encode(const DoubleWedge& d) {
    json j{{"l1", encode(d.l1)}, {"l2", encode(d.l2)}, {"parity", d.parity}, {"closed", d.closed()}};
    if (d.l1_closed != d.l2_closed) {
        j["l1_closed"] = d.l1_closed;
        j["l2_closed"] = d.l2_closed;
    }
    return j;
}

json encode(const Segment& s) {
    return json{{"p", encode(s.p)}, {"q", encode(s.q)}, {"include_p", s.include_p}, {"include_q", s.include_q}};
}

json encode(const AntiSegment& a) {
    return json{{"anti", true}, {"complement", encode(a.complement)}};
}

Rational decode_rational(const json& j) {
    if (j.is_number_integer()) return Rational(long(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::runtime_error("expected rational as \"num/den\" string or integer");
}

Point decode_point(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::runtime_error("expected point as [x, y]");
    return Point{decode_rational(j[0]), decode_rational(j[1])};
}

Line decode_line(const json& j) {
    return Line{decode_rational(j.at("a")), decode_rational(j.at("b"))};
}

DoubleWedge decode_wedge(const json& j) {
    bool closed = j.at("closed").get<bool>();
    bool l1c = j.value("l1_closed", closed);
    bool l2c = j.value("l2_closed", closed);
    return DoubleWedge(decode_line(j.at("l1")), decode_line(j.at("l2")), j.at("parity").get<int>(), l1c, l2c);
}

Segment decode_segment(const json& j) {
    return Segment(decode_point(j.at("p")), decode_point(j.at("q")),
                   j.at("include_p").get<bool>(), j.at("include_q").get<bool>());
}

AntiSegment decode_antisegment(const json& j) {
    if (!j.value("anti", false)) throw std::runtime_error("expected anti-segment object");
    return AntiSegment(decode_segment(j.at("complement")));
}

json encode_wedge_instance(const std::vector<DoubleWedge>& wedges) {
    json arr = json::array();
    for (const DoubleWedge& d : wedges) arr.push_back(encode(d));
    return json{{"wedges", arr}};
}

std::vector<DoubleWedge> decode_wedge_instance(const json& j) {
    std::vector<DoubleWedge> out;
    for (const json& w : j.at("wedges")) out.push_back(decode_wedge(w));
    return out;
}

json encode_sas_instance(const SasInstance& inst) {
    json stab = json::array(), avoid = json::array();
    for (const Segment& s : inst.stab) stab.push_back(encode(s));
    for (const Segment& a : inst.avoid) avoid.push_back(encode(a));
    return json{{"stab", stab}, {"avoid", avoid}};
}

SasInstance decode_sas_instance(const json& j) {
    SasInstance inst;
    for (const json& s : j.at("stab")) inst.stab.push_back(decode_segment(s));
    for (const json& a : j.at("avoid")) inst.avoid.push_back(decode_segment(a));
    return inst;
}

json encode_result(const IntersectionResult& r) {
    json witnesses = json::array();
    for (const Point& w : r.witnesses) witnesses.push_back(encode(w));
    return json{{"status", r.nonempty ? "nonempty" : "empty"},
                {"component_count", r.component_count},
                {"witnesses", witnesses},
                {"witness_line", nullptr},
                {"algorithm", r.algorithm}};
}

json encode_sas_result(const SasResult& r, const std::string& algorithm) {
    json j{{"status", r.kind == SasResult::Kind::None ? "empty" : "nonempty"},
           {"component_count", r.kind == SasResult::Kind::None ? 0 : 1},
           {"witnesses", json::array()},
           {"witness_line", nullptr},
           {"algorithm", algorithm}};
    if (r.kind == SasResult::Kind::Line) j["witness_line"] = encode(r.line);
    if (r.kind == SasResult::Kind::Vertical) j["witness_line"] = json{{"vertical", encode(r.x)}};
    return j;
}

json encode_geombase(const GeomBaseInstance& u) {
    json pts = json::array();
    for (const auto& p : u.points) pts.push_back(json::array({p.x, p.row}));
    return json{{"points", pts}};
}

GeomBaseInstance decode_geombase(const json& j) {
    GeomBaseInstance u;
    for (const json& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2) throw std::runtime_error("expected [x, row] pairs");
        u.points.push_back({p[0].get<long long>(), p[1].get<int>()});
    }
    return u;
}

json encode_family(const NonagonFamily& fam) {
    json greens = json::array(), reds = json::array(), purples = json::array();
    for (const Segment& g : fam.greens) greens.push_back(encode(g));
    for (const AntiSegment& r : fam.reds) reds.push_back(encode(r));
    for (const AntiSegment& q : fam.purples) purples.push_back(encode(q));
    return json{{"greens", greens}, {"reds", reds}, {"purples", purples}};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace dwedge::io
