#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "dwedge/constructions.hpp"
#include "dwedge/geometry.hpp"
#include "dwedge/intersect.hpp"
#include "dwedge/stabbing.hpp"

namespace dwedge::io {

using json = nlohmann::json;

// Value encodings: Rational as canonical "num/den" string (integer shorthand
// accepted on input), Point as [x, y], Line as {"a","b"}, DoubleWedge as
// {"l1","l2","parity","closed"} with optional per-line bits, Segment as
// {"p","q","include_p","include_q"}, AntiSegment as {"anti":true,
// "complement": Segment}.

json encode(const Rational& r);
json encode(const Point& p);
json encode(const Line& l);
json encode(const DoubleWedge& d);
json encode(const Segment& s);
json encode(const AntiSegment& a);

Rational decode_rational(const json& j);
Point decode_point(const json& j);
Line decode_line(const json& j);
DoubleWedge decode_wedge(const json& j);
Segment decode_segment(const json& j);
AntiSegment decode_antisegment(const json& j);

json encode_wedge_instance(const std::vector<DoubleWedge>& wedges);
std::vector<DoubleWedge> decode_wedge_instance(const json& j);

json encode_sas_instance(const SasInstance& inst);
SasInstance decode_sas_instance(const json& j);

// {"status","component_count","witnesses","witness_line","algorithm"}
json encode_result(const IntersectionResult& r);
json encode_sas_result(const SasResult& r, const std::string& algorithm);

json encode_geombase(const GeomBaseInstance& u);
GeomBaseInstance decode_geombase(const json& j);

json encode_family(const NonagonFamily& fam);

// Reads/writes with trailing newline; throws std::runtime_error on I/O failure.
json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);

}  // namespace dwedge::io
