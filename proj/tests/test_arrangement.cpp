#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dwedge/arrangement.hpp"
#include "dwedge/constructions.hpp"
#include "dwedge/intersect.hpp"
#include "test_support.hpp"

using namespace dwedge;

namespace {

std::vector<Line> wedge_lines(const std::vector<DoubleWedge>& wedges) {
    std::vector<Line> lines;
    for (const DoubleWedge& d : wedges) {
        lines.push_back(d.l1);
        lines.push_back(d.l2);
    }
    return lines;
}

// Scratch recount of a face's depth: O(n) per face, independent of the BFS.
std::pair<int, int> recount_face(const Arrangement& arr, int32_t f, const std::vector<DoubleWedge>& wedges) {
    Point s = arr.face_sample(f);
    int nb = 0, nh = 0;
    for (const DoubleWedge& d : wedges)
        if (contains_strict(d, s)) (d.kind() == WedgeKind::Bowtie ? nb : nh)++;
    return {nb, nh};
}

}  // namespace

TEST_CASE("two crossing lines") {
    Arrangement arr = build_arrangement({Line{1, 0}, Line{-1, 0}});
    arr.audit();
    CHECK(arr.interior_vertex_count() == 1);
    CHECK(arr.interior_face_count() == 4);
    CHECK(arr.lines.size() == 2);
}

TEST_CASE("generic lines give all pairwise vertices") {
    std::vector<Line> lines;
    for (int i = 0; i < 6; ++i) lines.push_back(Line{Rational(i), Rational(i * i % 7)});
    Arrangement arr = build_arrangement(lines);
    arr.audit();
    CHECK(arr.interior_vertex_count() == 15);  // C(6,2)
}

TEST_CASE("three concurrent lines share one vertex of degree 6") {
    Arrangement arr = build_arrangement({Line{0, 0}, Line{1, 0}, Line{-1, 0}});
    arr.audit();
    CHECK(arr.interior_vertex_count() == 1);
    for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
        if (!arr.on_box_boundary(arr.vertices[v].p)) CHECK(arr.vertex_degree(int32_t(v)) == 6);
    }
}

TEST_CASE("duplicate lines are merged with multiplicity") {
    Arrangement arr = build_arrangement({Line{1, 0}, Line{1, 0}, Line{0, 1}});
    CHECK(arr.lines.size() == 2);
    int total = 0;
    for (int m : arr.line_multiplicity) total += m;
    CHECK(total == 3);
}

TEST_CASE("audit passes on random arrangements") {
    test::Rng rng(5);
    for (int t = 0; t < 25; ++t) {
        std::vector<Line> lines;
        int n = int(rng.integer(0, 9));
        for (int i = 0; i < n; ++i) lines.push_back(rng.line(-5, 5));
        Arrangement arr = build_arrangement(lines);
        arr.audit();
    }
}

TEST_CASE("single closed bowtie depths") {
    DoubleWedge d(Line{1, 0}, Line{-1, 0}, -1, true);
    Arrangement arr = build_arrangement(wedge_lines({d}));
    DepthLabels labels = depth_labels(arr, {d});
    int wedge_faces = 0, other_faces = 0;
    for (std::size_t f = 1; f < arr.faces.size(); ++f) {
        int depth = labels.face_depth(int32_t(f));
        if (depth == 1)
            ++wedge_faces;
        else
            ++other_faces;
        CHECK((depth == 0 || depth == 1));
    }
    CHECK(wedge_faces == 2);
    CHECK(other_faces == 2);
    // All boundary edges and the origin vertex carry depth 1 (closed flags).
    for (std::size_t pair = 0; pair < arr.half_edges.size() / 2; ++pair) {
        if (arr.is_box_edge(int32_t(pair * 2))) continue;
        CHECK(labels.edge_depth(int32_t(pair)) == 1);
    }
    for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
        if (arr.on_box_boundary(arr.vertices[v].p)) continue;
        CHECK(labels.vertex_depth(int32_t(v)) == 1);
    }
}

TEST_CASE("BFS depths equal scratch recount on random instances") {
    test::Rng rng(77);
    for (int t = 0; t < 30; ++t) {
        std::vector<DoubleWedge> wedges;
        int n = int(rng.integer(1, 15));
        for (int i = 0; i < n; ++i) wedges.push_back(rng.wedge(-5, 5));
        Arrangement arr = build_arrangement(wedge_lines(wedges));
        DepthLabels labels = depth_labels(arr, wedges);
        for (std::size_t f = 1; f < arr.faces.size(); ++f) {
            auto [nb, nh] = recount_face(arr, int32_t(f), wedges);
            CHECK(labels.face_bowtie[f] == nb);
            CHECK(labels.face_hourglass[f] == nh);
        }
        // Edge and vertex depths against direct evaluation, split by kind.
        auto direct_counts = [&](const Point& p) {
            std::pair<int, int> c{0, 0};
            for (const DoubleWedge& d : wedges)
                if (contains(d, p)) (d.kind() == WedgeKind::Bowtie ? c.first : c.second)++;
            return c;
        };
        for (std::size_t pair = 0; pair < arr.half_edges.size() / 2; ++pair) {
            if (arr.is_box_edge(int32_t(pair * 2))) continue;
            auto [db, dh] = direct_counts(arr.edge_midpoint(int32_t(pair * 2)));
            CHECK(labels.edge_bowtie[pair] == db);
            CHECK(labels.edge_hourglass[pair] == dh);
        }
        for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
            if (arr.on_box_boundary(arr.vertices[v].p)) continue;
            auto [db, dh] = direct_counts(arr.vertices[v].p);
            CHECK(labels.vertex_bowtie[v] == db);
            CHECK(labels.vertex_hourglass[v] == dh);
        }
    }
}

TEST_CASE("depth difference across an edge matches the owning flips") {
    test::Rng rng(99);
    for (int t = 0; t < 10; ++t) {
        std::vector<DoubleWedge> wedges;
        int n = int(rng.integer(1, 8));
        for (int i = 0; i < n; ++i) wedges.push_back(rng.wedge(-4, 4));
        Arrangement arr = build_arrangement(wedge_lines(wedges));
        DepthLabels labels = depth_labels(arr, wedges);
        for (std::size_t e = 0; e < arr.half_edges.size(); e += 2) {
            if (arr.is_box_edge(int32_t(e))) continue;
            int32_t f1 = arr.half_edges[e].face;
            int32_t f2 = arr.half_edges[e ^ 1].face;
            if (arr.faces[f1].outer || arr.faces[f2].outer) continue;
            int owners = 0;
            for (const DoubleWedge& d : wedges) {
                if (d.l1 == arr.lines[arr.half_edges[e].line] || d.l2 == arr.lines[arr.half_edges[e].line]) ++owners;
            }
            int diff = labels.face_depth(f1) - labels.face_depth(f2);
            CHECK(std::abs(diff) <= owners);
            CHECK((owners - std::abs(diff)) % 2 == 0);
            if (owners == 1) CHECK(std::abs(diff) == 1);
        }
    }
}

TEST_CASE("grating k=2 has exactly 9 faces at depth 4") {
    std::vector<DoubleWedge> wedges = make_grating(2);
    Arrangement arr = build_arrangement(wedge_lines(wedges));
    DepthLabels labels = depth_labels(arr, wedges);
    int full = 0;
    for (std::size_t f = 1; f < arr.faces.size(); ++f)
        if (labels.face_depth(int32_t(f)) == 4) ++full;
    CHECK(full == 9);
}

TEST_CASE("components of two opposite quadrants") {
    DoubleWedge d(Line{1, 0}, Line{-1, 0}, -1, true);
    Arrangement arr = build_arrangement(wedge_lines({d}));
    DepthLabels labels = depth_labels(arr, {d});
    CellSet sel = select_cells_depth_eq(arr, labels, 1);

    // Without the shared vertex the two wedge faces are separate.
    CellSet faces_only;
    faces_only.faces = sel.faces;
    CHECK(components_of(arr, faces_only).count == 2);

    // Gluing at the origin vertex connects them (boundary edges included).
    CHECK(components_of(arr, sel).count == 1);

    // Faces plus the vertex alone do not touch: the vertex connects only
    // through selected edges.
    CellSet faces_and_vertex = faces_only;
    faces_and_vertex.vertex_ids = sel.vertex_ids;
    CHECK(components_of(arr, faces_and_vertex).count == 3);
}

TEST_CASE("grating k=3 full intersection has 16 components") {
    std::vector<DoubleWedge> wedges = make_grating(3);
    IntersectionResult r = intersect_general(wedges);
    CHECK(r.component_count == 16);
}

TEST_CASE("component count invariant under cell enumeration order") {
    test::Rng rng(123);
    std::vector<DoubleWedge> wedges;
    for (int i = 0; i < 6; ++i) wedges.push_back(rng.wedge(-4, 4));
    Arrangement arr = build_arrangement(wedge_lines(wedges));
    DepthLabels labels = depth_labels(arr, wedges);
    CellSet sel = select_cells_depth_eq(arr, labels, 3);
    Components direct = components_of(arr, sel);
    CellSet shuffled = sel;
    std::reverse(shuffled.faces.begin(), shuffled.faces.end());
    std::reverse(shuffled.edge_pairs.begin(), shuffled.edge_pairs.end());
    std::reverse(shuffled.vertex_ids.begin(), shuffled.vertex_ids.end());
    CHECK(components_of(arr, shuffled).count == direct.count);
}
