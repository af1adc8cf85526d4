#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dwedge/geometry.hpp"

namespace dwedge {

// DCEL of the arrangement of a finite set of non-vertical lines, clipped to a
// rational bounding box that strictly contains every pairwise intersection
// and every line's y-intercept point with margin 1. Half-edges are allocated
// in twin pairs, so twin(e) == e ^ 1.
class Arrangement {
public:
    static constexpr int32_t kNone = -1;
    // Pseudo line ids for the box sides.
    static constexpr int32_t kBoxBottom = -2;
    static constexpr int32_t kBoxRight = -3;
    static constexpr int32_t kBoxTop = -4;
    static constexpr int32_t kBoxLeft = -5;

    struct Vertex {
        Point p;
        int32_t out_edge = kNone;  // some half-edge with origin here
    };
    struct HalfEdge {
        int32_t target = kNone;
        int32_t face = kNone;
        int32_t next = kNone;
        int32_t prev = kNone;
        int32_t line = kNone;  // input line id, or a box side id
    };
    struct Face {
        int32_t edge = kNone;  // one boundary half-edge
        bool outer = false;
    };

    std::vector<Vertex> vertices;
    std::vector<HalfEdge> half_edges;
    std::vector<Face> faces;
    std::vector<Line> lines;              // deduplicated input lines
    std::vector<int> line_multiplicity;   // times each line appeared in the input
    Rational xmin, xmax, ymin, ymax;

    static int32_t twin(int32_t e) { return e ^ 1; }
    int32_t origin(int32_t e) const { return half_edges[twin(e)].target; }

    bool on_box_boundary(const Point& p) const;
    bool is_box_edge(int32_t e) const { return half_edges[e].line < kNone + 1 && half_edges[e].line != kNone; }

    // Strictly interior point of a face, from three consecutive boundary
    // vertices at the lowest-id boundary half-edge. Not valid for the outer face.
    Point face_sample(int32_t f) const;
    Point edge_midpoint(int32_t e) const;

    // Lowest-id half-edge of the face cycle (canonical representative).
    int32_t face_anchor(int32_t e) const;

    int32_t outer_face() const { return 0; }

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return half_edges.size() / 2; }
    std::size_t face_count() const { return faces.size(); }

    // Counts restricted to cells strictly inside the box.
    std::size_t interior_vertex_count() const;
    std::size_t interior_face_count() const;  // all faces except the outer one

    int vertex_degree(int32_t v) const;

    // Input line ids passing through vertex v (deduplicated, excludes box sides).
    std::vector<int32_t> lines_through_vertex(int32_t v) const;

    // Structural audit: twin/next/prev consistency, face closure, Euler formula.
    // Throws std::logic_error on violation.
    void audit() const;
};

Arrangement build_arrangement(const std::vector<Line>& input_lines);

// Per-cell counts of containing double-wedges, split by kind.
struct DepthLabels {
    std::vector<int> face_bowtie, face_hourglass;
    std::vector<int> edge_bowtie, edge_hourglass;      // per half-edge pair (index e/2)
    std::vector<int> vertex_bowtie, vertex_hourglass;

    int face_depth(int32_t f) const { return face_bowtie[f] + face_hourglass[f]; }
    int edge_depth(int32_t pair) const { return edge_bowtie[pair] + edge_hourglass[pair]; }
    int vertex_depth(int32_t v) const { return vertex_bowtie[v] + vertex_hourglass[v]; }
};

// BFS over the planar dual with O(1) updates per crossing; edge and vertex
// depths derived from incident-face depths and the per-line inclusion bits.
// Requires every bounding line of `wedges` to occur in arr.lines.
DepthLabels depth_labels(const Arrangement& arr, const std::vector<DoubleWedge>& wedges);

struct CellSet {
    std::vector<int32_t> faces;       // interior face ids
    std::vector<int32_t> edge_pairs;  // half-edge pair ids (e/2), non-box edges
    std::vector<int32_t> vertex_ids;  // vertices strictly inside the box
};

CellSet select_cells_depth_eq(const Arrangement& arr, const DepthLabels& labels, int depth);
CellSet select_cells_threshold(const Arrangement& arr, const DepthLabels& labels, int bowties, int hourglasses);

struct Components {
    int count = 0;
    std::vector<Point> witnesses;  // one interior point per component
};

// Connected components of the union of the selected closed cells under DCEL
// incidence (face~edge when the edge bounds the face, edge~vertex at endpoints).
Components components_of(const Arrangement& arr, const CellSet& selected);

}  // namespace dwedge
