#include "dwedge/arrangement.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace dwedge {

namespace {

[[noreturn]] void structural_error(const char* what) {
    throw std::logic_error(std::string("Arrangement: ") + what);
}

}  // namespace

bool Arrangement::on_box_boundary(const Point& p) const {
    return p.x == xmin || p.x == xmax || p.y == ymin || p.y == ymax;
}

int32_t Arrangement::face_anchor(int32_t start) const {
    int32_t best = start;
    int32_t e = half_edges[start].next;
    while (e != start) {
        best = std::min(best, e);
        e = half_edges[e].next;
    }
    return best;
}

Point Arrangement::face_sample(int32_t f) const {
    int32_t anchor = face_anchor(faces[f].edge);
    int32_t e1 = anchor;
    int32_t e2 = half_edges[e1].next;
    const Point& a = vertices[origin(e1)].p;
    const Point& b = vertices[half_edges[e1].target].p;
    const Point& c = vertices[half_edges[e2].target].p;
    // Three consecutive boundary vertices of an interior face are never
    // collinear, so the centroid is strictly inside.
    return Point{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
}

Point Arrangement::edge_midpoint(int32_t e) const {
    const Point& a = vertices[origin(e)].p;
    const Point& b = vertices[half_edges[e].target].p;
    return Point{(a.x + b.x) / 2, (a.y + b.y) / 2};
}

std::size_t Arrangement::interior_vertex_count() const {
    std::size_t n = 0;
    for (const Vertex& v : vertices)
        if (!on_box_boundary(v.p)) ++n;
    return n;
}

std::size_t Arrangement::interior_face_count() const {
    return faces.size() - 1;
}

int Arrangement::vertex_degree(int32_t v) const {
    int32_t h0 = vertices[v].out_edge;
    int deg = 0;
    int32_t h = h0;
    do {
        ++deg;
        h = half_edges[twin(h)].next;
    } while (h != h0);
    return deg;
}

std::vector<int32_t> Arrangement::lines_through_vertex(int32_t v) const {
    std::vector<int32_t> out;
    int32_t h0 = vertices[v].out_edge;
    int32_t h = h0;
    do {
        int32_t ln = half_edges[h].line;
        if (ln >= 0 && std::find(out.begin(), out.end(), ln) == out.end()) out.push_back(ln);
        h = half_edges[twin(h)].next;
    } while (h != h0);
    return out;
}

void Arrangement::audit() const {
    const std::size_t H = half_edges.size();
    if (H % 2 != 0) structural_error("odd number of half-edges");
    for (std::size_t e = 0; e < H; ++e) {
        const HalfEdge& he = half_edges[e];
        if (half_edges[he.next].prev != int32_t(e)) structural_error("next/prev mismatch");
        if (half_edges[he.prev].next != int32_t(e)) structural_error("prev/next mismatch");
        if (half_edges[he.next].face != he.face) structural_error("face changes along cycle");
        if (origin(he.next) != he.target) structural_error("cycle not vertex-continuous");
        if (he.target == origin(int32_t(e)) ) structural_error("zero-length half-edge");
    }
    // Every cycle must be reachable from its face record and cover all edges.
    std::vector<char> seen(H, 0);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        int32_t start = faces[f].edge;
        int32_t e = start;
        do {
            if (seen[e]) structural_error("half-edge in two face cycles");
            seen[e] = 1;
            if (half_edges[e].face != int32_t(f)) structural_error("face record mismatch");
            e = half_edges[e].next;
        } while (e != start);
    }
    for (char s : seen)
        if (!s) structural_error("half-edge not on any face cycle");
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (origin(vertices[v].out_edge) != int32_t(v)) structural_error("vertex out_edge mismatch");
    }
    // Euler relation on the planarization (outer face included).
    long euler = long(vertices.size()) - long(H / 2) + long(faces.size());
    if (euler != 2) structural_error("Euler relation violated");
}

// ---------------------------------------------------------------------------
// Incremental construction

namespace {

class Builder {
public:
    explicit Builder(std::vector<Line> lines, std::vector<int> mult) {
        arr_.lines = std::move(lines);
        arr_.line_multiplicity = std::move(mult);
        compute_box();
        init_box();
        for (std::size_t i = 0; i < arr_.lines.size(); ++i) insert_line(int32_t(i));
    }

    Arrangement take() { return std::move(arr_); }

private:
    Arrangement arr_;

    Arrangement::HalfEdge& he(int32_t e) { return arr_.half_edges[e]; }
    int32_t origin(int32_t e) const { return arr_.origin(e); }
    int32_t target(int32_t e) const { return arr_.half_edges[e].target; }

    void compute_box() {
        bool have = false;
        Rational lox, hix, loy, hiy;
        auto feed = [&](const Point& p) {
            if (!have) {
                lox = hix = p.x;
                loy = hiy = p.y;
                have = true;
                return;
            }
            lox = min(lox, p.x);
            hix = max(hix, p.x);
            loy = min(loy, p.y);
            hiy = max(hiy, p.y);
        };
        const auto& ls = arr_.lines;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            // The intercept point keeps every line crossing the box even when
            // it meets no other line.
            feed(Point{0, ls[i].b});
            for (std::size_t j = i + 1; j < ls.size(); ++j) {
                if (ls[i].a == ls[j].a) continue;
                Rational x = (ls[j].b - ls[i].b) / (ls[i].a - ls[j].a);
                feed(Point{x, ls[i].eval(x)});
            }
        }
        if (!have) {
            lox = hix = loy = hiy = 0;
        }
        arr_.xmin = lox - 1;
        arr_.xmax = hix + 1;
        arr_.ymin = loy - 1;
        arr_.ymax = hiy + 1;
    }

    int32_t new_vertex(Point p) {
        arr_.vertices.push_back({std::move(p), Arrangement::kNone});
        return int32_t(arr_.vertices.size() - 1);
    }

    // Allocates the twin pair (from->to, to->from); returns the first id.
    int32_t new_edge_pair(int32_t from, int32_t to, int32_t line) {
        int32_t e = int32_t(arr_.half_edges.size());
        arr_.half_edges.push_back({to, Arrangement::kNone, Arrangement::kNone, Arrangement::kNone, line});
        arr_.half_edges.push_back({from, Arrangement::kNone, Arrangement::kNone, Arrangement::kNone, line});
        if (arr_.vertices[from].out_edge == Arrangement::kNone) arr_.vertices[from].out_edge = e;
        if (arr_.vertices[to].out_edge == Arrangement::kNone) arr_.vertices[to].out_edge = e + 1;
        return e;
    }

    void init_box() {
        int32_t c0 = new_vertex(Point{arr_.xmin, arr_.ymin});
        int32_t c1 = new_vertex(Point{arr_.xmax, arr_.ymin});
        int32_t c2 = new_vertex(Point{arr_.xmax, arr_.ymax});
        int32_t c3 = new_vertex(Point{arr_.xmin, arr_.ymax});
        arr_.faces.push_back({Arrangement::kNone, true});   // 0: outer
        arr_.faces.push_back({Arrangement::kNone, false});  // 1: box interior
        int32_t b = new_edge_pair(c0, c1, Arrangement::kBoxBottom);
        int32_t r = new_edge_pair(c1, c2, Arrangement::kBoxRight);
        int32_t t = new_edge_pair(c2, c3, Arrangement::kBoxTop);
        int32_t l = new_edge_pair(c3, c0, Arrangement::kBoxLeft);
        auto chain = [&](int32_t a, int32_t bnext) {
            he(a).next = bnext;
            he(bnext).prev = a;
        };
        // Interior cycle (CCW) and outer cycle.
        chain(b, r); chain(r, t); chain(t, l); chain(l, b);
        chain(b ^ 1, l ^ 1); chain(l ^ 1, t ^ 1); chain(t ^ 1, r ^ 1); chain(r ^ 1, b ^ 1);
        for (int32_t e : {b, r, t, l}) {
            he(e).face = 1;
            he(e ^ 1).face = 0;
        }
        arr_.faces[0].edge = b ^ 1;
        arr_.faces[1].edge = b;
    }

    // Splits half-edge h at point z strictly inside it; returns the new vertex.
    int32_t split_edge(int32_t h, const Point& z) {
        int32_t h2 = Arrangement::twin(h);
        int32_t B = target(h);
        int32_t w = new_vertex(z);
        int32_t j = new_edge_pair(w, B, he(h).line);
        int32_t j2 = j ^ 1;
        int32_t hn = he(h).next;
        int32_t hp2 = he(h2).prev;

        he(h).target = w;
        he(j).face = he(h).face;
        he(j2).face = he(h2).face;

        he(h).next = j;  he(j).prev = h;
        he(j).next = hn; he(hn).prev = j;

        he(hp2).next = j2; he(j2).prev = hp2;
        he(j2).next = h2;  he(h2).prev = j2;

        arr_.vertices[B].out_edge = j2;
        arr_.vertices[w].out_edge = j;
        return w;
    }

    // Finds (or creates by splitting a box edge) the boundary vertex at p.
    int32_t boundary_vertex_at(const Point& p) {
        int32_t start = arr_.faces[0].edge;
        int32_t e = start;
        do {
            int32_t a = origin(e);
            int32_t b = target(e);
            const Point& pa = arr_.vertices[a].p;
            const Point& pb = arr_.vertices[b].p;
            if (pa == p) return a;
            if (pb == p) return b;
            bool horizontal = he(e).line == Arrangement::kBoxBottom || he(e).line == Arrangement::kBoxTop;
            if (horizontal) {
                if (pa.y == p.y && min(pa.x, pb.x) < p.x && p.x < max(pa.x, pb.x)) return split_edge(e, p);
            } else {
                if (pa.x == p.x && min(pa.y, pb.y) < p.y && p.y < max(pa.y, pb.y)) return split_edge(e, p);
            }
            e = he(e).next;
        } while (e != start);
        structural_error("entry point not on box boundary");
    }

    // The interior face whose sector at v strictly contains direction (dx, dy).
    int32_t face_entered(int32_t v, const Rational& dx, const Rational& dy) {
        int32_t h0 = arr_.vertices[v].out_edge;
        int32_t h = h0;
        const Point& pv = arr_.vertices[v].p;
        do {
            if (!arr_.faces[he(h).face].outer) {
                // Sector of face(h) at v spans from dir(h) CCW to the reversed
                // direction of prev(h); interior faces are convex so it is <= pi.
                const Point& pu = arr_.vertices[target(h)].p;
                int32_t pe = he(h).prev;
                const Point& pw = arr_.vertices[origin(pe)].p;
                Rational ux = pu.x - pv.x, uy = pu.y - pv.y;
                Rational wx = pw.x - pv.x, wy = pw.y - pv.y;
                int c1 = (ux * dy - uy * dx).sign();
                int c2 = (dx * wy - dy * wx).sign();
                if (c1 > 0 && c2 > 0) return he(h).face;
            }
            h = he(Arrangement::twin(h)).next;
        } while (h != h0);
        structural_error("no face sector contains the walk direction");
    }

    void insert_line(int32_t id) {
        const Line& L = arr_.lines[id];
        Point entry = boundary_crossing(L, /*left=*/true);
        int32_t v = boundary_vertex_at(entry);

        while (true) {
            int32_t f = face_entered(v, 1, L.a);
            // Scan the face cycle for the exit: an existing vertex on L, or an
            // edge whose endpoints straddle L.
            int32_t exit_vertex = Arrangement::kNone;
            int32_t cross_edge = Arrangement::kNone;
            int32_t e_in_v = Arrangement::kNone;
            int32_t e_in_w = Arrangement::kNone;
            int32_t e0 = arr_.faces[f].edge;
            int32_t e = e0;
            do {
                int32_t b = target(e);
                if (b == v) {
                    e_in_v = e;
                } else if (side_of(L, arr_.vertices[b].p) == 0) {
                    exit_vertex = b;
                    e_in_w = e;
                }
                e = he(e).next;
            } while (e != e0);
            if (exit_vertex == Arrangement::kNone) {
                e = e0;
                do {
                    int32_t a = origin(e), b = target(e);
                    if (a != v && b != v &&
                        side_of(L, arr_.vertices[a].p) * side_of(L, arr_.vertices[b].p) < 0) {
                        cross_edge = e;
                        break;
                    }
                    e = he(e).next;
                } while (e != e0);
            }
            if (e_in_v == Arrangement::kNone) structural_error("walk vertex not on face boundary");

            int32_t w;
            if (exit_vertex != Arrangement::kNone) {
                w = exit_vertex;
            } else {
                if (cross_edge == Arrangement::kNone) structural_error("no exit from face");
                Point z = edge_line_crossing(L, cross_edge);
                w = split_edge(cross_edge, z);
                // After the split, cross_edge ends at w inside this face.
                e_in_w = cross_edge;
            }
            add_diagonal(f, v, e_in_v, w, e_in_w, id);
            if (arr_.on_box_boundary(arr_.vertices[w].p)) break;
            v = w;
        }
    }

    // Exact crossing of L with the supporting line of edge e.
    Point edge_line_crossing(const Line& L, int32_t e) {
        int32_t ln = he(e).line;
        switch (ln) {
            case Arrangement::kBoxBottom: return Point{(arr_.ymin - L.b) / L.a, arr_.ymin};
            case Arrangement::kBoxTop: return Point{(arr_.ymax - L.b) / L.a, arr_.ymax};
            case Arrangement::kBoxLeft: return Point{arr_.xmin, L.eval(arr_.xmin)};
            case Arrangement::kBoxRight: return Point{arr_.xmax, L.eval(arr_.xmax)};
            default: {
                LineMeet m = line_intersection(L, arr_.lines[ln]);
                return std::get<Point>(m);
            }
        }
    }

    // Where L first/last meets the box boundary (left = smallest x).
    Point boundary_crossing(const Line& L, bool left) const {
        Rational x = left ? arr_.xmin : arr_.xmax;
        Rational y = L.eval(x);
        if (y < arr_.ymin) {
            // Enters through the bottom (or exits, when scanning rightward).
            return Point{(arr_.ymin - L.b) / L.a, arr_.ymin};
        }
        if (y > arr_.ymax) {
            return Point{(arr_.ymax - L.b) / L.a, arr_.ymax};
        }
        return Point{x, y};
    }

    // Splits face f by the chord v->w; e_in_v / e_in_w are the cycle edges of
    // f ending at v and w respectively.
    void add_diagonal(int32_t f, int32_t v, int32_t e_in_v, int32_t w, int32_t e_in_w, int32_t line_id) {
        int32_t e_out_v = he(e_in_v).next;
        int32_t e_out_w = he(e_in_w).next;
        int32_t g = new_edge_pair(v, w, line_id);
        int32_t g2 = g ^ 1;

        he(e_in_v).next = g;   he(g).prev = e_in_v;
        he(g).next = e_out_w;  he(e_out_w).prev = g;

        he(e_in_w).next = g2;  he(g2).prev = e_in_w;
        he(g2).next = e_out_v; he(e_out_v).prev = g2;

        he(g).face = f;
        arr_.faces[f].edge = g;
        int32_t f2 = int32_t(arr_.faces.size());
        arr_.faces.push_back({g2, false});
        int32_t e = g2;
        do {
            he(e).face = f2;
            e = he(e).next;
        } while (e != g2);
    }
};

}  // namespace

Arrangement build_arrangement(const std::vector<Line>& input_lines) {
    std::vector<Line> sorted = input_lines;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Line> uniq;
    std::vector<int> mult;
    for (const Line& l : sorted) {
        if (!uniq.empty() && uniq.back() == l) {
            ++mult.back();
        } else {
            uniq.push_back(l);
            mult.push_back(1);
        }
    }
    Builder b(std::move(uniq), std::move(mult));
    return b.take();
}

// ---------------------------------------------------------------------------
// Depth labeling

namespace {

struct Owner {
    int32_t wedge;
    int which;  // 1 or 2
};

std::vector<std::vector<Owner>> owners_by_line(const Arrangement& arr, const std::vector<DoubleWedge>& wedges) {
    std::map<Line, int32_t> index;
    for (std::size_t i = 0; i < arr.lines.size(); ++i) index[arr.lines[i]] = int32_t(i);
    std::vector<std::vector<Owner>> owners(arr.lines.size());
    for (std::size_t w = 0; w < wedges.size(); ++w) {
        auto it1 = index.find(wedges[w].l1);
        auto it2 = index.find(wedges[w].l2);
        if (it1 == index.end() || it2 == index.end())
            throw std::invalid_argument("depth_labels: wedge bounding line missing from arrangement");
        owners[it1->second].push_back({int32_t(w), 1});
        owners[it2->second].push_back({int32_t(w), 2});
    }
    return owners;
}

bool vertex_in_wedge(const DoubleWedge& d, bool on1, bool on2, const Point& p) {
    if (on1 && on2) return d.l1_closed && d.l2_closed;
    if (on1) return d.l1_closed;
    if (on2) return d.l2_closed;
    return contains_strict(d, p);
}

}  // namespace

DepthLabels depth_labels(const Arrangement& arr, const std::vector<DoubleWedge>& wedges) {
    auto owners = owners_by_line(arr, wedges);

    const std::size_t F = arr.faces.size();
    std::vector<Point> sample(F, Point{0, 0});
    std::vector<char> have_sample(F, 0);
    auto face_pt = [&](int32_t f) -> const Point& {
        if (!have_sample[f]) {
            sample[f] = arr.face_sample(f);
            have_sample[f] = 1;
        }
        return sample[f];
    };

    DepthLabels out;
    out.face_bowtie.assign(F, -1);
    out.face_hourglass.assign(F, -1);

    // Seed an arbitrary interior face by direct evaluation.
    int32_t f0 = 1;
    {
        int nb = 0, nh = 0;
        const Point& s = face_pt(f0);
        for (const DoubleWedge& d : wedges) {
            if (contains_strict(d, s)) (d.kind() == WedgeKind::Bowtie ? nb : nh)++;
        }
        out.face_bowtie[f0] = nb;
        out.face_hourglass[f0] = nh;
    }

    std::queue<int32_t> bfs;
    bfs.push(f0);
    while (!bfs.empty()) {
        int32_t f = bfs.front();
        bfs.pop();
        int32_t e0 = arr.faces[f].edge;
        int32_t e = e0;
        do {
            int32_t g = arr.half_edges[Arrangement::twin(e)].face;
            if (!arr.faces[g].outer && out.face_bowtie[g] < 0) {
                int nb = out.face_bowtie[f];
                int nh = out.face_hourglass[f];
                const Point& sg = face_pt(g);
                for (const Owner& o : owners[arr.half_edges[e].line]) {
                    const DoubleWedge& d = wedges[o.wedge];
                    int delta = contains_strict(d, sg) ? +1 : -1;
                    (d.kind() == WedgeKind::Bowtie ? nb : nh) += delta;
                }
                out.face_bowtie[g] = nb;
                out.face_hourglass[g] = nh;
                bfs.push(g);
            }
            e = arr.half_edges[e].next;
        } while (e != e0);
    }

    // Edge depths from one incident face: non-owners agree with the face,
    // owners contribute their inclusion bit.
    const std::size_t E = arr.half_edges.size() / 2;
    out.edge_bowtie.assign(E, 0);
    out.edge_hourglass.assign(E, 0);
    for (std::size_t pair = 0; pair < E; ++pair) {
        int32_t h = int32_t(pair * 2);
        if (arr.is_box_edge(h)) {
            out.edge_bowtie[pair] = out.edge_hourglass[pair] = -1;
            continue;
        }
        int32_t f = arr.half_edges[h].face;
        if (arr.faces[f].outer) f = arr.half_edges[Arrangement::twin(h)].face;
        int nb = out.face_bowtie[f];
        int nh = out.face_hourglass[f];
        const Point& sf = face_pt(f);
        for (const Owner& o : owners[arr.half_edges[h].line]) {
            const DoubleWedge& d = wedges[o.wedge];
            int& slot = (d.kind() == WedgeKind::Bowtie ? nb : nh);
            if (contains_strict(d, sf)) slot -= 1;
            bool bit = (o.which == 1) ? d.l1_closed : d.l2_closed;
            if (bit) slot += 1;
        }
        out.edge_bowtie[pair] = nb;
        out.edge_hourglass[pair] = nh;
    }

    // Vertex depths likewise, deduplicating wedges that own several incident lines.
    const std::size_t V = arr.vertices.size();
    out.vertex_bowtie.assign(V, 0);
    out.vertex_hourglass.assign(V, 0);
    for (std::size_t v = 0; v < V; ++v) {
        // Some incident interior face.
        int32_t h0 = arr.vertices[v].out_edge;
        int32_t h = h0;
        int32_t f = Arrangement::kNone;
        do {
            if (!arr.faces[arr.half_edges[h].face].outer) {
                f = arr.half_edges[h].face;
                break;
            }
            h = arr.half_edges[Arrangement::twin(h)].next;
        } while (h != h0);
        if (f == Arrangement::kNone) structural_error("vertex with no interior face");

        int nb = out.face_bowtie[f];
        int nh = out.face_hourglass[f];
        const Point& sf = face_pt(f);
        std::vector<int32_t> thru = arr.lines_through_vertex(int32_t(v));
        std::vector<int32_t> seen_wedges;
        for (int32_t ln : thru) {
            for (const Owner& o : owners[ln]) {
                if (std::find(seen_wedges.begin(), seen_wedges.end(), o.wedge) != seen_wedges.end()) continue;
                seen_wedges.push_back(o.wedge);
                const DoubleWedge& d = wedges[o.wedge];
                bool o1 = false, o2 = false;
                for (int32_t ln2 : thru) {
                    if (arr.lines[ln2] == d.l1) o1 = true;
                    if (arr.lines[ln2] == d.l2) o2 = true;
                }
                int& slot = (d.kind() == WedgeKind::Bowtie ? nb : nh);
                if (contains_strict(d, sf)) slot -= 1;
                if (vertex_in_wedge(d, o1, o2, arr.vertices[v].p)) slot += 1;
            }
        }
        out.vertex_bowtie[v] = nb;
        out.vertex_hourglass[v] = nh;
    }

    return out;
}

CellSet select_cells_depth_eq(const Arrangement& arr, const DepthLabels& labels, int depth) {
    CellSet s;
    for (std::size_t f = 1; f < arr.faces.size(); ++f)
        if (labels.face_depth(int32_t(f)) == depth) s.faces.push_back(int32_t(f));
    for (std::size_t pair = 0; pair < arr.half_edges.size() / 2; ++pair) {
        if (arr.is_box_edge(int32_t(pair * 2))) continue;
        if (labels.edge_depth(int32_t(pair)) == depth) s.edge_pairs.push_back(int32_t(pair));
    }
    for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
        if (arr.on_box_boundary(arr.vertices[v].p)) continue;
        if (labels.vertex_depth(int32_t(v)) == depth) s.vertex_ids.push_back(int32_t(v));
    }
    return s;
}

CellSet select_cells_threshold(const Arrangement& arr, const DepthLabels& labels, int bowties, int hourglasses) {
    CellSet s;
    for (std::size_t f = 1; f < arr.faces.size(); ++f)
        if (labels.face_bowtie[f] >= bowties && labels.face_hourglass[f] >= hourglasses)
            s.faces.push_back(int32_t(f));
    for (std::size_t pair = 0; pair < arr.half_edges.size() / 2; ++pair) {
        if (arr.is_box_edge(int32_t(pair * 2))) continue;
        if (labels.edge_bowtie[pair] >= bowties && labels.edge_hourglass[pair] >= hourglasses)
            s.edge_pairs.push_back(int32_t(pair));
    }
    for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
        if (arr.on_box_boundary(arr.vertices[v].p)) continue;
        if (labels.vertex_bowtie[v] >= bowties && labels.vertex_hourglass[v] >= hourglasses)
            s.vertex_ids.push_back(int32_t(v));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Connected components of selected cells

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = int32_t(i);
    }
    int32_t find(int32_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(int32_t a, int32_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<int32_t> parent_;
};

}  // namespace

Components components_of(const Arrangement& arr, const CellSet& selected) {
    const std::size_t F = arr.faces.size();
    const std::size_t E = arr.half_edges.size() / 2;
    const std::size_t V = arr.vertices.size();

    std::vector<char> fsel(F, 0), esel(E, 0), vsel(V, 0);
    for (int32_t f : selected.faces) fsel[f] = 1;
    for (int32_t pe : selected.edge_pairs) esel[pe] = 1;
    for (int32_t v : selected.vertex_ids) vsel[v] = 1;

    // ids: faces, then edge pairs, then vertices
    auto fid = [](int32_t f) { return f; };
    auto eid = [&](int32_t pe) { return int32_t(F) + pe; };
    auto vid = [&](int32_t v) { return int32_t(F + E) + v; };
    UnionFind uf(F + E + V);

    for (int32_t pe : selected.edge_pairs) {
        int32_t h = pe * 2;
        int32_t fa = arr.half_edges[h].face;
        int32_t fb = arr.half_edges[Arrangement::twin(h)].face;
        if (!arr.faces[fa].outer && fsel[fa]) uf.unite(eid(pe), fid(fa));
        if (!arr.faces[fb].outer && fsel[fb]) uf.unite(eid(pe), fid(fb));
        int32_t v1 = arr.half_edges[h].target;
        int32_t v2 = arr.origin(h);
        if (vsel[v1]) uf.unite(eid(pe), vid(v1));
        if (vsel[v2]) uf.unite(eid(pe), vid(v2));
    }

    Components out;
    std::map<int32_t, Point> witness_by_root;
    for (int32_t f : selected.faces) {
        int32_t r = uf.find(fid(f));
        if (!witness_by_root.count(r)) witness_by_root.emplace(r, arr.face_sample(f));
    }
    for (int32_t pe : selected.edge_pairs) {
        int32_t r = uf.find(eid(pe));
        if (!witness_by_root.count(r)) witness_by_root.emplace(r, arr.edge_midpoint(pe * 2));
    }
    for (int32_t v : selected.vertex_ids) {
        int32_t r = uf.find(vid(v));
        if (!witness_by_root.count(r)) witness_by_root.emplace(r, arr.vertices[v].p);
    }

    out.count = int(witness_by_root.size());
    out.witnesses.reserve(out.count);
    for (auto& [root, pt] : witness_by_root) out.witnesses.push_back(pt);
    return out;
}

}  // namespace dwedge
