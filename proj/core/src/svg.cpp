#include "dwedge/svg.hpp"

#include <cmath>
#include <sstream>

namespace dwedge {

namespace {

std::string fixed(double v, int decimals) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(decimals);
    os << v;
    return os.str();
}

}  // namespace

std::string render_svg(const Arrangement& arr, const CellSet& selected, const SvgOptions& opt) {
    double xmin = arr.xmin.approx(), xmax = arr.xmax.approx();
    double ymin = arr.ymin.approx(), ymax = arr.ymax.approx();
    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    double scale = opt.width / w;
    int height = int(std::ceil(h * scale));
    auto tx = [&](const Point& p) { return (p.x.approx() - xmin) * scale; };
    auto ty = [&](const Point& p) { return (ymax - p.y.approx()) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << opt.width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int32_t f : selected.faces) {
        svg << "<polygon fill=\"#f5b342\" fill-opacity=\"0.65\" stroke=\"none\" points=\"";
        int32_t e0 = arr.faces[f].edge;
        int32_t e = e0;
        do {
            const Point& p = arr.vertices[arr.half_edges[e].target].p;
            svg << fixed(tx(p), opt.decimals) << "," << fixed(ty(p), opt.decimals) << " ";
            e = arr.half_edges[e].next;
        } while (e != e0);
        svg << "\"/>\n";
    }
    for (int32_t pe : selected.edge_pairs) {
        int32_t e = pe * 2;
        const Point& a = arr.vertices[arr.origin(e)].p;
        const Point& b = arr.vertices[arr.half_edges[e].target].p;
        svg << "<line x1=\"" << fixed(tx(a), opt.decimals) << "\" y1=\"" << fixed(ty(a), opt.decimals)
            << "\" x2=\"" << fixed(tx(b), opt.decimals) << "\" y2=\"" << fixed(ty(b), opt.decimals)
            << "\" stroke=\"#d4730f\" stroke-width=\"2.5\"/>\n";
    }

    // All arrangement edges on top, thin.
    for (std::size_t e = 0; e < arr.half_edges.size(); e += 2) {
        const Point& a = arr.vertices[arr.origin(int32_t(e))].p;
        const Point& b = arr.vertices[arr.half_edges[e].target].p;
        bool box = arr.is_box_edge(int32_t(e));
        svg << "<line x1=\"" << fixed(tx(a), opt.decimals) << "\" y1=\"" << fixed(ty(a), opt.decimals)
            << "\" x2=\"" << fixed(tx(b), opt.decimals) << "\" y2=\"" << fixed(ty(b), opt.decimals)
            << "\" stroke=\"" << (box ? "#888888" : "#1f4e79") << "\" stroke-width=\"" << (box ? 1.0 : 0.8)
            << "\"/>\n";
    }
    for (int32_t v : selected.vertex_ids) {
        const Point& p = arr.vertices[v].p;
        svg << "<circle cx=\"" << fixed(tx(p), opt.decimals) << "\" cy=\"" << fixed(ty(p), opt.decimals)
            << "\" r=\"3\" fill=\"#c0392b\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace dwedge
