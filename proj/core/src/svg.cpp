#include "centerkit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace centerkit {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

struct Frame {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    double size = 600, margin = 60;

    double sx(double x) const { return margin + (x - min_x) / span() * size; }
    double sy(double y) const { return margin + (max_y - y) / span() * size; }
    double span() const { return std::max({max_x - min_x, max_y - min_y, 1e-9}); }
};

}  // namespace

std::string render_graph_svg(const FiberGraph& g) {
    const auto& points = g.points();
    Frame fr;
    fr.min_x = fr.min_y = 1e300;
    fr.max_x = fr.max_y = -1e300;
    for (const auto& p : points) {
        const double x = to_double(p.point.x), y = to_double(p.point.y);
        fr.min_x = std::min(fr.min_x, x);
        fr.max_x = std::max(fr.max_x, x);
        fr.min_y = std::min(fr.min_y, y);
        fr.max_y = std::max(fr.max_y, y);
    }
    const bool rail = g.model() == GraphModel::G;
    const double width = fr.size + 2 * fr.margin + (rail ? 160 : 0);
    const double height = fr.size + 2 * fr.margin;

    // Screen positions of vertices.
    std::vector<std::pair<double, double>> pos(g.vertex_count());
    std::size_t sigma_count = 0;
    for (const auto& v : g.vertices()) sigma_count += v.kind == GraphVertex::Kind::Sigma;
    std::size_t sigma_seen = 0;
    for (std::size_t k = 0; k < g.vertex_count(); ++k) {
        const auto& v = g.vertices()[k];
        if (v.kind == GraphVertex::Kind::Sigma) {
            const double step = fr.size / static_cast<double>(std::max<std::size_t>(sigma_count, 2) - 1);
            pos[k] = {fr.size + 2 * fr.margin + 80, fr.margin + step * static_cast<double>(sigma_seen++)};
        } else {
            const auto& p = points[v.pair].point;
            pos[k] = {fr.sx(to_double(p.x)) + 14.0 * static_cast<double>(v.h), fr.sy(to_double(p.y))};
        }
    }

    std::size_t loops = 0, segments = 0, links = 0;
    std::ostringstream body;
    for (const auto& e : g.edges()) {
        const auto [x0, y0] = pos[e.from];
        const auto [x1, y1] = pos[e.to];
        switch (e.kind) {
            case GraphEdge::Kind::Loop:
                ++loops;
                body << "  <circle class=\"loop\" cx=\"" << num(x0) << "\" cy=\"" << num(y0 - 10) << "\" r=\"9\"/>\n";
                break;
            case GraphEdge::Kind::Link:
                ++links;
                body << "  <line class=\"link\" x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1)
                     << "\" y2=\"" << num(y1) << "\"/>\n";
                break;
            case GraphEdge::Kind::Segment: {
                ++segments;
                const long n = g.arrangement().multiplicity(e.line);
                const double offset = 12.0 * (static_cast<double>(e.sheet) - 0.5 * static_cast<double>(n - 1));
                const double len = std::max(std::hypot(x1 - x0, y1 - y0), 1e-9);
                const double cx = 0.5 * (x0 + x1) - offset * (y1 - y0) / len;
                const double cy = 0.5 * (y0 + y1) + offset * (x1 - x0) / len;
                body << "  <path class=\"segment\" data-line=\"" << e.line << "\" data-sheet=\"" << e.sheet
                     << "\" d=\"M " << num(x0) << ' ' << num(y0) << " Q " << num(cx) << ' ' << num(cy) << ' '
                     << num(x1) << ' ' << num(y1) << "\"/>\n";
                break;
            }
        }
    }
    for (std::size_t k = 0; k < g.vertex_count(); ++k) {
        const auto& v = g.vertices()[k];
        const bool sigma = v.kind == GraphVertex::Kind::Sigma;
        body << "  <circle class=\"" << (sigma ? "sigma" : "saddle") << "\" cx=\"" << num(pos[k].first) << "\" cy=\""
             << num(pos[k].second) << "\" r=\"4\"/>\n";
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" data-model=\""
        << (g.model() == GraphModel::G ? "G" : "Gcheck") << "\" data-vertices=\"" << g.vertex_count()
        << "\" data-edges=\"" << g.edge_count() << "\" data-loops=\"" << loops << "\" data-segment-edges=\""
        << segments << "\" data-link-edges=\"" << links << "\" data-betti1=\"" << g.betti1() << "\">\n"
        << "  <style>path,line{fill:none;stroke:#333;stroke-width:1.2}.loop{fill:none;stroke:#b22}"
           ".saddle{fill:#000}.sigma{fill:#26c}</style>\n"
        << body.str() << "</svg>\n";
    return out.str();
}

}  // namespace centerkit
