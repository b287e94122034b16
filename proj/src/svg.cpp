#include "cgrig/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace cgrig {
namespace {

constexpr std::array<const char*, 8> palette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                             "#9467bd", "#8c564b", "#e377c2", "#17becf"};

const char* color_for(std::size_t index) { return palette[index % palette.size()]; }

std::string num(double v) {
    if (std::abs(v) < 5e-4) v = 0.0;
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << v;
    return s.str();
}

const char* arrow_defs =
    "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
    "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#444\"/></marker></defs>\n";

// Spread the quotient vertices along the cell's anti-diagonal.
std::array<double, 2> cell_offset(VertexId v, std::size_t n) {
    if (n <= 1) return {0.5, 0.5};
    const double t = static_cast<double>(v) / static_cast<double>(n - 1);
    return {0.2 + 0.6 * t, 0.8 - 0.6 * t};
}

} // namespace

std::string development_svg(const ColoredGraph& g, const DevelopmentWindow& dev) {
    const Window& w = dev.window;
    const double x0 = static_cast<double>(w.x_min) * svg_cell;
    const double y0 = -static_cast<double>(w.y_max + 1) * svg_cell;
    const double width = static_cast<double>(w.width()) * svg_cell;
    const double height = static_cast<double>(w.height()) * svg_cell;
    const std::size_t n = g.vertex_count();
    auto pos = [&](VertexId v, Color t) {
        const auto off = cell_offset(v, n);
        return std::array<double, 2>{(static_cast<double>(t.g1) + off[0]) * svg_cell,
                                     -(static_cast<double>(t.g2) + off[1]) * svg_cell};
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0 - 10) << ' ' << num(y0 - 10) << ' '
        << num(width + 20) << ' ' << num(height + 20) << "\">\n";
    out << arrow_defs;
    // Fundamental domain, when it is inside the window.
    if (w.contains(Color{0, 0})) {
        out << "<rect x=\"0.000\" y=\"" << num(-svg_cell) << "\" width=\"" << num(svg_cell) << "\" height=\""
            << num(svg_cell) << "\" fill=\"#eeeeee\"/>\n";
    }
    out << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (std::int64_t x = w.x_min; x <= w.x_max + 1; ++x) {
        out << "<line x1=\"" << num(static_cast<double>(x) * svg_cell) << "\" y1=\"" << num(y0) << "\" x2=\""
            << num(static_cast<double>(x) * svg_cell) << "\" y2=\"" << num(y0 + height) << "\"/>\n";
    }
    for (std::int64_t y = w.y_min; y <= w.y_max + 1; ++y) {
        out << "<line x1=\"" << num(x0) << "\" y1=\"" << num(-static_cast<double>(y) * svg_cell) << "\" x2=\""
            << num(x0 + width) << "\" y2=\"" << num(-static_cast<double>(y) * svg_cell) << "\"/>\n";
    }
    out << "</g>\n";
    if (w.contains(Color{0, 0})) {
        out << "<g stroke=\"#444\" stroke-width=\"2\" marker-end=\"url(#arrow)\">\n";
        out << "<line x1=\"0.000\" y1=\"0.000\" x2=\"" << num(svg_cell) << "\" y2=\"0.000\"/>\n";
        out << "<line x1=\"0.000\" y1=\"0.000\" x2=\"0.000\" y2=\"" << num(-svg_cell) << "\"/>\n";
        out << "</g>\n";
    }

    out << "<g stroke-width=\"2\">\n";
    for (const auto& e : dev.edges) {
        const auto& de = g.edge(e.edge);
        const auto a = pos(de.tail, dev.vertices[e.tail].translate);
        const auto b = pos(de.head, dev.vertices[e.head].translate);
        out << "<line x1=\"" << num(a[0]) << "\" y1=\"" << num(a[1]) << "\" x2=\"" << num(b[0]) << "\" y2=\""
            << num(b[1]) << "\" stroke=\"" << color_for(dev.predicted_class[e.tail]) << "\"/>\n";
    }
    out << "</g>\n<g>\n";
    for (std::size_t i = 0; i < dev.vertices.size(); ++i) {
        const auto p = pos(dev.vertices[i].vertex, dev.vertices[i].translate);
        out << "<circle cx=\"" << num(p[0]) << "\" cy=\"" << num(p[1]) << "\" r=\"4\" fill=\""
            << color_for(dev.predicted_class[i]) << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string realization_svg(const ColoredGraph& g, const Realization& r) {
    const double l1 = std::hypot(r.L[0][0], r.L[1][0]);
    const double l2 = std::hypot(r.L[0][1], r.L[1][1]);
    double longest = std::max(l1, l2);
    if (longest == 0.0) {
        for (const auto& p : r.p) longest = std::max(longest, std::hypot(p[0], p[1]));
    }
    const double s = longest > 0.0 ? svg_cell / longest : 1.0;
    auto screen = [&](double x, double y) { return std::array<double, 2>{x * s, -y * s}; };

    std::ostringstream body;
    double lo_x = -10, lo_y = -10, hi_x = 10, hi_y = 10;
    auto extend = [&](std::array<double, 2> q) {
        lo_x = std::min(lo_x, q[0] - 10);
        hi_x = std::max(hi_x, q[0] + 10);
        lo_y = std::min(lo_y, q[1] - 10);
        hi_y = std::max(hi_y, q[1] + 10);
    };

    const auto o = screen(0, 0);
    const auto a = screen(r.L[0][0], r.L[1][0]);
    const auto b = screen(r.L[0][1], r.L[1][1]);
    const auto ab = screen(r.L[0][0] + r.L[0][1], r.L[1][0] + r.L[1][1]);
    for (const auto& q : {o, a, b, ab}) extend(q);
    body << "<polygon points=\"" << num(o[0]) << ',' << num(o[1]) << ' ' << num(a[0]) << ',' << num(a[1]) << ' '
         << num(ab[0]) << ',' << num(ab[1]) << ' ' << num(b[0]) << ',' << num(b[1]) << "\" fill=\"#eeeeee\"/>\n";
    body << "<g stroke=\"#444\" stroke-width=\"2\" marker-end=\"url(#arrow)\">\n";
    for (const auto& t : {a, b}) {
        body << "<line x1=\"" << num(o[0]) << "\" y1=\"" << num(o[1]) << "\" x2=\"" << num(t[0]) << "\" y2=\""
             << num(t[1]) << "\"/>\n";
    }
    body << "</g>\n<g stroke-width=\"2\">\n";
    for (const auto& e : g.edges()) {
        const auto& pi = r.p[e.tail];
        const auto eta = r.displacement(e);
        const auto from = screen(pi[0], pi[1]);
        const auto to = screen(pi[0] + eta[0], pi[1] + eta[1]);
        extend(from);
        extend(to);
        body << "<line x1=\"" << num(from[0]) << "\" y1=\"" << num(from[1]) << "\" x2=\"" << num(to[0])
             << "\" y2=\"" << num(to[1]) << "\" stroke=\"" << color_for(e.id) << "\"/>\n";
    }
    body << "</g>\n<g>\n";
    for (const auto& p : r.p) {
        const auto q = screen(p[0], p[1]);
        extend(q);
        body << "<circle cx=\"" << num(q[0]) << "\" cy=\"" << num(q[1]) << "\" r=\"4\" fill=\"#000\"/>\n";
    }
    body << "</g>\n";

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lo_x) << ' ' << num(lo_y) << ' '
        << num(hi_x - lo_x) << ' ' << num(hi_y - lo_y) << "\">\n"
        << arrow_defs << body.str() << "</svg>\n";
    return out.str();
}

} // namespace cgrig
