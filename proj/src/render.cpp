#include "sturm/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "sturm/meander.hpp"

namespace sturm {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << x;
    return os.str();
}

}  // namespace

std::string render_meander_svg(const Permutation& sigma, const RenderOptions& opts) {
    const double unit = opts.unit > 0 ? opts.unit : 40.0;
    const auto n = static_cast<int>(sigma.size());
    const double margin = unit;
    const double reach = unit * std::max(n - 1, 0) / 2.0;
    const double width = unit * (n + 1);
    const double axis_y = margin + reach;
    const double height = 2 * axis_y;
    auto x_of = [&](int p) { return unit * p; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    if (n == 0) {
        os << "</svg>\n";
        return os.str();
    }

    os << "  <path d=\"M " << num(x_of(1) - unit / 2) << ' ' << num(axis_y) << " H " << num(x_of(n) + unit / 2)
       << "\" stroke=\"gray\" stroke-width=\"1\" fill=\"none\"/>\n";

    const ArcDiagram diagram = arc_diagram(sigma);
    for (const Arc& a : diagram.arcs) {
        const double r = unit * (a.right - a.left) / 2.0;
        const int sweep = a.side == Side::above ? 1 : 0;
        os << "  <path d=\"M " << num(x_of(a.left)) << ' ' << num(axis_y) << " A " << num(r) << ' ' << num(r)
           << " 0 0 " << sweep << ' ' << num(x_of(a.right)) << ' ' << num(axis_y)
           << "\" stroke=\"black\" stroke-width=\"1.5\" fill=\"none\"/>\n";
    }

    for (int p = 1; p <= n; ++p) {
        os << "  <circle cx=\"" << num(x_of(p)) << "\" cy=\"" << num(axis_y) << "\" r=\"3\" fill=\"black\"/>\n";
        if (opts.label_axis) {
            os << "  <text x=\"" << num(x_of(p) + 4) << "\" y=\"" << num(axis_y + 14)
               << "\" font-size=\"11\" font-family=\"sans-serif\">" << sigma(p) << "</text>\n";
        }
    }

    if (opts.mark_crossings) {
        for (const auto& [i, j] : crossings(diagram)) {
            const Arc& a = diagram.arcs[static_cast<std::size_t>(i)];
            const Arc& b = diagram.arcs[static_cast<std::size_t>(j)];
            const double c1 = unit * (a.left + a.right) / 2.0;
            const double c2 = unit * (b.left + b.right) / 2.0;
            const double r1 = unit * (a.right - a.left) / 2.0;
            const double r2 = unit * (b.right - b.left) / 2.0;
            const double x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1));
            const double h = std::sqrt(std::max(r1 * r1 - (x - c1) * (x - c1), 0.0));
            const double y = a.side == Side::above ? axis_y - h : axis_y + h;
            os << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\" fill=\"red\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_connection_dot(const ConnectionGraph& g) {
    std::ostringstream os;
    os << "digraph connections {\n";
    const auto n = static_cast<Label>(g.size());
    for (Label v = 1; v <= n; ++v) {
        os << "  " << v << " [label=\"" << v << "\\ni=" << g.morse(v) << "\"];\n";
    }
    for (const auto& [v, w] : g.edges()) os << "  " << v << " -> " << w << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace sturm
