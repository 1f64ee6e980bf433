#include "geochrom/svg.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>

namespace geochrom {

namespace {

struct View {
    double min_x, max_y, scale;
    static constexpr double kSize = 600.0;
    static constexpr double kMargin = 30.0;

    double sx(double x) const { return kMargin + (x - min_x) * scale; }
    double sy(double y) const { return kMargin + (max_y - y) * scale; }
};

View fit(const GeometricGraph& g)
{
    if (g.size() == 0)
        return {0, 0, 1};
    const auto& pts = g.positions();
    auto [xmin, xmax] = std::minmax_element(pts.begin(), pts.end(),
                                            [](const Point& a, const Point& b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(pts.begin(), pts.end(),
                                            [](const Point& a, const Point& b) { return a.y < b.y; });
    const double span = std::max<double>({1.0, static_cast<double>(xmax->x - xmin->x),
                                          static_cast<double>(ymax->y - ymin->y)});
    return {static_cast<double>(xmin->x), static_cast<double>(ymax->y), View::kSize / span};
}

void append(std::string& out, const char* fmt, ...)
{
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    out += buf;
}

} // namespace

std::string render_svg(const GeometricGraph& g)
{
    const View v = fit(g);
    const double canvas = View::kSize + 2 * View::kMargin;
    const auto& pts = g.positions();
    std::string out;
    append(out,
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n"
           "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
           canvas, canvas, canvas, canvas);
    for (const Edge& e : g.graph().edges())
        append(out, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                           "stroke=\"black\" stroke-width=\"1.5\"/>\n",
                           v.sx(pts[e.a].x), v.sy(pts[e.a].y), v.sx(pts[e.b].x), v.sy(pts[e.b].y));
    for (const Crossing& c : g.crossings()) {
        const Point p = pts[c.e1.a], r = pts[c.e1.b], q = pts[c.e2.a], s = pts[c.e2.b];
        const double rx = r.x - p.x, ry = r.y - p.y, sx = s.x - q.x, sy = s.y - q.y;
        const double denom = rx * sy - ry * sx;
        const double t = ((q.x - p.x) * sy - (q.y - p.y) * sx) / denom;
        append(out, "<rect x=\"%.2f\" y=\"%.2f\" width=\"6\" height=\"6\" fill=\"red\"/>\n",
                           v.sx(p.x + t * rx) - 3, v.sy(p.y + t * ry) - 3);
    }
    for (int i = 0; i < g.size(); ++i)
        append(out,
               "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"7\" fill=\"white\" stroke=\"black\"/>\n"
               "<text x=\"%.2f\" y=\"%.2f\" font-size=\"9\" text-anchor=\"middle\" "
               "dominant-baseline=\"central\">%d</text>\n",
               v.sx(pts[i].x), v.sy(pts[i].y), v.sx(pts[i].x), v.sy(pts[i].y), i);
    out += "</svg>\n";
    return out;
}

} // namespace geochrom
