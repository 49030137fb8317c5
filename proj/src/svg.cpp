#include "rhull/svg.hpp"

#include <fstream>
#include <sstream>

namespace rhull {

void write_hull_svg(const RHull& hull, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_hull_svg: cannot open " + path);
    const Aabb box = hull.cloud().bounding_box().inflated(0.2 * std::max(
        1e-9, std::max(hull.cloud().bounding_box().width(), hull.cloud().bounding_box().height())));
    const double w = box.width(), h = box.height();
    const double scale = 800.0 / std::max(w, h);
    auto X = [&](double x) { return (x - box.lo.x) * scale; };
    auto Y = [&](double y) { return (box.hi.y - y) * scale; };  // flip for SVG coordinates

    f.precision(10);
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale << "\" height=\""
      << h * scale << "\" viewBox=\"0 0 " << w * scale << " " << h * scale << "\">\n";

    // Closed curves of boundary arcs.  Arcs run clockwise around their empty
    // center in world coordinates, which is sweep-flag 1 after the y flip.
    for (const auto& curve : hull.boundary().curves) {
        if (curve.empty()) continue;
        std::ostringstream d;
        const BoundaryArc& first = hull.boundary().arcs[curve.front()];
        const Point2 p0 = first.start_point();
        d << "M " << X(p0.x) << " " << Y(p0.y) << " ";
        for (int ai : curve) {
            const BoundaryArc& a = hull.boundary().arcs[ai];
            const Point2 pe = a.end_point();
            d << "A " << a.r * scale << " " << a.r * scale << " 0 " << (a.sweep > M_PI ? 1 : 0)
              << " 1 " << X(pe.x) << " " << Y(pe.y) << " ";
        }
        d << "Z";
        f << "  <path d=\"" << d.str()
          << "\" fill=\"#d0e4f7\" fill-rule=\"evenodd\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n";
    }

    const double dot = std::max(1.5, 0.004 * 800.0);
    for (size_t i = 0; i < hull.cloud().points.size(); ++i) {
        const Point2& p = hull.cloud().points[i];
        const bool ext = hull.is_extreme(static_cast<int>(i));
        f << "  <circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << (ext ? dot * 1.6 : dot)
          << "\" fill=\"" << (ext ? "#c0392b" : "#333333") << "\"/>\n";
    }
    for (int i : hull.boundary().isolated) {
        const Point2& p = hull.cloud().points[i];
        f << "  <circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << dot * 2.4
          << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1\"/>\n";
    }
    f << "</svg>\n";
}

}  // namespace rhull
