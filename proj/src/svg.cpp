#include "horopal/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace horopal {

namespace {

std::string fmt(double v) {
    char buf[40];
    if (std::abs(v) < 5e-7) v = 0.0;  // avoid "-0.000000"
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// SVG y axis points down; flip on output
std::string path_of(const Arc& arc) {
    Vec2 a = arc.point_at(0.0), b = arc.point_at(1.0);
    std::string d = "M " + fmt(a.x) + " " + fmt(-a.y);
    if (arc.curve.support.is_line) {
        d += " L " + fmt(b.x) + " " + fmt(-b.y);
        return d;
    }
    double R = arc.curve.support.radius;
    double sweep = arc.sweep();
    int large = std::abs(sweep) > M_PI ? 1 : 0;
    // counterclockwise in math coordinates becomes sweep-flag 0 after the flip
    int flag = sweep > 0.0 ? 0 : 1;
    d += " A " + fmt(R) + " " + fmt(R) + " 0 " + std::to_string(large) + " " +
         std::to_string(flag) + " " + fmt(b.x) + " " + fmt(-b.y);
    return d;
}

}  // namespace

void SvgScene::add_arc(const Arc& a, const std::string& stroke, double w) {
    items.push_back({a, stroke, w});
}

void SvgScene::add_chain(const std::vector<Arc>& arcs, const std::string& stroke, double w) {
    for (const Arc& a : arcs) add_arc(a, stroke, w);
}

void SvgScene::add_curve(const Curve& c, const std::string& stroke, double w) {
    switch (c.kind) {
        case CurveKind::geodesic:
        case CurveKind::hypercycle: {
            // clip to the disk: the in-disk arc between points very near the
            // two boundary intersections
            const Support& s = c.support;
            if (s.is_line) {
                Vec2 p0 = s.point - s.dir * dot(s.point, s.dir);
                double half = std::sqrt(std::max(0.0, 1.0 - norm_sq(p0))) - 1e-7;
                Arc a{c, hpoint(p0 + s.dir * half), hpoint(p0 - s.dir * half), true};
                add_arc(a, stroke, w);
                return;
            }
            // boundary crossings of the support circle
            double d = norm(s.center);
            double x = (d * d + 1.0 - s.radius * s.radius) / (2.0 * d);
            double h = std::sqrt(std::max(0.0, 1.0 - x * x));
            Vec2 u = s.center / d, n = perp(u);
            Vec2 e1 = u * x + n * h, e2 = u * x - n * h;
            Vec2 inward = -u;  // towards the in-disk part of the circle
            HPoint a = hpoint(e1 * (1.0 - 1e-7)), b = hpoint(e2 * (1.0 - 1e-7));
            // project the shrunk endpoints back near the support
            Arc cand{c, a, b, true};
            Arc alt{c, a, b, false};
            Vec2 mid_c = cand.point_at(0.5), mid_a = alt.point_at(0.5);
            Vec2 apex = s.center + inward * s.radius;
            add_arc(norm(mid_c - apex) < norm(mid_a - apex) ? cand : alt, stroke, w);
            return;
        }
        case CurveKind::horocycle:
        case CurveKind::circle: {
            // split into two half loops; for horocycles split perpendicular to
            // the ideal direction so both endpoints stay inside the disk
            const Support& s = c.support;
            Vec2 axis{1.0, 0.0};
            if (c.kind == CurveKind::horocycle) axis = perp(c.ideal.unit());
            HPoint p1 = hpoint(s.center + axis * s.radius);
            HPoint p2 = hpoint(s.center - axis * s.radius);
            add_arc({c, p1, p2, true}, stroke, w);
            add_arc({c, p2, p1, true}, stroke, w);
            return;
        }
    }
}

std::string render_svg(const SvgScene& scene) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
    out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#333333\" "
           "stroke-width=\"0.008\"/>\n";
    for (const SvgScene::Item& item : scene.items) {
        out += "<path d=\"" + path_of(item.arc) + "\" fill=\"none\" stroke=\"" + item.stroke +
               "\" stroke-width=\"" + fmt(item.width) + "\"/>\n";
    }
    for (const HPoint& p : scene.points) {
        out += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(-p.y) +
               "\" r=\"0.012\" fill=\"#c0392b\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_svg(const SvgScene& scene, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_svg: cannot open " + path);
    f << render_svg(scene);
}

}  // namespace horopal
