#include "horopal/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace horopal {

namespace {

constexpr double kCollinearTol = 1e-12;
// two intersection points merging within this Euclidean distance are one tangency
constexpr double kTangencyMerge = 1e-8;
// supports whose center distance is this close to the tangent configuration
// are treated as tangent (analytic tangency survives rounding)
constexpr double kTangencyConfig = 1e-10;

bool angle_in_ccw_sweep(double theta, double start, double sweep) {
    // sweep > 0; is `theta` within (start, start + sweep) mod 2*pi?
    double rel = wrap_positive(theta - start);
    return rel > 0.0 && rel < sweep;
}

}  // namespace

Curve Curve::base_geodesic() const {
    if (kind != CurveKind::hypercycle)
        throw std::invalid_argument("base_geodesic: not a hypercycle");
    Curve g;
    g.kind = CurveKind::geodesic;
    g.support = base;
    return g;
}

double euclidean_side(const Support& s, Vec2 p) {
    if (s.is_line) return cross(s.dir, p - s.point);
    return s.radius * s.radius - norm_sq(p - s.center);
}

// ---------------------------------------------------------------- geodesics

Curve geodesic_through(HPoint p, HPoint q) {
    Vec2 a = p.vec(), b = q.vec();
    if (norm(a - b) < 1e-15)
        throw std::domain_error("geodesic_through: coincident points");
    Curve g;
    g.kind = CurveKind::geodesic;
    double det = 4.0 * cross(a, b);
    if (std::abs(det) < kCollinearTol) {
        g.support = Support::line({0.0, 0.0}, b - a);
        return g;
    }
    // 2 c.a = 1 + |a|^2, 2 c.b = 1 + |b|^2
    double ra = 1.0 + norm_sq(a), rb = 1.0 + norm_sq(b);
    Vec2 c{(ra * 2.0 * b.y - rb * 2.0 * a.y) / det, (rb * 2.0 * a.x - ra * 2.0 * b.x) / det};
    double r2 = norm_sq(c) - 1.0;
    if (r2 <= 0.0) throw std::domain_error("geodesic_through: degenerate support");
    g.support = Support::circle(c, std::sqrt(r2));
    return g;
}

Curve geodesic_at(HPoint z, Vec2 direction) {
    Vec2 p = z.vec();
    Vec2 d = normalized(direction);
    Curve g;
    g.kind = CurveKind::geodesic;
    if (std::abs(cross(p, d)) < kCollinearTol) {
        g.support = Support::line({0.0, 0.0}, d);
        return g;
    }
    // 2 c.p = 1 + |p|^2 and c.d = p.d
    double det = 2.0 * cross(p, d);
    double r1 = 1.0 + norm_sq(p), r2 = dot(p, d);
    Vec2 c{(r1 * d.y - r2 * 2.0 * p.y) / det, (r2 * 2.0 * p.x - r1 * d.x) / det};
    double rr = norm_sq(c) - 1.0;
    if (rr <= 0.0) throw std::domain_error("geodesic_at: degenerate support");
    g.support = Support::circle(c, std::sqrt(rr));
    return g;
}

Curve geodesic_from_ideals(IdealPoint i1, IdealPoint i2) {
    Vec2 u1 = i1.unit(), u2 = i2.unit();
    Curve g;
    g.kind = CurveKind::geodesic;
    if (norm(u1 + u2) < 1e-9) {
        g.support = Support::line({0.0, 0.0}, u2 - u1);
        return g;
    }
    double det = cross(u1, u2);
    if (std::abs(det) < 1e-15)
        throw std::domain_error("geodesic_from_ideals: coincident ideal points");
    // c.u1 = 1, c.u2 = 1
    Vec2 c{(u2.y - u1.y) / det, (u1.x - u2.x) / det};
    double r2 = norm_sq(c) - 1.0;
    if (r2 <= 0.0) throw std::domain_error("geodesic_from_ideals: degenerate support");
    g.support = Support::circle(c, std::sqrt(r2));
    return g;
}

std::pair<IdealPoint, IdealPoint> ideal_points(const Curve& geo) {
    if (geo.kind != CurveKind::geodesic)
        throw std::invalid_argument("ideal_points: not a geodesic");
    const Support& s = geo.support;
    if (s.is_line) return {ideal_from_unit(s.dir), ideal_from_unit(-s.dir)};
    double n2 = norm_sq(s.center);
    double beta = std::sqrt(std::max(0.0, n2 - 1.0)) / n2;
    Vec2 a = s.center / n2, b = perp(s.center) * beta;
    return {ideal_from_unit(a + b), ideal_from_unit(a - b)};
}

HPoint point_on_curve(const Curve& c) {
    const Support& s = c.support;
    if (s.is_line) {
        Vec2 proj = s.point - s.dir * dot(s.point, s.dir);
        return hpoint(proj);
    }
    double n = norm(s.center);
    if (n < 1e-12) return hpoint(s.radius, 0.0);
    Vec2 u = s.center / n;
    return hpoint(u * (n - s.radius));
}

Isometry map_geodesic_to_x_axis(const Curve& geo) {
    HPoint z0 = point_on_curve(geo);
    Isometry t = Isometry::translation_to(z0).inverse();
    Vec2 i1 = t.apply_closed(ideal_points(geo).first.unit());
    return Isometry::rotation(-std::atan2(i1.y, i1.x)).after(t);
}

double signed_dist_to_geodesic(HPoint p, const Curve& geo) {
    if (geo.kind != CurveKind::geodesic)
        throw std::invalid_argument("signed_dist_to_geodesic: not a geodesic");
    const Support& s = geo.support;
    double w = 1.0 - p.norm_sq();
    if (s.is_line) return std::asinh(2.0 * cross(s.dir, p.vec() - s.point) / w);
    double num = s.radius * s.radius - norm_sq(p.vec() - s.center);
    return std::asinh(num / (s.radius * w));
}

double dist_to_geodesic(HPoint p, const Curve& geo) {
    return std::abs(signed_dist_to_geodesic(p, geo));
}

double signed_dist_radial_to_geodesic(double d, double theta, const Curve& geo) {
    if (geo.kind != CurveKind::geodesic)
        throw std::invalid_argument("signed_dist_radial_to_geodesic: not a geodesic");
    const Support& s = geo.support;
    Vec2 e = unit_dir(theta);
    if (s.is_line)
        return std::asinh(std::sinh(d) * cross(s.dir, e) -
                          (std::cosh(d) + 1.0) * cross(s.dir, s.point));
    return std::asinh((std::sinh(d) * dot(e, s.center) - std::cosh(d)) / s.radius);
}

HPoint foot_on_geodesic(HPoint p, const Curve& geo) {
    Isometry f = map_geodesic_to_x_axis(geo);
    HPoint q = f(p);
    double x = q.x;
    if (std::abs(x) < 1e-15) return f.inverse()(origin);
    double a = (q.norm_sq() + 1.0) / (2.0 * x);
    double root = std::sqrt(std::max(0.0, a * a - 1.0));
    double fx = a > 0.0 ? a - root : a + root;
    return f.inverse()(hpoint(fx, 0.0));
}

// ---------------------------------------------------------------- horocycles

Curve horocycle_at(HPoint z, IdealPoint i) {
    Vec2 I = i.unit(), p = z.vec();
    double t = (1.0 - norm_sq(p)) / (2.0 * (1.0 - dot(p, I)));
    Curve h;
    h.kind = CurveKind::horocycle;
    h.support = Support::circle(I * t, 1.0 - t);
    h.ideal = i;
    return h;
}

bool Horoball::contains(HPoint p, double tol) const {
    return signed_dist(p) >= -tol;
}

double Horoball::signed_dist(HPoint p) const {
    const Support& s = boundary.support;
    double t = norm(s.center);  // center = t * I
    Vec2 I = boundary.ideal.unit();
    double busemann = std::log(norm_sq(p.vec() - I) / (1.0 - p.norm_sq()));
    double ref = std::log((1.0 - t) / t);
    return ref - busemann;
}

HPoint closest_point_on_horocycle(HPoint p, const Curve& h) {
    if (h.kind != CurveKind::horocycle)
        throw std::invalid_argument("closest_point_on_horocycle: not a horocycle");
    Vec2 I = h.ideal.unit(), z = p.vec();
    Curve g;
    g.kind = CurveKind::geodesic;
    if (std::abs(cross(z, I)) < kCollinearTol) {
        g.support = Support::line({0.0, 0.0}, I);
    } else {
        // 2 c.z = 1 + |z|^2 and c.I = 1
        double det = 2.0 * cross(z, I);
        double r1 = 1.0 + norm_sq(z);
        Vec2 c{(r1 * I.y - 2.0 * z.y) / det, (2.0 * z.x - r1 * I.x) / det};
        g.support = Support::circle(c, std::sqrt(norm_sq(c) - 1.0));
    }
    IntersectResult hits = intersect(g, h);
    if (hits.points.empty())
        throw std::domain_error("closest_point_on_horocycle: no foot found");
    HPoint best = hits.points.front();
    for (const HPoint& q : hits.points)
        if (dist(p, q) < dist(p, best)) best = q;
    return best;
}

Horoball supporting_horocycle(HPoint center, double radius, HPoint z) {
    if (std::abs(dist(center, z) - radius) > 1e-8)
        throw std::domain_error("supporting_horocycle: z not on the circle boundary");
    Curve g = geodesic_through(z, center);
    auto [i1, i2] = ideal_points(g);
    for (const IdealPoint& i : {i1, i2}) {
        Horoball hb{horocycle_at(z, i)};
        if (hb.signed_dist(center) > 0.0) return hb;
    }
    throw std::domain_error("supporting_horocycle: no containing horoball found");
}

std::pair<Curve, Curve> horocycles_through(HPoint p, HPoint q) {
    Curve bis = perp_bisector(p, q);
    auto [i1, i2] = ideal_points(bis);
    return {horocycle_at(p, i1), horocycle_at(p, i2)};
}

// --------------------------------------------------------------- hypercycle

Curve hypercycle(const Curve& geo, double rho, int side) {
    if (geo.kind != CurveKind::geodesic)
        throw std::invalid_argument("hypercycle: base is not a geodesic");
    if (rho <= 0.0) throw std::domain_error("hypercycle: rho must be positive");
    auto [i1, i2] = ideal_points(geo);
    Isometry f = map_geodesic_to_x_axis(geo);
    double h = std::tanh(rho / 2.0);
    HPoint up = f.inverse()(hpoint(0.0, h));
    HPoint apex = up;
    if ((euclidean_side(geo.support, apex.vec()) > 0.0 ? +1 : -1) != side)
        apex = f.inverse()(hpoint(0.0, -h));

    Curve c;
    c.kind = CurveKind::hypercycle;
    c.base = geo.support;
    c.rho = rho;
    c.side = side;
    // support: circle (or line) through the two ideal points and the apex
    Vec2 p1 = i1.unit(), p2 = i2.unit(), p3 = apex.vec();
    double d = 2.0 * (p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y) + p3.x * (p1.y - p2.y));
    if (std::abs(d) < 1e-13) {
        c.support = Support::line(p1, p2 - p1);
        return c;
    }
    double s1 = norm_sq(p1), s2 = norm_sq(p2), s3 = norm_sq(p3);
    Vec2 cc{(s1 * (p2.y - p3.y) + s2 * (p3.y - p1.y) + s3 * (p1.y - p2.y)) / d,
            (s1 * (p3.x - p2.x) + s2 * (p1.x - p3.x) + s3 * (p2.x - p1.x)) / d};
    c.support = Support::circle(cc, norm(p1 - cc));
    return c;
}

// ------------------------------------------------------------------ circles

Curve circle_curve(HPoint center, double radius) {
    if (radius <= 0.0) throw std::domain_error("circle_curve: radius must be positive");
    Curve c;
    c.kind = CurveKind::circle;
    c.hcenter = center;
    c.hradius = radius;
    double n = std::sqrt(center.norm_sq());
    if (n < 1e-15) {
        c.support = Support::circle({0.0, 0.0}, std::tanh(radius / 2.0));
        return c;
    }
    double D = 2.0 * std::atanh(n);
    double tp = std::tanh((D + radius) / 2.0);
    double tm = std::tanh((D - radius) / 2.0);
    Vec2 u = center.vec() / n;
    c.support = Support::circle(u * (0.5 * (tp + tm)), 0.5 * (tp - tm));
    return c;
}

Curve perp_bisector(HPoint a, HPoint b) {
    Curve g = geodesic_through(a, b);
    HPoint m = midpoint(a, b);
    Vec2 tangent;
    if (g.support.is_line) {
        tangent = g.support.dir;
    } else {
        tangent = normalized(perp(m.vec() - g.support.center));
    }
    return geodesic_at(m, perp(tangent));
}

// ------------------------------------------------------------- intersection

namespace {

bool same_support(const Support& a, const Support& b) {
    if (a.is_line != b.is_line) return false;
    if (a.is_line) {
        if (std::abs(cross(a.dir, b.dir)) > 1e-10) return false;
        return std::abs(cross(a.dir, b.point - a.point)) < 1e-10;
    }
    return norm(a.center - b.center) < 1e-10 && std::abs(a.radius - b.radius) < 1e-10;
}

std::vector<Vec2> line_line(const Support& a, const Support& b, bool& tangent) {
    tangent = false;
    double det = cross(a.dir, b.dir);
    if (std::abs(det) < 1e-14) return {};
    double t = cross(b.point - a.point, b.dir) / det;
    return {a.point + a.dir * t};
}

std::vector<Vec2> line_circle(const Support& l, const Support& c, bool& tangent) {
    tangent = false;
    Vec2 rel = c.center - l.point;
    double along = dot(rel, l.dir);
    Vec2 closest = l.point + l.dir * along;
    double gap = norm(closest - c.center);
    if (std::abs(gap - c.radius) < kTangencyConfig) {
        tangent = true;
        return {closest};
    }
    double h2 = c.radius * c.radius - gap * gap;
    if (h2 < 0.0) return {};
    double h = std::sqrt(h2);
    return {closest + l.dir * h, closest - l.dir * h};
}

std::vector<Vec2> circle_circle(const Support& a, const Support& b, bool& tangent) {
    tangent = false;
    Vec2 ab = b.center - a.center;
    double d = norm(ab);
    if (d < 1e-14) return {};
    Vec2 u = ab / d;
    if (std::abs(d - (a.radius + b.radius)) < kTangencyConfig ||
        std::abs(d - std::abs(a.radius - b.radius)) < kTangencyConfig) {
        tangent = true;
        double x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
        return {a.center + u * x};
    }
    double x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    double h2 = a.radius * a.radius - x * x;
    if (h2 < 0.0) return {};
    Vec2 mid = a.center + u * x;
    double h = std::sqrt(h2);
    Vec2 n = perp(u);
    return {mid + n * h, mid - n * h};
}

}  // namespace

IntersectResult intersect(const Curve& c1, const Curve& c2) {
    if (same_support(c1.support, c2.support))
        throw std::domain_error("intersect: coincident supports");
    bool tangent = false;
    std::vector<Vec2> raw;
    const Support &a = c1.support, &b = c2.support;
    if (a.is_line && b.is_line)
        raw = line_line(a, b, tangent);
    else if (a.is_line)
        raw = line_circle(a, b, tangent);
    else if (b.is_line)
        raw = line_circle(b, a, tangent);
    else
        raw = circle_circle(a, b, tangent);

    IntersectResult out;
    out.tangent = tangent;
    for (Vec2 v : raw)
        if (norm(v) < kMaxPointNorm) out.points.push_back({v.x, v.y});
    // two points that merged within tolerance count as one tangency
    if (out.points.size() == 2 &&
        norm(out.points[0].vec() - out.points[1].vec()) < kTangencyMerge) {
        out.points.pop_back();
        out.tangent = true;
    }
    return out;
}

// ------------------------------------------------------------------- arcs

Vec2 Arc::point_at(double t) const {
    if (curve.support.is_line) return a.vec() + (b.vec() - a.vec()) * t;
    const Support& s = curve.support;
    double ta = std::atan2(a.y - s.center.y, a.x - s.center.x);
    return s.center + unit_dir(ta + t * sweep()) * s.radius;
}

double Arc::sweep() const {
    if (curve.support.is_line) return 0.0;
    const Support& s = curve.support;
    double ta = std::atan2(a.y - s.center.y, a.x - s.center.x);
    double tb = std::atan2(b.y - s.center.y, b.x - s.center.x);
    if (ccw) return wrap_positive(tb - ta);
    return -wrap_positive(ta - tb);
}

Vec2 Arc::tangent_at(double t) const {
    if (curve.support.is_line) return normalized(b.vec() - a.vec());
    const Support& s = curve.support;
    double ta = std::atan2(a.y - s.center.y, a.x - s.center.x);
    double sw = sweep();
    Vec2 e = unit_dir(ta + t * sw);
    Vec2 tangent = perp(e);
    return sw >= 0.0 ? tangent : -tangent;
}

double Arc::euclid_length() const {
    if (curve.support.is_line) return norm(b.vec() - a.vec());
    return std::abs(sweep()) * curve.support.radius;
}

std::vector<Vec2> Arc::sample(double max_gap) const {
    // conservative subdivision: local conformal factor bounded by the arc's
    // farthest-from-origin sample
    int coarse = 64;
    double hyper_len = 0.0;
    Vec2 prev = point_at(0.0);
    for (int i = 1; i <= coarse; ++i) {
        Vec2 cur = point_at(double(i) / coarse);
        double mid = 1.0 - norm_sq((prev + cur) / 2.0);
        hyper_len += 2.0 * norm(cur - prev) / std::max(mid, 1e-12);
        prev = cur;
    }
    int n = std::max(1, int(std::ceil(hyper_len / max_gap)));
    std::vector<Vec2> pts;
    pts.reserve(n + 1);
    for (int i = 0; i <= n; ++i) pts.push_back(point_at(double(i) / n));
    return pts;
}

Arc Arc::reversed() const { return {curve, b, a, !ccw}; }

double signed_area_of_chain(const std::vector<Arc>& arcs) {
    double area = 0.0;
    for (const Arc& arc : arcs) {
        Vec2 prev = arc.point_at(0.0);
        for (int i = 1; i <= 24; ++i) {
            Vec2 cur = arc.point_at(double(i) / 24.0);
            area += 0.5 * cross(prev, cur);
            prev = cur;
        }
    }
    return area;
}

Arc segment_arc(HPoint a, HPoint b) {
    Curve g = geodesic_through(a, b);
    Arc arc{g, a, b, true};
    if (!g.support.is_line) {
        // orient along the shorter angular sweep (the segment between a and b)
        Arc alt{g, a, b, false};
        if (std::abs(alt.sweep()) < std::abs(arc.sweep())) return alt;
    }
    return arc;
}

Arc horocyclic_arc(const Curve& h, HPoint a, HPoint b) {
    if (h.kind != CurveKind::horocycle)
        throw std::invalid_argument("horocyclic_arc: not a horocycle");
    const Support& s = h.support;
    double ti = std::atan2(h.ideal.unit().y - s.center.y, h.ideal.unit().x - s.center.x);
    double ta = std::atan2(a.y - s.center.y, a.x - s.center.x);
    Arc arc{h, a, b, true};
    if (angle_in_ccw_sweep(ti, ta, wrap_positive(std::atan2(b.y - s.center.y, b.x - s.center.x) - ta)))
        arc.ccw = false;
    return arc;
}

Arc circle_arc_toward(const Curve& c, HPoint a, HPoint b, Vec2 toward) {
    Arc pos{c, a, b, true}, neg{c, a, b, false};
    Vec2 mp = pos.point_at(0.5), mn = neg.point_at(0.5);
    return norm(mp - toward) <= norm(mn - toward) ? pos : neg;
}

// -------------------------------------------------------------- transforms

Curve transform(const Curve& c, const Isometry& f) {
    switch (c.kind) {
        case CurveKind::geodesic: {
            auto [i1, i2] = ideal_points(c);
            return geodesic_from_ideals(f(i1), f(i2));
        }
        case CurveKind::horocycle: {
            const Support& s = c.support;
            double t = norm(s.center);
            Vec2 apex = c.ideal.unit() * (2.0 * t - 1.0);
            return horocycle_at(f(hpoint(apex)), f(c.ideal));
        }
        case CurveKind::hypercycle: {
            Curve base2 = transform(c.base_geodesic(), f);
            HPoint sample = f(point_on_curve(c));
            int side = euclidean_side(base2.support, sample.vec()) > 0.0 ? +1 : -1;
            return hypercycle(base2, c.rho, side);
        }
        case CurveKind::circle:
            return circle_curve(f(c.hcenter), c.hradius);
    }
    throw std::logic_error("transform: unknown curve kind");
}

Arc transform(const Arc& arc, const Isometry& f) {
    Arc out;
    out.curve = transform(arc.curve, f);
    out.a = f(arc.a);
    out.b = f(arc.b);
    out.ccw = true;
    if (!out.curve.support.is_line) {
        Vec2 want = f.apply_closed(arc.point_at(0.5));
        Arc alt = out;
        alt.ccw = false;
        if (norm(alt.point_at(0.5) - want) < norm(out.point_at(0.5) - want)) return alt;
    }
    return out;
}

}  // namespace horopal
