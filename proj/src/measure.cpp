#include "horopal/measure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "horopal/optimize.hpp"

namespace horopal {

namespace {

constexpr double kChainTol = 1e-9;  // Euclidean endpoint matching

struct ArcPath {
    const Arc* arc;
    double speed;  // |dz/dt|, constant along each arc
};

Vec2 derivative_at(const Arc& arc, double t) {
    return arc.tangent_at(t) * arc.euclid_length();
}

// adaptive Simpson on [0, 1]
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm, double fb, double tol,
                        int depth, double& err) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15.0 * tol) {
        err += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2.0, depth - 1, err) +
           adaptive_simpson(f, m, b, fm, frm, fb, tol / 2.0, depth - 1, err);
}

template <typename F>
double integrate_01(F&& f, double tol, double& err) {
    double fa = f(0.0), fm = f(0.5), fb = f(1.0);
    return adaptive_simpson(f, 0.0, 1.0, fa, fm, fb, tol, 40, err);
}

}  // namespace

Region make_region(std::vector<Arc> arcs) {
    if (arcs.empty()) throw std::domain_error("make_region: empty chain");
    for (size_t i = 0; i < arcs.size(); ++i) {
        const Arc& cur = arcs[i];
        const Arc& nxt = arcs[(i + 1) % arcs.size()];
        if (norm(cur.b.vec() - nxt.a.vec()) > kChainTol)
            throw std::domain_error("make_region: open chain");
    }
    if (signed_area_of_chain(arcs) < 0.0) {
        std::reverse(arcs.begin(), arcs.end());
        for (Arc& a : arcs) a = a.reversed();
    }
    return {std::move(arcs)};
}

Region disk_region(HPoint center, double radius) {
    Curve c = circle_curve(center, radius);
    Vec2 cc = c.support.center;
    double R = c.support.radius;
    HPoint east = hpoint(cc + Vec2{R, 0.0});
    HPoint west = hpoint(cc - Vec2{R, 0.0});
    Arc top{c, east, west, true};
    Arc bottom{c, west, east, true};
    return {{top, bottom}};
}

Region triangle_region(HPoint a, HPoint b, HPoint c) {
    return make_region({segment_arc(a, b), segment_arc(b, c), segment_arc(c, a)});
}

AreaEstimate area_with_error(const Region& r) {
    double total = 0.0, err = 0.0;
    for (const Arc& arc : r.arcs) {
        auto f = [&arc](double t) {
            Vec2 z = arc.point_at(t);
            Vec2 dz = derivative_at(arc, t);
            return 2.0 * cross(z, dz) / (1.0 - norm_sq(z));
        };
        total += integrate_01(f, 1e-12, err);
    }
    return {total, err};
}

double area(const Region& r) { return area_with_error(r).value; }

RegionIndex::RegionIndex(const Region& r, double resolution) {
    for (const Arc& arc : r.arcs) {
        auto pts = arc.sample(resolution);
        poly_.insert(poly_.end(), pts.begin(), pts.end() - 1);
    }
    lo_ = hi_ = poly_.front();
    for (Vec2 v : poly_) {
        lo_.x = std::min(lo_.x, v.x);
        lo_.y = std::min(lo_.y, v.y);
        hi_.x = std::max(hi_.x, v.x);
        hi_.y = std::max(hi_.y, v.y);
    }
    int nb = std::max<int>(8, int(std::sqrt(double(poly_.size()))));
    buckets_.assign(nb, {});
    y0_ = lo_.y;
    band_ = std::max((hi_.y - lo_.y) / nb, 1e-12);
    for (int e = 0; e < int(poly_.size()); ++e) {
        Vec2 a = poly_[e], b = poly_[(e + 1) % poly_.size()];
        int b0 = std::clamp(int((std::min(a.y, b.y) - y0_) / band_), 0, nb - 1);
        int b1 = std::clamp(int((std::max(a.y, b.y) - y0_) / band_), 0, nb - 1);
        for (int k = b0; k <= b1; ++k) buckets_[k].push_back(e);
    }
}

bool RegionIndex::contains(Vec2 p) const {
    if (p.x < lo_.x || p.x > hi_.x || p.y < lo_.y || p.y > hi_.y) return false;
    int k = std::clamp(int((p.y - y0_) / band_), 0, int(buckets_.size()) - 1);
    bool inside = false;
    for (int e : buckets_[k]) {
        Vec2 a = poly_[e], b = poly_[(e + 1) % poly_.size()];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xint > p.x) inside = !inside;
        }
    }
    return inside;
}

MCArea area_monte_carlo(const Region& r, int samples, uint64_t seed) {
    if (samples < 1000) throw std::domain_error("area_monte_carlo: too few samples");
    RegionIndex index(r);
    Vec2 lo = index.lo(), hi = index.hi();
    double w = hi.x - lo.x, h = hi.y - lo.y;
    double box = w * h;
    if (box <= 0.0) return {0.0, 0.0};
    int k = std::max(2, int(std::floor(std::sqrt(double(samples)))));
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double sum = 0.0, sum2 = 0.0;
    const double n = double(k) * double(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            Vec2 p{lo.x + w * (i + uni(gen)) / k, lo.y + h * (j + uni(gen)) / k};
            double f = 0.0;
            if (index.contains(p)) {
                double s = 1.0 - norm_sq(p);
                f = 4.0 / (s * s);
            }
            sum += f;
            sum2 += f * f;
        }
    }
    double mean = sum / n;
    double var = std::max(0.0, sum2 / n - mean * mean);
    return {box * mean, box * std::sqrt(var / n)};
}

double triangle_area(HPoint a, HPoint b, HPoint c) {
    if (dist(a, b) < 1e-12 || dist(b, c) < 1e-12 || dist(a, c) < 1e-12)
        throw std::domain_error("triangle_area: coincident points");
    double deficit = M_PI - angle(b, a, c) - angle(a, b, c) - angle(a, c, b);
    return std::max(0.0, deficit);
}

double disk_area(double r) {
    if (r < 0.0) throw std::domain_error("disk_area: negative radius");
    return 2.0 * M_PI * (std::cosh(r) - 1.0);
}

double arc_length_quadrature(const Arc& arc) {
    double err = 0.0;
    auto f = [&arc](double t) {
        Vec2 z = arc.point_at(t);
        return 2.0 * norm(derivative_at(arc, t)) / (1.0 - norm_sq(z));
    };
    return integrate_01(f, 1e-13, err);
}

double horocyclic_arc_length(HPoint a, HPoint b, const Arc& arc) {
    if (arc.curve.kind != CurveKind::horocycle)
        throw std::invalid_argument("horocyclic_arc_length: not a horocyclic arc");
    Horoball hb{arc.curve};
    if (std::abs(hb.signed_dist(a)) > 1e-8 || std::abs(hb.signed_dist(b)) > 1e-8)
        throw std::domain_error("horocyclic_arc_length: endpoint off the horocycle");
    double d = dist(a, b);
    return 2.0 * std::sinh(d / 2.0);
}

double mu(double phi, double ell) {
    if (phi <= 0.0 || phi >= M_PI) throw std::domain_error("mu: phi outside (0, pi)");
    if (ell < 0.0) throw std::domain_error("mu: negative ell");
    return std::atan(1.0 / (std::tan(phi / 2.0) * std::cosh(ell)));
}

double xi(double ell) {
    if (ell < 0.0) throw std::domain_error("xi: negative ell");
    return std::acos(1.0 / std::cosh(ell / 2.0));
}

double ell0(double phi) {
    if (phi <= 0.0 || phi >= M_PI) throw std::domain_error("ell0: phi outside (0, pi)");
    auto f = [phi](double ell) { return xi(ell) - mu(phi, ell); };
    double hi = 1.0;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e6) throw std::domain_error("ell0: no crossing found");
    }
    return bisect_root(f, 1e-12, hi);
}

OmegaRegion omega_region(const Curve& h, const Curve& h2, HPoint x, double ell) {
    if (h.kind != CurveKind::horocycle || h2.kind != CurveKind::horocycle)
        throw std::invalid_argument("omega_region: need two horocycles");
    Horoball H{h}, H2{h2};
    if (std::abs(H.signed_dist(x)) > 1e-9 || std::abs(H2.signed_dist(x)) > 1e-9)
        throw std::domain_error("omega_region: x not on both horocycles");

    // walk a small step along each horocycle from x; choose the arc of h
    // avoiding the horoball of h2 and the arc of h2 entering the horoball of h
    auto step_point = [&](const Curve& c, double delta) {
        const Support& s = c.support;
        double theta = std::atan2(x.y - s.center.y, x.x - s.center.x);
        return s.center + unit_dir(theta + delta) * s.radius;
    };
    const double d0 = 1e-5;
    double dir_h = H2.signed_dist(hpoint(step_point(h, d0))) < 0.0 ? 1.0 : -1.0;
    double dir_h2 = H.signed_dist(hpoint(step_point(h2, d0))) > 0.0 ? 1.0 : -1.0;
    // crossing angle phi(h, h2) from the exact tangent directions at x
    Vec2 t1 = perp(normalized(x.vec() - h.support.center)) * dir_h;
    Vec2 t2 = perp(normalized(x.vec() - h2.support.center)) * dir_h2;
    double phi = std::acos(clamp1(dot(t1, t2)));
    if (phi < 1e-6 || phi > M_PI - 1e-6)
        throw std::domain_error("omega_region: horocycles tangent at x");
    if (ell >= ell0(phi))
        throw std::domain_error("omega_region: ell too large for the crossing angle");

    // chord distance from x grows monotonically along a horocycle
    auto point_at_chord = [&](const Curve& c, double dir, double ell_target) {
        const Support& s = c.support;
        double theta_x = std::atan2(x.y - s.center.y, x.x - s.center.x);
        double theta_i = std::atan2(c.ideal.unit().y - s.center.y, c.ideal.unit().x - s.center.x);
        double span = wrap_positive(dir * (theta_i - theta_x)) - 1e-9;
        auto chord = [&](double delta) {
            Vec2 p = s.center + unit_dir(theta_x + dir * delta) * s.radius;
            if (norm(p) >= kMaxPointNorm) return 1e9;  // beyond any finite target
            return dist(x, hpoint(p)) - ell_target;
        };
        double delta = bisect_root(chord, 0.0, span);
        return hpoint(s.center + unit_dir(theta_x + dir * delta) * s.radius);
    };

    HPoint y = point_at_chord(h, dir_h, ell);
    HPoint yt = point_at_chord(h2, dir_h2, ell);

    OmegaRegion out;
    out.x = x;
    out.y = y;
    out.ytilde = yt;
    out.phi = phi;
    out.region = make_region(
        {horocyclic_arc(h, x, y), segment_arc(y, yt), horocyclic_arc(h2, yt, x)});
    return out;
}

}  // namespace horopal
