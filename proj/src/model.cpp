#include "horopal/model.hpp"

#include <cmath>
#include <stdexcept>

namespace horopal {

namespace {

using cplx = std::complex<double>;

cplx to_cplx(HPoint p) { return {p.x, p.y}; }
cplx to_cplx(Vec2 v) { return {v.x, v.y}; }
HPoint from_cplx(cplx z) { return hpoint(z.real(), z.imag()); }

}  // namespace

bool valid_point(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return false;
    return std::sqrt(x * x + y * y) < kMaxPointNorm;
}

HPoint hpoint(double x, double y) {
    if (!valid_point(x, y))
        throw std::domain_error("hpoint: coordinates outside the open unit disk");
    return {x, y};
}

HPoint hpoint(Vec2 v) { return hpoint(v.x, v.y); }

void Isometry::normalize() {
    double n = std::norm(u_) - std::norm(v_);
    if (!(n > 0.0))
        throw std::domain_error("Isometry: parameters do not map the disk to itself");
    double s = 1.0 / std::sqrt(n);
    u_ *= s;
    v_ *= s;
}

Isometry Isometry::rotation(double theta) {
    return {std::polar(1.0, theta / 2.0), 0.0, false};
}

Isometry Isometry::translation_to(HPoint a) {
    if (!valid_point(a.x, a.y)) throw std::domain_error("translation_to: invalid point");
    return {1.0, to_cplx(a), false};  // z -> (z + a) / (1 + conj(a) z)
}

Isometry Isometry::half_turn(HPoint c) {
    // conjugate of z -> -z by the translation origin -> c
    Isometry t = translation_to(c);
    return t.after(rotation(M_PI)).after(t.inverse());
}

Isometry Isometry::translation(HPoint p, HPoint q) {
    double d = dist(p, q);
    if (d == 0.0) return identity();
    // half-turn about p, then about the midpoint of [p, q]: translation along
    // the line of p and q by d, mapping p to q
    return half_turn(midpoint(p, q)).after(half_turn(p));
}

Isometry Isometry::reflection_x_axis() { return {1.0, 0.0, true}; }

Isometry Isometry::reflection(HPoint p, HPoint q) {
    cplx zp = to_cplx(p), zq = to_cplx(q);
    if (std::abs(zp - zq) == 0.0)
        throw std::domain_error("reflection: coincident points do not define a geodesic");
    // move p to the origin; the geodesic becomes the diameter through q'
    Isometry to_p = translation_to(p);
    Isometry t = to_p.inverse();
    cplx qq = to_cplx(t(q));
    double phi = std::arg(qq);
    Isometry mirror{std::polar(1.0, phi), 0.0, true};  // z -> e^{2 i phi} conj(z)
    return to_p.after(mirror).after(t);
}

HPoint Isometry::operator()(HPoint p) const {
    cplx z = to_cplx(p);
    if (conj_) z = std::conj(z);
    cplx w = (u_ * z + v_) / (std::conj(v_) * z + std::conj(u_));
    return from_cplx(w);
}

Vec2 Isometry::apply_closed(Vec2 v) const {
    cplx z = to_cplx(v);
    if (conj_) z = std::conj(z);
    cplx w = (u_ * z + v_) / (std::conj(v_) * z + std::conj(u_));
    return {w.real(), w.imag()};
}

IdealPoint Isometry::operator()(IdealPoint i) const {
    Vec2 w = apply_closed(i.unit());
    return ideal_from_unit(normalized(w));
}

Isometry Isometry::inverse() const {
    if (!conj_) return {std::conj(u_), -v_, false};
    return {u_, -std::conj(v_), true};
}

Isometry Isometry::after(const Isometry& inner) const {
    // this(inner(z)) = M1(C^{c1} M2(C^{c2} z)); pull C^{c1} past M2
    cplx u2 = inner.u_, v2 = inner.v_;
    if (conj_) {
        u2 = std::conj(u2);
        v2 = std::conj(v2);
    }
    cplx u = u_ * u2 + v_ * std::conj(v2);
    cplx v = u_ * v2 + v_ * std::conj(u2);
    return {u, v, conj_ != inner.conj_};
}

double dist(HPoint p, HPoint q) {
    if (!valid_point(p.x, p.y) || !valid_point(q.x, q.y))
        throw std::domain_error("dist: point outside the open unit disk");
    double dx = p.x - q.x, dy = p.y - q.y;
    double a = (1.0 - p.norm_sq()) * (1.0 - q.norm_sq());
    return 2.0 * std::asinh(std::sqrt((dx * dx + dy * dy) / a));
}

double dist_origin_inverse(double d) {
    if (d < 0.0) throw std::domain_error("dist_origin_inverse: negative distance");
    return std::tanh(d / 2.0);
}

HPoint radial_point(double d, double theta) {
    double s = dist_origin_inverse(d);
    return hpoint(s * std::cos(theta), s * std::sin(theta));
}

HPoint midpoint(HPoint p, HPoint q) {
    Isometry to_p = Isometry::translation_to(p);
    HPoint qq = to_p.inverse()(q);
    double rho = std::sqrt(qq.norm_sq());
    if (rho == 0.0) return p;
    // Euclidean radius of the point at half the hyperbolic distance
    double s = rho / (1.0 + std::sqrt(1.0 - rho * rho));
    return to_p(hpoint(qq.x * s / rho, qq.y * s / rho));
}

HPoint point_along(HPoint p, HPoint q, double t) {
    Isometry to_p = Isometry::translation_to(p);
    HPoint qq = to_p.inverse()(q);
    double rho = std::sqrt(qq.norm_sq());
    if (rho == 0.0) throw std::domain_error("point_along: p == q gives no direction");
    double s = std::tanh(t / 2.0);
    return to_p(hpoint(qq.x * s / rho, qq.y * s / rho));
}

double angle(HPoint p, HPoint q, HPoint r) {
    // conformality: translate q to the origin, where hyperbolic and Euclidean
    // angles coincide exactly
    Isometry t = Isometry::translation_to(q).inverse();
    Vec2 a = t(p).vec(), b = t(r).vec();
    double na = norm(a), nb = norm(b);
    if (na < 1e-15 || nb < 1e-15)
        throw std::domain_error("angle: vertex coincides with an endpoint");
    return std::acos(clamp1(dot(a, b) / (na * nb)));
}

double law_cosines_side(double b, double c, double alpha) {
    if (b <= 0.0 || c <= 0.0 || alpha <= 0.0 || alpha >= M_PI)
        throw std::domain_error("law_cosines_side: arguments outside the valid domain");
    double ca = std::cosh(b) * std::cosh(c) - std::sinh(b) * std::sinh(c) * std::cos(alpha);
    return std::acosh(std::max(1.0, ca));
}

double law_cosines_angle(double beta, double gamma, double a) {
    if (beta <= 0.0 || beta >= M_PI || gamma <= 0.0 || gamma >= M_PI || a <= 0.0)
        throw std::domain_error("law_cosines_angle: arguments outside the valid domain");
    double ca = -std::cos(beta) * std::cos(gamma) +
                std::sin(beta) * std::sin(gamma) * std::cosh(a);
    if (ca < -1.0 || ca > 1.0)
        throw std::domain_error("law_cosines_angle: no hyperbolic triangle with these data");
    return std::acos(ca);
}

double parallel_angle(double a) {
    if (a < 0.0) throw std::domain_error("parallel_angle: negative length");
    return std::asin(1.0 / std::cosh(a));
}

}  // namespace horopal
