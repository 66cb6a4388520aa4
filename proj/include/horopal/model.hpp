#pragma once

// Poincare disk metric primitives: points, distance, isometries, angles,
// and the hyperbolic trigonometric laws.

#include <complex>

#include "horopal/geom.hpp"

namespace horopal {

// Points with Euclidean norm >= kMaxPointNorm are rejected as invalid rather
// than clamped; silent clamping corrupts width computations near ideal points.
inline constexpr double kMaxPointNorm = 1.0 - 1e-14;

struct HPoint {
    double x = 0.0;
    double y = 0.0;

    Vec2 vec() const { return {x, y}; }
    double norm_sq() const { return x * x + y * y; }
};

inline const HPoint origin{0.0, 0.0};

bool valid_point(double x, double y);
HPoint hpoint(double x, double y);  // validating factory
HPoint hpoint(Vec2 v);

struct IdealPoint {
    double angle = 0.0;  // position on the unit circle, radians

    Vec2 unit() const { return unit_dir(angle); }
};

inline IdealPoint ideal_from_unit(Vec2 u) { return {std::atan2(u.y, u.x)}; }

// Orientation-preserving or -reversing isometry of the disk model, stored as
// a Mobius-type transform z -> (u*w + v) / (conj(v)*w + conj(u)) with
// w = conj(z) when `reversing`, normalized to |u|^2 - |v|^2 = 1.
class Isometry {
  public:
    using cplx = std::complex<double>;

    Isometry() = default;  // identity

    static Isometry identity() { return {}; }
    static Isometry rotation(double theta);             // about the origin
    static Isometry translation_to(HPoint a);           // origin -> a, radial
    static Isometry translation(HPoint p, HPoint q);    // p -> q along line(p,q)
    static Isometry half_turn(HPoint c);                // rotation by pi about c
    static Isometry reflection(HPoint p, HPoint q);     // across geodesic through p,q
    static Isometry reflection_x_axis();

    bool orientation_reversing() const { return conj_; }

    HPoint operator()(HPoint p) const;
    IdealPoint operator()(IdealPoint i) const;
    Vec2 apply_closed(Vec2 z) const;  // extends to the closed disk

    Isometry inverse() const;
    // composition: (*this)(inner(z))
    Isometry after(const Isometry& inner) const;

  private:
    Isometry(cplx u, cplx v, bool conj) : u_(u), v_(v), conj_(conj) { normalize(); }
    void normalize();

    cplx u_{1.0, 0.0};
    cplx v_{0.0, 0.0};
    bool conj_ = false;
};

// hyperbolic distance, arccosh formula evaluated in the equivalent
// 2*arcsinh form (stable near coincident points)
double dist(HPoint p, HPoint q);

// Euclidean norm of the point at hyperbolic distance d from the origin:
// (e^d - 1)/(e^d + 1)
double dist_origin_inverse(double d);

// point at hyperbolic distance d from the origin in direction theta
HPoint radial_point(double d, double theta);

// hyperbolic midpoint of [p, q]
HPoint midpoint(HPoint p, HPoint q);

// the point z on [p, q] (or its extension) with dist(p, z) = t
HPoint point_along(HPoint p, HPoint q, double t);

// angle of the half-lines q->p and q->r at q, in [0, pi]
double angle(HPoint p, HPoint q, HPoint r);

// cosh a = cosh b cosh c - sinh b sinh c cos(alpha)
double law_cosines_side(double b, double c, double alpha);

// cos alpha = -cos beta cos gamma + sin beta sin gamma cosh a
double law_cosines_angle(double beta, double gamma, double a);

// angle of parallelism: asin(1 / cosh a)
double parallel_angle(double a);

}  // namespace horopal
