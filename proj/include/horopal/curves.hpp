#pragma once

// Geodesics, horocycles, hypercycles and hyperbolic circles as classified
// Euclidean circles/lines in the disk model, with intersection, tangency,
// support and point-to-curve distance.

#include <optional>
#include <utility>
#include <vector>

#include "horopal/model.hpp"

namespace horopal {

enum class CurveKind { geodesic, horocycle, hypercycle, circle };

// Euclidean support of a curve: a circle or a straight line
struct Support {
    bool is_line = false;
    Vec2 center{};        // circle case
    double radius = 0.0;  // circle case
    Vec2 point{};         // line case
    Vec2 dir{};           // line case, unit

    static Support circle(Vec2 c, double r) { return {false, c, r, {}, {}}; }
    static Support line(Vec2 p, Vec2 d) { return {true, {}, 0.0, p, normalized(d)}; }
};

struct Curve {
    CurveKind kind = CurveKind::geodesic;
    Support support;

    // horocycle metadata
    IdealPoint ideal{};

    // hypercycle metadata: base geodesic support, distance, side
    Support base;
    double rho = 0.0;
    int side = +1;  // sign of euclidean_side(base_geodesic(), point of the curve)

    // circle metadata
    HPoint hcenter{};
    double hradius = 0.0;

    Curve base_geodesic() const;  // hypercycle only
};

// closed region bounded by a horocycle on the side away from the unit circle
struct Horoball {
    Curve boundary;  // kind == horocycle

    bool contains(HPoint p, double tol = 0.0) const;
    // signed hyperbolic distance from p to the boundary horocycle,
    // positive inside the horoball (Busemann difference; exact)
    double signed_dist(HPoint p) const;
};

// bounded arc of a curve; for circle supports `ccw` selects one of the two
// arcs between the endpoints, line supports are straight segments
struct Arc {
    Curve curve;
    HPoint a{}, b{};
    bool ccw = true;

    Vec2 point_at(double t) const;    // t in [0, 1], a to b
    Vec2 tangent_at(double t) const;  // unit Euclidean tangent along traversal
    double sweep() const;             // signed Euclidean angle swept (0 for lines)
    double euclid_length() const;
    // polyline with consecutive hyperbolic gaps <= max_gap (includes endpoints)
    std::vector<Vec2> sample(double max_gap) const;
    Arc reversed() const;
};

// construction ------------------------------------------------------------

Curve geodesic_through(HPoint p, HPoint q);
Curve geodesic_at(HPoint z, Vec2 direction);  // through z tangent to `direction`
Curve horocycle_at(HPoint z, IdealPoint i);
Curve hypercycle(const Curve& geodesic, double rho, int side);
Curve circle_curve(HPoint center, double radius);
// geodesic from its two ideal endpoints
Curve geodesic_from_ideals(IdealPoint i1, IdealPoint i2);
// the geodesic of points equidistant from a and b
Curve perp_bisector(HPoint a, HPoint b);
std::pair<IdealPoint, IdealPoint> ideal_points(const Curve& geodesic);

// the horoball tangent to the circle bd B(center, radius) at z, containing the ball
struct BallSpec;
Horoball supporting_horocycle(HPoint center, double radius, HPoint z);

// queries -----------------------------------------------------------------

// signed Euclidean side of p relative to a support (positive inside circles,
// positive to the left of lines)
double euclidean_side(const Support& s, Vec2 p);

// signed hyperbolic distance from p to a geodesic; positive on the
// euclidean_side > 0 side
double signed_dist_to_geodesic(HPoint p, const Curve& geodesic);

// same quantity for the point at hyperbolic distance d from the origin in
// direction theta, evaluated without forming the point (valid for any d,
// including points beyond double-precision disk coordinates)
double signed_dist_radial_to_geodesic(double d, double theta, const Curve& geodesic);
double dist_to_geodesic(HPoint p, const Curve& geodesic);
HPoint foot_on_geodesic(HPoint p, const Curve& geodesic);

// maps the geodesic to the x-axis diameter (a chosen point of it to the origin)
Isometry map_geodesic_to_x_axis(const Curve& geodesic);

HPoint closest_point_on_horocycle(HPoint p, const Curve& horocycle);

struct IntersectResult {
    std::vector<HPoint> points;  // inside the open disk
    bool tangent = false;
};

IntersectResult intersect(const Curve& c1, const Curve& c2);

// both horocyclic arcs joining two distinct points (ideal points of the
// returned curves lie on the perpendicular bisector of [p, q])
std::pair<Curve, Curve> horocycles_through(HPoint p, HPoint q);

// one point on a curve, guaranteed inside the open disk
HPoint point_on_curve(const Curve& c);

Curve transform(const Curve& c, const Isometry& f);
Arc transform(const Arc& arc, const Isometry& f);

// signed Euclidean area enclosed by a closed chain of arcs (ccw positive)
double signed_area_of_chain(const std::vector<Arc>& arcs);

// the arc of a horocycle between a and b avoiding the ideal point
Arc horocyclic_arc(const Curve& horocycle, HPoint a, HPoint b);
// geodesic segment as an arc
Arc segment_arc(HPoint a, HPoint b);
// arc of a circle curve between two of its points, the one whose midpoint is
// nearest `toward` (used to select "the arc on the side of ...")
Arc circle_arc_toward(const Curve& circle, HPoint a, HPoint b, Vec2 toward);

}  // namespace horopal
