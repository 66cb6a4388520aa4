#pragma once

// Named constructions: regular horocyclic triangles, spikes, cap domains
// C_w(rho) / Gamma_w(rho) / Delta_w(rho), the delta angles, and the
// large-width small-area family K_r.

#include <array>

#include "horopal/measure.hpp"
#include "horopal/width.hpp"

namespace horopal {

struct RegularHorocyclicTriangle {
    HPoint center{};        // the incenter (the origin for fresh constructions)
    double inradius = 0.0;
    double circumradius = 0.0;
    double width = 0.0;     // = inradius + circumradius
    double aleph = 0.0;     // acute angle at a vertex against the center ray
    std::array<HPoint, 3> vertices{};        // at angles pi/2 + 2*pi*j/3
    std::array<HPoint, 3> side_midpoints{};  // tangency points, opposite angles
    std::array<Arc, 3> sides{};
    std::array<Horoball, 3> side_horoballs{};

    HConvexBody body() const;  // caches filled from the construction
    Region region() const;
};

RegularHorocyclicTriangle regular_triangle_from_inradius(double r);
// the regular horocyclic triangle of minimal Lassak width exactly w
// (bisection over the inradius; the width is strictly monotone in it)
RegularHorocyclicTriangle t_w(double w);

struct Spike {
    BallSpec ball{};
    HPoint apex{};
    HPoint x1{}, x2{};  // tangency points on the ball boundary
    Horoball h1{}, h2{};
    Region region;      // the part of the h-convex hull outside the ball
    bool empty = false; // apex on the ball boundary
};

Spike spike(const BallSpec& B, HPoint u);

struct CapDomain {
    double w = 0.0, rho = 0.0, r = 0.0;  // r = r(T_w)
    HPoint center{};
    std::array<HPoint, 3> q{};  // apexes at distance w - rho
    std::array<HPoint, 3> m{};  // boundary points at distance rho
    HPoint v{};                 // tangency of the supporting horocycle from q(rho)
    double alpha = 0.0;         // angle(m(rho), p, v(rho))
    double delta_minus = 0.0, delta_plus = 0.0;
    Curve h_rho{};              // horocycle through q(rho), m(rho), center inside
    Region C, Gamma, Delta;
};

CapDomain cap_domain(double w, double rho);
std::pair<double, double> delta_angles(double w, double rho);

// minimal arclength along a perpendicular ray making the distance to the
// other perpendicular at least 1/r (root-finding on the geodesic distance)
double g_of_r(double r);

// counterexample body: convex hull of B(m, r) and two tips at distance g(r);
// requires the tips to be representable in disk coordinates
ConvexBody k_r(double r);

// closed-form evaluation of K_r, valid for all r in (0, 1/2): for small r the
// tips fall outside double-precision disk coordinates, so distances to them
// are evaluated in radial form and the volume by triangle/sector decomposition
struct KrAnalytic {
    double r = 0.0, g = 0.0;
    double tangency_angle = 0.0;  // angle at the center toward a tangency point
    double volume() const;
    // min over a sweep of supporting lines of the maximal distance from K_r
    double width_measured(int sweep_positions = 720) const;
};

KrAnalytic make_kr(double r);

}  // namespace horopal
