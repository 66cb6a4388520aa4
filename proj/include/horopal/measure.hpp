#pragma once

// Hyperbolic lengths and areas: closed forms for triangles and disks,
// quadrature over regions, horocyclic arc lengths, and the helper
// quantities mu, xi and the Omega regions.

#include <cstdint>
#include <vector>

#include "horopal/curves.hpp"

namespace horopal {

// region bounded by a closed simple counterclockwise chain of arcs
struct Region {
    std::vector<Arc> arcs;
};

// validates closure and orients counterclockwise
Region make_region(std::vector<Arc> arcs);
Region disk_region(HPoint center, double radius);
Region triangle_region(HPoint a, HPoint b, HPoint c);

// hyperbolic area by the boundary route: the area form (2/(1-|x|^2))^2 dx dy
// equals d[ 2/(1-|x|^2) (x dy - y dx) ], integrated along the boundary chain
// with adaptive quadrature
double area(const Region& r);
struct AreaEstimate {
    double value;
    double error;
};
AreaEstimate area_with_error(const Region& r);

// membership quadrature: stratified Monte-Carlo over the bounding box with
// density (2/(1-|x|^2))^2; deterministic for a fixed seed
struct MCArea {
    double value;
    double sigma;  // one standard error
};
MCArea area_monte_carlo(const Region& r, int samples = 1000000, uint64_t seed = 0);

// even-odd membership against the polygonalized boundary
class RegionIndex {
  public:
    explicit RegionIndex(const Region& r, double resolution = 1e-3);
    bool contains(Vec2 p) const;
    Vec2 lo() const { return lo_; }
    Vec2 hi() const { return hi_; }

  private:
    std::vector<Vec2> poly_;
    std::vector<std::vector<int>> buckets_;
    double y0_ = 0.0, band_ = 1.0;
    Vec2 lo_{}, hi_{};
};

double triangle_area(HPoint a, HPoint b, HPoint c);  // angle deficit
double disk_area(double r);                          // 2*pi*(cosh r - 1)

// length of the horocyclic arc between a and b (the arc avoiding the ideal
// point): 2*sinh(d(a,b)/2), the form confirmed by the integration oracle
double horocyclic_arc_length(HPoint a, HPoint b, const Arc& arc);
// line-element integration along any arc (the oracle)
double arc_length_quadrature(const Arc& arc);

// base angle of the isosceles triangle with apex angle phi and legs ell:
// 1 = tan(mu) tan(phi/2) cosh(ell)
double mu(double phi, double ell);
// angle between a horocyclic arc joining points at distance ell and its
// chord: arccos(1 / cosh(ell/2))
double xi(double ell);
// threshold with xi(ell) < mu(phi, ell) exactly for ell < ell0(phi)
double ell0(double phi);

struct OmegaRegion {
    Region region;
    HPoint x, y, ytilde;
    double phi;  // crossing angle of the two horocycles, also the angle at x
};
// region bounded by the two horocyclic arcs of chord ell from the crossing
// point x and the closing geodesic segment [y, ytilde]
OmegaRegion omega_region(const Curve& h, const Curve& h2, HPoint x, double ell);

}  // namespace horopal
