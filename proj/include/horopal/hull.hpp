#pragma once

// Convex hulls, h-convex hulls, membership, closest points,
// incircle/circumcircle, and Hausdorff distance for compact bodies.

#include <vector>

#include "horopal/curves.hpp"

namespace horopal {

struct BallSpec {
    HPoint center{};
    double radius = 0.0;
};

// Beltrami-Cayley-Klein coordinates (hyperbolic convexity = Euclidean there)
Vec2 to_klein(HPoint p);
HPoint from_klein(Vec2 k);

struct ConvexBody {
    std::vector<HPoint> generators;
    std::vector<HPoint> vertices;  // hull vertices, ccw
    std::vector<Arc> boundary;     // geodesic arcs, ccw; empty when degenerate
    bool degenerate = false;       // contained in a geodesic (or a point)
};

struct HConvexBody {
    std::vector<HPoint> generators;
    std::vector<HPoint> vertices;      // arc endpoints, ccw
    std::vector<Arc> boundary;         // horocyclic arcs, ccw
    std::vector<Horoball> supports;    // supporting horoball per boundary arc
    bool degenerate = false;           // singleton
    BallSpec incircle_cache{};
    BallSpec circumcircle_cache{};
    std::vector<HPoint> incircle_touch;  // certificate points (k <= 3)
};

ConvexBody convex_hull(const std::vector<HPoint>& points);
// caches (incircle/circumcircle) are computed eagerly unless `defer_caches`
HConvexBody hconvex_hull(const std::vector<HPoint>& points, bool defer_caches = false);

bool contains(const ConvexBody& K, HPoint x, double tol = 1e-9);
bool contains(const HConvexBody& K, HPoint x, double tol = 1e-9);

struct ClosestPointResult {
    HPoint z;
    Horoball support;  // z on its boundary, contains K
};
ClosestPointResult closest_point(const HConvexBody& K, HPoint y);

BallSpec incircle(const HConvexBody& K);
BallSpec circumcircle(const HConvexBody& K);

// shared solvers over an arc chain (also used by cap domains and spikes)
struct InscribedBall {
    BallSpec ball;
    std::vector<HPoint> touch;
};
InscribedBall incircle_of_chain(const std::vector<Arc>& boundary,
                                const std::vector<Horoball>& supports,
                                const std::vector<HPoint>& seeds);
BallSpec min_enclosing_ball(const std::vector<HPoint>& points);

// Hausdorff distance over dense boundary samplings (boundary identity for
// convex bodies); `resolution` is the max hyperbolic gap between samples
double hausdorff(const HConvexBody& X, const HConvexBody& Y, double resolution = 2e-3);
double hausdorff_samples(const std::vector<Vec2>& a, const std::vector<Vec2>& b);
std::vector<Vec2> boundary_samples(const std::vector<Arc>& arcs, double resolution);

}  // namespace horopal
