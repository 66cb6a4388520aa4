#pragma once

// Lassak width: width with respect to a supporting geodesic, minimal strips
// bounded by a geodesic and its equidistant hypercycle, and the minimal
// Lassak width with a sweep oracle plus local refinement.

#include <vector>

#include "horopal/hull.hpp"

namespace horopal {

struct Strip {
    Curve line;  // supporting geodesic
    int side = +1;
    double width = 0.0;
    Curve hypercycle;  // equidistant curve of `line` at distance `width`
};

struct WidthCertificate {
    Strip strip;
    HPoint touch_line{};
    HPoint touch_hyper{};
    double orthogonality_residue = 0.0;
    // strips within tolerance of the minimum (near-symmetric bodies make the
    // minimizer's choice resolution-dependent, so all near-ties are reported)
    std::vector<Strip> near_ties;
};

// boundary-arc view of a body, the input to the width machinery
struct BoundaryBody {
    std::vector<Arc> arcs;
    bool degenerate = false;
};

BoundaryBody as_body(const HConvexBody& K);
BoundaryBody as_body(const ConvexBody& K);
BoundaryBody ball_body(const BallSpec& B);

enum class WidthMethod { oracle, refine };

// maximal distance of the body's points from a supporting geodesic
double width_wrt_line(const BoundaryBody& K, const Curve& line, double support_tol = 1e-6);

struct WidthResult {
    double width = 0.0;
    WidthCertificate cert;
};

WidthResult lassak_width(const BoundaryBody& K, WidthMethod method = WidthMethod::refine,
                         int sweep_positions = 720);

Strip minimal_strip(const BoundaryBody& K);

}  // namespace horopal
