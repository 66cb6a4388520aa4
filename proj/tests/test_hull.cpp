#include <cmath>

#include "doctest.h"
#include "horopal/hull.hpp"
#include "test_support.hpp"

using namespace horopal;
namespace ht = horopal::testing;

namespace {

std::vector<HPoint> equilateral_triple(double d) {
    return {radial_point(d, M_PI / 2), radial_point(d, M_PI / 2 + 2 * M_PI / 3),
            radial_point(d, M_PI / 2 + 4 * M_PI / 3)};
}

}  // namespace

TEST_CASE("convex hull of an equilateral triple") {
    auto pts = equilateral_triple(0.8);
    ConvexBody K = convex_hull(pts);
    CHECK(K.vertices.size() == 3);
    for (const HPoint& p : pts) CHECK(contains(K, p));
    CHECK(contains(K, origin));
    CHECK(!contains(K, radial_point(1.2, 0.1)));
}

TEST_CASE("convex hull idempotence and membership oracle") {
    auto g = ht::rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<HPoint> pts;
        for (int i = 0; i < 20; ++i) pts.push_back(ht::random_point_in_ball(g, 1.5));
        ConvexBody K = convex_hull(pts);
        if (K.degenerate) continue;
        ConvexBody K2 = convex_hull(K.vertices);
        REQUIRE(K2.vertices.size() == K.vertices.size());
        for (size_t i = 0; i < K.vertices.size(); ++i) {
            bool found = false;
            for (const HPoint& v : K2.vertices)
                if (dist(v, K.vertices[i]) < 1e-12) found = true;
            CHECK(found);
        }
        // membership matches the Caratheodory oracle: x in hull iff x lies in
        // some triangle of generators (Klein coordinates make them Euclidean)
        for (int probe = 0; probe < 100; ++probe) {
            HPoint x = ht::random_point_in_ball(g, 1.6);
            bool in_tri = false;
            for (size_t a = 0; a < pts.size() && !in_tri; ++a)
                for (size_t b = a + 1; b < pts.size() && !in_tri; ++b)
                    for (size_t c = b + 1; c < pts.size() && !in_tri; ++c) {
                        Vec2 ka = to_klein(pts[a]), kb = to_klein(pts[b]), kc = to_klein(pts[c]);
                        Vec2 kx = to_klein(x);
                        double d1 = cross(kb - ka, kx - ka);
                        double d2 = cross(kc - kb, kx - kb);
                        double d3 = cross(ka - kc, kx - kc);
                        if ((d1 >= -1e-13 && d2 >= -1e-13 && d3 >= -1e-13) ||
                            (d1 <= 1e-13 && d2 <= 1e-13 && d3 <= 1e-13))
                            in_tri = true;
                    }
            CHECK(contains(K, x, 1e-9) == in_tri);
        }
    }
}

TEST_CASE("hconvex hull degenerate cases") {
    HConvexBody single = hconvex_hull({hpoint(0.2, 0.1)});
    CHECK(single.degenerate);

    // two points: lens bounded by the two horocyclic arcs
    HPoint a = hpoint(-0.25, 0.0), b = hpoint(0.25, 0.1);
    HConvexBody lens = hconvex_hull({a, b});
    CHECK(!lens.degenerate);
    CHECK(lens.boundary.size() == 2);
    CHECK(contains(lens, a));
    CHECK(contains(lens, b));
    CHECK(contains(lens, midpoint(a, b)));

    // collinear points collapse to the lens of the extremes
    HPoint mid = midpoint(a, b);
    HConvexBody lens2 = hconvex_hull({a, b, mid});
    CHECK(lens2.boundary.size() == 2);
    for (const Horoball& hb : lens2.supports) CHECK(hb.signed_dist(mid) > 0.0);
}

TEST_CASE("hconvex hull of a regular triple is a horocyclic triangle") {
    auto pts = equilateral_triple(1.0);
    HConvexBody T = hconvex_hull(pts);
    REQUIRE(T.boundary.size() == 3);
    for (const Horoball& hb : T.supports)
        for (const HPoint& p : pts) CHECK(hb.signed_dist(p) > -1e-10);
    // vertices are the input points
    for (const HPoint& p : pts) {
        bool found = false;
        for (const HPoint& v : T.vertices)
            if (dist(v, p) < 1e-10) found = true;
        CHECK(found);
    }
    CHECK(contains(T, origin));
}

TEST_CASE("hconvex hull idempotence, monotonicity, convex subset") {
    auto g = ht::rng(33);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<HPoint> pts;
        for (int i = 0; i < 3 + trial; ++i) pts.push_back(ht::random_point_in_ball(g, 1.5));
        HConvexBody K = hconvex_hull(pts);
        if (K.degenerate) continue;

        HConvexBody K2 = hconvex_hull(K.vertices);
        CHECK(K2.boundary.size() == K.boundary.size());
        for (int probe = 0; probe < 200; ++probe) {
            HPoint x = ht::random_point_in_ball(g, 1.7);
            CHECK(contains(K, x, 1e-8) == contains(K2, x, 1e-8));
        }

        // monotone: adding generators can only grow the hull
        std::vector<HPoint> more = pts;
        more.push_back(ht::random_point_in_ball(g, 1.5));
        HConvexBody K3 = hconvex_hull(more);
        for (int probe = 0; probe < 200; ++probe) {
            HPoint x = ht::random_point_in_ball(g, 1.7);
            if (contains(K, x, 0.0)) CHECK(contains(K3, x, 1e-9));
        }

        // h-convex contains the geodesic hull
        ConvexBody C = convex_hull(pts);
        if (!C.degenerate) {
            for (int probe = 0; probe < 200; ++probe) {
                HPoint x = ht::random_point_in_ball(g, 1.7);
                if (contains(C, x, 0.0)) CHECK(contains(K, x, 1e-9));
            }
        }
    }
}

TEST_CASE("closest point and supporting horoball") {
    auto pts = equilateral_triple(0.9);
    HConvexBody K = hconvex_hull(pts);
    auto g = ht::rng(34);
    for (int i = 0; i < 25; ++i) {
        HPoint y = ht::random_point_in_ball(g, 2.2);
        if (contains(K, y, 1e-6)) continue;
        ClosestPointResult res = closest_point(K, y);
        // horoball contains K (checked on generators) with z on its boundary
        CHECK(std::abs(res.support.signed_dist(res.z)) < 1e-9);
        for (const HPoint& p : pts) CHECK(res.support.signed_dist(p) > -1e-9);
        // optimality against boundary samples
        double dz = dist(y, res.z);
        for (Vec2 s : boundary_samples(K.boundary, 5e-3))
            CHECK(dz <= dist(y, hpoint(s)) + 1e-6);
    }
    CHECK_THROWS_AS(closest_point(K, origin), std::domain_error);
}

TEST_CASE("closest point of a ball-like body is radial") {
    // h-convex hull of a fine sample of a circle approximates the ball
    std::vector<HPoint> pts;
    for (int i = 0; i < 64; ++i) pts.push_back(radial_point(0.6, 2.0 * M_PI * i / 64.0));
    HConvexBody K = hconvex_hull(pts);
    HPoint y = hpoint(0.7, 0.0);
    ClosestPointResult res = closest_point(K, y);
    CHECK(dist(res.z, radial_point(0.6, 0.0)) < 1e-3);
}

TEST_CASE("incircle of a lens and a triple") {
    auto pts = equilateral_triple(1.0);
    HConvexBody K = hconvex_hull(pts);
    BallSpec in = incircle(K);
    // by symmetry the incenter is the origin
    CHECK(std::sqrt(in.center.norm_sq()) < 1e-7);
    CHECK(in.radius > 0.0);
    // touching certificate: k <= 3 points on the boundary, center in their hull
    REQUIRE(K.incircle_touch.size() == 3);
    for (const HPoint& t : K.incircle_touch)
        CHECK(std::abs(dist(in.center, t) - in.radius) < 1e-6);

    // restart stability: interior seeds converge to the same center
    auto g = ht::rng(35);
    for (int i = 0; i < 10; ++i) {
        std::vector<HPoint> seeds{ht::random_point_in_ball(g, 0.3)};
        InscribedBall ib = incircle_of_chain(K.boundary, K.supports, seeds);
        CHECK(dist(ib.ball.center, in.center) < 1e-7);
        CHECK(std::abs(ib.ball.radius - in.radius) < 1e-8);
    }
}

TEST_CASE("incircle certificate on random bodies") {
    // the touching points contain the incenter in their convex hull and the
    // incircle cannot grow: the certificate of the inscribed-ball lemma
    auto g = ht::rng(39);
    int done = 0;
    for (int trial = 0; trial < 20 && done < 8; ++trial) {
        std::vector<HPoint> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(ht::random_point_in_ball(g, 1.3));
        HConvexBody K;
        try {
            K = hconvex_hull(pts);
        } catch (const std::domain_error&) {
            continue;
        }
        if (K.degenerate || K.incircle_touch.size() < 2) continue;
        ++done;
        BallSpec in = K.incircle_cache;
        for (const HPoint& t : K.incircle_touch) {
            CHECK(std::abs(dist(in.center, t) - in.radius) < 1e-6);
            CHECK(contains(K, t, 1e-7));
        }
        // center in the convex hull of the touch points (Klein coordinates)
        Vec2 c = to_klein(in.center);
        if (K.incircle_touch.size() == 2) {
            Vec2 a = to_klein(K.incircle_touch[0]), b = to_klein(K.incircle_touch[1]);
            double t = dot(c - a, b - a) / norm_sq(b - a);
            CHECK(t > -1e-6);
            CHECK(t < 1.0 + 1e-6);
            CHECK(std::abs(cross(b - a, c - a)) < 1e-6);
        } else {
            Vec2 a = to_klein(K.incircle_touch[0]), b = to_klein(K.incircle_touch[1]),
                 d = to_klein(K.incircle_touch[2]);
            double s1 = cross(b - a, c - a), s2 = cross(d - b, c - b), s3 = cross(a - d, c - d);
            bool inside = (s1 >= -1e-8 && s2 >= -1e-8 && s3 >= -1e-8) ||
                          (s1 <= 1e-8 && s2 <= 1e-8 && s3 <= 1e-8);
            CHECK(inside);
        }
    }
    CHECK(done >= 5);
}

TEST_CASE("incircle of a lens matches the closed form") {
    // by symmetry the lens incenter is the segment midpoint and the inradius
    // is its distance to either bounding horocycle
    HPoint a = hpoint(-0.22, 0.08), b = hpoint(0.31, -0.12);
    HConvexBody lens = hconvex_hull({a, b});
    HPoint m = midpoint(a, b);
    double expect = lens.supports[0].signed_dist(m);
    CHECK(std::abs(lens.supports[1].signed_dist(m) - expect) < 1e-12);
    BallSpec in = incircle(lens);
    CHECK(dist(in.center, m) < 1e-6);
    CHECK(std::abs(in.radius - expect) < 1e-8);
}

TEST_CASE("hausdorff of nested ball-like bodies") {
    auto ring = [](double r, int n) {
        std::vector<HPoint> pts;
        for (int i = 0; i < n; ++i) pts.push_back(radial_point(r, 2.0 * M_PI * i / n));
        return hconvex_hull(pts, true);
    };
    HConvexBody small = ring(0.4, 64), big = ring(0.7, 64);
    double d = hausdorff(small, big, 2e-3);
    CHECK(std::abs(d - 0.3) < 3e-3);
}

TEST_CASE("incircle of a ball-like body recovers the ball") {
    std::vector<HPoint> pts;
    for (int i = 0; i < 96; ++i) pts.push_back(radial_point(0.8, 2.0 * M_PI * i / 96.0));
    HConvexBody K = hconvex_hull(pts);
    BallSpec in = incircle(K);
    CHECK(std::sqrt(in.center.norm_sq()) < 1e-4);
    CHECK(in.radius == doctest::Approx(0.8).epsilon(2e-3));
}

TEST_CASE("circumcircle") {
    // two points: center at the midpoint, radius half the distance
    HPoint a = hpoint(-0.3, 0.05), b = hpoint(0.4, -0.1);
    HConvexBody lens = hconvex_hull({a, b});
    BallSpec cc = circumcircle(lens);
    CHECK(dist(cc.center, midpoint(a, b)) < 1e-9);
    CHECK(cc.radius == doctest::Approx(dist(a, b) / 2).epsilon(1e-10));

    // regular triple: center at the origin, radius = vertex distance
    auto pts = equilateral_triple(1.1);
    HConvexBody T = hconvex_hull(pts);
    BallSpec c2 = circumcircle(T);
    CHECK(std::sqrt(c2.center.norm_sq()) < 1e-9);
    CHECK(c2.radius == doctest::Approx(1.1).epsilon(1e-9));

    // minimality: shrinking the radius excludes some generator
    double shrunk = c2.radius - 1e-4;
    bool excluded = false;
    for (const HPoint& p : pts)
        if (dist(c2.center, p) > shrunk + 1e-12) excluded = true;
    CHECK(excluded);
}

TEST_CASE("degenerate body errors") {
    HConvexBody single = hconvex_hull({hpoint(0.1, -0.2)});
    CHECK_THROWS_AS(incircle(single), std::domain_error);
    CHECK_THROWS_AS(circumcircle(single), std::domain_error);
    CHECK(contains(single, hpoint(0.1, -0.2)));
    CHECK(!contains(single, origin));
}

TEST_CASE("hausdorff distance") {
    auto pts = equilateral_triple(0.9);
    HConvexBody X = hconvex_hull(pts);
    CHECK(hausdorff(X, X) == 0.0);

    HConvexBody p1 = hconvex_hull({hpoint(0.1, 0.0)});
    HConvexBody p2 = hconvex_hull({hpoint(-0.2, 0.0)});
    CHECK(hausdorff(p1, p2) == doctest::Approx(dist(hpoint(0.1, 0.0), hpoint(-0.2, 0.0))));

    // sandwich against the Euclidean Hausdorff distance for bodies in theta*B
    auto g = ht::rng(36);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<HPoint> pa, pb;
        for (int i = 0; i < 6; ++i) pa.push_back(ht::random_point_in_ball(g, 1.0));
        for (int i = 0; i < 6; ++i) pb.push_back(ht::random_point_in_ball(g, 1.0));
        HConvexBody A = hconvex_hull(pa), B = hconvex_hull(pb);
        double res = 2e-3;
        auto sa = boundary_samples(A.boundary, res), sb = boundary_samples(B.boundary, res);
        double dh = hausdorff_samples(sa, sb);
        double theta = 0.0;
        auto euc = [&](const std::vector<Vec2>& u, const std::vector<Vec2>& v) {
            double worst = 0.0;
            for (Vec2 x : u) {
                double mn = 1e18;
                for (Vec2 y : v) mn = std::min(mn, norm(x - y));
                worst = std::max(worst, mn);
            }
            return worst;
        };
        for (Vec2 v : sa) theta = std::max(theta, norm(v));
        for (Vec2 v : sb) theta = std::max(theta, norm(v));
        double de = std::max(euc(sa, sb), euc(sb, sa));
        CHECK(dh >= 2.0 * de - 1e-9);
        CHECK(dh <= 2.0 / (1.0 - theta * theta) * de + 1e-9);
    }

    // metric axioms at sampling resolution: symmetry and triangle inequality
    std::vector<HPoint> pc;
    auto g2 = ht::rng(37);
    for (int i = 0; i < 6; ++i) pc.push_back(ht::random_point_in_ball(g2, 1.0));
    HConvexBody A = hconvex_hull({hpoint(0.2, 0.1), hpoint(-0.3, 0.2), hpoint(0.0, -0.4)});
    HConvexBody B = hconvex_hull({hpoint(0.5, 0.1), hpoint(-0.1, 0.45), hpoint(0.2, -0.2)});
    HConvexBody C = hconvex_hull(pc);
    double ab = hausdorff(A, B), bc = hausdorff(B, C), ac = hausdorff(A, C);
    CHECK(ab <= bc + ac + 4e-3);
    CHECK(ac <= ab + bc + 4e-3);
}

TEST_CASE("hull commutes with isometries") {
    auto g = ht::rng(40);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<HPoint> pts;
        for (int i = 0; i < 7; ++i) pts.push_back(ht::random_point_in_ball(g, 1.3));
        HConvexBody K = hconvex_hull(pts, true);
        if (K.degenerate) continue;
        Isometry f = ht::random_isometry(g);
        std::vector<HPoint> moved;
        for (const HPoint& p : pts) moved.push_back(f(p));
        HConvexBody K2 = hconvex_hull(moved, true);
        CHECK(K2.boundary.size() == K.boundary.size());
        for (int probe = 0; probe < 300; ++probe) {
            HPoint x = ht::random_point_in_ball(g, 1.6);
            CHECK(contains(K, x, 1e-8) == contains(K2, f(x), 1e-8));
        }
    }
}

TEST_CASE("intersection-of-horoballs characterization") {
    auto g = ht::rng(38);
    std::vector<HPoint> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(ht::random_point_in_ball(g, 1.2));
    HConvexBody K = hconvex_hull(pts);
    for (int probe = 0; probe < 50; ++probe) {
        HPoint x = ht::random_point_in_ball(g, 1.8);
        if (contains(K, x, 1e-6)) continue;
        // outside iff some horoball contains the generators but not x
        ClosestPointResult res = closest_point(K, x);
        for (const HPoint& p : pts) CHECK(res.support.signed_dist(p) > -1e-9);
        CHECK(res.support.signed_dist(x) < 1e-9);
    }
}
