#include "horopal/hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "horopal/optimize.hpp"

namespace horopal {

namespace {

constexpr double kDedupeTol = 1e-12;   // Euclidean
constexpr double kMemberTol = 1e-10;   // hyperbolic, horoball containment

std::vector<HPoint> dedupe(const std::vector<HPoint>& pts) {
    std::vector<HPoint> out;
    for (const HPoint& p : pts) {
        bool seen = false;
        for (const HPoint& q : out)
            if (norm(p.vec() - q.vec()) < kDedupeTol) seen = true;
        if (!seen) out.push_back(hpoint(p.x, p.y));
    }
    return out;
}

bool on_arc_strictly(const Arc& arc, HPoint g) {
    // g assumed on the arc's support circle; is it strictly between a and b?
    const Support& s = arc.curve.support;
    if (s.is_line) {
        double t = dot(g.vec() - arc.a.vec(), arc.b.vec() - arc.a.vec()) /
                   norm_sq(arc.b.vec() - arc.a.vec());
        return t > 1e-9 && t < 1.0 - 1e-9;
    }
    double ta = std::atan2(arc.a.y - s.center.y, arc.a.x - s.center.x);
    double tg = std::atan2(g.y - s.center.y, g.x - s.center.x);
    double sw = arc.sweep();
    double rel = sw >= 0.0 ? wrap_positive(tg - ta) : wrap_positive(ta - tg);
    return rel > 1e-9 && rel < std::abs(sw) - 1e-9;
}

}  // namespace

Vec2 to_klein(HPoint p) {
    return p.vec() * (2.0 / (1.0 + p.norm_sq()));
}

HPoint from_klein(Vec2 k) {
    double n2 = norm_sq(k);
    if (n2 >= 1.0) throw std::domain_error("from_klein: outside the unit disk");
    return hpoint(k / (1.0 + std::sqrt(1.0 - n2)));
}

// ------------------------------------------------------------- convex hull

ConvexBody convex_hull(const std::vector<HPoint>& points) {
    std::vector<HPoint> pts = dedupe(points);
    if (pts.size() < 3)
        throw std::domain_error("convex_hull: need at least 3 distinct points");

    // Euclidean monotone chain in Klein coordinates
    std::vector<int> idx(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) idx[i] = int(i);
    std::vector<Vec2> k(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) k[i] = to_klein(pts[i]);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (k[a].x != k[b].x) return k[a].x < k[b].x;
        return k[a].y < k[b].y;
    });
    auto build = [&](bool upper) {
        std::vector<int> chain;
        for (size_t ii = 0; ii < idx.size(); ++ii) {
            int i = idx[upper ? idx.size() - 1 - ii : ii];
            while (chain.size() >= 2) {
                Vec2 a = k[chain[chain.size() - 2]], b = k[chain.back()];
                if (cross(b - a, k[i] - a) <= 1e-15)
                    chain.pop_back();
                else
                    break;
            }
            chain.push_back(i);
        }
        return chain;
    };
    std::vector<int> lower = build(false), upper = build(true);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());

    ConvexBody body;
    body.generators = pts;
    if (lower.size() < 3) {
        body.degenerate = true;
        return body;
    }
    for (int i : lower) body.vertices.push_back(pts[i]);
    for (size_t i = 0; i < body.vertices.size(); ++i)
        body.boundary.push_back(
            segment_arc(body.vertices[i], body.vertices[(i + 1) % body.vertices.size()]));
    return body;
}

bool contains(const ConvexBody& K, HPoint x, double tol) {
    if (K.degenerate) throw std::domain_error("contains: degenerate convex body");
    Vec2 kx = to_klein(x);
    for (size_t i = 0; i < K.vertices.size(); ++i) {
        Vec2 a = to_klein(K.vertices[i]);
        Vec2 b = to_klein(K.vertices[(i + 1) % K.vertices.size()]);
        if (cross(b - a, kx - a) < -tol) return false;
    }
    return true;
}

// ----------------------------------------------------------- h-convex hull

namespace {

struct EdgeRec {
    int a, b;
    Curve h;
};

HConvexBody lens_of(const std::vector<HPoint>& gens, HPoint a, HPoint b) {
    HConvexBody body;
    body.generators = gens;
    auto [h1, h2] = horocycles_through(a, b);
    Arc arc1 = horocyclic_arc(h1, a, b);
    Arc arc2 = horocyclic_arc(h2, b, a);
    body.vertices = {a, b};
    body.boundary = {arc1, arc2};
    body.supports = {Horoball{h1}, Horoball{h2}};
    if (signed_area_of_chain(body.boundary) < 0.0) {
        body.boundary = {arc2.reversed(), arc1.reversed()};
        body.supports = {Horoball{h2}, Horoball{h1}};
        std::swap(body.vertices[0], body.vertices[1]);
    }
    return body;
}

void fill_caches(HConvexBody& body) {
    if (body.degenerate) {
        body.incircle_cache = {body.generators.front(), 0.0};
        body.circumcircle_cache = {body.generators.front(), 0.0};
        return;
    }
    std::vector<HPoint> seeds = body.vertices;
    Vec2 c{};
    for (const HPoint& v : body.vertices) c = c + to_klein(v);
    seeds.push_back(from_klein(c / double(body.vertices.size())));
    InscribedBall in = incircle_of_chain(body.boundary, body.supports, seeds);
    body.incircle_cache = in.ball;
    body.incircle_touch = in.touch;
    body.circumcircle_cache = min_enclosing_ball(body.vertices);
}

}  // namespace

HConvexBody hconvex_hull(const std::vector<HPoint>& points, bool defer_caches) {
    std::vector<HPoint> pts = dedupe(points);
    if (pts.empty()) throw std::domain_error("hconvex_hull: empty input");

    HConvexBody body;
    if (pts.size() == 1) {
        body.generators = pts;
        body.vertices = pts;
        body.degenerate = true;
        if (!defer_caches) fill_caches(body);
        return body;
    }
    if (pts.size() == 2) {
        body = lens_of(pts, pts[0], pts[1]);
        if (!defer_caches) fill_caches(body);
        return body;
    }

    const int n = int(pts.size());
    std::vector<EdgeRec> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto pair = horocycles_through(pts[i], pts[j]);
            for (const Curve& h : {pair.first, pair.second}) {
                Horoball hb{h};
                bool ok = true;
                for (int g = 0; g < n && ok; ++g)
                    if (g != i && g != j && hb.signed_dist(pts[g]) < -kMemberTol) ok = false;
                if (!ok) continue;
                // drop edges superseded by cocircular generators on the arc
                Arc arc = horocyclic_arc(h, pts[i], pts[j]);
                bool superseded = false;
                for (int g = 0; g < n && !superseded; ++g) {
                    if (g == i || g == j) continue;
                    if (std::abs(hb.signed_dist(pts[g])) < kMemberTol &&
                        on_arc_strictly(arc, pts[g]))
                        superseded = true;
                }
                if (!superseded) edges.push_back({i, j, h});
            }
        }
    }
    if (edges.empty()) throw std::domain_error("hconvex_hull: no supporting edges found");

    std::vector<std::vector<int>> incident(n);
    for (size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].a].push_back(int(e));
        incident[edges[e].b].push_back(int(e));
    }

    // start at the farthest generator from an interior point: along any
    // boundary horocycle the distance to an interior point has a single
    // critical point (a minimum), so the maximum over the hull sits at a vertex
    Vec2 kc{};
    for (const HPoint& p : pts) kc = kc + to_klein(p);
    HPoint inner = from_klein(kc / double(n));
    int start = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
        if (incident[i].empty()) continue;
        double d = dist(inner, pts[i]);
        if (d > best) {
            best = d;
            start = i;
        }
    }
    if (incident[start].size() != 2)
        throw std::domain_error("hconvex_hull: inconsistent boundary degree");

    std::vector<int> walk_edges;
    int cur = start, in_edge = -1;
    for (int guard = 0; guard <= n + 1; ++guard) {
        const auto& inc = incident[cur];
        if (inc.size() != 2)
            throw std::domain_error("hconvex_hull: inconsistent boundary degree");
        int next_edge = (int(inc[0]) == in_edge) ? inc[1] : inc[0];
        walk_edges.push_back(next_edge);
        cur = (edges[next_edge].a == cur) ? edges[next_edge].b : edges[next_edge].a;
        in_edge = next_edge;
        if (cur == start) break;
        if (guard == n + 1)
            throw std::domain_error("hconvex_hull: boundary walk did not close");
    }

    body.generators = pts;
    cur = start;
    for (int e : walk_edges) {
        int nxt = (edges[e].a == cur) ? edges[e].b : edges[e].a;
        body.boundary.push_back(horocyclic_arc(edges[e].h, pts[cur], pts[nxt]));
        body.supports.push_back(Horoball{edges[e].h});
        cur = nxt;
    }
    if (signed_area_of_chain(body.boundary) < 0.0) {
        std::reverse(body.boundary.begin(), body.boundary.end());
        for (Arc& a : body.boundary) a = a.reversed();
        std::reverse(body.supports.begin(), body.supports.end());
    }
    for (const Arc& a : body.boundary) body.vertices.push_back(a.a);
    if (body.boundary.size() > pts.size())
        throw std::domain_error("hconvex_hull: more boundary arcs than generators");
    if (!defer_caches) fill_caches(body);
    return body;
}

bool contains(const HConvexBody& K, HPoint x, double tol) {
    if (K.degenerate) return dist(K.generators.front(), x) <= tol;
    for (const Horoball& hb : K.supports)
        if (hb.signed_dist(x) < -tol) return false;
    return true;
}

ClosestPointResult closest_point(const HConvexBody& K, HPoint y) {
    if (contains(K, y, 0.0))
        throw std::domain_error("closest_point: point inside the body");
    HPoint z = K.vertices.front();
    double best = dist(y, z);
    for (const HPoint& v : K.vertices) {
        double d = dist(y, v);
        if (d < best) {
            best = d;
            z = v;
        }
    }
    for (const Arc& arc : K.boundary) {
        HPoint foot = closest_point_on_horocycle(y, arc.curve);
        if (!on_arc_strictly(arc, foot)) continue;
        double d = dist(y, foot);
        if (d < best) {
            best = d;
            z = foot;
        }
    }
    // horoball with z on its boundary, ideal point on the ray y -> z extended
    Isometry f = map_geodesic_to_x_axis(geodesic_through(y, z));
    double dir = f(z).x > f(y).x ? 1.0 : -1.0;
    IdealPoint i = ideal_from_unit(f.inverse().apply_closed({dir, 0.0}));
    return {z, Horoball{horocycle_at(z, i)}};
}

// ------------------------------------------------------ inscribed/enclosing

InscribedBall incircle_of_chain(const std::vector<Arc>& boundary,
                                const std::vector<Horoball>& supports,
                                const std::vector<HPoint>& seeds) {
    if (boundary.empty()) throw std::domain_error("incircle: degenerate body");
    // signed inradius: minimum over supporting horoballs of the signed
    // distance to the boundary horocycle (exact for intersections of horoballs)
    auto depth = [&](double x, double y) {
        if (x * x + y * y >= kMaxPointNorm * kMaxPointNorm) return -1e9;
        HPoint p{x, y};
        double m = 1e9;
        for (const Horoball& hb : supports) m = std::min(m, hb.signed_dist(p));
        return m;
    };

    // coarse grid over the bounding box, then local refinement
    Vec2 lo{1e9, 1e9}, hi{-1e9, -1e9};
    for (const Arc& arc : boundary) {
        for (int i = 0; i <= 16; ++i) {
            Vec2 v = arc.point_at(i / 16.0);
            lo.x = std::min(lo.x, v.x);
            lo.y = std::min(lo.y, v.y);
            hi.x = std::max(hi.x, v.x);
            hi.y = std::max(hi.y, v.y);
        }
    }
    double bx = 1e9, by = 0.0, bv = -1e9;
    const int G = 14;
    for (int i = 0; i <= G; ++i) {
        for (int j = 0; j <= G; ++j) {
            double x = lo.x + (hi.x - lo.x) * i / G;
            double y = lo.y + (hi.y - lo.y) * j / G;
            double v = depth(x, y);
            if (v > bv) {
                bv = v;
                bx = x;
                by = y;
            }
        }
    }
    std::vector<Vec2> starts{{bx, by}};
    for (const HPoint& s : seeds) starts.push_back(s.vec());
    double step = std::max(hi.x - lo.x, hi.y - lo.y) / 8.0;
    Point2Min best{bx, by, bv};
    for (Vec2 s : starts) {
        Point2Min m = nelder_mead_max(depth, s.x, s.y, step, 1e-12, 600);
        // polish with a smaller simplex
        m = nelder_mead_max(depth, m.x, m.y, 1e-4, 1e-13, 400);
        if (m.value > best.value) best = m;
    }
    if (best.value <= 0.0) throw std::domain_error("incircle: empty interior");

    InscribedBall out;
    out.ball = {hpoint(best.x, best.y), best.value};
    for (size_t i = 0; i < boundary.size(); ++i) {
        if (std::abs(supports[i].signed_dist(out.ball.center) - out.ball.radius) < 1e-6)
            out.touch.push_back(closest_point_on_horocycle(out.ball.center, boundary[i].curve));
    }
    return out;
}

BallSpec incircle(const HConvexBody& K) {
    if (K.degenerate) throw std::domain_error("incircle: degenerate body");
    return K.incircle_cache;
}

BallSpec circumcircle(const HConvexBody& K) {
    if (K.degenerate) throw std::domain_error("circumcircle: singleton body");
    return K.circumcircle_cache;
}

BallSpec min_enclosing_ball(const std::vector<HPoint>& points) {
    if (points.size() < 2) throw std::domain_error("min_enclosing_ball: singleton");
    auto covers = [&](HPoint c, double r) {
        for (const HPoint& p : points)
            if (dist(c, p) > r + 1e-11) return false;
        return true;
    };
    BallSpec best{};
    best.radius = 1e18;
    const int n = int(points.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            HPoint c = midpoint(points[i], points[j]);
            double r = dist(points[i], points[j]) / 2.0;
            if (r < best.radius && covers(c, r)) best = {c, r};
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                Curve b1 = perp_bisector(points[i], points[j]);
                Curve b2 = perp_bisector(points[j], points[k]);
                IntersectResult c = intersect(b1, b2);
                for (const HPoint& cc : c.points) {
                    double r = std::max({dist(cc, points[i]), dist(cc, points[j]),
                                         dist(cc, points[k])});
                    if (r < best.radius && covers(cc, r)) best = {cc, r};
                }
            }
        }
    }
    if (best.radius > 1e17) throw std::domain_error("min_enclosing_ball: no candidate");
    return best;
}

// ---------------------------------------------------------------- Hausdorff

std::vector<Vec2> boundary_samples(const std::vector<Arc>& arcs, double resolution) {
    std::vector<Vec2> out;
    for (const Arc& arc : arcs) {
        std::vector<Vec2> s = arc.sample(resolution);
        out.insert(out.end(), s.begin(), s.end() - 1);  // endpoints shared
    }
    return out;
}

double hausdorff_samples(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    auto one_sided = [](const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
        double worst = 0.0;
        for (Vec2 x : from) {
            double mn = 1e18;
            HPoint hx{x.x, x.y};
            for (Vec2 y : to) {
                // prune with the Euclidean lower bound 2|x-y| <= d(x,y)
                double e2 = norm_sq(x - y);
                if (4.0 * e2 >= mn * mn) continue;
                double d = dist(hx, {y.x, y.y});
                if (d < mn) mn = d;
            }
            if (mn > worst) worst = mn;
        }
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

double hausdorff(const HConvexBody& X, const HConvexBody& Y, double resolution) {
    std::vector<Vec2> a, b;
    if (X.degenerate)
        a = {X.generators.front().vec()};
    else
        a = boundary_samples(X.boundary, resolution);
    if (Y.degenerate)
        b = {Y.generators.front().vec()};
    else
        b = boundary_samples(Y.boundary, resolution);
    return hausdorff_samples(a, b);
}

}  // namespace horopal
