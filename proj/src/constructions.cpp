#include "horopal/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "horopal/optimize.hpp"

namespace horopal {

namespace {

double vertex_angle(int j) { return M_PI / 2 + 2.0 * M_PI * j / 3.0; }

}  // namespace

RegularHorocyclicTriangle regular_triangle_from_inradius(double r) {
    if (r <= 0.0) throw std::domain_error("regular_triangle_from_inradius: r <= 0");
    RegularHorocyclicTriangle T;
    T.center = origin;
    T.inradius = r;

    double s = std::tanh(r / 2.0);
    for (int j = 0; j < 3; ++j) {
        T.side_midpoints[j] = radial_point(r, vertex_angle(j) + M_PI);
        T.side_horoballs[j] =
            Horoball{horocycle_at(T.side_midpoints[j], IdealPoint{vertex_angle(j)})};
    }
    // vertex at Euclidean radius t: the intersection of two side horocycles
    // inside the third horoball solves t^2 + t(1-s)/2 - s = 0
    double t = (-(1.0 - s) + std::sqrt((1.0 - s) * (1.0 - s) + 16.0 * s)) / 4.0;
    T.circumradius = 2.0 * std::atanh(t);
    T.width = T.inradius + T.circumradius;
    for (int j = 0; j < 3; ++j) T.vertices[j] = hpoint(unit_dir(vertex_angle(j)) * t);
    for (int j = 0; j < 3; ++j) {
        // side j lies on horoball j, joining the other two vertices
        int k = (j + 1) % 3, m = (j + 2) % 3;
        T.sides[j] = horocyclic_arc(T.side_horoballs[j].boundary, T.vertices[k], T.vertices[m]);
    }
    // aleph: angle at a vertex between the emanating side and the center ray
    Arc from_vertex = horocyclic_arc(T.sides[1].curve, T.vertices[0], T.vertices[2]);
    Vec2 t_arc = from_vertex.tangent_at(0.0);
    Vec2 t_ray = segment_arc(T.vertices[0], T.center).tangent_at(0.0);
    T.aleph = std::acos(clamp1(dot(t_arc, t_ray)));
    return T;
}

HConvexBody RegularHorocyclicTriangle::body() const {
    HConvexBody K;
    K.generators = {vertices[0], vertices[1], vertices[2]};
    // counterclockwise: side 2 joins vertices 0 -> 1, side 0 joins 1 -> 2, ...
    for (int step = 0; step < 3; ++step) {
        int a = step, b = (step + 1) % 3, side = (step + 2) % 3;
        K.vertices.push_back(vertices[a]);
        K.boundary.push_back(horocyclic_arc(side_horoballs[side].boundary, vertices[a], vertices[b]));
        K.supports.push_back(side_horoballs[side]);
    }
    if (signed_area_of_chain(K.boundary) < 0.0) {
        std::reverse(K.boundary.begin(), K.boundary.end());
        for (Arc& arc : K.boundary) arc = arc.reversed();
        std::reverse(K.supports.begin(), K.supports.end());
        K.vertices.clear();
        for (const Arc& arc : K.boundary) K.vertices.push_back(arc.a);
    }
    K.incircle_cache = {center, inradius};
    K.circumcircle_cache = {center, circumradius};
    K.incircle_touch = {side_midpoints[0], side_midpoints[1], side_midpoints[2]};
    return K;
}

Region RegularHorocyclicTriangle::region() const {
    HConvexBody K = body();
    return make_region(K.boundary);
}

RegularHorocyclicTriangle t_w(double w) {
    if (w <= 0.0) throw std::domain_error("t_w: w <= 0");
    auto width_of = [](double r) { return regular_triangle_from_inradius(r).width; };
    double lo = 1e-9, hi = w / 2.0;
    // width is continuous and strictly increasing in the inradius
    double root = bisect_root([&](double r) { return width_of(r) - w; }, lo, hi, 1e-14, 300);
    RegularHorocyclicTriangle T = regular_triangle_from_inradius(root);
    if (std::abs(T.width - w) > 1e-9) throw std::domain_error("t_w: bisection failed");
    return T;
}

// --------------------------------------------------------------------- spike

Spike spike(const BallSpec& B, HPoint u) {
    double du = dist(B.center, u);
    if (du < B.radius - 1e-12) throw std::domain_error("spike: apex inside the ball");
    Spike S;
    S.ball = B;
    S.apex = u;
    if (du - B.radius < 1e-10) {
        S.empty = true;
        return S;
    }

    // tangency parameters: the supporting horoball at angle theta gains /
    // loses the apex as theta passes the two tangency points
    Isometry frame = Isometry::translation_to(B.center);
    auto boundary_point = [&](double theta) { return frame(radial_point(B.radius, theta)); };
    double theta_u = std::atan2(frame.inverse()(u).y, frame.inverse()(u).x);
    auto f = [&](double theta) {
        HPoint z = boundary_point(theta_u + theta);
        return supporting_horocycle(B.center, B.radius, z).signed_dist(u);
    };
    // f > 0 at the antipode (theta = pi), f < 0 at theta = 0
    double a1 = bisect_root(f, 1e-9, M_PI, 1e-13);
    double a2 = -bisect_root([&](double t) { return f(-t); }, 1e-9, M_PI, 1e-13);
    S.x1 = boundary_point(theta_u + a1);
    S.x2 = boundary_point(theta_u + a2);
    S.h1 = supporting_horocycle(B.center, B.radius, S.x1);
    S.h2 = supporting_horocycle(B.center, B.radius, S.x2);

    Curve circ = circle_curve(B.center, B.radius);
    Arc near_arc = circle_arc_toward(circ, S.x1, S.x2, u.vec());
    S.region = make_region({horocyclic_arc(S.h1.boundary, u, S.x1), near_arc,
                            horocyclic_arc(S.h2.boundary, S.x2, u)});
    return S;
}

// ---------------------------------------------------------------- cap domain

CapDomain cap_domain(double w, double rho) {
    if (w <= 0.0) throw std::domain_error("cap_domain: w <= 0");
    RegularHorocyclicTriangle T = t_w(w);
    CapDomain D;
    D.w = w;
    D.r = T.inradius;
    D.center = origin;
    if (rho < D.r - 1e-9 || rho > w / 2.0 + 1e-9)
        throw std::domain_error("cap_domain: rho outside [r(T_w), w/2]");
    rho = std::clamp(rho, D.r, w / 2.0);
    D.rho = rho;

    for (int i = 0; i < 3; ++i) {
        D.q[i] = radial_point(w - rho, vertex_angle(i));
        D.m[i] = radial_point(rho, vertex_angle(i) + M_PI);
    }
    const HPoint q1 = D.q[0];
    const HPoint m2 = D.m[1];  // at angle pi/6, bounding the Gamma cone with q1

    Curve circ = circle_curve(origin, rho);
    const double half_w_gap = w / 2.0 - rho;

    if (half_w_gap < 1e-9) {
        // C_w(w/2) = B(p, w/2)
        D.v = D.q[0];
        D.alpha = M_PI / 3.0;
        D.C = disk_region(origin, rho);
        HPoint east = radial_point(rho, M_PI / 6.0);
        Arc sector = circle_arc_toward(circ, q1, east, unit_dir(M_PI / 3.0) * 0.5);
        D.Gamma = make_region({segment_arc(origin, q1), sector, segment_arc(east, origin)});
    } else {
        std::array<Spike, 3> spikes{spike({origin, rho}, D.q[0]), spike({origin, rho}, D.q[1]),
                                    spike({origin, rho}, D.q[2])};
        // v: the tangency of the q1 spike inside the cone between pi/6 and pi/2
        auto pick_v = [&](const Spike& S) {
            double a1 = wrap_positive(std::atan2(S.x1.y, S.x1.x));
            return (a1 > M_PI / 6.0 - 1e-9 && a1 < M_PI / 2.0) ? S.x1 : S.x2;
        };
        D.v = pick_v(spikes[0]);
        D.alpha = angle(m2, origin, D.v);

        // per spike: the tangency counterclockwise after the apex and the one
        // before it, with their supporting horoballs
        struct SpikeEnds {
            HPoint fwd, bwd;
            Horoball h_fwd, h_bwd;
        };
        auto ends_of = [&](const Spike& S, double base) {
            bool x1_fwd = wrap_positive(std::atan2(S.x1.y, S.x1.x) - base) < M_PI;
            SpikeEnds e;
            e.fwd = x1_fwd ? S.x1 : S.x2;
            e.bwd = x1_fwd ? S.x2 : S.x1;
            e.h_fwd = x1_fwd ? S.h1 : S.h2;
            e.h_bwd = x1_fwd ? S.h2 : S.h1;
            return e;
        };
        std::array<SpikeEnds, 3> ends{ends_of(spikes[0], vertex_angle(0)),
                                      ends_of(spikes[1], vertex_angle(1)),
                                      ends_of(spikes[2], vertex_angle(2))};

        // full cap domain: spikes interleaved with circular arcs, ccw
        std::vector<Arc> chain;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3;
            chain.push_back(horocyclic_arc(ends[i].h_fwd.boundary, spikes[i].apex, ends[i].fwd));
            double gap = wrap_positive(std::atan2(ends[j].bwd.y, ends[j].bwd.x) -
                                       std::atan2(ends[i].fwd.y, ends[i].fwd.x));
            if (gap > 1e-12)
                chain.push_back(circle_arc_toward(circ, ends[i].fwd, ends[j].bwd,
                                                  unit_dir(vertex_angle(i) + M_PI / 3.0) *
                                                      std::tanh(rho / 2.0)));
            chain.push_back(horocyclic_arc(ends[j].h_bwd.boundary, ends[j].bwd, spikes[j].apex));
        }
        D.C = make_region(chain);

        // Gamma: cone cut between f = f1 (angle pi/2) and ftilde = ftilde2 (pi/6)
        const Spike& s1 = spikes[0];
        const Horoball& hv = (norm(D.v.vec() - s1.x1.vec()) < 1e-12) ? s1.h1 : s1.h2;
        std::vector<Arc> gamma{segment_arc(origin, q1), horocyclic_arc(hv.boundary, q1, D.v)};
        if (angle(D.v, origin, m2) > 1e-12)
            gamma.push_back(
                circle_arc_toward(circ, D.v, m2, unit_dir(M_PI / 3.0) * std::tanh(rho / 2.0)));
        gamma.push_back(segment_arc(m2, origin));
        D.Gamma = make_region(gamma);
    }

    // Delta: bounded by [p, q(rho)], [p, m(rho)] and the arc of h(rho)
    auto pair = horocycles_through(q1, m2);
    D.h_rho = Horoball{pair.first}.signed_dist(origin) > 0.0 ? pair.first : pair.second;
    Arc qm = horocyclic_arc(D.h_rho, q1, m2);
    D.Delta = make_region({segment_arc(origin, q1), qm, segment_arc(m2, origin)});

    // delta angles at the two ends of the arc of h(rho)
    Arc mq = horocyclic_arc(D.h_rho, m2, q1);
    Vec2 t_arc_m = mq.tangent_at(0.0);
    Vec2 t_seg_m = segment_arc(m2, origin).tangent_at(0.0);
    D.delta_plus = std::acos(clamp1(dot(t_arc_m, t_seg_m)));
    Vec2 t_arc_q = qm.tangent_at(0.0);
    Vec2 t_seg_q = segment_arc(q1, origin).tangent_at(0.0);
    D.delta_minus = std::acos(clamp1(dot(t_arc_q, t_seg_q)));
    return D;
}

std::pair<double, double> delta_angles(double w, double rho) {
    RegularHorocyclicTriangle T = t_w(w);
    if (rho <= T.inradius || rho >= w / 2.0)
        throw std::domain_error("delta_angles: rho outside (r, w/2)");
    CapDomain D = cap_domain(w, rho);
    return {D.delta_minus, D.delta_plus};
}

// ----------------------------------------------------------------------- K_r

double g_of_r(double r) {
    if (r <= 0.0 || r >= 0.5) throw std::domain_error("g_of_r: r outside (0, 1/2)");
    // l2: perpendicular to the x-axis segment [o, a2] at a2 = radial(r, 0);
    // b1 walks up l1 (the y-axis); find the minimal arclength t with
    // d(b1, l2) >= 1/r
    Curve l2 = geodesic_at(radial_point(r, 0.0), {0.0, 1.0});
    auto f = [&](double t) {
        return std::abs(signed_dist_radial_to_geodesic(t, M_PI / 2.0, l2)) - 1.0 / r;
    };
    double hi = std::acosh(std::sinh(1.0 / r) / std::sinh(r)) + 1.0;
    return bisect_root(f, 1.0, hi, 1e-12);
}

ConvexBody k_r(double r) {
    double g = g_of_r(r);
    double tip = std::tanh(g / 2.0);
    if (tip >= kMaxPointNorm)
        throw std::domain_error("k_r: tips not representable in disk coordinates");
    HPoint p_r = hpoint(-tip, 0.0), q_r = hpoint(tip, 0.0);

    // tangent geodesics from the tips to B(o, r): support radius 1/sinh(r),
    // center at distance R + s from the origin
    double s = std::tanh(r / 2.0);
    double R = (1.0 - s * s) / (2.0 * s);
    double cn = R + s;
    double ce = std::cosh(g) / std::sinh(g);  // c.e for a circle through the tip
    double eta = std::sqrt(std::max(0.0, cn * cn - ce * ce));

    auto tangent_point = [&](Vec2 c) { return hpoint(c * (s / norm(c))); };
    Vec2 c_ur{ce, eta}, c_lr{ce, -eta}, c_ul{-ce, eta}, c_ll{-ce, -eta};
    HPoint t_ur = tangent_point(c_ur), t_lr = tangent_point(c_lr);
    HPoint t_ul = tangent_point(c_ul), t_ll = tangent_point(c_ll);

    auto seg_on = [&](Vec2 c, HPoint a, HPoint b) {
        Curve geo;
        geo.kind = CurveKind::geodesic;
        geo.support = Support::circle(c, R);
        Arc arc{geo, a, b, true};
        Arc alt{geo, a, b, false};
        return std::abs(alt.sweep()) < std::abs(arc.sweep()) ? alt : arc;
    };

    ConvexBody body;
    body.generators = {p_r, q_r};
    Curve circ = circle_curve(origin, r);
    body.vertices = {q_r, t_ur, t_ul, p_r, t_ll, t_lr};
    body.boundary = {seg_on(c_ur, q_r, t_ur),
                     circle_arc_toward(circ, t_ur, t_ul, {0.0, s}),
                     seg_on(c_ul, t_ul, p_r),
                     seg_on(c_ll, p_r, t_ll),
                     circle_arc_toward(circ, t_ll, t_lr, {0.0, -s}),
                     seg_on(c_lr, t_lr, q_r)};
    return body;
}

KrAnalytic make_kr(double r) {
    KrAnalytic K;
    K.r = r;
    K.g = g_of_r(r);
    K.tangency_angle = std::acos(std::tanh(r) / std::tanh(K.g));
    return K;
}

double KrAnalytic::volume() const {
    // per quarter: the right triangle (o, tip, tangency) plus the circular
    // sector of B(o, r) from the tangency angle to pi/2
    double theta = tangency_angle;
    double phi_tip = std::asin(std::sinh(r) / std::sinh(g));
    double tri = M_PI / 2.0 - theta - phi_tip;
    double sector = (M_PI / 2.0 - theta) * (std::cosh(r) - 1.0);
    return 4.0 * (tri + sector);
}

double KrAnalytic::width_measured(int sweep_positions) const {
    double s = std::tanh(r / 2.0);
    double R_seg = (1.0 - s * s) / (2.0 * s);
    double cn = R_seg + s;
    double ce = std::cosh(g) / std::sinh(g);
    double eta_t = std::sqrt(std::max(0.0, cn * cn - ce * ce));

    auto line_of = [&](Vec2 c, double R) {
        Curve geo;
        geo.kind = CurveKind::geodesic;
        geo.support = Support::circle(c, R);
        return geo;
    };
    auto max_dist = [&](const Curve& line) {
        double ball = std::abs(signed_dist_radial_to_geodesic(0.0, 0.0, line)) + r;
        double tip_p = std::abs(signed_dist_radial_to_geodesic(g, 0.0, line));
        double tip_m = std::abs(signed_dist_radial_to_geodesic(g, M_PI, line));
        return std::max({ball, tip_p, tip_m});
    };

    double best = 1e18;
    // tangent lines on the exposed circular arcs
    int m = std::max(8, sweep_positions / 2);
    for (int k = 0; k <= m; ++k) {
        double psi = tangency_angle + (M_PI - 2.0 * tangency_angle) * k / m;
        Curve line = line_of(unit_dir(psi) * cn, R_seg);
        best = std::min(best, max_dist(line));
    }
    // the four tangent segments support the body as well
    for (Vec2 c : {Vec2{ce, eta_t}, Vec2{ce, -eta_t}, Vec2{-ce, eta_t}, Vec2{-ce, -eta_t}})
        best = std::min(best, max_dist(line_of(c, R_seg)));
    // fans of supporting lines through the tips
    for (int k = 0; k <= m; ++k) {
        double eta = -eta_t + 2.0 * eta_t * k / m;
        Vec2 c{ce, eta};
        double rad = std::sqrt(std::max(0.0, norm_sq(c) - 1.0));
        if (rad < 1e-12) continue;
        best = std::min(best, max_dist(line_of(c, rad)));
    }
    return best;
}

}  // namespace horopal
