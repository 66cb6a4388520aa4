#include "horopal/width.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "horopal/measure.hpp"
#include "horopal/optimize.hpp"

namespace horopal {

namespace {

struct LineWidth {
    double width = 0.0;
    HPoint far_point{};
    HPoint near_point{};
    double support_residual = 0.0;  // how far the line is from touching
    int side = +1;                  // side of the body relative to the line
};

// extremes of the signed distance to `line` along one arc; seeds a golden
// search from the best of a coarse scan (distance to a geodesic is unimodal
// along a convex arc, the scan guards the bracket)
void arc_extremes(const Arc& arc, const Curve& line, double& mx, double& mx_t, double& mn,
                  double& mn_t) {
    auto f = [&](double t) {
        Vec2 v = arc.point_at(t);
        return signed_dist_to_geodesic(HPoint{v.x, v.y}, line);
    };
    const int kScan = 8;
    mx = -1e18;
    mn = 1e18;
    double tmx = 0.0, tmn = 0.0;
    for (int i = 0; i <= kScan; ++i) {
        double t = double(i) / kScan;
        double v = f(t);
        if (v > mx) {
            mx = v;
            tmx = t;
        }
        if (v < mn) {
            mn = v;
            tmn = t;
        }
    }
    auto polish = [&](double seed, bool maximize) {
        double lo = std::max(0.0, seed - 1.0 / kScan);
        double hi = std::min(1.0, seed + 1.0 / kScan);
        ScalarMin m = maximize ? golden_max(f, lo, hi, 1e-10) : golden_min(f, lo, hi, 1e-10);
        return m;
    };
    ScalarMin pm = polish(tmx, true);
    if (pm.value > mx) {
        mx = pm.value;
        tmx = pm.x;
    }
    ScalarMin qm = polish(tmn, false);
    if (qm.value < mn) {
        mn = qm.value;
        tmn = qm.x;
    }
    mx_t = tmx;
    mn_t = tmn;
}

LineWidth line_width_detail(const BoundaryBody& K, const Curve& line) {
    double gmax = -1e18, gmin = 1e18;
    Arc amax, amin;
    double tmax = 0.0, tmin = 0.0;
    for (const Arc& arc : K.arcs) {
        double mx, mxt, mn, mnt;
        arc_extremes(arc, line, mx, mxt, mn, mnt);
        if (mx > gmax) {
            gmax = mx;
            amax = arc;
            tmax = mxt;
        }
        if (mn < gmin) {
            gmin = mn;
            amin = arc;
            tmin = mnt;
        }
    }
    LineWidth out;
    if (std::abs(gmax) >= std::abs(gmin)) {
        out.side = +1;
        out.width = gmax;
        out.support_residual = std::abs(gmin);
        Vec2 f = amax.point_at(tmax), n = amin.point_at(tmin);
        out.far_point = {f.x, f.y};
        out.near_point = {n.x, n.y};
    } else {
        out.side = -1;
        out.width = -gmin;
        out.support_residual = std::abs(gmax);
        Vec2 f = amin.point_at(tmin), n = amax.point_at(tmax);
        out.far_point = {f.x, f.y};
        out.near_point = {n.x, n.y};
    }
    return out;
}

struct Candidate {
    Curve line;
    double width = 0.0;
    LineWidth detail;
    // family: arc index (tangent family) or -1-vertex for fans
    int arc_index = -1;
    int vertex_index = -1;
    double param = 0.0;  // t within the arc, or angle within the fan
};

Curve tangent_line_at(const Arc& arc, double t) {
    Vec2 z = arc.point_at(t);
    return geodesic_at(HPoint{z.x, z.y}, arc.tangent_at(t));
}

Curve fan_line(const BoundaryBody& K, int vertex, double ang) {
    const Arc& in = K.arcs[(vertex + K.arcs.size() - 1) % K.arcs.size()];
    Vec2 t_in = in.tangent_at(1.0);
    Vec2 v = K.arcs[vertex].point_at(0.0);
    Vec2 d{t_in.x * std::cos(ang) - t_in.y * std::sin(ang),
           t_in.x * std::sin(ang) + t_in.y * std::cos(ang)};
    return geodesic_at(HPoint{v.x, v.y}, d);
}

double fan_span(const BoundaryBody& K, int vertex) {
    const Arc& in = K.arcs[(vertex + K.arcs.size() - 1) % K.arcs.size()];
    const Arc& out = K.arcs[vertex];
    Vec2 t_in = in.tangent_at(1.0);
    Vec2 t_out = out.tangent_at(0.0);
    // exterior turn at the vertex, in [0, pi) for a convex chain
    return wrap_positive(std::atan2(t_out.y, t_out.x) - std::atan2(t_in.y, t_in.x));
}

}  // namespace

BoundaryBody as_body(const HConvexBody& K) { return {K.boundary, K.degenerate}; }

BoundaryBody as_body(const ConvexBody& K) { return {K.boundary, K.degenerate}; }

BoundaryBody ball_body(const BallSpec& B) {
    Region disk = disk_region(B.center, B.radius);
    return {disk.arcs, false};
}

double width_wrt_line(const BoundaryBody& K, const Curve& line, double support_tol) {
    if (line.kind != CurveKind::geodesic)
        throw std::invalid_argument("width_wrt_line: not a geodesic");
    if (K.degenerate) return 0.0;
    LineWidth d = line_width_detail(K, line);
    if (d.support_residual > support_tol)
        throw std::domain_error("width_wrt_line: line does not support the body");
    return d.width;
}

WidthResult lassak_width(const BoundaryBody& K, WidthMethod method, int sweep_positions) {
    WidthResult res;
    if (K.degenerate) return res;
    if (K.arcs.empty()) throw std::domain_error("lassak_width: empty boundary");

    const int n_arcs = int(K.arcs.size());
    // distribute tangent positions over arcs proportionally to length
    std::vector<double> lengths(n_arcs);
    double total = 0.0;
    for (int i = 0; i < n_arcs; ++i) {
        lengths[i] = K.arcs[i].euclid_length();
        total += lengths[i];
    }

    std::vector<Candidate> cands;
    const double fan_step = 2.0 * M_PI / sweep_positions;
    for (int i = 0; i < n_arcs; ++i) {
        // vertex fan before arc i
        double span = fan_span(K, i);
        if (span > 1e-12 && span < M_PI) {
            int steps = std::max(1, int(std::ceil(span / fan_step)));
            for (int k = 0; k <= steps; ++k) {
                Candidate c;
                c.vertex_index = i;
                c.param = span * k / steps;
                c.line = fan_line(K, i, c.param);
                c.detail = line_width_detail(K, c.line);
                c.width = c.detail.width;
                cands.push_back(c);
            }
        }
        if (K.arcs[i].curve.kind == CurveKind::geodesic) {
            Candidate c;
            c.arc_index = i;
            c.param = 0.5;
            c.line = K.arcs[i].curve;
            c.detail = line_width_detail(K, c.line);
            c.width = c.detail.width;
            cands.push_back(c);
        } else {
            int m = std::max(2, int(std::round(sweep_positions * lengths[i] / total)));
            for (int k = 0; k <= m; ++k) {
                Candidate c;
                c.arc_index = i;
                c.param = double(k) / m;
                c.line = tangent_line_at(K.arcs[i], c.param);
                c.detail = line_width_detail(K, c.line);
                c.width = c.detail.width;
                cands.push_back(c);
            }
        }
    }
    if (cands.empty()) throw std::domain_error("lassak_width: no supporting lines found");

    // oracle: the plain sweep minimum
    size_t best_i = 0;
    for (size_t i = 1; i < cands.size(); ++i)
        if (cands[i].width < cands[best_i].width) best_i = i;

    std::vector<Candidate> finals;
    if (method == WidthMethod::oracle) {
        finals.push_back(cands[best_i]);
        // keep sweep-level near-ties for the certificate
        for (size_t i = 0; i < cands.size(); ++i)
            if (i != best_i && cands[i].width <= cands[best_i].width + 1e-6)
                finals.push_back(cands[i]);
    } else {
        // refine every local minimum of the cyclic sweep sequence
        const size_t n = cands.size();
        std::vector<size_t> local;
        for (size_t i = 0; i < n; ++i) {
            double prev = cands[(i + n - 1) % n].width;
            double next = cands[(i + 1) % n].width;
            if (cands[i].width <= prev && cands[i].width <= next) local.push_back(i);
        }
        std::sort(local.begin(), local.end(),
                  [&](size_t a, size_t b) { return cands[a].width < cands[b].width; });
        if (local.size() > 8) local.resize(8);
        for (size_t idx : local) {
            const Candidate& c = cands[idx];
            Candidate refined = c;
            if (c.arc_index >= 0 && K.arcs[c.arc_index].curve.kind != CurveKind::geodesic) {
                const Arc& arc = K.arcs[c.arc_index];
                int m = std::max(2, int(std::round(sweep_positions * lengths[c.arc_index] / total)));
                double lo = std::max(0.0, c.param - 1.0 / m);
                double hi = std::min(1.0, c.param + 1.0 / m);
                ScalarMin sm = golden_min(
                    [&](double t) { return line_width_detail(K, tangent_line_at(arc, t)).width; },
                    lo, hi, 1e-11);
                refined.param = sm.x;
                refined.line = tangent_line_at(arc, sm.x);
                refined.detail = line_width_detail(K, refined.line);
                refined.width = refined.detail.width;
            } else if (c.vertex_index >= 0) {
                double span = fan_span(K, c.vertex_index);
                double lo = std::max(0.0, c.param - fan_step);
                double hi = std::min(span, c.param + fan_step);
                if (hi > lo + 1e-14) {
                    ScalarMin sm = golden_min(
                        [&](double a) {
                            return line_width_detail(K, fan_line(K, c.vertex_index, a)).width;
                        },
                        lo, hi, 1e-11);
                    refined.param = sm.x;
                    refined.line = fan_line(K, c.vertex_index, sm.x);
                    refined.detail = line_width_detail(K, refined.line);
                    refined.width = refined.detail.width;
                }
            }
            if (refined.width > c.width) refined = c;  // refinement never worsens
            finals.push_back(refined);
        }
        std::sort(finals.begin(), finals.end(),
                  [](const Candidate& a, const Candidate& b) { return a.width < b.width; });
    }

    // deterministic tie-break: among near-equal minima prefer the smallest
    // touch-point angle
    size_t win = 0;
    for (size_t i = 1; i < finals.size(); ++i) {
        if (finals[i].width < finals[win].width - 1e-9) win = i;
        else if (std::abs(finals[i].width - finals[win].width) <= 1e-9) {
            double ai = std::atan2(finals[i].detail.near_point.y, finals[i].detail.near_point.x);
            double aw = std::atan2(finals[win].detail.near_point.y, finals[win].detail.near_point.x);
            if (ai < aw) win = i;
        }
    }

    const Candidate& w = finals[win];
    res.width = w.width;
    Strip strip;
    strip.line = w.line;
    strip.side = w.detail.side;
    strip.width = w.width;
    strip.hypercycle = hypercycle(w.line, std::max(w.width, 1e-15), w.detail.side);
    res.cert.strip = strip;
    res.cert.touch_line = w.detail.near_point;
    res.cert.touch_hyper = w.detail.far_point;
    HPoint foot = foot_on_geodesic(w.detail.far_point, w.line);
    res.cert.orthogonality_residue = dist(foot, res.cert.touch_line);
    for (const Candidate& c : finals) {
        if (c.width <= res.width + 1e-6) {
            Strip s;
            s.line = c.line;
            s.side = c.detail.side;
            s.width = c.width;
            s.hypercycle = hypercycle(c.line, std::max(c.width, 1e-15), c.detail.side);
            res.cert.near_ties.push_back(s);
        }
    }
    return res;
}

Strip minimal_strip(const BoundaryBody& K) {
    WidthResult r = lassak_width(K);
    if (K.degenerate) throw std::domain_error("minimal_strip: degenerate body");
    return r.cert.strip;
}

}  // namespace horopal
