// acceptance suite: runs the numbered criteria end to end and prints one
// pass/fail line per criterion; exit code 0 iff every requested criterion
// passes

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "horopal/experiments.hpp"

using namespace horopal;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// ---------------------------------------------------------------- criteria

Checker criterion_1() {
    Checker c;
    std::mt19937_64 g(1001);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int tri_fail = 0, bound_fail = 0;
    for (int i = 0; i < 10000; ++i) {
        double R = 2.5;
        auto draw = [&] {
            double r = std::acosh(1.0 + uni(g) * (std::cosh(R) - 1.0));
            return radial_point(r, 2.0 * M_PI * uni(g));
        };
        HPoint a = draw(), b = draw(), x = draw();
        double ab = dist(a, b);
        if (ab > dist(a, x) + dist(x, b) + 1e-12) ++tri_fail;
        double theta = std::max(norm(a.vec()), norm(b.vec()));
        double e = norm(a.vec() - b.vec());
        if (ab < 2.0 * e - 1e-12) ++bound_fail;
        if (ab > 2.0 / (1.0 - theta * theta) * e + 1e-12) ++bound_fail;
    }
    c.expect(tri_fail == 0, "triangle inequality failures: " + std::to_string(tri_fail));
    c.expect(bound_fail == 0, "euclidean comparison failures: " + std::to_string(bound_fail));
    return c;
}

Checker criterion_2() {
    Checker c;
    MCArea mc = area_monte_carlo(disk_region(origin, 1.0), 1000000, 20240229);
    double err = std::abs(mc.value - disk_area(1.0));
    c.expect(err <= 3.0 * mc.sigma,
             "disk MC error " + num(err) + " vs 3 sigma " + num(3.0 * mc.sigma));
    c.note("disk MC " + num(mc.value) + " +- " + num(mc.sigma));

    std::mt19937_64 g(1002);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        auto draw = [&] {
            double r = std::acosh(1.0 + uni(g) * (std::cosh(1.8) - 1.0));
            return radial_point(r, 2.0 * M_PI * uni(g));
        };
        HPoint a = draw(), b = draw(), x = draw();
        if (dist(a, b) < 0.05 || dist(b, x) < 0.05 || dist(a, x) < 0.05) {
            --i;
            continue;
        }
        double deficit = triangle_area(a, b, x);
        double quad = area(triangle_region(a, b, x));
        worst = std::max(worst, std::abs(deficit - quad));
    }
    c.expect(worst < 1e-4, "triangle quadrature mismatch " + num(worst));
    c.note("worst triangle gap " + num(worst));
    return c;
}

Checker criterion_3() {
    Checker c;
    for (double w : {0.5, 1.0, 2.0}) {
        RegularHorocyclicTriangle T = t_w(w);
        double measured = lassak_width(as_body(T.body())).width;
        c.expect(std::abs(measured - w) < 1e-5,
                 "w=" + num(w) + ": lassak " + num(measured));
        c.expect(std::abs(T.width - (T.inradius + T.circumradius)) < 1e-8,
                 "w=" + num(w) + ": width vs r+R");
        c.expect(std::abs(T.width - w) < 1e-8, "w=" + num(w) + ": bisection residual");
    }
    for (double w : {0.5, 1.0, 2.0}) {
        RegularHorocyclicTriangle T = t_w(w);
        CapDomain D = cap_domain(w, T.inradius);
        AreaEstimate vd = area_with_error(D.Delta);
        AreaEstimate vt = area_with_error(make_region(T.body().boundary));
        double gap = std::abs(6.0 * vd.value - vt.value);
        c.expect(gap < 1e-6 + 10.0 * (vd.error + vt.error),
                 "w=" + num(w) + ": 6 V(Delta(r)) vs V(T_w) gap " + num(gap));
    }
    return c;
}

Checker criterion_4() {
    Checker c;
    ExperimentReport rep = exp_nopal({0.2, 0.1, 0.05, 0.025});
    for (const auto& a : rep.assertions) c.expect(a.pass, a.name + " " + a.detail);
    double v_first = rep.rows.front()[4], v_last = rep.rows.back()[4];
    c.expect(v_last < 0.5 * v_first,
             "V(K_0.025)=" + num(v_last) + " vs half V(K_0.2)=" + num(0.5 * v_first));
    return c;
}

Checker criterion_5() {
    Checker c;
    ExperimentReport rep = exp_steinhagen(500, 8, 20240305);
    for (const auto& a : rep.assertions) c.expect(a.pass, a.name + " " + a.detail);
    double min_ratio = 1e18;
    for (const auto& row : rep.rows) min_ratio = std::min(min_ratio, row[4]);
    c.note("min ratio " + num(min_ratio) + ", rejected " + std::to_string(rep.rejected_draws));
    return c;
}

Checker criterion_6() {
    Checker c;
    ExperimentReport rep = exp_pal(500, 8, 20240306);
    for (const auto& a : rep.assertions) c.expect(a.pass, a.name + " " + a.detail);
    double min_ratio = 1e18;
    for (const auto& row : rep.rows) min_ratio = std::min(min_ratio, row[4]);
    c.note("min ratio " + num(min_ratio));

    // ball case margin beyond 3 sigma of the membership quadrature
    RegularHorocyclicTriangle T = t_w(1.0);
    MCArea ball = area_monte_carlo(disk_region(origin, 0.5), 1000000, 7);
    MCArea tri = area_monte_carlo(make_region(T.body().boundary), 1000000, 8);
    double margin = ball.value - tri.value;
    double sigma = std::sqrt(ball.sigma * ball.sigma + tri.sigma * tri.sigma);
    c.expect(margin > 3.0 * sigma,
             "ball-triangle margin " + num(margin) + " vs 3 sigma " + num(3.0 * sigma));
    c.note("margin " + num(margin) + " (3 sigma " + num(3.0 * sigma) + ")");
    return c;
}

Checker criterion_7() {
    Checker c;
    ExperimentReport rep = exp_monotone(1.0, 64);
    for (const auto& a : rep.assertions) c.expect(a.pass, a.name + " " + a.detail);
    return c;
}

Checker criterion_8() {
    Checker c;
    ExperimentReport rep = exp_stability(1.0, {0.005, 0.01, 0.02, 0.05, 0.1}, 20240308);
    for (const auto& a : rep.assertions) c.expect(a.pass, a.name + " " + a.detail);
    return c;
}

Checker criterion_9() {
    Checker c;
    double w = 1.0;
    RegularHorocyclicTriangle T = t_w(w);
    double r = T.inradius;
    double min_gap_ratio = 1e18, max_gap_ratio = -1e18;
    double min_alpha_ratio = 1e18, max_alpha_ratio = -1e18;
    for (int k = 1; k < 64; ++k) {
        double rho = r + (w / 2.0 - r) * k / 63.0;
        CapDomain D = cap_domain(w, rho);
        double gap = area(D.Gamma) - area(D.Delta);
        double ra = gap / (D.alpha * D.alpha);
        double rb = D.alpha / (rho - r);
        min_gap_ratio = std::min(min_gap_ratio, ra);
        max_gap_ratio = std::max(max_gap_ratio, ra);
        min_alpha_ratio = std::min(min_alpha_ratio, rb);
        max_alpha_ratio = std::max(max_alpha_ratio, rb);
    }
    c.expect(min_gap_ratio > 0.0, "V(Gamma minus Delta)/alpha^2 min " + num(min_gap_ratio));
    c.expect(min_alpha_ratio > 0.0, "alpha/(rho - r) min " + num(min_alpha_ratio));
    c.note("gap/alpha^2 in [" + num(min_gap_ratio) + ", " + num(max_gap_ratio) +
           "] (min/max " + num(min_gap_ratio / max_gap_ratio) + ")");
    c.note("alpha/(rho-r) in [" + num(min_alpha_ratio) + ", " + num(max_alpha_ratio) +
           "] (min/max " + num(min_alpha_ratio / max_alpha_ratio) + ")");
    return c;
}

Checker criterion_10() {
    Checker c;
    double worst_gap = 0.0, worst_inv = 0.0;
    int rejected = 0;
    std::mt19937_64 iso_rng(555);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        auto g = rng_for_trial(20240310, t);
        HConvexBody K = random_hconvex_body(g, 5 + t % 6, 1.5, rejected);
        BoundaryBody body = as_body(K);
        double w_o = lassak_width(body, WidthMethod::oracle).width;
        double w_r = lassak_width(body, WidthMethod::refine).width;
        if (w_r > w_o + 1e-12) {
            c.expect(false, "refine exceeded oracle at trial " + std::to_string(t));
        }
        worst_gap = std::max(worst_gap, w_o - w_r);

        // isometry invariance
        Isometry f = Isometry::translation_to(radial_point(0.9 * uni(iso_rng), 2 * M_PI * uni(iso_rng)))
                         .after(Isometry::rotation(2.0 * M_PI * uni(iso_rng)));
        BoundaryBody moved;
        for (const Arc& a : body.arcs) moved.arcs.push_back(transform(a, f));
        double w_m = lassak_width(moved, WidthMethod::refine).width;
        worst_inv = std::max(worst_inv, std::abs(w_m - w_r));
    }
    double res = 2.0 * (2.0 * M_PI / 720.0);
    c.expect(worst_gap <= res, "oracle-refine gap " + num(worst_gap) + " vs " + num(res));
    c.expect(worst_inv <= 1e-8, "isometry invariance gap " + num(worst_inv));
    c.note("max oracle-refine gap " + num(worst_gap) + ", max invariance gap " + num(worst_inv));
    return c;
}

struct Criterion {
    int id;
    const char* name;
    Checker (*run)();
    double budget_seconds;
};

const Criterion kCriteria[] = {
    {1, "metric kernel axioms and comparison bounds", criterion_1, 5.0},
    {2, "closed forms vs quadrature", criterion_2, 60.0},
    {3, "regular horocyclic triangle widths", criterion_3, 120.0},
    {4, "isominwidth failure family K_r", criterion_4, 120.0},
    {5, "Steinhagen analogue over random bodies", criterion_5, 600.0},
    {6, "Pal analogue over random bodies", criterion_6, 1200.0},
    {7, "cap-domain monotonicity grid", criterion_7, 600.0},
    {8, "stability families", criterion_8, 900.0},
    {9, "ratio bounds on the rho grid", criterion_9, 600.0},
    {10, "width oracle equivalence and invariance", criterion_10, 600.0},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    bool all_ok = true;
    for (const Criterion& cr : kCriteria) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), cr.id) == wanted.end())
            continue;
        auto start = std::chrono::steady_clock::now();
        Checker result;
        try {
            result = cr.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.budget_seconds) {
            result.ok = false;
            result.detail += (result.detail.empty() ? "" : "; ");
            result.detail += "runtime budget exceeded";
        }
        std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", result.ok ? "PASS" : "FAIL", cr.id,
                    cr.name, secs, result.detail.empty() ? "" : " -- ",
                    result.detail.c_str());
        std::fflush(stdout);
        if (!result.ok) all_ok = false;
    }
    return all_ok ? 0 : 1;
}
