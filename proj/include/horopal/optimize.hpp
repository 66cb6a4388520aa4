#pragma once

// Derivative-free 1-D and 2-D searches used by the width and incircle solvers.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace horopal {

struct ScalarMin {
    double x;
    double value;
};

// golden-section minimization of a unimodal function on [a, b]
template <typename F>
ScalarMin golden_min(F&& f, double a, double b, double xtol = 1e-12, int max_iter = 200) {
    const double gr = (1.0 + std::sqrt(5.0)) / 2.0;
    double c = b - (b - a) / gr;
    double d = a + (b - a) / gr;
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && std::abs(b - a) > xtol; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) / gr;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) / gr;
            fd = f(d);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

template <typename F>
ScalarMin golden_max(F&& f, double a, double b, double xtol = 1e-12, int max_iter = 200) {
    auto neg = [&f](double x) { return -f(x); };
    ScalarMin m = golden_min(neg, a, b, xtol, max_iter);
    return {m.x, -m.value};
}

// bisection on a sign change of f over [a, b]
template <typename F>
double bisect_root(F&& f, double a, double b, double xtol = 1e-13, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::domain_error("bisect_root: no sign change on the bracket");
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

struct Point2Min {
    double x, y;
    double value;
};

// Nelder-Mead maximization in 2-D (used by the incircle solver)
template <typename F>
Point2Min nelder_mead_max(F&& f, double x0, double y0, double step, double tol = 1e-11,
                          int max_iter = 500) {
    auto g = [&f](double x, double y) { return -f(x, y); };
    std::array<std::array<double, 2>, 3> v{{{x0, y0}, {x0 + step, y0}, {x0, y0 + step}}};
    std::array<double, 3> fv{g(v[0][0], v[0][1]), g(v[1][0], v[1][1]), g(v[2][0], v[2][1])};
    for (int iter = 0; iter < max_iter; ++iter) {
        // order: fv[lo] <= fv[mid] <= fv[hi]
        int lo = 0, hi = 0;
        for (int i = 1; i < 3; ++i) {
            if (fv[i] < fv[lo]) lo = i;
            if (fv[i] > fv[hi]) hi = i;
        }
        int mid = 3 - lo - hi;
        if (lo == hi) mid = (lo + 1) % 3;
        double spread = std::abs(fv[hi] - fv[lo]);
        double size = std::max(std::abs(v[hi][0] - v[lo][0]), std::abs(v[hi][1] - v[lo][1]));
        if (spread < tol && size < tol) break;

        double cx = 0.5 * (v[lo][0] + v[mid][0]);
        double cy = 0.5 * (v[lo][1] + v[mid][1]);
        double rx = cx + (cx - v[hi][0]);
        double ry = cy + (cy - v[hi][1]);
        double fr = g(rx, ry);
        if (fr < fv[lo]) {
            double ex = cx + 2.0 * (cx - v[hi][0]);
            double ey = cy + 2.0 * (cy - v[hi][1]);
            double fe = g(ex, ey);
            if (fe < fr) {
                v[hi] = {ex, ey};
                fv[hi] = fe;
            } else {
                v[hi] = {rx, ry};
                fv[hi] = fr;
            }
        } else if (fr < fv[mid]) {
            v[hi] = {rx, ry};
            fv[hi] = fr;
        } else {
            double kx = cx + 0.5 * (v[hi][0] - cx);
            double ky = cy + 0.5 * (v[hi][1] - cy);
            double fk = g(kx, ky);
            if (fk < fv[hi]) {
                v[hi] = {kx, ky};
                fv[hi] = fk;
            } else {
                for (int i = 0; i < 3; ++i) {
                    if (i == lo) continue;
                    v[i][0] = 0.5 * (v[i][0] + v[lo][0]);
                    v[i][1] = 0.5 * (v[i][1] + v[lo][1]);
                    fv[i] = g(v[i][0], v[i][1]);
                }
            }
        }
    }
    int lo = 0;
    for (int i = 1; i < 3; ++i)
        if (fv[i] < fv[lo]) lo = i;
    return {v[lo][0], v[lo][1], -fv[lo]};
}

}  // namespace horopal
