#pragma once

#include <cmath>
#include <stdexcept>

namespace horopal {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 b) const { return {x + b.x, y + b.y}; }
    Vec2 operator-(Vec2 b) const { return {x - b.x, y - b.y}; }
    Vec2 operator*(double a) const { return {x * a, y * a}; }
    Vec2 operator/(double a) const { return {x / a, y / a}; }
    Vec2 operator-() const { return {-x, -y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm_sq(a)); }
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

inline Vec2 normalized(Vec2 a) {
    double n = norm(a);
    if (n == 0.0) throw std::domain_error("normalized: zero vector");
    return a / n;
}

inline Vec2 unit_dir(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline double clamp1(double t) { return t < -1.0 ? -1.0 : (t > 1.0 ? 1.0 : t); }

// smallest absolute representative of an angle difference, in (-pi, pi]
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a <= -M_PI) a += 2.0 * M_PI;
    if (a > M_PI) a -= 2.0 * M_PI;
    return a;
}

// wrap into [0, 2*pi)
inline double wrap_positive(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    return a;
}

}  // namespace horopal
