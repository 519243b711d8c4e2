#pragma once

#include <cmath>

namespace pursuit {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2& operator+=(Vec2 rhs) { x += rhs.x; y += rhs.y; return *this; }
    Vec2& operator-=(Vec2 rhs) { x -= rhs.x; y -= rhs.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
inline Vec2 operator*(double s, Vec2 a) { return a * s; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline double dist2(Vec2 a, Vec2 b) { return norm2(a - b); }

/// Counter-clockwise rotation by `theta` radians.
inline Vec2 rotate(Vec2 v, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Angle of `v` measured from the positive x axis, in (-pi, pi].
inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

/// Reduce a phase to [0, 1).
inline double wrap_phase(double t) {
    double w = t - std::floor(t);
    return w < 1.0 ? w : 0.0;
}

/// Reduce an angle to [0, 2*pi).
inline double wrap_angle(double a) {
    double w = a - kTwoPi * std::floor(a / kTwoPi);
    return w < kTwoPi ? w : 0.0;
}

}  // namespace pursuit
