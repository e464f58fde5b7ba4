#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "jungmeb/errors.hpp"

namespace jungmeb {

/// A point (or displacement) in 3-space. Points stored in a PointSet always
/// have finite coordinates.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

using Point3 = Vec3;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator*(const Vec3& v, double s) { return s * v; }
inline Vec3 operator/(const Vec3& v, double s) { return {v.x / s, v.y / s, v.z / s}; }
inline bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm_squared(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm_squared(v)); }
inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}
inline Point3 midpoint(const Point3& a, const Point3& b) {
    return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y), 0.5 * (a.z + b.z)};
}

/// Euclidean distance; symmetric, nonnegative, zero only for equal points.
inline double distance(const Point3& p, const Point3& q) { return norm(p - q); }

struct Sphere {
    Point3 center;
    double radius = 0.0;
};

/// Single relative tolerance knob shared by every geometric predicate.
/// The band around a radius-r frontier is eps * max(1, r).
class Tolerance {
public:
    explicit Tolerance(double eps = 1e-9);
    double eps() const { return eps_; }
    double band(double radius) const { return eps_ * std::max(1.0, radius); }

private:
    double eps_;
};

/// Ordered input points with exact duplicates removed (first occurrence
/// kept). Each stored point remembers the index it had in the input.
class PointSet {
public:
    explicit PointSet(std::span<const Point3> points);
    explicit PointSet(const std::vector<Point3>& points)
        : PointSet(std::span<const Point3>(points)) {}

    int size() const { return static_cast<int>(points_.size()); }
    const Point3& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
    int original_index(int i) const { return index_map_[static_cast<std::size_t>(i)]; }
    std::span<const Point3> points() const { return points_; }

private:
    std::vector<Point3> points_;
    std::vector<int> index_map_;
};

struct DiameterResult {
    double value = 0.0;
    int first = 0;
    int second = 0;
};

/// Maximum pairwise distance and the lexicographically smallest pair
/// attaining it. A single point yields (0, (0, 0)).
DiameterResult diameter(const PointSet& ps);

/// Smallest sphere whose frontier holds all support points: the diametral
/// sphere for 2 points, the sphere of the circumcircle for 3, the unique
/// circumsphere for 4. Throws DegenerateSupport for a collinear triple or
/// a coplanar quadruple.
Sphere sphere_through(std::span<const Point3> support);

bool contains(const Sphere& s, const Point3& p, const Tolerance& tol);
bool on_frontier(const Sphere& s, const Point3& p, const Tolerance& tol);

struct InitialSphereResult {
    Sphere sphere;
    int anchor = 0;  // index of a farthest point; it starts on the frontier
};

/// Mean-centered enclosing sphere with radius equal to the largest
/// center-to-point distance, so the anchor lies on the frontier.
InitialSphereResult initial_sphere(const PointSet& ps);

}  // namespace jungmeb
