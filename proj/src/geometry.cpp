#include "jungmeb/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace jungmeb {

namespace {

// Degeneracy thresholds use the library's default relative tolerance; the
// tests are scale-invariant (area against edge^4, determinant against edge^3).
constexpr double kDegenerateEps = 1e-9;

std::uint64_t coord_bits(double v) {
    v += 0.0;  // collapse -0 onto +0 so the hash agrees with operator==
    std::uint64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
}

struct PointKey {
    std::uint64_t x, y, z;
    bool operator==(const PointKey&) const = default;
};

struct PointKeyHash {
    std::size_t operator()(const PointKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t v : {k.x, k.y, k.z}) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ull;
        }
        return static_cast<std::size_t>(h);
    }
};

template <std::size_t N>
double max_edge_squared(const std::array<Point3, N>& pts) {
    double best = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            best = std::max(best, norm_squared(pts[i] - pts[j]));
    return best;
}

Sphere diametral_sphere(const Point3& a, const Point3& b) {
    return {midpoint(a, b), 0.5 * distance(a, b)};
}

// Circumcenter of a triangle, expressed relative to the first vertex so the
// result does not lose precision for triangles far from the origin.
Point3 circumcenter(const Point3& a, const Point3& b, const Point3& c) {
    const Vec3 ab = b - a;
    const Vec3 ac = c - a;
    const Vec3 n = cross(ab, ac);
    const double n2 = norm_squared(n);
    const double l2 = max_edge_squared(std::array{a, b, c});
    // squared area = n2 / 4; collinear once it vanishes against (longest edge)^4
    if (n2 < 4.0 * kDegenerateEps * kDegenerateEps * l2 * l2)
        throw DegenerateSupport("collinear support triple");
    const Vec3 off =
        (norm_squared(ac) * cross(n, ab) + norm_squared(ab) * cross(ac, n)) / (2.0 * n2);
    return a + off;
}

// Circumcenter of a tetrahedron. Subtracting the first equidistance equation
// from the other three gives a 3x3 linear system in the offset from vertex a;
// the pivot product doubles as the coplanarity test.
Point3 circumcenter(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    const std::array<Vec3, 3> e{b - a, c - a, d - a};
    double m[3][4];
    for (int i = 0; i < 3; ++i) {
        m[i][0] = e[static_cast<std::size_t>(i)].x;
        m[i][1] = e[static_cast<std::size_t>(i)].y;
        m[i][2] = e[static_cast<std::size_t>(i)].z;
        m[i][3] = 0.5 * norm_squared(e[static_cast<std::size_t>(i)]);
    }

    double det = 1.0;
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (pivot != col) {
            for (int k = 0; k < 4; ++k) std::swap(m[pivot][k], m[col][k]);
            det = -det;
        }
        det *= m[col][col];
        if (m[col][col] == 0.0) break;
        for (int r = col + 1; r < 3; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
        }
    }

    const double l2 = max_edge_squared(std::array{a, b, c, d});
    if (std::abs(det) < kDegenerateEps * l2 * std::sqrt(l2))
        throw DegenerateSupport("coplanar support quadruple");

    double y[3];
    for (int r = 2; r >= 0; --r) {
        double v = m[r][3];
        for (int k = r + 1; k < 3; ++k) v -= m[r][k] * y[k];
        y[r] = v / m[r][r];
    }
    return a + Vec3{y[0], y[1], y[2]};
}

double max_distance(const Point3& center, std::span<const Point3> pts) {
    double best = 0.0;
    for (const Point3& p : pts) best = std::max(best, distance(center, p));
    return best;
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0) || !(eps < 1e-3))
        throw std::invalid_argument("Tolerance eps must lie in (0, 1e-3), got " +
                                    std::to_string(eps));
}

PointSet::PointSet(std::span<const Point3> points) {
    if (points.empty()) throw EmptyInput("point set is empty");
    points_.reserve(points.size());
    index_map_.reserve(points.size());
    std::unordered_set<PointKey, PointKeyHash> seen;
    seen.reserve(points.size() * 2);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point3& p = points[i];
        if (!is_finite(p))
            throw NonFiniteCoordinate("non-finite coordinate at point " + std::to_string(i));
        if (seen.insert({coord_bits(p.x), coord_bits(p.y), coord_bits(p.z)}).second) {
            points_.push_back(p);
            index_map_.push_back(static_cast<int>(i));
        }
    }
}

DiameterResult diameter(const PointSet& ps) {
    DiameterResult out;
    const int n = ps.size();
    if (n == 1) return out;
    double best2 = -1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d2 = norm_squared(ps.point(i) - ps.point(j));
            if (d2 > best2) {
                best2 = d2;
                out.first = i;
                out.second = j;
            }
        }
    out.value = std::sqrt(best2);
    return out;
}

Sphere sphere_through(std::span<const Point3> support) {
    switch (support.size()) {
        case 2:
            return diametral_sphere(support[0], support[1]);
        case 3: {
            const Point3 c = circumcenter(support[0], support[1], support[2]);
            return {c, max_distance(c, support)};
        }
        case 4: {
            const Point3 c = circumcenter(support[0], support[1], support[2], support[3]);
            return {c, max_distance(c, support)};
        }
        default:
            throw std::invalid_argument("sphere_through needs 2, 3, or 4 support points, got " +
                                        std::to_string(support.size()));
    }
}

bool contains(const Sphere& s, const Point3& p, const Tolerance& tol) {
    return distance(s.center, p) <= s.radius * (1.0 + tol.eps()) + tol.band(s.radius);
}

bool on_frontier(const Sphere& s, const Point3& p, const Tolerance& tol) {
    return std::abs(distance(s.center, p) - s.radius) <= tol.band(s.radius);
}

InitialSphereResult initial_sphere(const PointSet& ps) {
    const int n = ps.size();
    Vec3 sum;
    for (const Point3& p : ps.points()) sum = sum + p;
    const Point3 center = sum / static_cast<double>(n);

    int anchor = 0;
    double best2 = -1.0;
    for (int i = 0; i < n; ++i) {
        const double d2 = norm_squared(ps.point(i) - center);
        if (d2 > best2) {
            best2 = d2;
            anchor = i;
        }
    }
    return {{center, std::sqrt(best2)}, anchor};
}

}  // namespace jungmeb
