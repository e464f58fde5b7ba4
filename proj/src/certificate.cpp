#include "jungmeb/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jungmeb/oracle.hpp"

namespace jungmeb {

namespace {

// Affine-hull classification with the same scale-invariant degeneracy tests
// the sphere constructions use, taking the set diameter as the length scale.
DimensionClass classify_dimension(const PointSet& ps, double diam, const Tolerance& tol) {
    const int n = ps.size();
    const Point3& p0 = ps.point(0);

    int i1 = 0;
    double best2 = -1.0;
    for (int i = 0; i < n; ++i) {
        const double d2 = norm_squared(ps.point(i) - p0);
        if (d2 > best2) {
            best2 = d2;
            i1 = i;
        }
    }
    const Vec3 e1 = ps.point(i1) - p0;

    int i2 = 0;
    double bestc2 = -1.0;
    for (int i = 0; i < n; ++i) {
        const double c2 = norm_squared(cross(e1, ps.point(i) - p0));
        if (c2 > bestc2) {
            bestc2 = c2;
            i2 = i;
        }
    }
    // squared area of the widest triangle = bestc2 / 4
    const double diam2 = diam * diam;
    if (bestc2 < 4.0 * tol.eps() * tol.eps() * diam2 * diam2) return DimensionClass::Collinear;

    const Vec3 nrm = cross(e1, ps.point(i2) - p0);
    const double plane_tol = tol.eps() * diam2 * diam;  // |det| test against eps * diameter^3
    for (int i = 0; i < n; ++i)
        if (std::abs(dot(nrm, ps.point(i) - p0)) >= plane_tol) return DimensionClass::Full3D;
    return DimensionClass::Coplanar;
}

}  // namespace

const char* to_string(DimensionClass d) {
    switch (d) {
        case DimensionClass::Collinear: return "Collinear";
        case DimensionClass::Coplanar: return "Coplanar";
        case DimensionClass::Full3D: return "Full3D";
    }
    return "?";
}

double bound_coefficient(DimensionClass d) {
    switch (d) {
        case DimensionClass::Collinear: return 0.5;
        case DimensionClass::Coplanar: return 1.0 / std::sqrt(3.0);
        case DimensionClass::Full3D: return std::sqrt(6.0) / 4.0;
    }
    return 0.0;
}

JungCertificate make_certificate(const PointSet& ps, const Sphere& s, const Tolerance& tol) {
    for (int i = 0; i < ps.size(); ++i)
        if (!contains(s, ps.point(i), tol))
            throw NotEnclosing("point " + std::to_string(i) + " lies outside the sphere (" +
                               std::to_string(distance(s.center, ps.point(i))) + " > radius " +
                               std::to_string(s.radius) + ")");

    JungCertificate cert;
    cert.diameter = brute_force_diameter(ps).value;
    cert.radius = s.radius;

    if (cert.diameter == 0.0) {
        // all points coincide; containment with a tiny radius is the only claim
        cert.dimension_class = DimensionClass::Collinear;
        cert.bound = bound_coefficient(cert.dimension_class);
        cert.ratio = std::numeric_limits<double>::quiet_NaN();
        cert.margin = -s.radius;
        cert.pass = s.radius <= tol.eps();
        return cert;
    }

    cert.dimension_class = classify_dimension(ps, cert.diameter, tol);
    cert.bound = bound_coefficient(cert.dimension_class);
    cert.ratio = cert.radius / cert.diameter;
    cert.margin = cert.bound * cert.diameter - cert.radius;
    cert.pass = cert.radius <= cert.bound * cert.diameter * (1.0 + tol.eps()) &&
                2.0 * cert.radius >= cert.diameter * (1.0 - tol.eps());
    return cert;
}

}  // namespace jungmeb
