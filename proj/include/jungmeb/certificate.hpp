#pragma once

#include "jungmeb/geometry.hpp"

namespace jungmeb {

/// Affine-hull class of a point set; picks the tightest applicable bound.
enum class DimensionClass { Collinear, Coplanar, Full3D };

const char* to_string(DimensionClass d);

/// Coefficient of the radius bound r <= coefficient * diameter:
/// 1/2 for collinear sets, 1/sqrt(3) for coplanar, sqrt(6)/4 in full 3D.
double bound_coefficient(DimensionClass d);

/// Checkable record that a sphere covers a point set and respects both the
/// upper radius bound for the set's dimension class and the trivial lower
/// bound 2r >= diameter.
struct JungCertificate {
    double diameter = 0.0;  // a, the maximal pairwise distance
    double radius = 0.0;    // r, the certified sphere's radius
    double ratio = 0.0;     // r / a; NaN when a == 0
    DimensionClass dimension_class = DimensionClass::Full3D;
    double bound = 0.0;   // applicable coefficient on a
    double margin = 0.0;  // bound * a - r
    bool pass = false;
};

/// Builds the certificate for (points, sphere). The diameter comes from the
/// independent brute-force scan. Throws NotEnclosing when some point lies
/// outside the sphere beyond tolerance.
JungCertificate make_certificate(const PointSet& ps, const Sphere& s, const Tolerance& tol);

}  // namespace jungmeb
