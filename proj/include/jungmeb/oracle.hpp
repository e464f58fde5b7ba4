#pragma once

#include "jungmeb/geometry.hpp"
#include "jungmeb/solver.hpp"

namespace jungmeb {

/// Brute-force enumeration is a test instrument; refuse inputs above this.
inline constexpr int kBruteForceLimit = 512;

/// Ground-truth minimal enclosing sphere by exhaustive enumeration of all
/// 2-, 3-, and 4-point supports (degenerate subsets skipped). Throws
/// TooManyPoints above the guard.
MebResult brute_force_meb(const PointSet& ps, const Tolerance& tol);

/// Same contract as diameter(), re-implemented independently so certificate
/// checks do not trust solver-side code.
DiameterResult brute_force_diameter(const PointSet& ps);

}  // namespace jungmeb
