#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jungmeb/geometry.hpp"

namespace jungmeb {

/// Terminal classification of a frontier support set. Restart is never a
/// terminal state; it tells the solver to re-enter the two-point phase.
enum class CaseTag { Diametral, GreatCircle, Tetrahedral, Restart };

const char* to_string(CaseTag tag);

/// Up to four frontier point indices, kept in discovery order.
class SupportSet {
public:
    void add(int index);
    int size() const { return size_; }
    int operator[](int k) const { return idx_[static_cast<std::size_t>(k)]; }
    std::span<const int> indices() const { return {idx_.data(), static_cast<std::size_t>(size_)}; }
    bool contains(int index) const;

private:
    std::array<int, 4> idx_{};
    int size_ = 0;
};

struct MebResult {
    Sphere sphere;
    SupportSet support;
    CaseTag terminal_case = CaseTag::Diametral;
    int restarts = 0;
    int steps = 0;
    bool converged = true;
    int drop_steps = 0;                 // stalled restarts resolved by dropping a support point
    std::vector<double> step_radii;     // radius after every accepted step
    std::vector<double> restart_radii;  // radius on entry to every accepted restart
};

struct ShrinkResult {
    Sphere sphere;
    std::optional<int> touched;
};

/// Largest shrink of `s` under the homothety centered at `anchor` that keeps
/// every point contained. Returns the index of a point newly on the frontier,
/// or nullopt when the anchor is the only point (radius collapses to zero).
ShrinkResult homothety_shrink(const Sphere& s, const Point3& anchor, const PointSet& ps,
                              const Tolerance& tol);

/// Moves the center from its current position straight toward the midpoint of
/// the frontier pair (a, b); the whole segment lies on their perpendicular
/// bisector plane, so the radius shrinks. Stops when a third point reaches the
/// frontier, else at the diametral sphere of the pair.
ShrinkResult bisector_shrink(const Sphere& s, const Point3& a, const Point3& b,
                             const PointSet& ps, const Tolerance& tol);

/// Moves the center along the axis of the frontier triple (a, b, c) — the
/// line through their circumcenter perpendicular to their plane — toward the
/// circumcenter. Stops when a fourth point reaches the frontier, else at the
/// sphere of the circumcircle. Throws DegenerateSupport for collinear triples.
ShrinkResult axis_shrink(const Sphere& s, const Point3& a, const Point3& b, const Point3& c,
                         const PointSet& ps, const Tolerance& tol);

/// Decides whether a frontier support is terminal. Size 2: diametral pair.
/// Size 3: the center lies in the triple's plane and inside the triangle.
/// Size 4: the center lies inside the tetrahedron. Anything else is Restart.
/// Throws InvalidSupport when a support point is off the frontier.
CaseTag classify_support(const Sphere& s, const SupportSet& support, const PointSet& ps,
                         const Tolerance& tol);

/// The support pair at maximal mutual distance (smallest index pair on ties).
std::pair<int, int> restart_pair(const SupportSet& support, const PointSet& ps);

/// Minimal enclosing sphere by shrink steps: homothety, two-point bisector
/// motion, three-point axis motion, then terminal classification, restarting
/// from the widest support pair until a terminal case holds.
MebResult solve(const PointSet& ps, const Tolerance& tol = Tolerance());

}  // namespace jungmeb
