#include "jungmeb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "jungmeb/oracle.hpp"

namespace jungmeb {

namespace {

// Restarts must shrink the radius by at least this relative amount to count
// as progress; anything less is treated as a stall.
constexpr double kRestartDecrease = 1e-12;

constexpr double kDegenerateEps = 1e-9;

// Travel fraction t in [0, 1] at which `p` reaches the frontier of the moving
// sphere with center c0 + t*dir and radius measured to `anchor`. The
// difference |p - c(t)|^2 - |anchor - c(t)|^2 is linear in t, so there is one
// root; nullopt when the motion only pushes p deeper inside, or the root lies
// beyond the end of the segment.
std::optional<double> touch_time(const Point3& c0, const Vec3& dir, const Point3& anchor,
                                 const Point3& p) {
    const Vec3 w = p - anchor;
    const double denom = dot(w, dir);
    if (denom >= 0.0) return std::nullopt;
    const double num = dot(w, midpoint(p, anchor) - c0);  // = f(0)/2, <= 0 for contained p
    const double t = num / denom;
    if (t > 1.0) return std::nullopt;
    return std::max(t, 0.0);  // negative only for frontier-band noise
}

struct Bary3 {
    double u = 0.0, v = 0.0, w = 0.0;
    bool ok = false;
};

Bary3 barycentric(const Point3& a, const Point3& b, const Point3& c, const Point3& x) {
    Bary3 out;
    const Vec3 e1 = b - a;
    const Vec3 e2 = c - a;
    const Vec3 r = x - a;
    const double d11 = dot(e1, e1);
    const double d12 = dot(e1, e2);
    const double d22 = dot(e2, e2);
    const double det = d11 * d22 - d12 * d12;  // = 4 * squared triangle area
    const double l2 = std::max({d11, d22, norm_squared(e2 - e1)});
    if (det < 4.0 * kDegenerateEps * kDegenerateEps * l2 * l2) return out;
    const double r1 = dot(r, e1);
    const double r2 = dot(r, e2);
    out.v = (d22 * r1 - d12 * r2) / det;
    out.w = (d11 * r2 - d12 * r1) / det;
    out.u = 1.0 - out.v - out.w;
    out.ok = true;
    return out;
}

struct Bary4 {
    std::array<double, 4> l{};
    bool ok = false;
};

Bary4 barycentric(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
                  const Point3& x) {
    Bary4 out;
    const std::array<Vec3, 3> e{b - a, c - a, d - a};
    const Vec3 r = x - a;
    double m[3][4] = {{e[0].x, e[1].x, e[2].x, r.x},
                      {e[0].y, e[1].y, e[2].y, r.y},
                      {e[0].z, e[1].z, e[2].z, r.z}};

    double det = 1.0;
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        if (pivot != col) {
            for (int k = 0; k < 4; ++k) std::swap(m[pivot][k], m[col][k]);
            det = -det;
        }
        det *= m[col][col];
        if (m[col][col] == 0.0) break;
        for (int row = col + 1; row < 3; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
        }
    }

    double l2 = 0.0;
    for (const Vec3& v : e) l2 = std::max(l2, norm_squared(v));
    l2 = std::max({l2, norm_squared(e[1] - e[0]), norm_squared(e[2] - e[0]),
                   norm_squared(e[2] - e[1])});
    if (std::abs(det) < kDegenerateEps * l2 * std::sqrt(l2)) return out;

    double y[3];
    for (int row = 2; row >= 0; --row) {
        double v = m[row][3];
        for (int k = row + 1; k < 3; ++k) v -= m[row][k] * y[k];
        y[row] = v / m[row][row];
    }
    out.l = {1.0 - y[0] - y[1] - y[2], y[0], y[1], y[2]};
    out.ok = true;
    return out;
}

bool contains_all(const Sphere& s, const PointSet& ps, const Tolerance& tol) {
    for (int i = 0; i < ps.size(); ++i)
        if (!contains(s, ps.point(i), tol)) return false;
    return true;
}

// For a coplanar (cocircular) support quadruple: the index triple whose
// triangle covers the center, if any.
std::optional<std::array<int, 3>> covering_subtriangle(const Sphere& s, const SupportSet& supp,
                                                       const PointSet& ps, const Tolerance& tol) {
    for (int skip = 0; skip < supp.size(); ++skip) {
        std::array<int, 3> tri{};
        int k = 0;
        for (int j = 0; j < supp.size(); ++j)
            if (j != skip) tri[static_cast<std::size_t>(k++)] = supp[j];
        const Bary3 bc =
            barycentric(ps.point(tri[0]), ps.point(tri[1]), ps.point(tri[2]), s.center);
        if (bc.ok && std::min({bc.u, bc.v, bc.w}) >= -tol.eps()) return tri;
    }
    return std::nullopt;
}

// Barycentric position of the center in the support tetrahedron; the support
// position with the most negative coordinate, when one exists.
std::optional<int> most_negative_vertex(const Sphere& s, const SupportSet& supp,
                                        const PointSet& ps) {
    const Bary4 bc = barycentric(ps.point(supp[0]), ps.point(supp[1]), ps.point(supp[2]),
                                 ps.point(supp[3]), s.center);
    if (!bc.ok) return std::nullopt;
    int worst = 0;
    for (int j = 1; j < 4; ++j)
        if (bc.l[static_cast<std::size_t>(j)] < bc.l[static_cast<std::size_t>(worst)]) worst = j;
    if (bc.l[static_cast<std::size_t>(worst)] >= 0.0) return std::nullopt;
    return worst;
}

// Final result assembly. Re-solving the sphere from its support points alone
// removes the rounding the center picked up along the shrink path; keep the
// path sphere if the snapped one no longer covers everything.
MebResult finish(MebResult res, Sphere s, const SupportSet& supp, CaseTag tag,
                 const PointSet& ps, const Tolerance& tol) {
    if (supp.size() >= 2) {
        std::vector<Point3> pts;
        pts.reserve(static_cast<std::size_t>(supp.size()));
        for (int idx : supp.indices()) pts.push_back(ps.point(idx));
        try {
            const Sphere snapped = sphere_through(pts);
            if (contains_all(snapped, ps, tol)) s = snapped;
        } catch (const DegenerateSupport&) {
        }
    }
    res.sphere = s;
    res.support = supp;
    res.terminal_case = tag;
    return res;
}

}  // namespace

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Diametral: return "Diametral";
        case CaseTag::GreatCircle: return "GreatCircle";
        case CaseTag::Tetrahedral: return "Tetrahedral";
        case CaseTag::Restart: return "Restart";
    }
    return "?";
}

void SupportSet::add(int index) {
    if (size_ == 4 || contains(index)) throw std::logic_error("support set misuse");
    idx_[static_cast<std::size_t>(size_++)] = index;
}

bool SupportSet::contains(int index) const {
    for (int j = 0; j < size_; ++j)
        if (idx_[static_cast<std::size_t>(j)] == index) return true;
    return false;
}

ShrinkResult homothety_shrink(const Sphere& s, const Point3& anchor, const PointSet& ps,
                              const Tolerance&) {
    const Vec3 v = s.center - anchor;
    // a ~ 0 because the anchor sits on the frontier; keep the quadratic form
    // and take its stable root anyway.
    const double a = norm_squared(v) - s.radius * s.radius;

    double best_k = 0.0;
    std::optional<int> touched;
    for (int i = 0; i < ps.size(); ++i) {
        const Vec3 u = ps.point(i) - anchor;
        const double c = norm_squared(u);
        if (c == 0.0) continue;  // the anchor itself
        const double b = -2.0 * dot(u, v);
        const double disc = std::max(b * b - 4.0 * a * c, 0.0);
        const double q = -b + std::sqrt(disc);  // -b = 2 u.v > 0 for contained points
        const double k = q > 0.0 ? std::min(2.0 * c / q, 1.0) : 1.0;
        if (k > best_k) {
            best_k = k;
            touched = i;
        }
    }

    if (!touched) return {Sphere{anchor, 0.0}, std::nullopt};
    return {Sphere{anchor + best_k * v, best_k * s.radius}, touched};
}

ShrinkResult bisector_shrink(const Sphere& s, const Point3& a, const Point3& b,
                             const PointSet& ps, const Tolerance&) {
    const Point3 mid = midpoint(a, b);
    const Vec3 dir = mid - s.center;

    double best_t = std::numeric_limits<double>::infinity();
    std::optional<int> touched;
    for (int i = 0; i < ps.size(); ++i) {
        const Point3& p = ps.point(i);
        if (p == a || p == b) continue;
        if (const auto t = touch_time(s.center, dir, a, p); t && *t < best_t) {
            best_t = *t;
            touched = i;
        }
    }

    if (!touched) return {Sphere{mid, 0.5 * distance(a, b)}, std::nullopt};
    const Point3 c = s.center + best_t * dir;
    return {Sphere{c, distance(c, a)}, touched};
}

ShrinkResult axis_shrink(const Sphere& s, const Point3& a, const Point3& b, const Point3& c,
                         const PointSet& ps, const Tolerance&) {
    const Sphere circ = sphere_through(std::array{a, b, c});  // center = circumcenter
    const Vec3 dir = circ.center - s.center;

    double best_t = std::numeric_limits<double>::infinity();
    std::optional<int> touched;
    for (int i = 0; i < ps.size(); ++i) {
        const Point3& p = ps.point(i);
        if (p == a || p == b || p == c) continue;
        if (const auto t = touch_time(s.center, dir, a, p); t && *t < best_t) {
            best_t = *t;
            touched = i;
        }
    }

    if (!touched) return {circ, std::nullopt};
    const Point3 ctr = s.center + best_t * dir;
    return {Sphere{ctr, distance(ctr, a)}, touched};
}

CaseTag classify_support(const Sphere& s, const SupportSet& support, const PointSet& ps,
                         const Tolerance& tol) {
    if (support.size() < 2 || support.size() > 4)
        throw std::invalid_argument("classify_support needs a support of 2 to 4 points");
    for (int idx : support.indices())
        if (!on_frontier(s, ps.point(idx), tol))
            throw InvalidSupport("support point " + std::to_string(idx) +
                                 " is not on the frontier");

    if (support.size() == 2) {
        const double gap =
            std::abs(distance(ps.point(support[0]), ps.point(support[1])) - 2.0 * s.radius);
        return gap <= tol.eps() * std::max(1.0, 2.0 * s.radius) ? CaseTag::Diametral
                                                                : CaseTag::Restart;
    }

    if (support.size() == 3) {
        const Point3& a = ps.point(support[0]);
        const Point3& b = ps.point(support[1]);
        const Point3& c = ps.point(support[2]);
        const Vec3 n = cross(b - a, c - a);
        const double n1 = norm(n);
        if (n1 == 0.0) return CaseTag::Restart;
        if (std::abs(dot(s.center - a, n)) / n1 > tol.band(s.radius)) return CaseTag::Restart;
        const Bary3 bc = barycentric(a, b, c, s.center);
        if (!bc.ok) return CaseTag::Restart;
        return std::min({bc.u, bc.v, bc.w}) >= -tol.eps() ? CaseTag::GreatCircle
                                                          : CaseTag::Restart;
    }

    const Bary4 bc = barycentric(ps.point(support[0]), ps.point(support[1]),
                                 ps.point(support[2]), ps.point(support[3]), s.center);
    if (!bc.ok) {
        // Coplanar (cocircular) support: answer with the planar test instead.
        const Point3& a = ps.point(support[0]);
        const Vec3 n = cross(ps.point(support[1]) - a, ps.point(support[2]) - a);
        const double n1 = norm(n);
        if (n1 > 0.0 && std::abs(dot(s.center - a, n)) / n1 <= tol.band(s.radius) &&
            covering_subtriangle(s, support, ps, tol))
            return CaseTag::GreatCircle;
        return CaseTag::Restart;
    }
    return *std::min_element(bc.l.begin(), bc.l.end()) >= -tol.eps() ? CaseTag::Tetrahedral
                                                                     : CaseTag::Restart;
}

std::pair<int, int> restart_pair(const SupportSet& support, const PointSet& ps) {
    if (support.size() < 2) throw std::invalid_argument("restart_pair needs at least 2 points");
    double best2 = -1.0;
    std::pair<int, int> best{0, 0};
    for (int a = 0; a < support.size(); ++a)
        for (int b = a + 1; b < support.size(); ++b) {
            std::pair<int, int> pair{std::min(support[a], support[b]),
                                     std::max(support[a], support[b])};
            const double d2 = norm_squared(ps.point(pair.first) - ps.point(pair.second));
            if (d2 > best2 || (d2 == best2 && pair < best)) {
                best2 = d2;
                best = pair;
            }
        }
    return best;
}

MebResult solve(const PointSet& ps, const Tolerance& tol) {
    MebResult res;
    const int n = ps.size();

    auto record = [&res](const Sphere& s) {
        res.steps += 1;
        res.step_radii.push_back(s.radius);
    };

    if (n == 1) {
        const Sphere s{ps.point(0), 0.0};
        record(s);
        res.sphere = s;
        res.support.add(0);
        res.terminal_case = CaseTag::Diametral;
        return res;
    }

    const auto init = initial_sphere(ps);
    Sphere s = init.sphere;
    record(s);

    const auto first = homothety_shrink(s, ps.point(init.anchor), ps, tol);
    s = first.sphere;
    record(s);

    int pa = init.anchor;
    int pb = *first.touched;  // n >= 2 guarantees a second frontier point

    const int restart_cap = 4 * n;
    double last_restart_radius = std::numeric_limits<double>::infinity();
    bool dropped_since_restart = false;
    std::optional<std::array<int, 3>> axis_entry;

    auto fallback = [&](const Sphere& best, const SupportSet& supp) -> MebResult {
        res.converged = false;
        if (n <= kBruteForceLimit) {
            const MebResult oracle = brute_force_meb(ps, tol);
            res.sphere = oracle.sphere;
            res.support = oracle.support;
            res.terminal_case = oracle.terminal_case;
        } else {
            res.sphere = best;
            res.support = supp;
            res.terminal_case = CaseTag::Restart;
        }
        return res;
    };

    while (true) {
        std::array<int, 3> tri{};
        if (axis_entry) {
            tri = *axis_entry;
            axis_entry.reset();
        } else {
            const auto bis = bisector_shrink(s, ps.point(pa), ps.point(pb), ps, tol);
            s = bis.sphere;
            record(s);
            if (!bis.touched) {
                SupportSet supp;
                supp.add(pa);
                supp.add(pb);
                return finish(std::move(res), s, supp, classify_support(s, supp, ps, tol), ps,
                              tol);
            }
            tri = {pa, pb, *bis.touched};
        }

        ShrinkResult ax;
        try {
            ax = axis_shrink(s, ps.point(tri[0]), ps.point(tri[1]), ps.point(tri[2]), ps, tol);
        } catch (const DegenerateSupport&) {
            // collinear frontier triple: retreat to its extreme pair
            SupportSet supp;
            for (int idx : tri) supp.add(idx);
            std::tie(pa, pb) = restart_pair(supp, ps);
            res.restarts += 1;
            if (res.restarts > restart_cap) return fallback(s, supp);
            continue;
        }
        s = ax.sphere;
        record(s);

        SupportSet supp;
        for (int idx : tri) supp.add(idx);
        if (ax.touched) supp.add(*ax.touched);

        const CaseTag tag = classify_support(s, supp, ps, tol);

        if (tag == CaseTag::GreatCircle && supp.size() == 4) {
            // cocircular quadruple: report the triangle that pins the center
            if (const auto cover = covering_subtriangle(s, supp, ps, tol)) {
                SupportSet named;
                for (int idx : *cover) named.add(idx);
                supp = named;
            }
        }
        if (tag != CaseTag::Restart) return finish(std::move(res), s, supp, tag, ps, tol);

        const bool progressed = s.radius < last_restart_radius * (1.0 - kRestartDecrease);
        if (!progressed) {
            // The widest-pair rule stalled: the dropped frontier points block
            // every move at travel time zero. Drop the support point whose
            // barycentric coordinate is most negative; the axis motion of the
            // remaining triple shrinks strictly and cannot re-expel it.
            std::optional<int> worst;
            if (supp.size() == 4 && !dropped_since_restart)
                worst = most_negative_vertex(s, supp, ps);
            if (!worst) return fallback(s, supp);
            dropped_since_restart = true;
            res.drop_steps += 1;
            std::array<int, 3> keep{};
            int k = 0;
            for (int j = 0; j < supp.size(); ++j)
                if (j != *worst) keep[static_cast<std::size_t>(k++)] = supp[j];
            axis_entry = keep;
            continue;
        }

        dropped_since_restart = false;
        last_restart_radius = s.radius;
        res.restart_radii.push_back(s.radius);
        res.restarts += 1;
        if (res.restarts > restart_cap) return fallback(s, supp);

        const auto [ia, ib] = restart_pair(supp, ps);
        const Sphere diametral = sphere_through(std::array{ps.point(ia), ps.point(ib)});
        if (contains_all(diametral, ps, tol)) {
            s = diametral;
            record(s);
            SupportSet pair_supp;
            pair_supp.add(ia);
            pair_supp.add(ib);
            return finish(std::move(res), s, pair_supp, CaseTag::Diametral, ps, tol);
        }
        pa = ia;
        pb = ib;
    }
}

}  // namespace jungmeb
