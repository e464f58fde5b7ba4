#include "jungmeb/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jungmeb {

namespace {

bool contains_all(const Sphere& s, const PointSet& ps, const Tolerance& tol) {
    for (int i = 0; i < ps.size(); ++i)
        if (!contains(s, ps.point(i), tol)) return false;
    return true;
}

}  // namespace

MebResult brute_force_meb(const PointSet& ps, const Tolerance& tol) {
    const int n = ps.size();
    if (n > kBruteForceLimit)
        throw TooManyPoints("brute_force_meb is limited to " + std::to_string(kBruteForceLimit) +
                            " points, got " + std::to_string(n));

    MebResult res;
    if (n == 1) {
        res.sphere = {ps.point(0), 0.0};
        res.support.add(0);
        res.terminal_case = CaseTag::Diametral;
        res.steps = 1;
        res.step_radii = {0.0};
        return res;
    }

    std::optional<Sphere> best;
    std::vector<int> best_support;

    auto consider = [&](const Sphere& cand, std::span<const int> idx) {
        if (best) {
            if (cand.radius > best->radius) return;
            if (cand.radius == best->radius &&
                !std::lexicographical_compare(idx.begin(), idx.end(), best_support.begin(),
                                              best_support.end()))
                return;
        }
        if (!contains_all(cand, ps, tol)) return;
        best = cand;
        best_support.assign(idx.begin(), idx.end());
    };

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::array idx{i, j};
            consider(sphere_through(std::array{ps.point(i), ps.point(j)}), idx);
        }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const std::array idx{i, j, k};
                try {
                    consider(sphere_through(std::array{ps.point(i), ps.point(j), ps.point(k)}),
                             idx);
                } catch (const DegenerateSupport&) {
                }
            }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const std::array idx{i, j, k, l};
                    try {
                        consider(sphere_through(std::array{ps.point(i), ps.point(j), ps.point(k),
                                                           ps.point(l)}),
                                 idx);
                    } catch (const DegenerateSupport&) {
                    }
                }

    if (!best) throw std::logic_error("brute_force_meb found no enclosing candidate");

    res.sphere = *best;
    for (int idx : best_support) res.support.add(idx);
    res.terminal_case = classify_support(res.sphere, res.support, ps, tol);
    res.steps = 1;
    res.step_radii = {best->radius};
    return res;
}

DiameterResult brute_force_diameter(const PointSet& ps) {
    DiameterResult out;
    const int n = ps.size();
    if (n == 1) return out;
    double best2 = -1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double dx = ps.point(i).x - ps.point(j).x;
            const double dy = ps.point(i).y - ps.point(j).y;
            const double dz = ps.point(i).z - ps.point(j).z;
            const double d2 = dx * dx + dy * dy + dz * dz;
            if (d2 > best2) {
                best2 = d2;
                out.first = i;
                out.second = j;
            }
        }
    out.value = std::sqrt(best2);
    return out;
}

}  // namespace jungmeb
