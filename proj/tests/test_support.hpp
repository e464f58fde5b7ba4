#pragma once

#include <cstdint>
#include <random>

#include "jungmeb/geometry.hpp"

namespace testutil {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : rng_(seed) {}
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

struct Rotation {
    double m[3][3];
    jungmeb::Point3 apply(const jungmeb::Point3& p) const {
        return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
                m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
                m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
    }
};

inline Rotation random_rotation(Rng& rng) {
    double w, x, y, z, n2;
    do {
        w = rng.uniform(-1.0, 1.0);
        x = rng.uniform(-1.0, 1.0);
        y = rng.uniform(-1.0, 1.0);
        z = rng.uniform(-1.0, 1.0);
        n2 = w * w + x * x + y * y + z * z;
    } while (n2 < 0.01 || n2 > 1.0);
    const double s = 1.0 / std::sqrt(n2);
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    Rotation r;
    r.m[0][0] = 1 - 2 * (y * y + z * z);
    r.m[0][1] = 2 * (x * y - w * z);
    r.m[0][2] = 2 * (x * z + w * y);
    r.m[1][0] = 2 * (x * y + w * z);
    r.m[1][1] = 1 - 2 * (x * x + z * z);
    r.m[1][2] = 2 * (y * z - w * x);
    r.m[2][0] = 2 * (x * z - w * y);
    r.m[2][1] = 2 * (y * z + w * x);
    r.m[2][2] = 1 - 2 * (x * x + y * y);
    return r;
}

}  // namespace testutil
