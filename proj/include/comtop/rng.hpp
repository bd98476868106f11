#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "comtop/linalg.hpp"

namespace comtop {

// Deterministic sampling engine. mt19937_64 is fully specified by the
// standard and the transforms below (53-bit uniform, Box-Muller) are our own,
// so a given seed reproduces the same stream on any platform. Distribution
// classes from <random> are deliberately avoided: their output is
// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, r2;
        do {
            u = uniform01();
            r2 = uniform01();
        } while (u <= 0.0);
        double mag = std::sqrt(-2.0 * std::log(u));
        double ang = 2.0 * M_PI * r2;
        spare_ = mag * std::sin(ang);
        have_spare_ = true;
        return mag * std::cos(ang);
    }

    Vec3 gaussian_vec3() { return {gaussian(), gaussian(), gaussian()}; }

    Vec3 unit_vec3() {
        for (;;) {
            Vec3 v = gaussian_vec3();
            double n = norm(v);
            if (n > 1e-6) return {v.x / n, v.y / n, v.z / n};
        }
    }

    // orthonormal pair via Gram-Schmidt; retries on near-degenerate draws
    void frame(Vec3& v1, Vec3& v2) {
        for (;;) {
            v1 = unit_vec3();
            Vec3 w = gaussian_vec3();
            Vec3 u = w - dot(w, v1) * v1;
            double n = norm(u);
            if (n > 1e-6) {
                v2 = {u.x / n, u.y / n, u.z / n};
                return;
            }
        }
    }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace comtop
