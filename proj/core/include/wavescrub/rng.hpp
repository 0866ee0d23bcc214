#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace wavescrub {

/// Seeded standard-normal stream with a pinned algorithm, so the same
/// seed yields the same samples on every platform and release:
/// mt19937_64 (standard-mandated sequence) mapped to uniforms by
/// u1 = (x >> 11 + 1) * 2^-53 in (0,1], u2 = (x >> 11) * 2^-53 in [0,1),
/// then the Box-Muller transform. std::normal_distribution is avoided
/// on purpose: its algorithm is implementation-defined.
class GaussianStream {
public:
    static constexpr const char* kAlgorithm = "mt19937_64/box-muller/1";

    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = ((rng_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = (rng_() >> 11) * 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace wavescrub
