#pragma once

#include "wavescrub/frame.hpp"

#include <cstdint>

namespace wavescrub {

enum class NoiseKind { gaussian };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::gaussian;
    double sigma = 0.0;
};

struct NoisyFrame {
    Frame frame;
    /// Sum of the squared injected samples, Kahan-accumulated in the
    /// same row-major order the metric uses.
    double injected_energy = 0.0;
};

/// frame + i.i.d. zero-mean Gaussian(sigma) noise from a GaussianStream
/// seeded with `seed`. Same seed, same spec -> bit-identical output.
/// Throws DomainError for negative sigma.
NoisyFrame add_noise(const Frame& frame, const NoiseSpec& noise,
                     std::uint64_t seed);

/// Per-frame sub-seed used when noising a stack: base seed plus the
/// frame's ordinal within the stack.
inline std::uint64_t frame_noise_seed(std::uint64_t base, std::uint64_t ordinal) {
    return base + ordinal;
}

} // namespace wavescrub
