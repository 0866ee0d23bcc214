#include "wavescrub/noise.hpp"
#include "wavescrub/errors.hpp"
#include "wavescrub/rng.hpp"

#include <vector>

namespace wavescrub {

NoisyFrame add_noise(const Frame& frame, const NoiseSpec& noise,
                     std::uint64_t seed) {
    if (!(noise.sigma >= 0.0)) {
        throw DomainError("noise sigma must be nonnegative");
    }
    if (noise.sigma == 0.0) {
        return NoisyFrame{frame, 0.0};
    }
    GaussianStream stream(seed);
    const auto src = frame.values();
    std::vector<double> out(src.size());
    double energy = 0.0, comp = 0.0;
    for (size_t i = 0; i < src.size(); ++i) {
        const double n = noise.sigma * stream.next();
        out[i] = src[i] + n;
        const double y = n * n - comp;
        const double t = energy + y;
        comp = (t - energy) - y;
        energy = t;
    }
    return NoisyFrame{Frame(frame.geometry(), std::move(out), frame.time_index(),
                            frame.time_s()),
                      energy};
}

} // namespace wavescrub
