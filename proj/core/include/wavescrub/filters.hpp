#pragma once

#include "wavescrub/frame.hpp"

#include <optional>

namespace wavescrub {

/// Square odd-sized neighborhood: (2*half_width+1)^2 pixels.
/// half_width may be 0 (the pixel itself). Whether the window fits a
/// given frame is checked when a filter is applied.
struct WindowSpec {
    int half_width = 1;

    int side() const { return 2 * half_width + 1; }
    int pixel_count() const { return side() * side(); }

    friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

struct LocalStats {
    Frame mean;
    Frame variance;
};

/// Per-pixel mean and population variance over the replicate-padded
/// window, computed with summed-area tables on a globally centered copy
/// of the image (centering keeps the E[x^2]-mu^2 form well conditioned).
/// Constant images short-circuit to the exact answer (mean == the
/// constant, variance == 0). Variance is clamped to be nonnegative.
LocalStats local_stats(const Frame& frame, WindowSpec window);

/// Scalar noise-power estimate: the mean of the local-variance image.
/// Deterministic; over-estimates on structured images since signal
/// variation counts toward the local variances.
double estimate_noise_variance(const Frame& frame, WindowSpec window);

/// Wiener-style adaptive filter. Per pixel with local stats (mu, var):
///   gain = var > 0 ? max(var - nv, 0) / var : 0
///   out  = mu + gain * (x - mu)
/// so out always lies between mu and x. noise_variance nullopt means
/// "auto": estimate_noise_variance with the same window. nv == 0 is the
/// identity and returns the input bit-exactly.
Frame adaptive_wiener(const Frame& frame, WindowSpec window,
                      std::optional<double> noise_variance);

/// Separable Gaussian smoothing, kernel radius ceil(3*sigma), weights
/// renormalized to unit sum after truncation, replicate borders.
Frame gaussian_smooth(const Frame& frame, double sigma_px);

/// Rank filter: per pixel the median of the replicate-padded window.
/// The window size is odd squared, so the median is always a member of
/// the neighborhood multiset.
Frame median_filter(const Frame& frame, WindowSpec window);

/// Plain moving average; identical to the mean image of local_stats.
Frame box_filter(const Frame& frame, WindowSpec window);

} // namespace wavescrub
