#include "wavescrub/filters.hpp"
#include "wavescrub/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace wavescrub {
namespace {

void check_window(const Frame& frame, WindowSpec window) {
    if (window.half_width < 0) {
        throw DomainError("window half_width must be nonnegative");
    }
    if (window.side() > std::min(frame.nx(), frame.ny())) {
        throw DomainError("window side " + std::to_string(window.side()) +
                          " exceeds frame " + std::to_string(frame.nx()) + "x" +
                          std::to_string(frame.ny()));
    }
}

inline int clamp_index(int i, int n) { return std::clamp(i, 0, n - 1); }

// Replicate-padded copy with `center` subtracted from every value, sized
// so window lookups need no bounds checks.
std::vector<double> padded_values(const Frame& frame, int pad, double center) {
    const int nx = frame.nx(), ny = frame.ny();
    const int W = nx + 2 * pad, H = ny + 2 * pad;
    std::vector<double> out(static_cast<size_t>(W) * H);
    for (int r = 0; r < H; ++r) {
        const int src_r = clamp_index(r - pad, ny);
        for (int c = 0; c < W; ++c) {
            const int src_c = clamp_index(c - pad, nx);
            out[static_cast<size_t>(r) * W + c] = frame(src_r, src_c) - center;
        }
    }
    return out;
}

double frame_mean(const Frame& frame) {
    double sum = 0.0;
    for (double v : frame.values()) sum += v;
    return sum / static_cast<double>(frame.geometry().sample_count());
}

// Summed-area table with a zero top row and left column, so window sums
// need no boundary branches: S has (H+1) x (W+1) entries and
// S(r, c) = sum of values[0..r)[0..c).
std::vector<double> summed_area_table(const std::vector<double>& values, int W,
                                      int H) {
    std::vector<double> s(static_cast<size_t>(W + 1) * (H + 1), 0.0);
    const size_t stride = static_cast<size_t>(W) + 1;
    for (int r = 0; r < H; ++r) {
        double row_sum = 0.0;
        for (int c = 0; c < W; ++c) {
            row_sum += values[static_cast<size_t>(r) * W + c];
            s[(r + 1) * stride + (c + 1)] = s[r * stride + (c + 1)] + row_sum;
        }
    }
    return s;
}

inline double window_sum(const std::vector<double>& sat, size_t stride, int r0,
                         int c0, int side) {
    return sat[(r0 + side) * stride + (c0 + side)] - sat[r0 * stride + (c0 + side)] -
           sat[(r0 + side) * stride + c0] + sat[r0 * stride + c0];
}

} // namespace

LocalStats local_stats(const Frame& frame, WindowSpec window) {
    check_window(frame, window);
    const int nx = frame.nx(), ny = frame.ny();
    const int h = window.half_width;
    const int side = window.side();
    const double inv_count = 1.0 / window.pixel_count();

    // Constant images short-circuit: every window holds one value, so the
    // answer is known exactly. The summed-area path below can otherwise
    // leave a last-ulp variance residue from prefix-sum rounding.
    const auto [lo_it, hi_it] =
        std::minmax_element(frame.values().begin(), frame.values().end());
    if (*lo_it == *hi_it) {
        const size_t count = frame.values().size();
        return LocalStats{
            Frame(frame.geometry(), std::vector<double>(count, *lo_it),
                  frame.time_index(), frame.time_s()),
            Frame(frame.geometry(), std::vector<double>(count, 0.0),
                  frame.time_index(), frame.time_s())};
    }

    const double center = frame_mean(frame);
    const int W = nx + 2 * h, H = ny + 2 * h;
    const std::vector<double> padded = padded_values(frame, h, center);
    std::vector<double> squared(padded.size());
    for (size_t i = 0; i < padded.size(); ++i) squared[i] = padded[i] * padded[i];

    const std::vector<double> sat1 = summed_area_table(padded, W, H);
    const std::vector<double> sat2 = summed_area_table(squared, W, H);
    const size_t stride = static_cast<size_t>(W) + 1;

    std::vector<double> mean(static_cast<size_t>(nx) * ny);
    std::vector<double> variance(mean.size());
    for (int r = 0; r < ny; ++r) {
        for (int c = 0; c < nx; ++c) {
            const double s1 = window_sum(sat1, stride, r, c, side) * inv_count;
            const double s2 = window_sum(sat2, stride, r, c, side) * inv_count;
            const size_t i = static_cast<size_t>(r) * nx + c;
            mean[i] = center + s1;
            variance[i] = std::max(s2 - s1 * s1, 0.0);
        }
    }
    return LocalStats{
        Frame(frame.geometry(), std::move(mean), frame.time_index(), frame.time_s()),
        Frame(frame.geometry(), std::move(variance), frame.time_index(),
              frame.time_s())};
}

double estimate_noise_variance(const Frame& frame, WindowSpec window) {
    const LocalStats stats = local_stats(frame, window);
    double sum = 0.0;
    for (double v : stats.variance.values()) sum += v;
    return sum / static_cast<double>(frame.geometry().sample_count());
}

Frame adaptive_wiener(const Frame& frame, WindowSpec window,
                      std::optional<double> noise_variance) {
    check_window(frame, window);
    if (noise_variance && !(*noise_variance >= 0.0)) {
        throw DomainError("noise_variance must be nonnegative");
    }
    const double nv =
        noise_variance ? *noise_variance : estimate_noise_variance(frame, window);
    if (nv == 0.0) {
        // gain is 1 wherever var > 0 and x == mu wherever var == 0; the
        // filter is the identity, returned without rounding.
        return frame;
    }

    const LocalStats stats = local_stats(frame, window);
    const auto src = frame.values();
    const auto mu = stats.mean.values();
    const auto var = stats.variance.values();
    std::vector<double> out(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
        const double gain = var[i] > 0.0 ? std::max(var[i] - nv, 0.0) / var[i] : 0.0;
        out[i] = mu[i] + gain * (src[i] - mu[i]);
    }
    return Frame(frame.geometry(), std::move(out), frame.time_index(),
                 frame.time_s());
}

Frame gaussian_smooth(const Frame& frame, double sigma_px) {
    if (!(sigma_px > 0.0)) {
        throw DomainError("gaussian sigma must be positive");
    }
    const int radius = static_cast<int>(std::ceil(3.0 * sigma_px));
    std::vector<double> kernel(static_cast<size_t>(radius) + 1);
    double sum = 0.0;
    for (int i = 0; i <= radius; ++i) {
        kernel[i] = std::exp(-0.5 * (static_cast<double>(i) * i) / (sigma_px * sigma_px));
        sum += (i == 0 ? 1.0 : 2.0) * kernel[i];
    }
    for (double& k : kernel) k /= sum;

    const int nx = frame.nx(), ny = frame.ny();
    const auto src = frame.values();
    std::vector<double> tmp(src.size());
    std::vector<double> out(src.size());

    // Horizontal pass, replicate borders.
    for (int r = 0; r < ny; ++r) {
        const size_t row = static_cast<size_t>(r) * nx;
        for (int c = 0; c < nx; ++c) {
            double acc = kernel[0] * src[row + c];
            for (int i = 1; i <= radius; ++i) {
                acc += kernel[i] * (src[row + clamp_index(c - i, nx)] +
                                    src[row + clamp_index(c + i, nx)]);
            }
            tmp[row + c] = acc;
        }
    }
    // Vertical pass.
    for (int r = 0; r < ny; ++r) {
        for (int c = 0; c < nx; ++c) {
            double acc = kernel[0] * tmp[static_cast<size_t>(r) * nx + c];
            for (int i = 1; i <= radius; ++i) {
                acc += kernel[i] *
                       (tmp[static_cast<size_t>(clamp_index(r - i, ny)) * nx + c] +
                        tmp[static_cast<size_t>(clamp_index(r + i, ny)) * nx + c]);
            }
            out[static_cast<size_t>(r) * nx + c] = acc;
        }
    }
    return Frame(frame.geometry(), std::move(out), frame.time_index(),
                 frame.time_s());
}

Frame median_filter(const Frame& frame, WindowSpec window) {
    check_window(frame, window);
    const int nx = frame.nx(), ny = frame.ny();
    const int h = window.half_width;
    std::vector<double> out(static_cast<size_t>(nx) * ny);
    std::vector<double> neighborhood(static_cast<size_t>(window.pixel_count()));
    for (int r = 0; r < ny; ++r) {
        for (int c = 0; c < nx; ++c) {
            size_t k = 0;
            for (int dr = -h; dr <= h; ++dr) {
                const int rr = clamp_index(r + dr, ny);
                for (int dc = -h; dc <= h; ++dc) {
                    neighborhood[k++] = frame(rr, clamp_index(c + dc, nx));
                }
            }
            auto mid = neighborhood.begin() + neighborhood.size() / 2;
            std::nth_element(neighborhood.begin(), mid, neighborhood.end());
            out[static_cast<size_t>(r) * nx + c] = *mid;
        }
    }
    return Frame(frame.geometry(), std::move(out), frame.time_index(),
                 frame.time_s());
}

Frame box_filter(const Frame& frame, WindowSpec window) {
    return local_stats(frame, window).mean;
}

} // namespace wavescrub
