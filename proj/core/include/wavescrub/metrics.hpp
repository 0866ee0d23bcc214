#pragma once

#include "wavescrub/frame.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wavescrub {

/// One row of the denoising report: the summed squared per-pixel
/// difference between an original and its denoised frame.
struct NoiseReport {
    std::string frame_label;
    double energy_removed = 0.0;
    std::int64_t pixel_count = 0;
    double mean_squared_difference = 0.0;
};

/// Intensities of one horizontal row from an original/denoised pair,
/// with physical x positions in mm.
struct LineProfile {
    int row_index = 0;
    std::vector<double> positions_mm;
    std::vector<double> original;
    std::vector<double> denoised;
};

/// energy_removed = sum over pixels of (original - denoised)^2, summed
/// row-major with Kahan compensation so the result does not depend on
/// platform or internal blocking. Throws DimensionError for
/// incompatible geometries.
NoiseReport noise_energy_removed(const Frame& original, const Frame& denoised,
                                 std::string label = {});

/// Extracts one row (default: the center row floor(ny/2)) from both
/// frames. Throws DomainError if the explicit row is out of range,
/// DimensionError if the frames are incompatible.
LineProfile line_profile(const Frame& original, const Frame& denoised,
                         std::optional<int> row = std::nullopt);

/// Fixed-width text table, one column per report, energies printed with
/// two decimals (correctly rounded). Throws DomainError on an empty list.
std::string report_table(const std::vector<NoiseReport>& reports);

/// CSV with header `frame,energy_removed,pixel_count,msd`, full-precision
/// values.
std::string report_csv(const std::vector<NoiseReport>& reports);

/// CSV with header `position_mm,original,denoised`.
std::string profile_csv(const LineProfile& profile);

} // namespace wavescrub
