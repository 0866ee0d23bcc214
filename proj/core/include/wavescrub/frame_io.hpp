#pragma once

#include "wavescrub/frame.hpp"

#include <filesystem>
#include <optional>
#include <string_view>

namespace wavescrub {

/// On-disk frame representations.
///
/// csv    text, header line `# wavescrub-frame nx=.. ny=.. step_um=.. time_s=..`
///        then ny rows of nx comma-separated decimals at 17 significant
///        digits (round-trips doubles exactly).
/// f64le  binary, magic "WSCRB1\0\0", nx/ny as u32 LE, step_um/time_s as
///        f64 LE (time_s NaN when absent), then ny*nx f64 LE row-major.
///        Bit-exact round-trip.
/// pgm    P5 16-bit (big-endian samples per Netpbm), lossy: values are
///        linearly quantized over [min,max]; the mapping and the step are
///        recorded in a `# wavescrub-frame ...` comment line.
enum class FrameFormat { csv, f64le, pgm };

/// Parses "csv" | "f64le" | "pgm". Throws ConfigError on anything else.
FrameFormat parse_frame_format(std::string_view name);

/// Canonical file extension, including the dot.
const char* extension_for(FrameFormat format);

/// Maps .csv/.f64le/.pgm to a format; nullopt for unknown extensions.
std::optional<FrameFormat> format_from_extension(const std::filesystem::path& path);

/// Reads a frame file. Throws IoError (unreadable), FormatError (bad
/// magic/header), DimensionError (header vs payload mismatch) or
/// DataError (non-finite values).
Frame load_frame(const std::filesystem::path& path, FrameFormat format);

/// Same, with the format inferred from the extension.
Frame load_frame(const std::filesystem::path& path);

/// Writes a frame. Throws IoError if the path cannot be written.
/// Note: time_index is not persisted; loaded frames start at index 0.
void save_frame(const Frame& frame, const std::filesystem::path& path,
                FrameFormat format);

} // namespace wavescrub
