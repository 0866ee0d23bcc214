#pragma once

#include "wavescrub/fdtd.hpp"
#include "wavescrub/kv.hpp"

#include <filesystem>
#include <string_view>

namespace wavescrub {

/// Reads a SynthConfig from parsed key=value text. Keys (time units in
/// the names; converted to seconds internally):
///
///   extent_x_mm, extent_y_mm, step_um     required geometry
///   sound_speed_m_s                       default 4000
///   defect_speed_m_s                      default 2000
///   source.x_mm, source.y_mm              required
///   source.width_ns                       default 60
///   source.amplitude                      default 1
///   source.center_time_ns                 default 2 * width
///   defect.shape = disk|rectangle         optional; enables the defect
///   defect.center_x_mm, defect.center_y_mm
///   defect.radius_mm                      disk
///   defect.half_x_mm, defect.half_y_mm    rectangle
///   snapshot_times_us                     required, comma-separated
///   noise.sigma                           optional; enables the noisy stack
///   seed                                  default 0
///   dt_ns, duration_us                    optional overrides
///
/// Marks the keys it reads as used; callers layering extra keys on the
/// same file run kv.check_all_used() afterwards themselves.
SynthConfig parse_synth_config(const KvConfig& kv);

/// Parses text and rejects unknown keys.
SynthConfig parse_synth_config(std::string_view text);

/// Loads a config file and rejects unknown keys.
SynthConfig load_synth_config(const std::filesystem::path& path);

} // namespace wavescrub
