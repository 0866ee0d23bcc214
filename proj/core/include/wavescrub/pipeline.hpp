#pragma once

#include "wavescrub/filters.hpp"
#include "wavescrub/frame.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavescrub {

enum class FilterKind { adaptive_wiener, gaussian, median, box };

/// One denoising stage. Which parameters apply depends on kind:
/// window for wiener/median/box, sigma_px for gaussian, noise_variance
/// (nullopt = auto) for wiener.
struct FilterStage {
    FilterKind kind = FilterKind::median;
    WindowSpec window{1};
    double sigma_px = 1.0;
    std::optional<double> noise_variance;
};

struct PipelineSpec {
    std::vector<FilterStage> stages;
};

/// Throws ConfigError if the spec is empty or any stage has invalid
/// parameters for its kind.
void validate(const PipelineSpec& spec);

/// Applies stages left to right. Errors from a stage are rethrown with
/// the 1-based stage index prepended.
Frame run_pipeline(const Frame& frame, const PipelineSpec& spec);

/// Parses the plain-text stage list, one stage per line:
///   median h=1
///   wiener h=2 nv=auto
///   gaussian sigma=1.5
///   box h=1
/// Blank lines and lines starting with # are ignored. nv may be a
/// nonnegative number or `auto`.
PipelineSpec parse_pipeline(std::string_view text);

/// Inverse of parse_pipeline (canonical spelling).
std::string format_pipeline(const PipelineSpec& spec);

/// median h=1 followed by wiener h=2 nv=auto. The impulse pass keeps
/// outliers out of the variance estimate feeding the wiener gain.
PipelineSpec default_pipeline();

Frame apply_stage(const Frame& frame, const FilterStage& stage);

} // namespace wavescrub
