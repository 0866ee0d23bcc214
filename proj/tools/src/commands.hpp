#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace wavescrub::cli {

/// Flags shared by the frame-writing commands. Unset fields fall back to
/// the config file (seed) or the documented default (format: csv).
struct CommonOpts {
    std::optional<std::string> format_name;
    std::optional<std::uint64_t> seed;
};

int cmd_synth(const std::filesystem::path& config_path,
              const std::filesystem::path& out_dir, const CommonOpts& opts);

int cmd_denoise(const std::optional<std::filesystem::path>& config_path,
                const std::vector<std::filesystem::path>& frame_paths,
                const std::filesystem::path& out_dir, const CommonOpts& opts);

int cmd_metric(const std::vector<std::filesystem::path>& originals,
               const std::vector<std::filesystem::path>& denoised,
               const std::optional<std::filesystem::path>& out_dir);

int cmd_profile(const std::filesystem::path& original,
                const std::filesystem::path& denoised, const std::string& row,
                const std::optional<std::filesystem::path>& out_dir);

int cmd_pipeline(const std::filesystem::path& config_path,
                 const std::filesystem::path& out_dir, const CommonOpts& opts,
                 const std::optional<std::string>& row);

}  // namespace wavescrub::cli
