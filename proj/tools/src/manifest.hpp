#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "nlohmann/json.hpp"

namespace wavescrub::cli {

std::uint64_t fnv1a64(std::string_view bytes);

/// "fnv1a64:" followed by 16 lowercase hex digits.
std::string config_digest(std::string_view bytes);

/// Serializes `manifest` to <out_dir>/manifest.json. Key order is
/// preserved and nothing run-dependent (timestamps, absolute temp
/// paths) goes in, so reruns produce byte-identical files.
void write_manifest(const std::filesystem::path& out_dir,
                    const nlohmann::ordered_json& manifest);

}  // namespace wavescrub::cli
