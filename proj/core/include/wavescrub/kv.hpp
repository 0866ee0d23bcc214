#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavescrub {

/// Plain-text configuration: one `key = value` per line, `#` comments and
/// blank lines ignored, order preserved, repeated keys allowed (used for
/// ordered lists such as denoise stages). Accessors mark keys as used so
/// a final check can flag typos.
class KvConfig {
public:
    struct Entry {
        std::string key;
        std::string value;
        size_t line = 0;
        mutable bool used = false;
    };

    static KvConfig parse(std::string_view text);
    /// Throws IoError if the file cannot be read.
    static KvConfig load(const std::filesystem::path& path);

    /// Last value for the key, or nullopt. Marks all occurrences used.
    std::optional<std::string> get(std::string_view key) const;
    /// All values for the key, in file order.
    std::vector<std::string> get_all(std::string_view key) const;

    bool has(std::string_view key) const;

    std::optional<double> get_double(std::string_view key) const;
    std::optional<std::uint64_t> get_u64(std::string_view key) const;
    /// Comma-separated list of numbers.
    std::optional<std::vector<double>> get_double_list(std::string_view key) const;

    double require_double(std::string_view key) const;

    /// Throws ConfigError naming any keys that were never read.
    void check_all_used() const;

    const std::vector<Entry>& entries() const { return entries_; }
    /// The raw text this config was parsed from (hashed into manifests).
    const std::string& source_text() const { return source_; }

private:
    std::vector<Entry> entries_;
    std::string source_;
};

} // namespace wavescrub
