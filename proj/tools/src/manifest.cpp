#include "manifest.hpp"

#include <cstdio>
#include <fstream>

#include "wavescrub/errors.hpp"

namespace wavescrub::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string config_digest(std::string_view bytes) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

void write_manifest(const std::filesystem::path& out_dir,
                    const nlohmann::ordered_json& manifest) {
    const auto path = out_dir / "manifest.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << manifest.dump(2) << '\n';
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

}  // namespace wavescrub::cli
