#pragma once

#include "wavescrub/frame.hpp"
#include "wavescrub/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace testsup {

// Uniform values in [lo, hi) from an explicitly pinned mapping, so test
// fixtures are identical on every platform.
inline wavescrub::Frame random_frame(int nx, int ny, std::uint64_t seed,
                                     double lo = 0.0, double hi = 1.0,
                                     double step_um = 50.0) {
    std::mt19937_64 rng(seed);
    std::vector<double> v(static_cast<size_t>(nx) * ny);
    for (double& x : v) {
        x = lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    }
    return wavescrub::Frame(wavescrub::geometry_from_counts(nx, ny, step_um),
                            std::move(v));
}

inline wavescrub::Frame constant_frame(int nx, int ny, double value,
                                       double step_um = 50.0) {
    std::vector<double> v(static_cast<size_t>(nx) * ny, value);
    return wavescrub::Frame(wavescrub::geometry_from_counts(nx, ny, step_um),
                            std::move(v));
}

inline double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Largest per-value deviation relative to the overall image scale. Plain
// per-value relative error blows up near zeros, which both images are full
// of; image-scale relative error is what the equivalence bounds mean.
inline double rel_error(std::span<const double> got, std::span<const double> want) {
    const double scale = std::max(max_abs(want), 1e-300);
    return max_abs_diff(got, want) / scale;
}

inline bool bit_identical(const wavescrub::Frame& a, const wavescrub::Frame& b) {
    auto va = a.values(), vb = b.values();
    return va.size() == vb.size() &&
           std::memcmp(va.data(), vb.data(), va.size() * sizeof(double)) == 0;
}

inline double rms(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s / static_cast<double>(v.size()));
}

class TempDir {
public:
    TempDir() {
        const auto base = std::filesystem::temp_directory_path();
        static int counter = 0;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            auto candidate = base / ("wavescrub-test-" + std::to_string(::getpid()) +
                                     "-" + std::to_string(counter++));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("cannot create a temp directory");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::vector<std::string> read_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted += c;
        }
    }
    quoted += '\'';
    return quoted;
}

// Runs the binary named by WAVESCRUB_BIN with the given arguments,
// capturing both streams and the exit code. `scratch` holds the
// temporary redirection files.
inline CliResult run_cli(const std::vector<std::string>& args,
                         const std::filesystem::path& scratch) {
    const char* bin = std::getenv("WAVESCRUB_BIN");
    if (bin == nullptr) {
        throw std::runtime_error(
            "WAVESCRUB_BIN must point at the wavescrub binary");
    }
    const auto out_file = scratch / "_stdout.txt";
    const auto err_file = scratch / "_stderr.txt";
    std::string cmd = shell_quote(bin);
    for (const std::string& arg : args) {
        cmd += ' ';
        cmd += shell_quote(arg);
    }
    cmd += " > " + shell_quote(out_file.string());
    cmd += " 2> " + shell_quote(err_file.string());
    const int status = std::system(cmd.c_str());
    CliResult result;
    if (status >= 0 && WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    result.out = read_text(out_file);
    result.err = read_text(err_file);
    std::filesystem::remove(out_file);
    std::filesystem::remove(err_file);
    return result;
}

} // namespace testsup
