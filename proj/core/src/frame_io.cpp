#include "wavescrub/frame_io.hpp"
#include "wavescrub/errors.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace wavescrub {
namespace {

constexpr char kMagic[8] = {'W', 'S', 'C', 'R', 'B', '1', '\0', '\0'};
constexpr std::string_view kFrameTag = "wavescrub-frame";
constexpr std::string_view kHeaderTag = "# wavescrub-frame";

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double_token(std::string_view token, const char* what) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw FormatError(std::string("cannot parse ") + what + " from '" +
                          std::string(token) + "'");
    }
    return value;
}

long parse_int_token(std::string_view token, const char* what) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw FormatError(std::string("cannot parse ") + what + " from '" +
                          std::string(token) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

struct HeaderFields {
    long nx = -1;
    long ny = -1;
    double step_um = 0.0;
    std::optional<double> time_s;
};

// Parses `nx=<int> ny=<int> step_um=<float> time_s=<float|na>` (any order).
HeaderFields parse_header_fields(std::string_view rest) {
    HeaderFields h;
    bool have_step = false, have_time = false;
    std::istringstream tokens{std::string(rest)};
    std::string tok;
    while (tokens >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            throw FormatError("malformed header token '" + tok + "'");
        }
        std::string_view key = std::string_view(tok).substr(0, eq);
        std::string_view val = std::string_view(tok).substr(eq + 1);
        if (key == "nx") {
            h.nx = parse_int_token(val, "nx");
        } else if (key == "ny") {
            h.ny = parse_int_token(val, "ny");
        } else if (key == "step_um") {
            h.step_um = parse_double_token(val, "step_um");
            have_step = true;
        } else if (key == "time_s") {
            if (val != "na") h.time_s = parse_double_token(val, "time_s");
            have_time = true;
        } else {
            throw FormatError("unknown header key '" + std::string(key) + "'");
        }
    }
    if (h.nx < 0 || h.ny < 0 || !have_step || !have_time) {
        throw FormatError("header must declare nx, ny, step_um and time_s");
    }
    return h;
}

Frame frame_from_header(const HeaderFields& h, std::vector<double> values) {
    ScanGeometry geom = geometry_from_counts(static_cast<int>(h.nx),
                                             static_cast<int>(h.ny), h.step_um);
    return Frame(geom, std::move(values), 0, h.time_s);
}

// ---- csv ----------------------------------------------------------------

void save_csv(const Frame& frame, std::ostream& out) {
    out << kHeaderTag << " nx=" << frame.nx() << " ny=" << frame.ny()
        << " step_um=" << format_double(frame.geometry().step_um) << " time_s="
        << (frame.time_s() ? format_double(*frame.time_s()) : std::string("na"))
        << "\n";
    const auto vals = frame.values();
    for (int r = 0; r < frame.ny(); ++r) {
        for (int c = 0; c < frame.nx(); ++c) {
            if (c) out << ',';
            out << format_double(vals[static_cast<size_t>(r) * frame.nx() + c]);
        }
        out << '\n';
    }
}

Frame load_csv(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError(name + ": empty file");
    }
    std::string_view lv = trim(line);
    if (lv.substr(0, kHeaderTag.size()) != kHeaderTag) {
        throw FormatError(name + ": missing '" + std::string(kHeaderTag) +
                          "' header");
    }
    HeaderFields h = parse_header_fields(lv.substr(kHeaderTag.size()));
    if (h.nx < 2 || h.ny < 2) {
        throw FormatError(name + ": header declares invalid dimensions");
    }

    std::vector<double> values;
    values.reserve(static_cast<size_t>(h.nx) * h.ny);
    long rows = 0;
    while (std::getline(in, line)) {
        std::string_view row = trim(line);
        if (row.empty()) continue;
        ++rows;
        long cols = 0;
        size_t pos = 0;
        while (pos <= row.size()) {
            size_t comma = row.find(',', pos);
            std::string_view cell = trim(
                row.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                : comma - pos));
            values.push_back(parse_double_token(cell, "value"));
            ++cols;
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        if (cols != h.nx) {
            throw DimensionError(name + ": row " + std::to_string(rows) +
                                 " has " + std::to_string(cols) +
                                 " values, header declares nx=" +
                                 std::to_string(h.nx));
        }
    }
    if (rows != h.ny) {
        throw DimensionError(name + ": found " + std::to_string(rows) +
                             " rows, header declares ny=" + std::to_string(h.ny));
    }
    return frame_from_header(h, std::move(values));
}

// ---- f64le --------------------------------------------------------------

void put_u32le(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64le(std::ostream& out, double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32le(std::istream& in, const std::string& name) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) {
        throw FormatError(name + ": truncated header");
    }
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

double get_f64le(std::istream& in, const std::string& name) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8)) {
        throw FormatError(name + ": truncated payload");
    }
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return std::bit_cast<double>(bits);
}

void save_f64le(const Frame& frame, std::ostream& out) {
    out.write(kMagic, sizeof(kMagic));
    put_u32le(out, static_cast<std::uint32_t>(frame.nx()));
    put_u32le(out, static_cast<std::uint32_t>(frame.ny()));
    put_f64le(out, frame.geometry().step_um);
    put_f64le(out, frame.time_s() ? *frame.time_s()
                                  : std::numeric_limits<double>::quiet_NaN());
    for (double v : frame.values()) put_f64le(out, v);
}

Frame load_f64le(std::istream& in, const std::string& name) {
    char magic[8];
    if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, 8) != 0) {
        throw FormatError(name + ": bad magic, not a wavescrub f64le frame");
    }
    HeaderFields h;
    h.nx = get_u32le(in, name);
    h.ny = get_u32le(in, name);
    h.step_um = get_f64le(in, name);
    const double t = get_f64le(in, name);
    if (!std::isnan(t)) h.time_s = t;
    if (h.nx < 2 || h.ny < 2 || !(h.step_um > 0.0)) {
        throw FormatError(name + ": header declares invalid geometry");
    }
    const size_t count = static_cast<size_t>(h.nx) * h.ny;
    std::vector<double> values(count);
    for (size_t i = 0; i < count; ++i) values[i] = get_f64le(in, name);
    // The payload must end exactly here.
    char extra;
    if (in.read(&extra, 1)) {
        throw DimensionError(name + ": payload longer than nx*ny values");
    }
    return frame_from_header(h, std::move(values));
}

// ---- pgm ----------------------------------------------------------------

void save_pgm(const Frame& frame, std::ostream& out) {
    const auto vals = frame.values();
    double lo = vals[0], hi = vals[0];
    for (double v : vals) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    out << "P5\n"
        << kHeaderTag << " step_um=" << format_double(frame.geometry().step_um)
        << " min=" << format_double(lo) << " max=" << format_double(hi)
        << " time_s="
        << (frame.time_s() ? format_double(*frame.time_s()) : std::string("na"))
        << "\n"
        << frame.nx() << ' ' << frame.ny() << "\n65535\n";
    const double scale = hi > lo ? 65535.0 / (hi - lo) : 0.0;
    for (double v : vals) {
        auto q = static_cast<long>(std::lround((v - lo) * scale));
        q = std::clamp(q, 0L, 65535L);
        // Netpbm stores the most significant byte first.
        const unsigned char b[2] = {static_cast<unsigned char>((q >> 8) & 0xff),
                                    static_cast<unsigned char>(q & 0xff)};
        out.write(reinterpret_cast<const char*>(b), 2);
    }
}

// Reads one whitespace-delimited PGM token, capturing wavescrub comments.
std::string next_pgm_token(std::istream& in, std::string& wavescrub_comment,
                           const std::string& name) {
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            std::string comment;
            std::getline(in, comment);
            std::string_view c = trim(comment);
            if (c.substr(0, kFrameTag.size()) == kFrameTag) {
                wavescrub_comment = std::string(c.substr(kFrameTag.size()));
            }
            ch = in.get();
        } else if (std::isspace(ch)) {
            ch = in.get();
        } else {
            break;
        }
    }
    if (ch == EOF) throw FormatError(name + ": truncated PGM header");
    std::string token;
    while (ch != EOF && !std::isspace(ch) && ch != '#') {
        token.push_back(static_cast<char>(ch));
        ch = in.get();
    }
    if (ch == '#') in.unget();
    return token;
}

Frame load_pgm(std::istream& in, const std::string& name) {
    char p, five;
    in.get(p);
    in.get(five);
    if (!in || p != 'P' || five != '5') {
        throw FormatError(name + ": not a binary PGM (P5) file");
    }
    std::string meta;
    const std::string w_tok = next_pgm_token(in, meta, name);
    const std::string h_tok = next_pgm_token(in, meta, name);
    const std::string max_tok = next_pgm_token(in, meta, name);
    const long w = parse_int_token(w_tok, "width");
    const long hgt = parse_int_token(h_tok, "height");
    const long maxval = parse_int_token(max_tok, "maxval");
    if (maxval != 65535) {
        throw FormatError(name + ": expected 16-bit PGM (maxval 65535), got " +
                          std::to_string(maxval));
    }
    if (meta.empty()) {
        throw FormatError(name +
                          ": PGM lacks the wavescrub-frame comment declaring "
                          "step and value mapping");
    }
    // meta looks like: step_um=.. min=.. max=.. time_s=..
    double lo = 0.0, hi = 0.0, step_um = 0.0;
    std::optional<double> time_s;
    bool have_lo = false, have_hi = false, have_step = false;
    std::istringstream tokens{meta};
    std::string tok;
    while (tokens >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        std::string_view key = std::string_view(tok).substr(0, eq);
        std::string_view val = std::string_view(tok).substr(eq + 1);
        if (key == "step_um") {
            step_um = parse_double_token(val, "step_um");
            have_step = true;
        } else if (key == "min") {
            lo = parse_double_token(val, "min");
            have_lo = true;
        } else if (key == "max") {
            hi = parse_double_token(val, "max");
            have_hi = true;
        } else if (key == "time_s" && val != "na") {
            time_s = parse_double_token(val, "time_s");
        }
    }
    if (!have_step || !have_lo || !have_hi) {
        throw FormatError(name + ": wavescrub-frame comment must declare "
                          "step_um, min and max");
    }
    // One whitespace byte separates the header from the raster.
    const size_t count = static_cast<size_t>(w) * hgt;
    std::vector<double> values(count);
    const double span = (hi - lo) / 65535.0;
    for (size_t i = 0; i < count; ++i) {
        unsigned char b[2];
        if (!in.read(reinterpret_cast<char*>(b), 2)) {
            throw DimensionError(name + ": raster shorter than width*height");
        }
        const unsigned raw = (static_cast<unsigned>(b[0]) << 8) | b[1];
        values[i] = lo + raw * span;
    }
    HeaderFields h;
    h.nx = w;
    h.ny = hgt;
    h.step_um = step_um;
    h.time_s = time_s;
    return frame_from_header(h, std::move(values));
}

} // namespace

FrameFormat parse_frame_format(std::string_view name) {
    if (name == "csv") return FrameFormat::csv;
    if (name == "f64le") return FrameFormat::f64le;
    if (name == "pgm") return FrameFormat::pgm;
    throw ConfigError("unknown frame format '" + std::string(name) +
                      "' (expected csv, f64le or pgm)");
}

const char* extension_for(FrameFormat format) {
    switch (format) {
        case FrameFormat::csv: return ".csv";
        case FrameFormat::f64le: return ".f64le";
        case FrameFormat::pgm: return ".pgm";
    }
    return ".csv";
}

std::optional<FrameFormat> format_from_extension(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".csv") return FrameFormat::csv;
    if (ext == ".f64le") return FrameFormat::f64le;
    if (ext == ".pgm") return FrameFormat::pgm;
    return std::nullopt;
}

Frame load_frame(const std::filesystem::path& path, FrameFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    switch (format) {
        case FrameFormat::csv: return load_csv(in, path.string());
        case FrameFormat::f64le: return load_f64le(in, path.string());
        case FrameFormat::pgm: return load_pgm(in, path.string());
    }
    throw ConfigError("unhandled frame format");
}

Frame load_frame(const std::filesystem::path& path) {
    auto format = format_from_extension(path);
    if (!format) {
        throw ConfigError("cannot infer frame format from '" + path.string() +
                          "'; expected a .csv, .f64le or .pgm extension");
    }
    return load_frame(path, *format);
}

void save_frame(const Frame& frame, const std::filesystem::path& path,
                FrameFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    switch (format) {
        case FrameFormat::csv: save_csv(frame, out); break;
        case FrameFormat::f64le: save_f64le(frame, out); break;
        case FrameFormat::pgm: save_pgm(frame, out); break;
    }
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

} // namespace wavescrub
