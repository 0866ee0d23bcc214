#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "manifest.hpp"
#include "nlohmann/json.hpp"
#include "wavescrub/errors.hpp"
#include "wavescrub/fdtd.hpp"
#include "wavescrub/frame_io.hpp"
#include "wavescrub/kv.hpp"
#include "wavescrub/metrics.hpp"
#include "wavescrub/noise.hpp"
#include "wavescrub/pipeline.hpp"
#include "wavescrub/synth_config.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace wavescrub::cli {
namespace {

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed: " + path.string());
    }
    return std::move(buf).str();
}

void write_text(const fs::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << text;
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory " + dir.string() + ": " +
                      ec.message());
    }
}

const char* format_name(FrameFormat format) {
    switch (format) {
        case FrameFormat::csv: return "csv";
        case FrameFormat::f64le: return "f64le";
        case FrameFormat::pgm: return "pgm";
    }
    return "csv";
}

/// --format beats the config's output.format; default is csv.
FrameFormat resolve_format(const CommonOpts& opts,
                           const std::optional<std::string>& config_value) {
    if (opts.format_name) {
        return parse_frame_format(*opts.format_name);
    }
    if (config_value) {
        return parse_frame_format(*config_value);
    }
    return FrameFormat::csv;
}

std::string ordinal_name(const char* prefix, size_t ordinal,
                         FrameFormat format) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_%03zu%s", prefix, ordinal,
                  extension_for(format));
    return buf;
}

std::optional<int> parse_row_arg(const std::string& text) {
    if (text == "center") {
        return std::nullopt;
    }
    int value = 0;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ConfigError("row must be an integer or 'center', got '" + text +
                          "'");
    }
    return value;
}

ordered_json manifest_header(const char* command) {
    ordered_json m;
    m["command"] = command;
    m["tool"] = "wavescrub";
    m["version"] = WAVESCRUB_VERSION;
    return m;
}

ordered_json frame_entry(const std::string& name, const char* kind,
                         const Frame& frame) {
    ordered_json entry;
    entry["path"] = name;
    entry["kind"] = kind;
    entry["time_index"] = frame.time_index();
    if (frame.time_s()) {
        entry["time_s"] = *frame.time_s();
    } else {
        entry["time_s"] = nullptr;
    }
    return entry;
}

ordered_json stage_list(const PipelineSpec& spec) {
    ordered_json stages = ordered_json::array();
    std::istringstream lines(format_pipeline(spec));
    for (std::string line; std::getline(lines, line);) {
        stages.push_back(line);
    }
    return stages;
}

}  // namespace

int cmd_synth(const fs::path& config_path, const fs::path& out_dir,
              const CommonOpts& opts) {
    KvConfig kv = KvConfig::load(config_path);
    SynthConfig config = parse_synth_config(kv);
    const auto format_key = kv.get("output.format");
    kv.check_all_used();
    if (opts.seed) {
        config.seed = *opts.seed;
    }
    const FrameFormat format = resolve_format(opts, format_key);

    SimResult result = simulate_wavefield(config);
    ensure_dir(out_dir);

    ordered_json manifest = manifest_header("synth");
    manifest["config"] = {{"path", config_path.string()},
                          {"digest", config_digest(kv.source_text())}};
    manifest["seed"] = config.seed;
    manifest["rng_algorithm"] = result.meta.rng_algorithm;
    manifest["simulation"] = {{"dt_s", result.meta.dt_s},
                              {"steps", result.meta.steps},
                              {"cfl", result.meta.cfl},
                              {"sponge_cells", result.meta.sponge_cells},
                              {"source_off_step", result.meta.source_off_step}};
    manifest["format"] = format_name(format);
    manifest["inputs"] = ordered_json::array();

    ordered_json outputs = ordered_json::array();
    for (size_t i = 0; i < result.clean.size(); ++i) {
        const std::string name = ordinal_name("clean", i, format);
        save_frame(result.clean[i], out_dir / name, format);
        outputs.push_back(frame_entry(name, "clean", result.clean[i]));
    }
    if (config.noise) {
        for (size_t i = 0; i < result.clean.size(); ++i) {
            const NoisyFrame noisy = add_noise(
                result.clean[i], *config.noise, frame_noise_seed(config.seed, i));
            const std::string name = ordinal_name("noisy", i, format);
            save_frame(noisy.frame, out_dir / name, format);
            ordered_json entry = frame_entry(name, "noisy", noisy.frame);
            entry["injected_energy"] = noisy.injected_energy;
            outputs.push_back(std::move(entry));
        }
    }
    manifest["outputs"] = std::move(outputs);
    write_manifest(out_dir, manifest);

    std::cerr << "synth: wrote " << result.clean.size() << " clean"
              << (config.noise ? " + noisy" : "") << " frame(s) to "
              << out_dir.string() << '\n';
    return 0;
}

int cmd_denoise(const std::optional<fs::path>& config_path,
                const std::vector<fs::path>& frame_paths,
                const fs::path& out_dir, const CommonOpts& opts) {
    std::string spec_text;
    PipelineSpec spec;
    if (config_path) {
        spec_text = read_text(*config_path);
        spec = parse_pipeline(spec_text);
    } else {
        spec = default_pipeline();
        spec_text = format_pipeline(spec);
    }
    const FrameFormat format = resolve_format(opts, std::nullopt);

    std::vector<Frame> denoised;
    denoised.reserve(frame_paths.size());
    for (const fs::path& path : frame_paths) {
        denoised.push_back(run_pipeline(load_frame(path), spec));
    }
    ensure_dir(out_dir);

    ordered_json manifest = manifest_header("denoise");
    manifest["config"] = {
        {"path", config_path ? ordered_json(config_path->string())
                             : ordered_json(nullptr)},
        {"digest", config_digest(spec_text)}};
    manifest["stages"] = stage_list(spec);
    manifest["format"] = format_name(format);
    ordered_json inputs = ordered_json::array();
    for (const fs::path& path : frame_paths) {
        inputs.push_back(path.string());
    }
    manifest["inputs"] = std::move(inputs);

    ordered_json outputs = ordered_json::array();
    for (size_t i = 0; i < denoised.size(); ++i) {
        const std::string name = ordinal_name("denoised", i, format);
        save_frame(denoised[i], out_dir / name, format);
        ordered_json entry = frame_entry(name, "denoised", denoised[i]);
        entry["source"] = frame_paths[i].string();
        outputs.push_back(std::move(entry));
    }
    manifest["outputs"] = std::move(outputs);
    write_manifest(out_dir, manifest);

    std::cerr << "denoise: wrote " << denoised.size() << " frame(s) to "
              << out_dir.string() << '\n';
    return 0;
}

int cmd_metric(const std::vector<fs::path>& originals,
               const std::vector<fs::path>& denoised,
               const std::optional<fs::path>& out_dir) {
    if (originals.size() != denoised.size()) {
        throw ConfigError(
            "--original and --denoised must be given the same number of "
            "times (got " +
            std::to_string(originals.size()) + " and " +
            std::to_string(denoised.size()) + ")");
    }
    std::vector<NoiseReport> reports;
    reports.reserve(originals.size());
    for (size_t i = 0; i < originals.size(); ++i) {
        const Frame original = load_frame(originals[i]);
        const Frame cleaned = load_frame(denoised[i]);
        reports.push_back(noise_energy_removed(original, cleaned,
                                               originals[i].stem().string()));
    }
    std::cout << report_table(reports);

    if (out_dir) {
        ensure_dir(*out_dir);
        write_text(*out_dir / "report.csv", report_csv(reports));

        ordered_json manifest = manifest_header("metric");
        ordered_json inputs = ordered_json::array();
        for (size_t i = 0; i < originals.size(); ++i) {
            inputs.push_back({{"original", originals[i].string()},
                              {"denoised", denoised[i].string()}});
        }
        manifest["inputs"] = std::move(inputs);
        manifest["outputs"] =
            ordered_json::array({{{"path", "report.csv"}, {"kind", "report"}}});
        write_manifest(*out_dir, manifest);
    }
    return 0;
}

int cmd_profile(const fs::path& original, const fs::path& denoised,
                const std::string& row,
                const std::optional<fs::path>& out_dir) {
    const std::optional<int> row_index = parse_row_arg(row);
    const Frame original_frame = load_frame(original);
    const Frame denoised_frame = load_frame(denoised);
    const LineProfile profile =
        line_profile(original_frame, denoised_frame, row_index);
    const std::string csv = profile_csv(profile);

    if (out_dir) {
        ensure_dir(*out_dir);
        write_text(*out_dir / "profile.csv", csv);

        ordered_json manifest = manifest_header("profile");
        manifest["inputs"] = ordered_json::array(
            {{{"original", original.string()}, {"denoised", denoised.string()}}});
        manifest["row"] = profile.row_index;
        manifest["outputs"] = ordered_json::array(
            {{{"path", "profile.csv"}, {"kind", "profile"}}});
        write_manifest(*out_dir, manifest);
        std::cerr << "profile: wrote row " << profile.row_index << " to "
                  << (*out_dir / "profile.csv").string() << '\n';
    } else {
        std::cout << csv;
    }
    return 0;
}

int cmd_pipeline(const fs::path& config_path, const fs::path& out_dir,
                 const CommonOpts& opts, const std::optional<std::string>& row) {
    KvConfig kv = KvConfig::load(config_path);
    SynthConfig config = parse_synth_config(kv);
    const std::vector<std::string> stage_lines = kv.get_all("denoise.stage");
    const auto row_key = kv.get("profile.row");
    const auto format_key = kv.get("output.format");
    kv.check_all_used();

    if (opts.seed) {
        config.seed = *opts.seed;
    }
    const FrameFormat format = resolve_format(opts, format_key);

    PipelineSpec spec;
    if (stage_lines.empty()) {
        spec = default_pipeline();
    } else {
        std::string joined;
        for (const std::string& line : stage_lines) {
            joined += line;
            joined += '\n';
        }
        spec = parse_pipeline(joined);
    }

    const std::optional<int> row_index =
        parse_row_arg(row ? *row : row_key.value_or("center"));
    if (row_index &&
        (*row_index < 0 || *row_index >= config.geometry.ny)) {
        // line_profile would catch this too, but only after the
        // simulation has run; reject before doing any work.
        throw DomainError("profile row " + std::to_string(*row_index) +
                          " out of range for ny=" +
                          std::to_string(config.geometry.ny));
    }

    const SimResult result = simulate_wavefield(config);
    ensure_dir(out_dir);

    ordered_json manifest = manifest_header("pipeline");
    manifest["config"] = {{"path", config_path.string()},
                          {"digest", config_digest(kv.source_text())}};
    manifest["seed"] = config.seed;
    manifest["rng_algorithm"] = result.meta.rng_algorithm;
    manifest["simulation"] = {{"dt_s", result.meta.dt_s},
                              {"steps", result.meta.steps},
                              {"cfl", result.meta.cfl},
                              {"sponge_cells", result.meta.sponge_cells},
                              {"source_off_step", result.meta.source_off_step}};
    manifest["format"] = format_name(format);
    manifest["stages"] = stage_list(spec);
    manifest["inputs"] = ordered_json::array();

    ordered_json outputs = ordered_json::array();
    for (size_t i = 0; i < result.clean.size(); ++i) {
        const std::string name = ordinal_name("clean", i, format);
        save_frame(result.clean[i], out_dir / name, format);
        outputs.push_back(frame_entry(name, "clean", result.clean[i]));
    }

    // The denoiser sees the noisy stack when noise is configured, the
    // clean one otherwise.
    std::vector<Frame> originals;
    std::vector<std::string> original_names;
    originals.reserve(result.clean.size());
    if (config.noise) {
        for (size_t i = 0; i < result.clean.size(); ++i) {
            NoisyFrame noisy = add_noise(result.clean[i], *config.noise,
                                         frame_noise_seed(config.seed, i));
            const std::string name = ordinal_name("noisy", i, format);
            save_frame(noisy.frame, out_dir / name, format);
            ordered_json entry = frame_entry(name, "noisy", noisy.frame);
            entry["injected_energy"] = noisy.injected_energy;
            outputs.push_back(std::move(entry));
            original_names.push_back(name);
            originals.push_back(std::move(noisy.frame));
        }
    } else {
        for (size_t i = 0; i < result.clean.size(); ++i) {
            original_names.push_back(ordinal_name("clean", i, format));
            originals.push_back(result.clean[i]);
        }
    }

    std::vector<Frame> denoised;
    std::vector<NoiseReport> reports;
    denoised.reserve(originals.size());
    reports.reserve(originals.size());
    for (size_t i = 0; i < originals.size(); ++i) {
        denoised.push_back(run_pipeline(originals[i], spec));
        const std::string name = ordinal_name("denoised", i, format);
        save_frame(denoised[i], out_dir / name, format);
        ordered_json entry = frame_entry(name, "denoised", denoised[i]);
        entry["source"] = original_names[i];
        outputs.push_back(std::move(entry));
        reports.push_back(
            noise_energy_removed(originals[i], denoised[i],
                                 fs::path(original_names[i]).stem().string()));
    }

    std::cout << report_table(reports);
    write_text(out_dir / "report.csv", report_csv(reports));
    outputs.push_back({{"path", "report.csv"}, {"kind", "report"}});

    const LineProfile profile =
        line_profile(originals.back(), denoised.back(), row_index);
    write_text(out_dir / "profile.csv", profile_csv(profile));
    outputs.push_back({{"path", "profile.csv"},
                       {"kind", "profile"},
                       {"row", profile.row_index},
                       {"source", original_names.back()}});

    manifest["outputs"] = std::move(outputs);
    write_manifest(out_dir, manifest);

    std::cerr << "pipeline: wrote " << result.clean.size()
              << " frame pair(s), report.csv and profile.csv to "
              << out_dir.string() << '\n';
    return 0;
}

}  // namespace wavescrub::cli
