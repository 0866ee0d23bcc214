#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wavescrub/errors.hpp"

namespace fs = std::filesystem;

namespace {

std::optional<fs::path> to_path(const std::optional<std::string>& s) {
    if (!s) {
        return std::nullopt;
    }
    return fs::path(*s);
}

std::vector<fs::path> to_paths(const std::vector<std::string>& strings) {
    std::vector<fs::path> paths;
    paths.reserve(strings.size());
    for (const std::string& s : strings) {
        paths.emplace_back(s);
    }
    return paths;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavescrub: scanned-wavefield denoising toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", WAVESCRUB_VERSION);

    const char* format_help = "Frame file format: csv, f64le or pgm (default csv)";
    const char* seed_help = "Noise seed; overrides the config file's seed";

    std::string synth_config, synth_out;
    wavescrub::cli::CommonOpts synth_opts;
    CLI::App* synth = app.add_subcommand(
        "synth", "Simulate wavefield frames from a config file");
    synth->add_option("--config", synth_config, "Synthesis config file")
        ->required();
    synth->add_option("--out", synth_out, "Output directory")->required();
    synth->add_option("--format", synth_opts.format_name, format_help);
    synth->add_option("--seed", synth_opts.seed, seed_help);

    std::optional<std::string> denoise_config;
    std::string denoise_out;
    std::vector<std::string> denoise_frames;
    wavescrub::cli::CommonOpts denoise_opts;
    CLI::App* denoise = app.add_subcommand(
        "denoise", "Run a filter pipeline over frame files");
    denoise->add_option("--config", denoise_config,
                        "Pipeline config file, one stage per line "
                        "(default: median h=1, wiener h=2 nv=auto)");
    denoise->add_option("--out", denoise_out, "Output directory")->required();
    denoise->add_option("--format", denoise_opts.format_name, format_help);
    denoise->add_option("frames", denoise_frames, "Frame files to denoise")
        ->required();

    std::vector<std::string> metric_originals, metric_denoised;
    std::optional<std::string> metric_out;
    CLI::App* metric = app.add_subcommand(
        "metric", "Report the noise energy removed per original/denoised pair");
    metric->add_option("--original", metric_originals,
                       "Original frame file (repeatable)")
        ->required();
    metric->add_option("--denoised", metric_denoised,
                       "Denoised frame file (repeatable, paired in order)")
        ->required();
    metric->add_option("--out", metric_out,
                       "Directory for report.csv (table always goes to stdout)");

    std::string profile_original, profile_denoised, profile_row = "center";
    std::optional<std::string> profile_out;
    CLI::App* profile = app.add_subcommand(
        "profile", "Extract one row of an original/denoised pair as CSV");
    profile->add_option("--original", profile_original, "Original frame file")
        ->required();
    profile->add_option("--denoised", profile_denoised, "Denoised frame file")
        ->required();
    profile->add_option("--row", profile_row,
                        "Row index, or 'center' (default)");
    profile->add_option("--out", profile_out,
                        "Directory for profile.csv (default: stdout)");

    std::string pipeline_config, pipeline_out;
    std::optional<std::string> pipeline_row;
    wavescrub::cli::CommonOpts pipeline_opts;
    CLI::App* pipeline = app.add_subcommand(
        "pipeline",
        "synth + denoise + metric + profile in one run from one config");
    pipeline->add_option("--config", pipeline_config,
                         "Composite config file (synthesis keys plus "
                         "denoise.stage/profile.row/output.format)")
        ->required();
    pipeline->add_option("--out", pipeline_out, "Output directory")->required();
    pipeline->add_option("--format", pipeline_opts.format_name, format_help);
    pipeline->add_option("--seed", pipeline_opts.seed, seed_help);
    pipeline->add_option("--row", pipeline_row,
                         "Profile row; overrides the config's profile.row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n'
                  << "run '" << argv[0] << " --help' for usage\n";
        return 2;
    }

    try {
        if (synth->parsed()) {
            return wavescrub::cli::cmd_synth(synth_config, synth_out,
                                             synth_opts);
        }
        if (denoise->parsed()) {
            return wavescrub::cli::cmd_denoise(to_path(denoise_config),
                                               to_paths(denoise_frames),
                                               denoise_out, denoise_opts);
        }
        if (metric->parsed()) {
            return wavescrub::cli::cmd_metric(to_paths(metric_originals),
                                              to_paths(metric_denoised),
                                              to_path(metric_out));
        }
        if (profile->parsed()) {
            return wavescrub::cli::cmd_profile(profile_original,
                                               profile_denoised, profile_row,
                                               to_path(profile_out));
        }
        if (pipeline->parsed()) {
            return wavescrub::cli::cmd_pipeline(pipeline_config, pipeline_out,
                                                pipeline_opts, pipeline_row);
        }
    } catch (const wavescrub::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const wavescrub::Error& e) {
        // Config, format, dimension, data and domain problems are all
        // usage-class failures.
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
