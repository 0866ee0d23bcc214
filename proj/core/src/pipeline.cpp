#include "wavescrub/pipeline.hpp"
#include "wavescrub/errors.hpp"

#include <charconv>
#include <sstream>

namespace wavescrub {
namespace {

const char* kind_name(FilterKind kind) {
    switch (kind) {
        case FilterKind::adaptive_wiener: return "wiener";
        case FilterKind::gaussian: return "gaussian";
        case FilterKind::median: return "median";
        case FilterKind::box: return "box";
    }
    return "?";
}

double parse_number(std::string_view token, const std::string& context) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ConfigError(context + ": cannot parse number '" +
                          std::string(token) + "'");
    }
    return value;
}

void validate_stage(const FilterStage& stage, size_t index) {
    const std::string ctx = "stage " + std::to_string(index + 1) + " (" +
                            kind_name(stage.kind) + ")";
    switch (stage.kind) {
        case FilterKind::gaussian:
            if (!(stage.sigma_px > 0.0)) {
                throw ConfigError(ctx + ": sigma must be positive");
            }
            break;
        case FilterKind::adaptive_wiener:
            if (stage.noise_variance && !(*stage.noise_variance >= 0.0)) {
                throw ConfigError(ctx + ": nv must be nonnegative or auto");
            }
            [[fallthrough]];
        case FilterKind::median:
        case FilterKind::box:
            if (stage.window.half_width < 0) {
                throw ConfigError(ctx + ": h must be nonnegative");
            }
            break;
    }
}

} // namespace

void validate(const PipelineSpec& spec) {
    if (spec.stages.empty()) {
        throw ConfigError("pipeline must have at least one stage");
    }
    for (size_t i = 0; i < spec.stages.size(); ++i) {
        validate_stage(spec.stages[i], i);
    }
}

Frame apply_stage(const Frame& frame, const FilterStage& stage) {
    switch (stage.kind) {
        case FilterKind::adaptive_wiener:
            return adaptive_wiener(frame, stage.window, stage.noise_variance);
        case FilterKind::gaussian:
            return gaussian_smooth(frame, stage.sigma_px);
        case FilterKind::median:
            return median_filter(frame, stage.window);
        case FilterKind::box:
            return box_filter(frame, stage.window);
    }
    throw ConfigError("unhandled filter kind");
}

Frame run_pipeline(const Frame& frame, const PipelineSpec& spec) {
    validate(spec);
    Frame out = frame;
    for (size_t i = 0; i < spec.stages.size(); ++i) {
        const std::string ctx = "stage " + std::to_string(i + 1) + " (" +
                                kind_name(spec.stages[i].kind) + "): ";
        try {
            out = apply_stage(out, spec.stages[i]);
        } catch (const DomainError& e) {
            throw DomainError(ctx + e.what());
        } catch (const ConfigError& e) {
            throw ConfigError(ctx + e.what());
        }
    }
    return out;
}

PipelineSpec parse_pipeline(std::string_view text) {
    PipelineSpec spec;
    std::istringstream lines{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream tokens{line};
        std::string head;
        if (!(tokens >> head) || head[0] == '#') continue;

        const std::string ctx = "pipeline line " + std::to_string(line_no);
        FilterStage stage;
        if (head == "wiener") {
            stage.kind = FilterKind::adaptive_wiener;
        } else if (head == "gaussian") {
            stage.kind = FilterKind::gaussian;
        } else if (head == "median") {
            stage.kind = FilterKind::median;
        } else if (head == "box") {
            stage.kind = FilterKind::box;
        } else {
            throw ConfigError(ctx + ": unknown filter '" + head + "'");
        }

        std::string tok;
        while (tokens >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) {
                throw ConfigError(ctx + ": expected key=value, got '" + tok + "'");
            }
            const std::string_view key = std::string_view(tok).substr(0, eq);
            const std::string_view val = std::string_view(tok).substr(eq + 1);
            if (key == "h" && stage.kind != FilterKind::gaussian) {
                stage.window.half_width =
                    static_cast<int>(parse_number(val, ctx));
            } else if (key == "sigma" && stage.kind == FilterKind::gaussian) {
                stage.sigma_px = parse_number(val, ctx);
            } else if (key == "nv" && stage.kind == FilterKind::adaptive_wiener) {
                if (val == "auto") {
                    stage.noise_variance = std::nullopt;
                } else {
                    stage.noise_variance = parse_number(val, ctx);
                }
            } else {
                throw ConfigError(ctx + ": parameter '" + std::string(key) +
                                  "' does not apply to " + head);
            }
        }
        spec.stages.push_back(stage);
    }
    validate(spec);
    return spec;
}

std::string format_pipeline(const PipelineSpec& spec) {
    std::ostringstream out;
    for (const FilterStage& stage : spec.stages) {
        out << kind_name(stage.kind);
        switch (stage.kind) {
            case FilterKind::gaussian:
                out << " sigma=" << stage.sigma_px;
                break;
            case FilterKind::adaptive_wiener:
                out << " h=" << stage.window.half_width << " nv=";
                if (stage.noise_variance) {
                    out << *stage.noise_variance;
                } else {
                    out << "auto";
                }
                break;
            case FilterKind::median:
            case FilterKind::box:
                out << " h=" << stage.window.half_width;
                break;
        }
        out << '\n';
    }
    return out.str();
}

PipelineSpec default_pipeline() {
    PipelineSpec spec;
    spec.stages.push_back({FilterKind::median, WindowSpec{1}, 1.0, std::nullopt});
    FilterStage wiener;
    wiener.kind = FilterKind::adaptive_wiener;
    wiener.window = WindowSpec{2};
    wiener.noise_variance = std::nullopt;
    spec.stages.push_back(wiener);
    return spec;
}

} // namespace wavescrub
