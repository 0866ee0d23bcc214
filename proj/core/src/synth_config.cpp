#include "wavescrub/synth_config.hpp"
#include "wavescrub/errors.hpp"

namespace wavescrub {

SynthConfig parse_synth_config(const KvConfig& kv) {
    SynthConfig config;
    config.geometry = geometry_from_scan(kv.require_double("extent_x_mm"),
                                         kv.require_double("extent_y_mm"),
                                         kv.require_double("step_um"));
    config.material.sound_speed_m_s = kv.get_double("sound_speed_m_s").value_or(4000.0);
    config.material.defect_speed_m_s =
        kv.get_double("defect_speed_m_s").value_or(2000.0);

    config.source_x_mm = kv.require_double("source.x_mm");
    config.source_y_mm = kv.require_double("source.y_mm");
    config.source.width_s = kv.get_double("source.width_ns").value_or(60.0) * 1e-9;
    config.source.amplitude = kv.get_double("source.amplitude").value_or(1.0);
    config.source.center_time_s =
        kv.get_double("source.center_time_ns")
            .value_or(2.0 * config.source.width_s * 1e9) * 1e-9;

    if (auto shape = kv.get("defect.shape")) {
        DefectSpec defect;
        if (*shape == "disk") {
            defect.shape = DefectShape::disk;
            defect.size_x_mm = kv.require_double("defect.radius_mm");
            defect.size_y_mm = defect.size_x_mm;
        } else if (*shape == "rectangle") {
            defect.shape = DefectShape::rectangle;
            defect.size_x_mm = kv.require_double("defect.half_x_mm");
            defect.size_y_mm = kv.require_double("defect.half_y_mm");
        } else {
            throw ConfigError("defect.shape must be disk or rectangle, got '" +
                              *shape + "'");
        }
        defect.center_x_mm = kv.require_double("defect.center_x_mm");
        defect.center_y_mm = kv.require_double("defect.center_y_mm");
        config.defect = defect;
    }

    auto times_us = kv.get_double_list("snapshot_times_us");
    if (!times_us) {
        throw ConfigError("missing required key 'snapshot_times_us'");
    }
    config.snapshot_times_s.reserve(times_us->size());
    for (double t : *times_us) config.snapshot_times_s.push_back(t * 1e-6);

    if (auto sigma = kv.get_double("noise.sigma")) {
        config.noise = NoiseSpec{NoiseKind::gaussian, *sigma};
    }
    config.seed = kv.get_u64("seed").value_or(0);
    if (auto dt_ns = kv.get_double("dt_ns")) {
        config.dt_s = *dt_ns * 1e-9;
    }
    if (auto duration_us = kv.get_double("duration_us")) {
        config.duration_s = *duration_us * 1e-6;
    }

    validate(config);
    return config;
}

SynthConfig parse_synth_config(std::string_view text) {
    const KvConfig kv = KvConfig::parse(text);
    SynthConfig config = parse_synth_config(kv);
    kv.check_all_used();
    return config;
}

SynthConfig load_synth_config(const std::filesystem::path& path) {
    const KvConfig kv = KvConfig::load(path);
    SynthConfig config = parse_synth_config(kv);
    kv.check_all_used();
    return config;
}

} // namespace wavescrub
