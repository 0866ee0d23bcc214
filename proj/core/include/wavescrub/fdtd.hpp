#pragma once

#include "wavescrub/frame.hpp"
#include "wavescrub/noise.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wavescrub {

struct Material {
    double sound_speed_m_s = 4000.0;
    /// Wave speed inside the defect region.
    double defect_speed_m_s = 2000.0;
};

enum class DefectShape { disk, rectangle };

/// Defect region in scan coordinates (mm, origin at the raster corner).
struct DefectSpec {
    DefectShape shape = DefectShape::disk;
    double center_x_mm = 0.0;
    double center_y_mm = 0.0;
    /// disk: radius; rectangle: half extent along x.
    double size_x_mm = 0.0;
    /// rectangle: half extent along y (ignored for disk).
    double size_y_mm = 0.0;
};

/// Gaussian-in-time pulse; width is the FWHM in seconds.
struct SourcePulse {
    double width_s = 60e-9;
    double amplitude = 1.0;
    double center_time_s = 120e-9;
};

struct SynthConfig {
    ScanGeometry geometry;
    Material material;
    SourcePulse source;
    double source_x_mm = 0.0;
    double source_y_mm = 0.0;
    std::optional<DefectSpec> defect;
    std::vector<double> snapshot_times_s;
    std::optional<NoiseSpec> noise;
    std::uint64_t seed = 0;
    /// Time-step override; defaults to 0.4 * dx / c_max. Must satisfy the
    /// 2D CFL bound dt <= dx / (c_max * sqrt(2)).
    std::optional<double> dt_s;
    /// Simulated-duration override; defaults to the last snapshot time.
    std::optional<double> duration_s;
    /// Record the per-step discrete energy trace (diagnostic, in-memory
    /// only; not a config-file key).
    bool record_energy = false;
};

void validate(const SynthConfig& config);

struct SimMetadata {
    double dt_s = 0.0;
    long steps = 0;
    double cfl = 0.0;
    int sponge_cells = 0;
    /// First step at which the source term is numerically negligible.
    long source_off_step = 0;
    /// Identity of the noise generator paired with this module's outputs.
    std::string rng_algorithm;
};

struct SimResult {
    FrameStack clean;
    SimMetadata meta;
    /// Staggered discrete energy per step when record_energy was set:
    /// sum of (u_t)^2/(2 c^2) plus the symmetrized gradient product.
    std::vector<double> energy;
};

/// Integrates u_tt + sigma(x) u_t = c(x)^2 (u_xx + u_yy) with a
/// second-order leapfrog on the scan raster extended by a 20-cell sponge
/// collar (sigma quadratic in sponge depth, zero in the interior). The
/// source is injected additively at the nearest grid node. One frame per
/// snapshot time, taken at the nearest time step; frames carry the step
/// index as time_index and the realized time. Deterministic for a fixed
/// config.
SimResult simulate_wavefield(const SynthConfig& config);

} // namespace wavescrub
