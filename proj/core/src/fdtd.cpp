#include "wavescrub/fdtd.hpp"
#include "wavescrub/errors.hpp"
#include "wavescrub/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

namespace wavescrub {
namespace {

constexpr int kSpongeCells = 20;
constexpr double kDefaultCflFactor = 0.4;
// Peak damping, expressed as gamma = sigma*dt/2 at the outermost sponge
// cell. Quadratic grading keeps the entry reflection small.
constexpr double kSpongeGammaMax = 0.25;

double max_speed(const SynthConfig& config) {
    double c = config.material.sound_speed_m_s;
    if (config.defect) c = std::max(c, config.material.defect_speed_m_s);
    return c;
}

double fwhm_to_sigma(double fwhm) {
    return fwhm / (2.0 * std::sqrt(2.0 * std::log(2.0)));
}

// std::to_string(double) prints %f, which renders nanosecond-scale times
// as 0.000000; diagnostics use %g instead.
std::string fmt_seconds(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", t);
    return buf;
}

struct Grid {
    int width = 0;   // nx + 2 * sponge
    int height = 0;  // ny + 2 * sponge
    double dx_m = 0.0;

    size_t at(int row, int col) const {
        return static_cast<size_t>(row) * width + col;
    }
};

} // namespace

void validate(const SynthConfig& config) {
    const ScanGeometry& g = config.geometry;
    if (g.nx < 2 || g.ny < 2 || !(g.step_um > 0.0)) {
        throw ConfigError("synth config needs a valid scan geometry");
    }
    if (!(config.material.sound_speed_m_s > 0.0) ||
        !(config.material.defect_speed_m_s > 0.0)) {
        throw ConfigError("material speeds must be positive");
    }
    if (!(config.source.width_s > 0.0)) {
        throw ConfigError("source pulse width must be positive");
    }
    if (config.source_x_mm < 0.0 || config.source_x_mm > g.extent_x_mm ||
        config.source_y_mm < 0.0 || config.source_y_mm > g.extent_y_mm) {
        throw ConfigError("source position lies outside the scan area");
    }
    if (config.snapshot_times_s.empty()) {
        throw ConfigError("at least one snapshot time is required");
    }
    for (size_t i = 0; i < config.snapshot_times_s.size(); ++i) {
        if (!(config.snapshot_times_s[i] >= 0.0)) {
            throw ConfigError("snapshot times must be nonnegative");
        }
        if (i > 0 && !(config.snapshot_times_s[i] > config.snapshot_times_s[i - 1])) {
            throw ConfigError("snapshot times must be strictly increasing");
        }
    }
    if (config.defect) {
        const DefectSpec& d = *config.defect;
        const double hx = d.size_x_mm;
        const double hy = d.shape == DefectShape::disk ? d.size_x_mm : d.size_y_mm;
        if (!(hx > 0.0) || !(hy > 0.0)) {
            throw ConfigError("defect size must be positive");
        }
        if (d.center_x_mm - hx < 0.0 || d.center_x_mm + hx > g.extent_x_mm ||
            d.center_y_mm - hy < 0.0 || d.center_y_mm + hy > g.extent_y_mm) {
            throw ConfigError("defect extends outside the simulation domain");
        }
    }
    if (config.noise && !(config.noise->sigma >= 0.0)) {
        throw ConfigError("noise sigma must be nonnegative");
    }

    const double dx = g.step_um * 1e-6;
    const double c_max = max_speed(config);
    const double dt = config.dt_s ? *config.dt_s : kDefaultCflFactor * dx / c_max;
    if (!(dt > 0.0)) {
        throw ConfigError("time step must be positive");
    }
    const double dt_limit = dx / (c_max * std::numbers::sqrt2);
    if (dt > dt_limit) {
        throw ConfigError(
            "CFL condition violated: dt=" + fmt_seconds(dt) +
            " s exceeds dx/(c*sqrt(2))=" + fmt_seconds(dt_limit) + " s");
    }
    if (config.duration_s) {
        const long duration_steps = std::lround(*config.duration_s / dt);
        for (double t : config.snapshot_times_s) {
            if (std::lround(t / dt) > duration_steps) {
                throw DomainError("snapshot at " + fmt_seconds(t) +
                                  " s lies beyond the simulated duration");
            }
        }
    }
}

SimResult simulate_wavefield(const SynthConfig& config) {
    validate(config);
    const ScanGeometry& g = config.geometry;
    const double dx = g.step_um * 1e-6;
    const double c_max = max_speed(config);
    const double dt = config.dt_s ? *config.dt_s : kDefaultCflFactor * dx / c_max;

    // Snapshot steps; distinct or the stack ordering would break.
    std::vector<long> snap_steps;
    snap_steps.reserve(config.snapshot_times_s.size());
    for (double t : config.snapshot_times_s) {
        snap_steps.push_back(std::lround(t / dt));
    }
    for (size_t i = 1; i < snap_steps.size(); ++i) {
        if (snap_steps[i] == snap_steps[i - 1]) {
            throw ConfigError("snapshot times " +
                              fmt_seconds(config.snapshot_times_s[i - 1]) +
                              " and " + fmt_seconds(config.snapshot_times_s[i]) +
                              " s resolve to the same time step at dt=" +
                              fmt_seconds(dt) + " s");
        }
    }
    long total_steps = snap_steps.back();
    if (config.duration_s) {
        total_steps = std::max(total_steps, std::lround(*config.duration_s / dt));
    }

    const Grid grid{g.nx + 2 * kSpongeCells, g.ny + 2 * kSpongeCells, dx};
    const size_t cells = static_cast<size_t>(grid.width) * grid.height;

    // Squared-speed map; the defect region runs at defect_speed.
    std::vector<double> c2(cells, config.material.sound_speed_m_s *
                                      config.material.sound_speed_m_s);
    if (config.defect) {
        const DefectSpec& d = *config.defect;
        const double step_mm = g.step_mm();
        const double v2 = config.material.defect_speed_m_s *
                          config.material.defect_speed_m_s;
        for (int r = 0; r < g.ny; ++r) {
            const double y = r * step_mm;
            for (int c = 0; c < g.nx; ++c) {
                const double x = c * step_mm;
                bool inside = false;
                if (d.shape == DefectShape::disk) {
                    const double ddx = x - d.center_x_mm, ddy = y - d.center_y_mm;
                    inside = ddx * ddx + ddy * ddy <= d.size_x_mm * d.size_x_mm;
                } else {
                    inside = std::abs(x - d.center_x_mm) <= d.size_x_mm &&
                             std::abs(y - d.center_y_mm) <= d.size_y_mm;
                }
                if (inside) {
                    c2[grid.at(r + kSpongeCells, c + kSpongeCells)] = v2;
                }
            }
        }
    }

    // Telegraph damping gamma = sigma*dt/2, quadratic in sponge depth.
    // The update divides by (1+gamma) and scales the previous level by
    // (1-gamma); this form dissipates the staggered discrete energy
    // monotonically, which is what the sponge invariant asks for.
    std::vector<double> gamma(cells, 0.0);
    for (int r = 0; r < grid.height; ++r) {
        const int depth_r = std::max({0, kSpongeCells - r,
                                      r - (grid.height - 1 - kSpongeCells)});
        for (int c = 0; c < grid.width; ++c) {
            const int depth_c = std::max({0, kSpongeCells - c,
                                          c - (grid.width - 1 - kSpongeCells)});
            const double s = static_cast<double>(std::max(depth_r, depth_c)) /
                             kSpongeCells;
            gamma[grid.at(r, c)] = kSpongeGammaMax * s * s;
        }
    }

    const int src_row = kSpongeCells +
                        static_cast<int>(std::lround(config.source_y_mm / g.step_mm()));
    const int src_col = kSpongeCells +
                        static_cast<int>(std::lround(config.source_x_mm / g.step_mm()));
    const size_t src_idx = grid.at(src_row, src_col);

    const double tau = fwhm_to_sigma(config.source.width_s);
    const double t0 = config.source.center_time_s;
    const auto source_at = [&](double t) {
        const double arg = (t - t0) / tau;
        return config.source.amplitude * std::exp(-0.5 * arg * arg);
    };
    // After t0 + 8*tau the pulse is below ~1.3e-14 of its peak.
    const long source_off_step =
        std::max(0L, static_cast<long>(std::ceil((t0 + 8.0 * tau) / dt)));

    std::vector<double> u_prev(cells, 0.0), u(cells, 0.0), u_next(cells, 0.0);
    const double dt2 = dt * dt;
    const double inv_dx2 = 1.0 / (dx * dx);

    std::vector<Frame> frames;
    frames.reserve(snap_steps.size());
    size_t next_snap = 0;
    const auto capture = [&](long step, const std::vector<double>& field) {
        std::vector<double> values(static_cast<size_t>(g.sample_count()));
        for (int r = 0; r < g.ny; ++r) {
            const size_t src_off = grid.at(r + kSpongeCells, kSpongeCells);
            std::copy_n(field.begin() + src_off, g.nx,
                        values.begin() + static_cast<size_t>(r) * g.nx);
        }
        frames.emplace_back(g, std::move(values), static_cast<int>(step),
                            step * dt);
    };
    if (snap_steps[0] == 0) {
        capture(0, u);
        ++next_snap;
    }

    std::vector<double> energy;
    if (config.record_energy) energy.reserve(static_cast<size_t>(total_steps));

    for (long n = 0; n < total_steps; ++n) {
        const double t = n * dt;
        // Outermost ring stays zero (Dirichlet); the sponge in front of it
        // absorbs what would otherwise reflect.
        for (int r = 1; r < grid.height - 1; ++r) {
            for (int c = 1; c < grid.width - 1; ++c) {
                const size_t i = grid.at(r, c);
                const double lap =
                    (u[i - 1] + u[i + 1] + u[i - grid.width] + u[i + grid.width] -
                     4.0 * u[i]) * inv_dx2;
                const double gm = gamma[i];
                u_next[i] = (2.0 * u[i] - (1.0 - gm) * u_prev[i] +
                             dt2 * c2[i] * lap) /
                            (1.0 + gm);
            }
        }
        u_next[src_idx] += dt2 * source_at(t);

        if (config.record_energy) {
            // Staggered energy: kinetic at the half step plus the
            // symmetrized gradient product. Exactly conserved by the
            // undamped leapfrog, strictly dissipated by the sponge.
            double kin = 0.0;
            for (size_t i = 0; i < cells; ++i) {
                const double v = (u_next[i] - u[i]) / dt;
                kin += 0.5 * v * v / c2[i];
            }
            double pot = 0.0;
            for (int r = 0; r < grid.height; ++r) {
                for (int c = 0; c + 1 < grid.width; ++c) {
                    const size_t i = grid.at(r, c);
                    pot += 0.5 * (u[i + 1] - u[i]) * (u_next[i + 1] - u_next[i]) *
                           inv_dx2;
                }
            }
            for (int r = 0; r + 1 < grid.height; ++r) {
                for (int c = 0; c < grid.width; ++c) {
                    const size_t i = grid.at(r, c);
                    pot += 0.5 * (u[i + grid.width] - u[i]) *
                           (u_next[i + grid.width] - u_next[i]) * inv_dx2;
                }
            }
            energy.push_back(kin + pot);
        }

        std::swap(u_prev, u);
        std::swap(u, u_next);
        const long step = n + 1;
        if (next_snap < snap_steps.size() && snap_steps[next_snap] == step) {
            capture(step, u);
            ++next_snap;
        }
    }

    SimMetadata meta;
    meta.dt_s = dt;
    meta.steps = total_steps;
    meta.cfl = c_max * dt / dx;
    meta.sponge_cells = kSpongeCells;
    meta.source_off_step = source_off_step;
    meta.rng_algorithm = GaussianStream::kAlgorithm;
    return SimResult{FrameStack(std::move(frames)), std::move(meta),
                     std::move(energy)};
}

} // namespace wavescrub
