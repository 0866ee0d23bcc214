#include "wavescrub/geometry.hpp"
#include "wavescrub/errors.hpp"

#include <cmath>
#include <string>

namespace wavescrub {
namespace {

// floor(extent/step) with a relative guard so that exact multiples that
// land a hair below an integer (from decimal-to-binary conversion) still
// count the endpoint. Keeps the count monotone in 1/step.
int samples_along(double extent_mm, double step_um) {
    const double ratio = extent_mm * 1000.0 / step_um;
    return static_cast<int>(std::floor(ratio * (1.0 + 1e-12) + 1e-12)) + 1;
}

} // namespace

ScanGeometry geometry_from_scan(double extent_x_mm, double extent_y_mm,
                                double step_um) {
    if (!(extent_x_mm > 0.0) || !(extent_y_mm > 0.0) || !(step_um > 0.0)) {
        throw DomainError("scan geometry requires positive extents and step");
    }
    if (step_um > extent_x_mm * 1000.0 || step_um > extent_y_mm * 1000.0) {
        throw DomainError("step " + std::to_string(step_um) +
                          " um exceeds scan extent");
    }
    ScanGeometry g;
    g.extent_x_mm = extent_x_mm;
    g.extent_y_mm = extent_y_mm;
    g.step_um = step_um;
    g.nx = samples_along(extent_x_mm, step_um);
    g.ny = samples_along(extent_y_mm, step_um);
    return g;
}

ScanGeometry geometry_from_counts(int nx, int ny, double step_um) {
    if (nx < 2 || ny < 2) {
        throw DomainError("frame needs at least 2 samples per axis, got " +
                          std::to_string(nx) + "x" + std::to_string(ny));
    }
    if (!(step_um > 0.0)) {
        throw DomainError("step must be positive");
    }
    ScanGeometry g;
    g.step_um = step_um;
    g.nx = nx;
    g.ny = ny;
    g.extent_x_mm = (nx - 1) * step_um / 1000.0;
    g.extent_y_mm = (ny - 1) * step_um / 1000.0;
    return g;
}

} // namespace wavescrub
