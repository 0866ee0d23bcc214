#pragma once

namespace wavescrub {

/// Physical raster of a C-scan: extent in mm, step in micrometres, and the
/// resulting sample counts. Sample counts follow the inclusive-endpoint
/// rule nx = floor(extent/step) + 1, so a 10 mm scan at 50 um steps gives
/// 201 samples per axis.
struct ScanGeometry {
    double extent_x_mm = 0.0;
    double extent_y_mm = 0.0;
    double step_um = 0.0;
    int nx = 0;
    int ny = 0;

    /// Grid spacing in mm (step_um / 1000).
    double step_mm() const { return step_um / 1000.0; }

    long long sample_count() const {
        return static_cast<long long>(nx) * static_cast<long long>(ny);
    }

    friend bool operator==(const ScanGeometry&, const ScanGeometry&) = default;
};

/// Builds a geometry from physical scan parameters.
/// Throws DomainError if any argument is nonpositive or the step exceeds
/// either extent.
ScanGeometry geometry_from_scan(double extent_x_mm, double extent_y_mm,
                                double step_um);

/// Builds a geometry from sample counts, deriving the canonical extents
/// (nx-1)*step and (ny-1)*step. Used when reading frame files, whose
/// headers carry only counts and step.
ScanGeometry geometry_from_counts(int nx, int ny, double step_um);

} // namespace wavescrub
