#pragma once

#include "wavescrub/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wavescrub {

/// One wavefield image bound to a scan raster. Values are dimensionless
/// intensities stored row-major, row 0 at the smallest y. Frames are
/// immutable once constructed and safe to share across threads.
class Frame {
public:
    /// Validates on construction: the value count must be ny*nx and every
    /// entry finite. Throws DimensionError / DataError otherwise.
    Frame(ScanGeometry geometry, std::vector<double> values,
          int time_index = 0, std::optional<double> time_s = std::nullopt);

    const ScanGeometry& geometry() const { return geometry_; }
    int nx() const { return geometry_.nx; }
    int ny() const { return geometry_.ny; }

    double operator()(int row, int col) const {
        return values_[static_cast<size_t>(row) * geometry_.nx + col];
    }
    std::span<const double> values() const { return values_; }

    /// Position within a stack. Not persisted by the frame file formats.
    int time_index() const { return time_index_; }
    /// Physical time of the snapshot, when the frame came from synth.
    std::optional<double> time_s() const { return time_s_; }

    /// Frames are compatible iff their geometries are equal.
    bool compatible_with(const Frame& other) const {
        return geometry_ == other.geometry_;
    }

    /// Equality over geometry, values, time_index and time_s.
    friend bool operator==(const Frame&, const Frame&) = default;

private:
    ScanGeometry geometry_;
    std::vector<double> values_;
    int time_index_ = 0;
    std::optional<double> time_s_;
};

/// Ordered, geometry-consistent sequence of frames.
class FrameStack {
public:
    /// Throws DimensionError if empty, geometries differ, or time indices
    /// are not strictly increasing.
    explicit FrameStack(std::vector<Frame> frames);

    const std::vector<Frame>& frames() const { return frames_; }
    size_t size() const { return frames_.size(); }
    const Frame& operator[](size_t i) const { return frames_[i]; }
    const ScanGeometry& geometry() const { return frames_.front().geometry(); }

private:
    std::vector<Frame> frames_;
};

} // namespace wavescrub
