#include "wavescrub/frame.hpp"
#include "wavescrub/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace wavescrub {

Frame::Frame(ScanGeometry geometry, std::vector<double> values,
             int time_index, std::optional<double> time_s)
    : geometry_(geometry),
      values_(std::move(values)),
      time_index_(time_index),
      time_s_(time_s) {
    if (geometry_.nx < 1 || geometry_.ny < 1 || !(geometry_.step_um > 0.0)) {
        throw DomainError("frame requires a valid scan geometry");
    }
    const auto expected = static_cast<size_t>(geometry_.sample_count());
    if (values_.size() != expected) {
        throw DimensionError("frame payload has " +
                             std::to_string(values_.size()) +
                             " values, geometry declares " +
                             std::to_string(expected));
    }
    for (size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DataError("non-finite value at linear index " +
                            std::to_string(i));
        }
    }
    if (time_index_ < 0) {
        throw DomainError("time_index must be nonnegative");
    }
}

FrameStack::FrameStack(std::vector<Frame> frames) : frames_(std::move(frames)) {
    if (frames_.empty()) {
        throw DimensionError("frame stack must be nonempty");
    }
    for (size_t i = 1; i < frames_.size(); ++i) {
        if (!frames_[i].compatible_with(frames_[0])) {
            throw DimensionError("frame " + std::to_string(i) +
                                 " has a different scan geometry");
        }
        if (frames_[i].time_index() <= frames_[i - 1].time_index()) {
            throw DimensionError(
                "time indices must be strictly increasing (frame " +
                std::to_string(i) + ")");
        }
    }
}

} // namespace wavescrub
