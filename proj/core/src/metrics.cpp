#include "wavescrub/metrics.hpp"
#include "wavescrub/errors.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace wavescrub {
namespace {

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_2dp(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void check_compatible(const Frame& a, const Frame& b) {
    if (!a.compatible_with(b)) {
        throw DimensionError("frames have different scan geometries");
    }
}

} // namespace

NoiseReport noise_energy_removed(const Frame& original, const Frame& denoised,
                                 std::string label) {
    check_compatible(original, denoised);
    const auto a = original.values();
    const auto b = denoised.values();
    // Kahan-compensated row-major sum; the order is part of the contract.
    double sum = 0.0, comp = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        const double y = d * d - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    NoiseReport report;
    report.frame_label = std::move(label);
    report.energy_removed = sum;
    report.pixel_count = static_cast<std::int64_t>(a.size());
    report.mean_squared_difference = sum / static_cast<double>(a.size());
    return report;
}

LineProfile line_profile(const Frame& original, const Frame& denoised,
                         std::optional<int> row) {
    check_compatible(original, denoised);
    const int ny = original.ny();
    const int r = row.value_or(ny / 2);
    if (r < 0 || r >= ny) {
        throw DomainError("row " + std::to_string(r) + " out of range [0, " +
                          std::to_string(ny) + ")");
    }
    LineProfile profile;
    profile.row_index = r;
    const int nx = original.nx();
    const double step_mm = original.geometry().step_mm();
    profile.positions_mm.reserve(nx);
    profile.original.reserve(nx);
    profile.denoised.reserve(nx);
    for (int c = 0; c < nx; ++c) {
        profile.positions_mm.push_back(c * step_mm);
        profile.original.push_back(original(r, c));
        profile.denoised.push_back(denoised(r, c));
    }
    return profile;
}

std::string report_table(const std::vector<NoiseReport>& reports) {
    if (reports.empty()) {
        throw DomainError("report table needs at least one report");
    }
    const std::string row_label = "Energy of the noise removed";
    std::vector<std::string> values;
    values.reserve(reports.size());
    std::vector<size_t> widths;
    for (const NoiseReport& r : reports) {
        values.push_back(format_2dp(r.energy_removed));
        widths.push_back(std::max(r.frame_label.size(), values.back().size()));
    }
    std::ostringstream out;
    out << std::string(row_label.size(), ' ');
    for (size_t i = 0; i < reports.size(); ++i) {
        out << "  " << std::setw(static_cast<int>(widths[i]))
            << reports[i].frame_label;
    }
    out << '\n' << row_label;
    for (size_t i = 0; i < values.size(); ++i) {
        out << "  " << std::setw(static_cast<int>(widths[i])) << values[i];
    }
    out << '\n';
    return out.str();
}

std::string report_csv(const std::vector<NoiseReport>& reports) {
    if (reports.empty()) {
        throw DomainError("report CSV needs at least one report");
    }
    std::ostringstream out;
    out << "frame,energy_removed,pixel_count,msd\n";
    for (const NoiseReport& r : reports) {
        out << r.frame_label << ',' << format_full(r.energy_removed) << ','
            << r.pixel_count << ',' << format_full(r.mean_squared_difference)
            << '\n';
    }
    return out.str();
}

std::string profile_csv(const LineProfile& profile) {
    std::ostringstream out;
    out << "position_mm,original,denoised\n";
    for (size_t i = 0; i < profile.positions_mm.size(); ++i) {
        out << format_full(profile.positions_mm[i]) << ','
            << format_full(profile.original[i]) << ','
            << format_full(profile.denoised[i]) << '\n';
    }
    return out.str();
}

} // namespace wavescrub
