#pragma once

#include "wavescrub/frame.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace wavescrub {

/// Analytic test images: cheap stand-ins for full FDTD runs.
///
/// wavefront_rings  concentric cosine rings under a Gaussian radial
///                  envelope, peaking on the circle of radius
///                  ring_radius_mm (the look of a circular wavefront).
/// impulse_field    exactly impulse_count isolated nonzero pixels at
///                  seeded-random distinct positions.
/// flat             constant field.
enum class PhantomKind { wavefront_rings, impulse_field, flat };

/// Parses the kind name; throws DomainError on anything unknown.
PhantomKind parse_phantom_kind(std::string_view name);

struct PhantomParams {
    double value = 0.0;           // flat level
    double amplitude = 1.0;       // ring / impulse amplitude, nonzero
    double ring_radius_mm = 2.5;  // packet center radius
    /// 2 mm matches low-MHz ultrasound in stiff solids and keeps the
    /// oscillation well resolved by the windowed filters.
    double wavelength_mm = 2.0;
    double ring_width_mm = 2.0;   // Gaussian envelope sigma
    int impulse_count = 10;
    /// Ring center; defaults to the frame center.
    std::optional<std::pair<double, double>> center_mm;
};

Frame make_phantom(PhantomKind kind, const ScanGeometry& geometry,
                   const PhantomParams& params, std::uint64_t seed);

} // namespace wavescrub
