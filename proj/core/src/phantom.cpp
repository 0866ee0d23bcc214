#include "wavescrub/phantom.hpp"
#include "wavescrub/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace wavescrub {
namespace {

Frame make_rings(const ScanGeometry& g, const PhantomParams& p) {
    if (!(p.wavelength_mm > 0.0) || !(p.ring_width_mm > 0.0)) {
        throw DomainError("rings need positive wavelength and width");
    }
    const double step = g.step_mm();
    const auto [cx, cy] = p.center_mm.value_or(
        std::pair{(g.nx - 1) * step / 2.0, (g.ny - 1) * step / 2.0});
    const double k = 2.0 * std::numbers::pi / p.wavelength_mm;
    const double inv_2w2 = 1.0 / (2.0 * p.ring_width_mm * p.ring_width_mm);
    std::vector<double> values(static_cast<size_t>(g.sample_count()));
    for (int r = 0; r < g.ny; ++r) {
        const double dy = r * step - cy;
        for (int c = 0; c < g.nx; ++c) {
            const double dx = c * step - cx;
            const double radius = std::sqrt(dx * dx + dy * dy);
            const double off = radius - p.ring_radius_mm;
            values[static_cast<size_t>(r) * g.nx + c] =
                p.amplitude * std::cos(k * off) * std::exp(-off * off * inv_2w2);
        }
    }
    return Frame(g, std::move(values));
}

Frame make_impulses(const ScanGeometry& g, const PhantomParams& p,
                    std::uint64_t seed) {
    if (p.amplitude == 0.0) {
        throw DomainError("impulse amplitude must be nonzero");
    }
    const auto total = static_cast<std::uint64_t>(g.sample_count());
    if (p.impulse_count < 0 ||
        static_cast<std::uint64_t>(p.impulse_count) > total) {
        throw DomainError("impulse_count out of range");
    }
    std::vector<double> values(static_cast<size_t>(total), 0.0);
    // Distinct positions by rejection; modulo bias is irrelevant here and
    // the draw stays identical across platforms.
    std::mt19937_64 rng(seed);
    std::set<std::uint64_t> taken;
    while (taken.size() < static_cast<size_t>(p.impulse_count)) {
        const std::uint64_t idx = rng() % total;
        if (taken.insert(idx).second) {
            values[static_cast<size_t>(idx)] = p.amplitude;
        }
    }
    return Frame(g, std::move(values));
}

} // namespace

PhantomKind parse_phantom_kind(std::string_view name) {
    if (name == "wavefront_rings") return PhantomKind::wavefront_rings;
    if (name == "impulse_field") return PhantomKind::impulse_field;
    if (name == "flat") return PhantomKind::flat;
    throw DomainError("unknown phantom kind '" + std::string(name) + "'");
}

Frame make_phantom(PhantomKind kind, const ScanGeometry& geometry,
                   const PhantomParams& params, std::uint64_t seed) {
    switch (kind) {
        case PhantomKind::flat: {
            std::vector<double> values(
                static_cast<size_t>(geometry.sample_count()), params.value);
            return Frame(geometry, std::move(values));
        }
        case PhantomKind::wavefront_rings:
            return make_rings(geometry, params);
        case PhantomKind::impulse_field:
            return make_impulses(geometry, params, seed);
    }
    throw DomainError("unhandled phantom kind");
}

} // namespace wavescrub
