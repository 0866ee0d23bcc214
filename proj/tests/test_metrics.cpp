#include "doctest.h"

#include "support.hpp"
#include "wavescrub/errors.hpp"
#include "wavescrub/metrics.hpp"

#include <cmath>
#include <string>
#include <vector>

using namespace wavescrub;
using namespace testsup;

TEST_CASE("identical frames remove zero energy") {
    const Frame f = random_frame(16, 16, 1);
    const NoiseReport r = noise_energy_removed(f, f);
    CHECK(r.energy_removed == 0.0);
    CHECK(r.mean_squared_difference == 0.0);
    CHECK(r.pixel_count == 256);
}

TEST_CASE("all-ones vs all-zeros counts the pixels") {
    const Frame ones = constant_frame(201, 201, 1.0);
    const Frame zeros = constant_frame(201, 201, 0.0);
    const NoiseReport r = noise_energy_removed(ones, zeros);
    CHECK(r.energy_removed == 40401.0);
    CHECK(r.pixel_count == 40401);
    CHECK(r.mean_squared_difference == 1.0);
}

TEST_CASE("the 2x2 hand example sums to 14") {
    const ScanGeometry g = geometry_from_counts(2, 2, 50.0);
    const Frame a(g, {1, 2, 3, 4});
    const Frame b(g, {1, 1, 1, 1});
    CHECK(noise_energy_removed(a, b).energy_removed == 14.0);
}

TEST_CASE("metric axioms hold on random pairs") {
    std::mt19937_64 rng(6060);
    for (int trial = 0; trial < 200; ++trial) {
        const int nx = 2 + static_cast<int>(rng() % 15);
        const int ny = 2 + static_cast<int>(rng() % 15);
        const Frame a = random_frame(nx, ny, rng(), -2.0, 2.0);
        const Frame b = random_frame(nx, ny, rng(), -2.0, 2.0);

        const double ab = noise_energy_removed(a, b).energy_removed;
        const double ba = noise_energy_removed(b, a).energy_removed;
        CHECK(ab >= 0.0);
        CHECK(ab == ba);
        CHECK(noise_energy_removed(a, a).energy_removed == 0.0);

        // quadratic scaling under alpha = 2 (exact in binary)
        std::vector<double> a2(a.values().begin(), a.values().end());
        std::vector<double> b2(b.values().begin(), b.values().end());
        for (double& v : a2) v *= 2.0;
        for (double& v : b2) v *= 2.0;
        const double scaled =
            noise_energy_removed(Frame(a.geometry(), std::move(a2)),
                                 Frame(b.geometry(), std::move(b2)))
                .energy_removed;
        CHECK(std::abs(scaled - 4.0 * ab) <= 1e-12 * std::max(scaled, 4.0 * ab));
    }
}

TEST_CASE("metric is zero only for equal frames") {
    const Frame a = random_frame(8, 8, 5);
    std::vector<double> v(a.values().begin(), a.values().end());
    v[17] += 1e-8;
    const Frame b(a.geometry(), std::move(v));
    CHECK(noise_energy_removed(a, b).energy_removed > 0.0);
}

TEST_CASE("metric over a frame equals the sum over row bands") {
    const Frame a = random_frame(32, 20, 31, -1.0, 1.0);
    const Frame b = random_frame(32, 20, 32, -1.0, 1.0);
    const double whole = noise_energy_removed(a, b).energy_removed;

    double parts = 0.0;
    for (int band = 0; band < 5; ++band) {
        const ScanGeometry bg = geometry_from_counts(32, 4, 50.0);
        std::vector<double> va, vb;
        for (int r = band * 4; r < (band + 1) * 4; ++r) {
            for (int c = 0; c < 32; ++c) {
                va.push_back(a(r, c));
                vb.push_back(b(r, c));
            }
        }
        parts += noise_energy_removed(Frame(bg, std::move(va)),
                                      Frame(bg, std::move(vb)))
                     .energy_removed;
    }
    CHECK(std::abs(whole - parts) <= 1e-12 * whole);
}

TEST_CASE("incompatible geometries are dimension errors") {
    const Frame a = random_frame(8, 8, 1);
    const Frame b = random_frame(8, 9, 1);
    const Frame c = random_frame(8, 8, 1, 0.0, 1.0, 100.0);
    CHECK_THROWS_AS(noise_energy_removed(a, b), DimensionError);
    CHECK_THROWS_AS(noise_energy_removed(a, c), DimensionError);
    CHECK_THROWS_AS(line_profile(a, b), DimensionError);
}

TEST_CASE("center profile of a 201-wide frame has 201 samples 0.05 mm apart") {
    const Frame a = random_frame(201, 201, 9);
    const Frame b = random_frame(201, 201, 10);
    const LineProfile p = line_profile(a, b);
    CHECK(p.row_index == 100);
    REQUIRE(p.positions_mm.size() == 201);
    REQUIRE(p.original.size() == 201);
    REQUIRE(p.denoised.size() == 201);
    CHECK(p.positions_mm.front() == 0.0);
    CHECK(p.positions_mm.back() == doctest::Approx(10.0).epsilon(1e-12));
    for (size_t i = 1; i < p.positions_mm.size(); ++i) {
        CHECK(p.positions_mm[i] - p.positions_mm[i - 1] ==
              doctest::Approx(0.05).epsilon(1e-9));
    }
    for (int c = 0; c < 201; ++c) {
        CHECK(p.original[c] == a(100, c));
        CHECK(p.denoised[c] == b(100, c));
    }
}

TEST_CASE("profiles of identical frames have identical columns") {
    const Frame f = random_frame(64, 64, 12);
    const LineProfile p = line_profile(f, f);
    CHECK(p.original == p.denoised);
}

TEST_CASE("row zero of a 2x3 frame yields its first three values") {
    const ScanGeometry g = geometry_from_counts(3, 2, 50.0);
    const Frame a(g, {7, 8, 9, 1, 2, 3});
    const LineProfile p = line_profile(a, a, 0);
    CHECK(p.row_index == 0);
    CHECK(p.original == std::vector<double>{7, 8, 9});
}

TEST_CASE("an out-of-range row is a domain error") {
    const Frame f = random_frame(8, 8, 1);
    CHECK_THROWS_AS(line_profile(f, f, 8), DomainError);
    CHECK_THROWS_AS(line_profile(f, f, -1), DomainError);
    CHECK_THROWS_AS(line_profile(f, f, 500), DomainError);
}

TEST_CASE("the report table prints two-decimal energies under frame labels") {
    const std::vector<NoiseReport> reports = {
        {"Frame 1", 37.08, 40401, 37.08 / 40401},
        {"Frame 2", 336.24, 40401, 336.24 / 40401},
        {"Frame 3", 960.64, 40401, 960.64 / 40401},
    };
    const std::string table = report_table(reports);
    const auto lines = read_lines(table);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].find("Frame 1") != std::string::npos);
    CHECK(lines[0].find("Frame 3") != std::string::npos);
    CHECK(lines[1].rfind("Energy of the noise removed", 0) == 0);
    CHECK(lines[1].find("37.08") != std::string::npos);
    CHECK(lines[1].find("336.24") != std::string::npos);
    CHECK(lines[1].find("960.64") != std::string::npos);
}

TEST_CASE("zero energy prints as 0.00") {
    const std::string table = report_table({{"f", 0.0, 4, 0.0}});
    CHECK(table.find("0.00") != std::string::npos);
}

TEST_CASE("table rounding is the correctly rounded decimal value") {
    // 14 prints plainly; the double nearest 14.005 lies just above the
    // decimal midpoint, so two-decimal rounding gives 14.01.
    const std::string table = report_table({{"a", 14.0, 1, 14.0},
                                            {"b", 14.005, 1, 14.005}});
    CHECK(table.find("14.00") != std::string::npos);
    CHECK(table.find("14.01") != std::string::npos);
}

TEST_CASE("an empty report list is a domain error") {
    CHECK_THROWS_AS(report_table({}), DomainError);
    CHECK_THROWS_AS(report_csv({}), DomainError);
}

TEST_CASE("report csv carries full precision") {
    const ScanGeometry g = geometry_from_counts(2, 2, 50.0);
    const Frame a(g, {0.1, 0.2, 0.3, 0.4});
    const Frame b(g, {0.0, 0.0, 0.0, 0.0});
    const NoiseReport r = noise_energy_removed(a, b, "frame_000");
    const std::string csv = report_csv({r});
    const auto lines = read_lines(csv);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "frame,energy_removed,pixel_count,msd");
    CHECK(lines[1].rfind("frame_000,", 0) == 0);
    // the printed value parses back to the exact double
    const auto first_comma = lines[1].find(',');
    const auto second_comma = lines[1].find(',', first_comma + 1);
    const std::string energy_text =
        lines[1].substr(first_comma + 1, second_comma - first_comma - 1);
    CHECK(std::stod(energy_text) == r.energy_removed);
}

TEST_CASE("profile csv lists position and both intensities") {
    const ScanGeometry g = geometry_from_counts(3, 2, 50.0);
    const Frame a(g, {7, 8, 9, 1, 2, 3});
    const Frame b(g, {0, 1, 2, 3, 4, 5});
    const std::string csv = profile_csv(line_profile(a, b, 1));
    const auto lines = read_lines(csv);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "position_mm,original,denoised");
    CHECK(lines[1] == "0,1,3");
    CHECK(lines[2] == "0.050000000000000003,2,4");
    CHECK(lines[3] == "0.10000000000000001,3,5");
}
