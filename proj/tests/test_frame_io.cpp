#include "doctest.h"

#include "support.hpp"
#include "wavescrub/errors.hpp"
#include "wavescrub/frame.hpp"
#include "wavescrub/frame_io.hpp"

#include <cmath>
#include <limits>
#include <sstream>

using namespace wavescrub;
using namespace testsup;

TEST_CASE("frame construction validates count and finiteness") {
    const ScanGeometry g = geometry_from_counts(3, 2, 50.0);
    CHECK_NOTHROW(Frame(g, {0, 1, 2, 3, 4, 5}));
    CHECK_THROWS_AS(Frame(g, {0, 1, 2, 3, 4}), DimensionError);
    CHECK_THROWS_AS(Frame(g, {0, 1, 2, 3, 4, 5, 6}), DimensionError);
    CHECK_THROWS_AS(Frame(g, {0, 1, 2, 3, 4, std::numeric_limits<double>::quiet_NaN()}),
                    DataError);
    CHECK_THROWS_AS(Frame(g, {0, 1, 2, 3, 4, std::numeric_limits<double>::infinity()}),
                    DataError);
}

TEST_CASE("frame indexing is row-major") {
    const Frame f(geometry_from_counts(3, 2, 50.0), {0, 1, 2, 3, 4, 5});
    CHECK(f(0, 0) == 0);
    CHECK(f(0, 2) == 2);
    CHECK(f(1, 0) == 3);
    CHECK(f(1, 2) == 5);
}

TEST_CASE("frame stack requires matching geometry and increasing time") {
    const ScanGeometry g = geometry_from_counts(2, 2, 50.0);
    const ScanGeometry other = geometry_from_counts(2, 2, 100.0);
    const Frame a(g, {0, 0, 0, 0}, 0);
    const Frame b(g, {1, 1, 1, 1}, 5);
    CHECK_NOTHROW(FrameStack({a, b}));
    CHECK_THROWS_AS(FrameStack({}), DimensionError);
    CHECK_THROWS_AS(FrameStack({b, a}), DimensionError);
    CHECK_THROWS_AS(FrameStack({a, a}), DimensionError);
    CHECK_THROWS_AS(FrameStack({a, Frame(other, {1, 1, 1, 1}, 5)}), DimensionError);
}

TEST_CASE("csv text with a 2x3 header loads those six values") {
    TempDir dir;
    const auto path = dir.file("literal.csv");
    write_text(path,
               "# wavescrub-frame nx=3 ny=2 step_um=50 time_s=na\n"
               "0,1,2\n"
               "3,4,5\n");
    const Frame f = load_frame(path);
    CHECK(f.nx() == 3);
    CHECK(f.ny() == 2);
    CHECK(f.geometry().step_um == 50.0);
    CHECK_FALSE(f.time_s().has_value());
    for (int i = 0; i < 6; ++i) CHECK(f.values()[i] == i);
}

TEST_CASE("csv survives a round trip bit-exactly") {
    TempDir dir;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Frame f = random_frame(17, 9, seed, -5.0, 5.0);
        const auto path = dir.file("frame.csv");
        save_frame(f, path, FrameFormat::csv);
        const Frame back = load_frame(path);
        REQUIRE(back.geometry() == f.geometry());
        CHECK(bit_identical(back, f));
    }
}

TEST_CASE("csv keeps extreme magnitudes and the snapshot time") {
    TempDir dir;
    const ScanGeometry g = geometry_from_counts(2, 2, 12.5);
    const Frame f(g, {1e-300, -1e300, 0.1, -0.0}, 0, 3.25e-7);
    const auto path = dir.file("extreme.csv");
    save_frame(f, path, FrameFormat::csv);
    const Frame back = load_frame(path);
    CHECK(bit_identical(back, f));
    REQUIRE(back.time_s().has_value());
    CHECK(*back.time_s() == 3.25e-7);
}

TEST_CASE("f64le survives a round trip bit-exactly") {
    TempDir dir;
    const Frame f = random_frame(33, 21, 99, -1e6, 1e6, 30.0);
    const auto path = dir.file("frame.f64le");
    save_frame(f, path, FrameFormat::f64le);
    const Frame back = load_frame(path);
    REQUIRE(back.geometry() == f.geometry());
    CHECK(bit_identical(back, f));
    CHECK_FALSE(back.time_s().has_value());
}

TEST_CASE("f64le keeps the snapshot time") {
    TempDir dir;
    const Frame f(geometry_from_counts(2, 3, 50.0), {1, 2, 3, 4, 5, 6}, 0, 1.5e-6);
    const auto path = dir.file("t.f64le");
    save_frame(f, path, FrameFormat::f64le);
    const Frame back = load_frame(path);
    REQUIRE(back.time_s().has_value());
    CHECK(*back.time_s() == 1.5e-6);
}

TEST_CASE("a 201x201 csv has one header line plus 201 rows of 201 values") {
    TempDir dir;
    const Frame f = random_frame(201, 201, 7);
    const auto path = dir.file("scan.csv");
    save_frame(f, path, FrameFormat::csv);
    const auto lines = read_lines(read_text(path));
    REQUIRE(lines.size() == 202);
    CHECK(lines[0].rfind("# wavescrub-frame", 0) == 0);
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto commas =
            static_cast<size_t>(std::count(lines[i].begin(), lines[i].end(), ','));
        CHECK(commas == 200);
    }
}

TEST_CASE("csv with five values declared as 2x3 is a dimension error") {
    TempDir dir;
    const auto path = dir.file("short.csv");
    write_text(path,
               "# wavescrub-frame nx=3 ny=2 step_um=50 time_s=na\n"
               "0,1,2\n"
               "3,4\n");
    CHECK_THROWS_AS(load_frame(path), DimensionError);
}

TEST_CASE("csv with a missing row is a dimension error") {
    TempDir dir;
    const auto path = dir.file("rows.csv");
    write_text(path,
               "# wavescrub-frame nx=3 ny=2 step_um=50 time_s=na\n"
               "0,1,2\n");
    CHECK_THROWS_AS(load_frame(path), DimensionError);
}

TEST_CASE("csv header problems are format errors") {
    TempDir dir;
    const auto path = dir.file("bad.csv");
    write_text(path, "nx=3 ny=2\n0,1,2\n3,4,5\n");
    CHECK_THROWS_AS(load_frame(path), FormatError);
    write_text(path, "# wavescrub-frame nx=3 ny=2 time_s=na\n0,1,2\n3,4,5\n");
    CHECK_THROWS_AS(load_frame(path), FormatError);
    write_text(path, "# wavescrub-frame nx=3 ny=2 step_um=50 time_s=na bogus=1\n");
    CHECK_THROWS_AS(load_frame(path), FormatError);
    write_text(path, "");
    CHECK_THROWS_AS(load_frame(path), FormatError);
}

TEST_CASE("csv with non-finite values is a data error") {
    TempDir dir;
    const auto path = dir.file("nan.csv");
    write_text(path,
               "# wavescrub-frame nx=2 ny=2 step_um=50 time_s=na\n"
               "0,nan\n"
               "1,2\n");
    CHECK_THROWS_AS(load_frame(path), DataError);
    write_text(path,
               "# wavescrub-frame nx=2 ny=2 step_um=50 time_s=na\n"
               "0,inf\n"
               "1,2\n");
    CHECK_THROWS_AS(load_frame(path), DataError);
}

TEST_CASE("csv with unparsable cells is a format error") {
    TempDir dir;
    const auto path = dir.file("junk.csv");
    write_text(path,
               "# wavescrub-frame nx=2 ny=2 step_um=50 time_s=na\n"
               "0,x\n"
               "1,2\n");
    CHECK_THROWS_AS(load_frame(path), FormatError);
}

TEST_CASE("f64le with a bad magic is a format error") {
    TempDir dir;
    const auto path = dir.file("bad.f64le");
    write_text(path, "NOTAFRAME-------------------------------");
    CHECK_THROWS_AS(load_frame(path), FormatError);
}

TEST_CASE("truncated f64le payload is a format error") {
    TempDir dir;
    const Frame f = random_frame(4, 4, 5);
    const auto path = dir.file("trunc.f64le");
    save_frame(f, path, FrameFormat::f64le);
    auto bytes = read_text(path);
    bytes.resize(bytes.size() - 9);
    write_text(path, bytes);
    CHECK_THROWS_AS(load_frame(path), FormatError);
}

TEST_CASE("over-long f64le payload is a dimension error") {
    TempDir dir;
    const Frame f = random_frame(4, 4, 5);
    const auto path = dir.file("extra.f64le");
    save_frame(f, path, FrameFormat::f64le);
    auto bytes = read_text(path);
    bytes.push_back('\0');
    write_text(path, bytes);
    CHECK_THROWS_AS(load_frame(path), DimensionError);
}

TEST_CASE("missing files are io errors") {
    CHECK_THROWS_AS(load_frame("/nonexistent/path/frame.csv"), IoError);
    const Frame f = random_frame(2, 2, 1);
    CHECK_THROWS_AS(save_frame(f, "/nonexistent/path/frame.csv", FrameFormat::csv),
                    IoError);
}

TEST_CASE("constant frames map to a single pgm level") {
    TempDir dir;
    const Frame f = constant_frame(8, 6, 3.25);
    const auto path = dir.file("const.pgm");
    save_frame(f, path, FrameFormat::pgm);
    const Frame back = load_frame(path);
    REQUIRE(back.geometry() == f.geometry());
    for (double v : back.values()) CHECK(v == 3.25);
}

TEST_CASE("pgm round trip is lossy but within half a quantization step") {
    TempDir dir;
    const Frame f = random_frame(31, 17, 77, -2.0, 3.0);
    const auto path = dir.file("q.pgm");
    save_frame(f, path, FrameFormat::pgm);
    const Frame back = load_frame(path);
    double lo = f.values()[0], hi = f.values()[0];
    for (double v : f.values()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double q = (hi - lo) / 65535.0;
    CHECK(max_abs_diff(back.values(), f.values()) <= 0.5 * q * (1 + 1e-9));
}

TEST_CASE("pgm without the frame comment is rejected") {
    TempDir dir;
    const auto path = dir.file("plain.pgm");
    std::string raster(2 * 4, '\0');
    write_text(path, "P5\n2 2\n65535\n" + raster);
    CHECK_THROWS_AS(load_frame(path), FormatError);
}

TEST_CASE("pgm with an 8-bit maxval is rejected") {
    TempDir dir;
    const auto path = dir.file("8bit.pgm");
    write_text(path, "P5\n# wavescrub-frame step_um=50 min=0 max=1 time_s=na\n"
                     "2 2\n255\n" + std::string(4, '\0'));
    CHECK_THROWS_AS(load_frame(path), FormatError);
}

TEST_CASE("pgm with a short raster is a dimension error") {
    TempDir dir;
    const auto path = dir.file("short.pgm");
    write_text(path, "P5\n# wavescrub-frame step_um=50 min=0 max=1 time_s=na\n"
                     "2 2\n65535\n" + std::string(5, '\0'));
    CHECK_THROWS_AS(load_frame(path), DimensionError);
}

TEST_CASE("format names and extensions map both ways") {
    CHECK(parse_frame_format("csv") == FrameFormat::csv);
    CHECK(parse_frame_format("f64le") == FrameFormat::f64le);
    CHECK(parse_frame_format("pgm") == FrameFormat::pgm);
    CHECK_THROWS_AS(parse_frame_format("tiff"), ConfigError);

    CHECK(extension_for(FrameFormat::csv) == std::string(".csv"));
    CHECK(extension_for(FrameFormat::f64le) == std::string(".f64le"));
    CHECK(extension_for(FrameFormat::pgm) == std::string(".pgm"));

    CHECK(format_from_extension("a/b.csv") == FrameFormat::csv);
    CHECK(format_from_extension("a/b.f64le") == FrameFormat::f64le);
    CHECK(format_from_extension("a/b.pgm") == FrameFormat::pgm);
    CHECK_FALSE(format_from_extension("a/b.dat").has_value());
    CHECK_THROWS_AS(load_frame("a/b.dat"), ConfigError);
}
