#include "carpet/errors.hpp"
#include "carpet/render.hpp"

#include "support.hpp"

#include <doctest.h>

#include <bit>
#include <regex>

using namespace carpet;
using namespace carpet::testing;

namespace {

struct Pbm {
    std::uint64_t w = 0, h = 0;
    std::vector<std::vector<bool>> px;  // px[row][col]
};

Pbm decode(const std::string& bytes) {
    Pbm out;
    std::size_t pos = 0;
    auto token = [&] {
        while (std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
        const std::size_t start = pos;
        while (!std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
        return bytes.substr(start, pos - start);
    };
    REQUIRE(token() == "P4");
    out.w = std::stoull(token());
    out.h = std::stoull(token());
    ++pos;  // single whitespace before the raster
    const std::uint64_t stride = (out.w + 7) / 8;
    REQUIRE(bytes.size() - pos == stride * out.h);
    for (std::uint64_t r = 0; r < out.h; ++r) {
        std::vector<bool> row(out.w);
        for (std::uint64_t c = 0; c < out.w; ++c) {
            row[c] = (static_cast<unsigned char>(bytes[pos + r * stride + c / 8]) >> (7 - c % 8)) & 1;
        }
        out.px.push_back(row);
    }
    return out;
}

std::size_t black(const Pbm& p) {
    std::size_t n = 0;
    for (const auto& row : p.px) n += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
    return n;
}

}  // namespace

TEST_CASE("PBM raster matches the cell set") {
    for (const auto& p : valid_patterns()) {
        for (unsigned k = 1; k <= 4; ++k) {
            RenderOptions opt;
            opt.level = k;
            const Pbm img = decode(render_pbm(p, opt));
            const auto cells = brute_cells(p, k);
            CHECK(img.w == grid_width(p, k));
            CHECK(img.h == grid_height(p, k));
            CHECK(black(img) == cells.size());
            for (const auto& [a, b] : cells) CHECK(img.px[img.h - 1 - b][a]);

            opt.flip_y = true;
            const Pbm flipped = decode(render_pbm(p, opt));
            for (std::uint64_t r = 0; r < img.h; ++r) CHECK(flipped.px[r] == img.px[img.h - 1 - r]);
        }
    }
}

TEST_CASE("PBM example and determinism") {
    RenderOptions opt;
    opt.level = 1;
    const std::string k1 = render_pbm(ex51(), opt);
    CHECK(k1 == std::string("P4\n4 4\n\x40\x10\x80\x20", 11));
    opt.level = 3;
    const std::string a = render_pbm(ex51(), opt);
    CHECK(a == render_pbm(ex51(), opt));
    CHECK(black(decode(a)) == 64);
}

TEST_CASE("scaled PBM samples cell centres") {
    RenderOptions opt;
    opt.level = 1;
    opt.width = 8;
    opt.height = 8;
    const Pbm img = decode(render_pbm(ex51(), opt));
    CHECK(black(img) == 16);
    CHECK(img.px[0][2]);  // cell (1,3) covers columns 2-3 of the top rows
    CHECK(img.px[1][3]);
    opt.width = 3;
    opt.height = 2;
    const Pbm small = decode(render_pbm(p32(), opt));
    CHECK(small.w == 3);
    CHECK(small.h == 2);
    opt.width = 1u << 20;
    opt.height = 1u << 20;
    CHECK_THROWS_AS(render_pbm(p32(), opt), ResourceError);
}

TEST_CASE("SVG output") {
    RenderOptions opt;
    opt.level = 2;
    SvgOverlays ov;
    ov.hull = true;
    ov.slice_y = Rational(1, 2);
    ov.markers.push_back({Rational(1, 4), Rational(1, 3)});
    const std::string svg = render_svg(ex51(), opt, ov);
    const std::regex rect("<rect [^>]*fill=\"black\"");
    CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), rect), std::sregex_iterator()) == 16);
    // hull (2/3,0),(1,2/3),(1/3,1),(0,1/3) in a 16 x 16 viewBox, y down
    CHECK(svg.find("<polygon points=\"10.666667,16 16,5.333333 5.333333,0 0,10.666667\"") != std::string::npos);
    CHECK(svg.find("<line x1=\"0\" y1=\"8\" x2=\"16\" y2=\"8\"") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') == 2 + 16 + 1 + 1 + 2 + 1);
    CHECK_THROWS_AS(render_svg(diagonal22(), opt, ov), DegenerateError);
}
