#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "gaussphi/render.hpp"

using namespace gaussphi;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

struct Pgm {
    int width = 0;
    int height = 0;
    std::string pixels;
};

Pgm parse_pgm(const std::string& data) {
    std::istringstream is(data);
    std::string magic;
    int maxval = 0;
    Pgm p;
    is >> magic >> p.width >> p.height >> maxval;
    is.get();
    REQUIRE(magic == "P5");
    REQUIRE(maxval == 255);
    p.pixels.assign(std::istreambuf_iterator<char>(is), {});
    return p;
}

}  // namespace

TEST_CASE("svg has one cell per member") {
    const std::string svg = render({{RegionKind::B, 2}, RenderFormat::Svg, 6});
    CHECK(count_of(svg, "class=\"cell\"") == 49);
    CHECK(count_of(svg, "class=\"origin\"") == 1);
    CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("svg of S_0 places the four units") {
    const auto set = enumerate_region({RegionKind::S, 0});
    const std::string svg = render_svg(set, 10);
    CHECK(count_of(svg, "class=\"cell\"") == 4);
    // half-width w_0 - 2 = 1: +1 sits at column 2, row 1.
    CHECK(svg.find("x=\"20\" y=\"10\"") != std::string::npos);
    CHECK(svg.find("x=\"10\" y=\"0\"") != std::string::npos);
}

TEST_CASE("pgm of Oct_2 is the octagon") {
    const auto p = parse_pgm(render({{RegionKind::Oct, 2}, RenderFormat::Pgm}));
    CHECK(p.width == 9);  // |x| <= w_2 - 2 = 4
    CHECK(p.height == 9);
    REQUIRE(p.pixels.size() == 81);
    std::size_t white = 0;
    for (int row = 0; row < 9; ++row)
        for (int col = 0; col < 9; ++col) {
            const int x = col - 4, y = 4 - row;
            const bool member = std::abs(x) + std::abs(y) <= 5;  // w_3 - 3
            const bool lit = static_cast<unsigned char>(p.pixels[static_cast<std::size_t>(row * 9 + col)]) == 255;
            CHECK(lit == member);
            white += lit;
        }
    CHECK(white == enumerate_region({RegionKind::Oct, 2}).size());
}

TEST_CASE("render guards") {
    CHECK_THROWS_AS(render({{RegionKind::B, 13}, RenderFormat::Svg}), CapExceeded);
    CHECK_THROWS_AS(render({{RegionKind::B, 1}, RenderFormat::Svg, 0}), DomainError);
    CHECK(parse_render_format("pgm") == RenderFormat::Pgm);
    CHECK_THROWS_AS(parse_render_format("png"), DomainError);
}
