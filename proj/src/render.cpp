#include "gaussphi/render.hpp"

#include <algorithm>
#include <sstream>

#include "gaussphi/weights.hpp"

namespace gaussphi {

RenderFormat parse_render_format(std::string_view text) {
    if (text == "svg") return RenderFormat::Svg;
    if (text == "pgm") return RenderFormat::Pgm;
    throw DomainError("unknown render format '" + std::string(text) + "' (expected svg or pgm)");
}

std::string render_svg(const RegionSet& set, int cell_px) {
    if (cell_px <= 0) throw DomainError("cell_px must be positive");
    const std::int64_t half = w(set.query.level) - 2;
    const std::int64_t side = (2 * half + 1) * cell_px;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
       << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n"
       << "<title>" << to_string(set.query.kind) << '_' << set.query.level << " (" << set.size()
       << " points)</title>\n"
       << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side
       << "\" fill=\"#ffffff\"/>\n";
    auto corner = [&](GaussInt x) {
        // Row 0 is the top of the image, i.e. the largest imaginary part.
        return std::pair{(x.re + half) * cell_px, (half - x.im) * cell_px};
    };
    for (GaussInt x : set.elements) {
        const auto [px, py] = corner(x);
        os << "<rect class=\"cell\" x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell_px
           << "\" height=\"" << cell_px << "\" fill=\"#404040\"/>\n";
    }
    const auto [ox, oy] = corner({0, 0});
    os << "<rect class=\"origin\" x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << cell_px << "\" height=\""
       << cell_px << "\" fill=\"none\" stroke=\"#d00000\" stroke-width=\"1\"/>\n"
       << "</svg>\n";
    return os.str();
}

std::string render_pgm(const RegionSet& set) {
    std::int64_t min_re = 0, max_re = 0, min_im = 0, max_im = 0;
    if (!set.elements.empty()) {
        min_re = max_re = set.elements.front().re;
        min_im = max_im = set.elements.front().im;
    }
    for (GaussInt x : set.elements) {
        min_re = std::min(min_re, x.re);
        max_re = std::max(max_re, x.re);
        min_im = std::min(min_im, x.im);
        max_im = std::max(max_im, x.im);
    }
    const std::int64_t width = max_re - min_re + 1;
    const std::int64_t height = max_im - min_im + 1;
    std::string raster(static_cast<std::size_t>(width * height), '\0');
    for (GaussInt x : set.elements) {
        const std::int64_t row = max_im - x.im;
        const std::int64_t col = x.re - min_re;
        raster[static_cast<std::size_t>(row * width + col)] = static_cast<char>(255);
    }
    std::ostringstream os;
    os << "P5\n" << width << ' ' << height << "\n255\n";
    return os.str() + raster;
}

std::string render(const RenderSpec& spec, int cap) {
    if (spec.query.level > cap) throw CapExceeded("render level", spec.query.level, cap);
    const RegionSet set = enumerate_region(spec.query, cap);
    return spec.format == RenderFormat::Svg ? render_svg(set, spec.cell_px) : render_pgm(set);
}

}  // namespace gaussphi
