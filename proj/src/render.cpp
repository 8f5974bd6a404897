#include "carpet/render.hpp"

#include "carpet/errors.hpp"
#include "carpet/hull.hpp"

#include <sstream>

namespace carpet {

namespace {

std::string num(const Rational& q) {
    // integers exactly, anything else to six places
    std::ostringstream os;
    if (is_integer(q)) {
        os << numerator(q);
    } else {
        os.setf(std::ios::fixed);
        os.precision(6);
        os << static_cast<double>(q);
    }
    return os.str();
}

}  // namespace

std::string render_pbm(const CarpetPattern& pattern, const RenderOptions& options) {
    const std::uint64_t W = grid_width(pattern, options.level);
    const std::uint64_t H = grid_height(pattern, options.level);
    const std::uint64_t w = options.width ? options.width : W;
    const std::uint64_t h = options.height ? options.height : H;
    if (w > kMaxPixels / h) throw ResourceError("image of " + std::to_string(w) + "x" + std::to_string(h) + " is too large");
    const CellSet set = cells(pattern, options.level);

    const std::uint64_t stride = (w + 7) / 8;
    std::string bits(stride * h, '\0');
    auto put = [&](std::uint64_t col, std::uint64_t row) {
        bits[row * stride + col / 8] = static_cast<char>(static_cast<unsigned char>(bits[row * stride + col / 8]) |
                                                         (0x80u >> (col % 8)));
    };
    auto row_of = [&](std::uint64_t q, std::uint64_t height) { return options.flip_y ? q : height - 1 - q; };
    if (w == W && h == H) {
        for (const Cell& c : set.cells()) put(c.p, row_of(c.q, H));
    } else {
        for (std::uint64_t r = 0; r < h; ++r) {
            // pixel centre (c + 1/2) / w, sampled in cell units
            const std::uint64_t q = ((2 * row_of(r, h) + 1) * H) / (2 * h);
            for (std::uint64_t col = 0; col < w; ++col) {
                const std::uint64_t p = ((2 * col + 1) * W) / (2 * w);
                if (set.contains({p, q})) put(col, r);
            }
        }
    }
    return "P4\n" + std::to_string(w) + " " + std::to_string(h) + "\n" + bits;
}

std::string render_svg(const CarpetPattern& pattern, const RenderOptions& options, const SvgOverlays& overlays) {
    const std::uint64_t W = grid_width(pattern, options.level);
    const std::uint64_t H = grid_height(pattern, options.level);
    const CellSet set = cells(pattern, options.level);
    const std::string w = std::to_string(options.width ? options.width : W);
    const std::string h = std::to_string(options.height ? options.height : H);

    // carpet coordinates to viewBox units
    const Rational sx(static_cast<long>(W));
    const Rational sy(static_cast<long>(H));
    auto X = [&](const Rational& x) { return num(x * sx); };
    auto Y = [&](const Rational& y) { return num(options.flip_y ? y * sy : (1 - y) * sy); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << W
       << " " << H << "\" shape-rendering=\"crispEdges\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    for (const Cell& c : set.cells()) {
        const std::uint64_t row = options.flip_y ? c.q : H - 1 - c.q;
        os << "<rect x=\"" << c.p << "\" y=\"" << row << "\" width=\"1\" height=\"1\" fill=\"black\"/>\n";
    }
    const std::string stroke = " stroke-width=\"" + num(Rational(static_cast<long>(std::max(W, H)), 200)) + "\"";
    if (overlays.hull) {
        const HullPolygon hull = convex_hull(pattern);
        os << "<polygon points=\"";
        for (std::size_t t = 0; t < hull.vertices.size(); ++t) {
            os << (t ? " " : "") << X(hull.vertices[t].x) << "," << Y(hull.vertices[t].y);
        }
        os << "\" fill=\"none\" stroke=\"red\"" << stroke << "/>\n";
    }
    if (overlays.slice_y) {
        os << "<line x1=\"0\" y1=\"" << Y(*overlays.slice_y) << "\" x2=\"" << W << "\" y2=\"" << Y(*overlays.slice_y)
           << "\" stroke=\"blue\"" << stroke << "/>\n";
    }
    const Rational arm(1, 100);
    for (const Point2& z : overlays.markers) {
        os << "<line x1=\"" << X(z.x - arm) << "\" y1=\"" << Y(z.y - arm) << "\" x2=\"" << X(z.x + arm) << "\" y2=\""
           << Y(z.y + arm) << "\" stroke=\"green\"" << stroke << "/>\n";
        os << "<line x1=\"" << X(z.x - arm) << "\" y1=\"" << Y(z.y + arm) << "\" x2=\"" << X(z.x + arm) << "\" y2=\""
           << Y(z.y - arm) << "\" stroke=\"green\"" << stroke << "/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace carpet
