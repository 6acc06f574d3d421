#include "wsep/io/svg.hpp"
#include "wsep/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wsep::io {

using geom::i128;

std::string decimal(i128 num, i128 den, int digits) {
    if (den <= 0) throw invalid_input("denominator must be positive");
    bool neg = num < 0;
    if (neg) num = -num;
    i128 scale = 1;
    for (int t = 0; t < digits; ++t) scale *= 10;
    i128 q = (num * scale * 2 + den) / (den * 2);
    if (q == 0) neg = false;
    std::string whole = geom::to_string(q / scale), frac = geom::to_string(q % scale);
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return (neg ? "-" : "") + whole + (digits ? "." + frac : "");
}

namespace {

constexpr int margin = 40;

} // namespace

std::string render_svg(const embedded_tiling& et, const svg_options& opts) {
    const int n = et.tiling.coll.n;
    // drawing x = scale*X/R, y = -scale*Y/R, R the largest polygon coordinate magnitude
    std::int64_t R = 1;
    for (auto p : et.poly.v) R = std::max({R, p.x < 0 ? -p.x : p.x, p.y < 0 ? -p.y : p.y});
    auto X = [&](std::int64_t x) { return decimal(i128(opts.scale) * x, R); };
    auto Y = [&](std::int64_t y) { return decimal(-i128(opts.scale) * y, R); };

    std::int64_t lox = 0, hix = 0, loy = 0, hiy = 0;
    bool first = true;
    for (auto& [I, p] : et.coords) {
        if (first) lox = hix = p.x, loy = hiy = p.y, first = false;
        lox = std::min(lox, p.x), hix = std::max(hix, p.x);
        loy = std::min(loy, p.y), hiy = std::max(hiy, p.y);
    }
    i128 vx = (i128(opts.scale) * lox) / R - margin, vy = (-i128(opts.scale) * hiy) / R - margin;
    i128 vw = (i128(opts.scale) * (hix - lox)) / R + 2 * margin + 1;
    i128 vh = (i128(opts.scale) * (hiy - loy)) / R + 2 * margin + 1;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!-- plabic tiling n=" << n << " k=" << et.tiling.coll.k << "; polygon " << et.poly.version
       << "; coordinates rounded to 6 decimal places -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << geom::to_string(vx) << " " << geom::to_string(vy)
       << " " << geom::to_string(vw) << " " << geom::to_string(vh) << "\" width=\"" << geom::to_string(vw)
       << "\" height=\"" << geom::to_string(vh) << "\">\n";
    os << "<g class=\"faces\" stroke=\"black\" stroke-width=\"1\">\n";
    for (const auto& f : et.tiling.faces) {
        bool black = f.color == face_color::black;
        os << "<polygon class=\"" << (black ? "black" : "white") << "\" data-key=\"" << to_string(f.key, n)
           << "\" fill=\"" << (black ? "#555555" : "none") << "\" points=\"";
        for (std::size_t t = 0; t < f.cycle.size(); ++t) {
            auto p = et.coords.at(f.cycle[t]);
            os << (t ? " " : "") << X(p.x) << "," << Y(p.y);
        }
        os << "\"/>\n";
    }
    os << "</g>\n<g class=\"edges\" stroke=\"black\" stroke-width=\"1\">\n";
    for (auto [a, b] : et.tiling.edges) {
        auto p = et.coords.at(a), q = et.coords.at(b);
        os << "<line x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x) << "\" y2=\"" << Y(q.y)
           << "\"/>\n";
    }
    os << "</g>\n<g class=\"vertices\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (auto I : et.tiling.coll.sets) {
        auto p = et.coords.at(I);
        os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
        if (opts.labels)
            os << "<text x=\"" << X(p.x) << "\" y=\"" << Y(p.y) << "\" dx=\"5\" dy=\"-5\">" << to_string(I, n)
               << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string render_svg(const plabic_graph& g, const svg_options& opts) {
    return render_svg(embed_tiling(plabic_to_tiling(g)), opts);
}

} // namespace wsep::io
