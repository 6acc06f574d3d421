#include "wsep/geometry.hpp"
#include "wsep/errors.hpp"

#include <algorithm>

namespace wsep::geom {

bool on_segment(point p, point a, point b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool in_segment_interior(point p, point a, point b) { return p != a && p != b && on_segment(p, a, b); }

bool segments_overlap(point a, point b, point c, point d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && o2 == 0) {
        // collinear: overlap in more than a point?
        auto key = [&](point p) { return a.x != b.x ? i128(p.x) : i128(p.y); };
        i128 lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        i128 lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        return std::max(lo1, lo2) < std::min(hi1, hi2);
    }
    // one endpoint strictly inside the other segment, the rest transversal
    return in_segment_interior(c, a, b) || in_segment_interior(d, a, b) || in_segment_interior(a, c, d) ||
           in_segment_interior(b, c, d);
}

i128 area2(const std::vector<point>& poly) {
    i128 s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return s;
}

bool strictly_convex_cw(const std::vector<point>& poly) {
    std::size_t m = poly.size();
    if (m < 3) return false;
    for (std::size_t i = 0; i < m; ++i)
        if (orient(poly[i], poly[(i + 1) % m], poly[(i + 2) % m]) >= 0) return false;
    // a clockwise polygon that turns right everywhere could still wind twice
    return area2(poly) < 0;
}

bool strictly_inside_convex(point p, const std::vector<point>& poly) {
    int sign = area2(poly) < 0 ? -1 : 1;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (orient(poly[i], poly[(i + 1) % poly.size()], p) != sign) return false;
    return true;
}

bool convex_interiors_overlap(const std::vector<point>& a, const std::vector<point>& b) {
    // separating axis: some edge line has all of a on one closed side and all of b on the other
    auto separates = [](const std::vector<point>& p, const std::vector<point>& q) {
        int sign = area2(p) < 0 ? -1 : 1;
        for (std::size_t i = 0; i < p.size(); ++i) {
            point u = p[i], v = p[(i + 1) % p.size()];
            bool all_out = true;
            for (auto w : q)
                if (orient(u, v, w) == sign) {
                    all_out = false;
                    break;
                }
            if (all_out) return true;
        }
        return false;
    };
    return !separates(a, b) && !separates(b, a);
}

int winding_cw(point p, const std::vector<point>& loop) {
    int w = 0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        point a = loop[i], b = loop[(i + 1) % loop.size()];
        if (on_segment(p, a, b)) throw invalid_input("point lies on the curve");
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) ++w;
        } else if (b.y <= p.y && orient(a, b, p) < 0) {
            --w;
        }
    }
    return -w;
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    while (v != 0) {
        int digit = static_cast<int>(v % 10);
        s += static_cast<char>('0' + (neg ? -digit : digit));
        v /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace wsep::geom
