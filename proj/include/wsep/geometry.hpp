#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wsep::geom {

using i128 = __int128;

// Integer point; callers keep track of the shared denominator.
struct point {
    std::int64_t x = 0, y = 0;
    point operator+(point o) const { return {x + o.x, y + o.y}; }
    point operator-(point o) const { return {x - o.x, y - o.y}; }
    bool operator==(const point&) const = default;
    auto operator<=>(const point&) const = default;
};

inline i128 cross(point a, point b) { return i128(a.x) * b.y - i128(a.y) * b.x; }
inline i128 dot(point a, point b) { return i128(a.x) * b.x + i128(a.y) * b.y; }
// > 0 when a, b, c turn counterclockwise (y axis up)
inline int orient(point a, point b, point c) {
    i128 v = cross(b - a, c - a);
    return (v > 0) - (v < 0);
}

// p on the closed segment [a,b]
bool on_segment(point p, point a, point b);
// p strictly between a and b on the segment
bool in_segment_interior(point p, point a, point b);
// the open segments share a point (proper crossing or collinear overlap)
bool segments_overlap(point a, point b, point c, point d);

// twice the signed area; negative for clockwise polygons
i128 area2(const std::vector<point>& poly);
bool strictly_convex_cw(const std::vector<point>& poly);
// p strictly inside a convex polygon given in either orientation
bool strictly_inside_convex(point p, const std::vector<point>& poly);
// interiors of two convex polygons intersect
bool convex_interiors_overlap(const std::vector<point>& a, const std::vector<point>& b);

// winding number of the closed polyline around p, counted positive for
// clockwise turns; throws invalid_input when p lies on the polyline
int winding_cw(point p, const std::vector<point>& loop);

std::string to_string(i128 v);

} // namespace wsep::geom
