#pragma once

#include "wsep/collection.hpp"
#include "wsep/geometry.hpp"
#include "wsep/plabic_graph.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wsep {

enum class face_color { white, black };

struct tiling_face {
    face_color color;
    subset key = 0;             // K for W(K), L for B(L)
    std::vector<subset> cycle;  // boundary cycle, clockwise in the plane
};

struct plabic_tiling {
    collection coll;
    std::vector<std::pair<subset, subset>> edges;  // sorted pairs (smaller first), sorted list
    std::vector<tiling_face> faces;
};

plabic_tiling build_tiling(const collection& c);

// Vertices of a convex n-gon as integer points over a common denominator.
struct polygon {
    std::vector<geom::point> v;  // v[a-1] is v_a
    std::int64_t den = 1;
    std::string version;
};

// Lattice points of x^2 + y^2 = 5525^2 closest to the clockwise regular n-gon
// that starts at the top; coordinates are exact rationals over 5525.
polygon default_polygon(int n);

// rational vertices given as (num_x, den_x, num_y, den_y); must be strictly convex and clockwise
polygon make_polygon(const std::vector<std::array<std::int64_t, 4>>& pts);

geom::point embed_point(subset I, const polygon& p);

struct embedded_tiling {
    plabic_tiling tiling;
    polygon poly;
    std::map<subset, geom::point> coords;  // numerators over poly.den
};

// throws embedding_violation naming the first offending pair
embedded_tiling embed_tiling(const plabic_tiling& t, std::optional<polygon> poly = {});

// winding number (clockwise positive) of pi(J) around pi(I_1) -> ... -> pi(I_n)
int necklace_winding(const necklace& anchor, subset J, const polygon& poly);
bool inside_necklace_curve(const necklace& anchor, subset J);

// doubled signed areas (negative = clockwise), in units of 1/den^2
geom::i128 faces_area2(const embedded_tiling& et);
geom::i128 necklace_area2(const necklace& anchor, const polygon& poly);

plabic_graph tiling_to_plabic(const collection& c);
plabic_tiling plabic_to_tiling(const plabic_graph& g);

} // namespace wsep
