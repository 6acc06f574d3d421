#pragma once

#include "wsep/cyclic.hpp"
#include "wsep/positroid.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wsep {

enum class vcolor { boundary, black, white };

// Vertex ids are indices into `color`/`rotation`. boundary[i-1] is the id of
// boundary vertex i; boundary vertices go clockwise around the disk and have
// exactly one incident edge. rotation[v] lists v's edges clockwise.
struct plabic_graph {
    int n = 0;
    std::vector<vcolor> color;
    std::vector<int> boundary;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> rotation;

    int vertex_count() const { return static_cast<int>(color.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool operator==(const plabic_graph&) const = default;
};

// structural checks, including the Euler check for a disk embedding
void validate(const plabic_graph& g);

// Faces of the embedded graph with the boundary circle added. Darts are
// 2e (edges[e][0] -> edges[e][1]) and 2e+1; darts >= 2E belong to boundary arcs.
struct face_structure {
    std::vector<std::vector<int>> faces;  // each face as its darts, face on their left
    std::vector<int> face_of_dart;
    int outer = -1;
    int arc_base = 0;  // 2E
};

face_structure trace_faces(const plabic_graph& g);
// vertex cycle of a face (tails of its darts)
std::vector<int> face_vertices(const plabic_graph& g, const face_structure& fs, int face);

struct strand {
    int id = 0;              // boundary vertex where it ends (0 for interior loops)
    int start = 0;           // boundary vertex where it starts
    std::vector<int> darts;  // traversed darts in order
};

struct strand_result {
    std::vector<strand> strands;  // strands[i-1] ends at boundary vertex i
    std::vector<strand> loops;    // closed interior loops
    decorated_perm perm;
};

strand_result trace_strands(const plabic_graph& g);

struct reduced_verdict {
    bool reduced = true;
    int condition = 0;  // 1: interior loop, 2: self-crossing, 3: bad crossing order
    std::string witness;
};

reduced_verdict check_reduced(const plabic_graph& g);

struct face_labeling {
    std::vector<int> faces;      // face indices into trace_faces(g).faces, outer excluded
    std::vector<subset> labels;  // same order as faces
    int k = 0;
};

face_labeling face_labels(const plabic_graph& g);

// number of faces inside the disk
int face_count(const plabic_graph& g);

enum class move_kind { m1, m2, m3 };

// m1: vertices = the four corners of a square face.
// m2 forward: contract `edge`; m2 reverse: split vertices[0], moving `count`
//   consecutive edges starting at rotation index `start` to a new vertex.
// m3 forward: insert a degree-2 vertex of color `color` on `edge`;
//   m3 reverse: remove the degree-2 vertex vertices[0].
struct move_spec {
    move_kind kind = move_kind::m1;
    bool reverse = false;
    std::vector<int> vertices;
    int edge = -1;
    vcolor color = vcolor::white;
    int start = 0;
    int count = 0;
};

plabic_graph apply_move(const plabic_graph& g, const move_spec& m);

// every square face whose corners are internal, trivalent and alternate in color
std::vector<std::array<int, 4>> square_faces(const plabic_graph& g);

} // namespace wsep
