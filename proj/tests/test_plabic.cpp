#include "doctest.h"
#include "fixtures.hpp"

#include "wsep/collection.hpp"
#include "wsep/errors.hpp"
#include "wsep/plabic_graph.hpp"
#include "wsep/tiling.hpp"

#include <set>

using namespace wsep;

static std::vector<subset> parse_all(std::initializer_list<const char*> xs, int n) {
    std::vector<subset> out;
    for (auto x : xs) out.push_back(parse_subset(x, n));
    std::sort(out.begin(), out.end());
    return out;
}

static std::vector<subset> sorted_labels(const plabic_graph& g) {
    auto l = face_labels(g).labels;
    std::sort(l.begin(), l.end());
    return l;
}

static plabic_graph octagon_graph() { return io::plabic_from_json(load_fixture("octagon.json")); }

static plabic_graph lollipop(vcolor c) {
    return plabic_graph{1, {vcolor::boundary, c}, {0}, {{0, 1}}, {{0}, {0}}};
}

// boundary 1 and 2 joined through a black and a white vertex by two parallel edges
static std::vector<plabic_graph> bigon_candidates() {
    std::vector<plabic_graph> out;
    for (auto rw : std::vector<std::vector<int>>{{3, 1, 2}, {3, 2, 1}}) {
        plabic_graph g{2, {vcolor::boundary, vcolor::boundary, vcolor::black, vcolor::white}, {0, 1},
                       {{0, 2}, {2, 3}, {2, 3}, {3, 1}}, {{0}, {3}, {0, 1, 2}, rw}};
        try {
            validate(g);
            out.push_back(g);
        } catch (const invalid_input&) {
        }
    }
    return out;
}

// Squares of the graph after splitting their corners down to degree 3 with
// M2 expansions; each entry is the expanded graph and its square corners.
static std::vector<std::pair<plabic_graph, std::array<int, 4>>> expanded_squares(const plabic_graph& g) {
    std::vector<std::pair<plabic_graph, std::array<int, 4>>> out;
    auto fs = trace_faces(g);
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
        const auto& darts = fs.faces[f];
        if (f == fs.outer || darts.size() != 4) continue;
        auto vs = face_vertices(g, fs, f);
        bool ok = std::set<int>(vs.begin(), vs.end()).size() == 4;
        for (int t = 0; t < 4 && ok; ++t)
            ok = g.color[vs[t]] != vcolor::boundary && g.color[vs[t]] != g.color[vs[(t + 1) % 4]];
        if (!ok) continue;
        plabic_graph h = g;
        std::array<int, 4> corners{vs[0], vs[1], vs[2], vs[3]};
        for (int t = 0; t < 4; ++t) {
            int v = corners[t];
            if (h.rotation[v].size() == 3) continue;
            // the face's two edges at v follow each other clockwise; move them to a new vertex
            int e_in = darts[(t + 3) % 4] / 2;
            const auto& r = h.rotation[v];
            int start = static_cast<int>(std::find(r.begin(), r.end(), e_in) - r.begin());
            h = apply_move(h, {move_kind::m2, true, {v}, -1, vcolor::white, start, 2});
            corners[t] = h.vertex_count() - 1;
        }
        out.emplace_back(h, corners);
    }
    return out;
}

TEST_CASE("octagon fixture calibrates strands and labels") {
    auto g = octagon_graph();
    auto st = trace_strands(g);
    CHECK(st.perm.perm == std::vector<int>{4, 5, 6, 7, 8, 1, 2, 3});
    CHECK(st.loops.empty());
    for (int i = 1; i <= 8; ++i) {
        CHECK(st.perm.color(i) == 0);
        CHECK(st.strands[i - 1].id == i);
    }
    CHECK(check_reduced(g).reduced);
    auto fl = face_labels(g);
    CHECK(fl.k == 3);
    CHECK(sorted_labels(g) == parse_all({"123", "234", "345", "456", "567", "678", "178", "128", "127", "137", "136",
                                         "135", "134", "167", "156", "145"},
                                        8));
    CHECK(face_count(g) == 16);
    CHECK(face_count(g) == length(uniform_necklace(8, 3)) + 1);
}

TEST_CASE("boundary faces spell the necklace") {
    for (auto name : {"octagon.json", "disconnected.json"}) {
        auto g = io::plabic_from_json(load_fixture(name));
        auto fs = trace_faces(g);
        auto fl = face_labels(g);
        auto nk = decorated_to_necklace(trace_strands(g).perm);
        for (int i = 1; i <= g.n; ++i) {
            // the face left of the boundary arc from i-1 to i carries I_i
            int arc = fs.arc_base + 2 * ((i + g.n - 2) % g.n) + 1;
            int f = fs.face_of_dart[arc];
            auto it = std::find(fl.faces.begin(), fl.faces.end(), f);
            REQUIRE(it != fl.faces.end());
            CHECK(fl.labels[it - fl.faces.begin()] == nk.at(i));
        }
    }
}

TEST_CASE("disconnected fixture") {
    auto g = io::plabic_from_json(load_fixture("disconnected.json"));
    auto st = trace_strands(g);
    CHECK(st.perm.perm == std::vector<int>{9, 7, 8, 6, 4, 5, 2, 3, 10, 1});
    CHECK(check_reduced(g).reduced);
    auto fl = face_labels(g);
    CHECK(fl.k == 5);
    CHECK(sorted_labels(g) == parse_all({"2,3,4,5,10", "1,2,3,4,5", "2,3,4,5,9", "2,4,5,8,9", "3,4,5,8,9",
                                         "3,4,5,7,9", "4,5,7,8,9", "5,6,7,8,9", "4,6,7,8,9"},
                                        10));
    auto comps = connected_components(st.perm);
    CHECK(comps.blocks == std::vector<subset>{make_subset({1, 9, 10}, 10), make_subset({2, 3, 7, 8}, 10),
                                              make_subset({4, 5, 6}, 10)});
    CHECK(face_count(g) == length(decorated_to_necklace(st.perm)) + 1);
}

TEST_CASE("lollipops") {
    auto w = lollipop(vcolor::white);
    auto sw = trace_strands(w);
    CHECK(sw.perm.perm == std::vector<int>{1});
    CHECK(sw.perm.color(1) == -1);
    CHECK(check_reduced(w).reduced);
    CHECK(face_labels(w).k == 1);
    CHECK(sorted_labels(w) == std::vector<subset>{elem(1)});

    auto b = lollipop(vcolor::black);
    CHECK(trace_strands(b).perm.color(1) == 1);
    auto fb = face_labels(b);
    CHECK(fb.k == 0);
    CHECK(fb.labels == std::vector<subset>{0});
    CHECK(face_count(b) == 1);
}

TEST_CASE("path through one black vertex") {
    plabic_graph g{2, {vcolor::boundary, vcolor::boundary, vcolor::black}, {0, 1}, {{0, 2}, {2, 1}}, {{0}, {1}, {0, 1}}};
    auto st = trace_strands(g);
    CHECK(st.perm.perm == std::vector<int>{2, 1});
    CHECK(check_reduced(g).reduced);
    CHECK(face_count(g) == 2);
    CHECK(face_count(g) == length(decorated_to_necklace(st.perm)) + 1);
}

TEST_CASE("bigon is not reduced") {
    auto cands = bigon_candidates();
    REQUIRE(cands.size() == 1);
    auto v = check_reduced(cands[0]);
    CHECK_FALSE(v.reduced);
    CHECK(v.condition == 3);
    CHECK_FALSE(v.witness.empty());
    CHECK_THROWS_AS(face_labels(cands[0]), invalid_input);
}

TEST_CASE("validate rejects broken graphs") {
    auto g = lollipop(vcolor::white);
    auto bad = g;
    bad.rotation[1] = {};
    CHECK_THROWS_AS(validate(bad), invalid_input);
    bad = g;
    bad.color[0] = vcolor::black;
    CHECK_THROWS_AS(validate(bad), invalid_input);
    bad = g;
    bad.edges[0] = {1, 1};
    CHECK_THROWS_AS(validate(bad), invalid_input);
    // a boundary vertex without an edge
    plabic_graph lone{1, {vcolor::boundary}, {0}, {}, {{}}};
    CHECK_THROWS_AS(validate(lone), invalid_input);
    // two boundary vertices swapped against the embedding
    auto pg = octagon_graph();
    std::swap(pg.boundary[0], pg.boundary[1]);
    CHECK_THROWS_AS(validate(pg), invalid_input);
}

TEST_CASE("square move changes the labels by one mutation") {
    auto g = octagon_graph();
    auto before = sorted_labels(g);
    auto coll = make_collection(8, 3, before, uniform_necklace(8, 3));
    std::set<std::pair<subset, subset>> by_site, by_square;
    for (const auto& s : mutation_sites(coll)) by_site.insert({s.removed(), s.added()});
    auto squares = expanded_squares(g);
    REQUIRE_FALSE(squares.empty());
    for (const auto& [h, sq] : squares) {
        CHECK(sorted_labels(h) == before);
        auto found = square_faces(h);
        CHECK(std::find(found.begin(), found.end(), sq) != found.end());
        move_spec m{move_kind::m1, false, {sq[0], sq[1], sq[2], sq[3]}};
        auto moved = apply_move(h, m);
        CHECK(trace_strands(moved).perm == trace_strands(g).perm);
        CHECK(check_reduced(moved).reduced);
        auto after = sorted_labels(moved);
        std::vector<subset> gone, fresh;
        std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(gone));
        std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(fresh));
        REQUIRE(gone.size() == 1);
        REQUIRE(fresh.size() == 1);
        CHECK(by_site.count({gone[0], fresh[0]}) == 1);
        by_square.insert({gone[0], fresh[0]});
        CHECK(apply_move(moved, m) == h);
    }
    // every mutation of the collection is realized by a square
    CHECK(by_square == by_site);
}

TEST_CASE("square move preconditions") {
    auto g = octagon_graph();
    CHECK_THROWS_AS(apply_move(g, {move_kind::m1, false, {0, 1, 2, 3}}), invalid_input);
    CHECK_THROWS_AS(apply_move(g, {move_kind::m1, false, {8}}), invalid_input);
}

TEST_CASE("M3 insert and remove are inverse") {
    auto g = octagon_graph();
    for (int e = 0; e < g.edge_count(); ++e)
        for (auto c : {vcolor::black, vcolor::white}) {
            move_spec ins{move_kind::m3, false, {}, e, c};
            auto h = apply_move(g, ins);
            CHECK(h.vertex_count() == g.vertex_count() + 1);
            CHECK(trace_strands(h).perm == trace_strands(g).perm);
            CHECK(check_reduced(h).reduced);
            CHECK(sorted_labels(h) == sorted_labels(g));
            move_spec rem{move_kind::m3, true, {h.vertex_count() - 1}};
            CHECK(apply_move(h, rem) == g);
        }
    CHECK_THROWS_AS(apply_move(g, {move_kind::m3, true, {8}}), invalid_input);
    CHECK_THROWS_AS(apply_move(g, {move_kind::m3, false, {}, g.edge_count()}), invalid_input);
}

TEST_CASE("M2 contraction and expansion keep strands and labels") {
    auto g = octagon_graph();
    auto labels = sorted_labels(g);
    auto perm = trace_strands(g).perm;
    int checked = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.color[v] == vcolor::boundary) continue;
        int deg = static_cast<int>(g.rotation[v].size());
        for (int start = 0; start < deg; ++start)
            for (int count = 1; count <= deg - 1; ++count) {
                auto h = apply_move(g, {move_kind::m2, true, {v}, -1, vcolor::white, start, count});
                CHECK(trace_strands(h).perm == perm);
                CHECK(check_reduced(h).reduced);
                CHECK(sorted_labels(h) == labels);
                // contract the new edge again
                auto back = apply_move(h, {move_kind::m2, false, {}, h.edge_count() - 1});
                CHECK(trace_strands(back).perm == perm);
                CHECK(sorted_labels(back) == labels);
                CHECK(back.edge_count() == g.edge_count());
                ++checked;
            }
    }
    CHECK(checked > 0);
    // bicolored and boundary edges cannot be contracted
    for (int e = 0; e < g.edge_count(); ++e)
        CHECK_THROWS_AS(apply_move(g, {move_kind::m2, false, {}, e}), invalid_input);
}

TEST_CASE("inserted unicolored pairs contract back") {
    auto g = octagon_graph();
    auto labels = sorted_labels(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        if (g.color[u] == vcolor::boundary || g.color[v] == vcolor::boundary) continue;
        // a new vertex colored like v creates the unicolored edge (x, v)
        auto h = apply_move(g, {move_kind::m3, false, {}, e, g.color[v]});
        auto c = apply_move(h, {move_kind::m2, false, {}, h.edge_count() - 1});
        CHECK(c.vertex_count() == g.vertex_count());
        CHECK(trace_strands(c).perm == trace_strands(g).perm);
        CHECK(sorted_labels(c) == labels);
    }
}
