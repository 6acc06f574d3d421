#include "wsep/plabic_graph.hpp"
#include "wsep/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wsep {

namespace {

// Turn convention: arriving along dart d at internal vertex v, the incoming
// half-edge is twin(d) in v's rotation. White departs clockwise-after it,
// black counterclockwise-before it. The opposite choice fails the 8-point
// fixture (labels and strand permutation), so this is the calibrated one.
constexpr bool black_turns_clockwise = false;

struct embedding {
    int E = 0;                          // graph edges; arcs are E..E+n-1
    std::vector<std::vector<int>> rot;  // outgoing darts, clockwise
    std::vector<int> pos;               // index of dart in its tail's rotation
    std::vector<int> tail;

    int head(int d) const { return tail[d ^ 1]; }
    int cw_next(int v, int d) const { return rot[v][(pos[d] + 1) % rot[v].size()]; }
    int ccw_prev(int v, int d) const { return rot[v][(pos[d] + rot[v].size() - 1) % rot[v].size()]; }
};

embedding build(const plabic_graph& g) {
    embedding em;
    int V = g.vertex_count();
    em.E = g.edge_count();
    int total = em.E + g.n;
    em.rot.assign(V, {});
    em.tail.assign(2 * total, -1);
    em.pos.assign(2 * total, -1);
    for (int e = 0; e < em.E; ++e) {
        em.tail[2 * e] = g.edges[e][0];
        em.tail[2 * e + 1] = g.edges[e][1];
    }
    for (int i = 1; i <= g.n; ++i) {
        int a = em.E + i - 1;  // arc from boundary i to boundary i+1
        em.tail[2 * a] = g.boundary[i - 1];
        em.tail[2 * a + 1] = g.boundary[i % g.n];
    }
    auto out_dart = [&](int v, int e) { return g.edges[e][0] == v ? 2 * e : 2 * e + 1; };
    for (int v = 0; v < V; ++v)
        if (g.color[v] != vcolor::boundary)
            for (int e : g.rotation[v]) em.rot[v].push_back(out_dart(v, e));
    for (int i = 1; i <= g.n; ++i) {
        int v = g.boundary[i - 1];
        int fwd = em.E + i - 1, back = em.E + (i + g.n - 2) % g.n;
        em.rot[v] = {2 * fwd, out_dart(v, g.rotation[v][0]), 2 * back + 1};
    }
    for (int v = 0; v < V; ++v)
        for (std::size_t t = 0; t < em.rot[v].size(); ++t) em.pos[em.rot[v][t]] = static_cast<int>(t);
    return em;
}

face_structure faces_of(const embedding& em) {
    face_structure fs;
    int D = static_cast<int>(em.tail.size());
    fs.face_of_dart.assign(D, -1);
    fs.arc_base = 2 * em.E;
    for (int d0 = 0; d0 < D; ++d0) {
        if (fs.face_of_dart[d0] >= 0) continue;
        int id = static_cast<int>(fs.faces.size());
        fs.faces.emplace_back();
        for (int d = d0; fs.face_of_dart[d] < 0;) {
            fs.face_of_dart[d] = id;
            fs.faces[id].push_back(d);
            int v = em.head(d);
            d = em.cw_next(v, d ^ 1);
        }
    }
    // the outer face lies left of the clockwise boundary arcs
    fs.outer = fs.face_of_dart[fs.arc_base];
    return fs;
}

std::string vname(int v) { return "v" + std::to_string(v); }

} // namespace

void validate(const plabic_graph& g) {
    check_ground(g.n);
    int V = g.vertex_count();
    if (static_cast<int>(g.rotation.size()) != V) throw invalid_input("rotation must list every vertex");
    if (static_cast<int>(g.boundary.size()) != g.n) throw invalid_input("boundary must list n vertices");
    std::vector<int> bidx(V, 0);
    for (int i = 1; i <= g.n; ++i) {
        int v = g.boundary[i - 1];
        if (v < 0 || v >= V) throw invalid_input("boundary vertex id out of range");
        if (bidx[v]) throw invalid_input("vertex " + vname(v) + " listed twice on the boundary");
        if (g.color[v] != vcolor::boundary) throw invalid_input("boundary vertex " + vname(v) + " must be uncolored");
        bidx[v] = i;
    }
    for (int v = 0; v < V; ++v)
        if (g.color[v] == vcolor::boundary && !bidx[v])
            throw invalid_input("uncolored vertex " + vname(v) + " is not on the boundary");
    std::vector<std::vector<int>> inc(V);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        if (a < 0 || a >= V || b < 0 || b >= V) throw invalid_input("edge " + std::to_string(e) + " has a bad endpoint");
        if (a == b) throw invalid_input("edge " + std::to_string(e) + " is a self-loop");
        inc[a].push_back(e);
        inc[b].push_back(e);
    }
    for (int v = 0; v < V; ++v) {
        auto r = g.rotation[v];
        auto want = inc[v];
        std::sort(r.begin(), r.end());
        std::sort(want.begin(), want.end());
        if (r != want) throw invalid_input("rotation at " + vname(v) + " does not list its incident edges once each");
        if (g.color[v] == vcolor::boundary && inc[v].size() != 1)
            throw invalid_input("boundary vertex " + std::to_string(bidx[v]) + " must have degree 1");
        if (g.color[v] != vcolor::boundary && inc[v].empty())
            throw invalid_input("internal vertex " + vname(v) + " is isolated");
    }
    auto em = build(g);
    auto fs = faces_of(em);
    int F = static_cast<int>(fs.faces.size());
    if (V - (g.edge_count() + g.n) + F != 2)
        throw invalid_input("rotation system is not a connected disk embedding (Euler characteristic " +
                            std::to_string(V - g.edge_count() - g.n + F) + ")");
    // the outer face must be exactly the boundary circle
    for (int d : fs.faces[fs.outer])
        if (d < fs.arc_base || (d & 1)) throw invalid_input("graph reaches outside the disk");
}

face_structure trace_faces(const plabic_graph& g) {
    validate(g);
    return faces_of(build(g));
}

std::vector<int> face_vertices(const plabic_graph& g, const face_structure& fs, int face) {
    std::vector<int> out;
    for (int d : fs.faces[face]) {
        int e = d / 2;
        out.push_back(e < g.edge_count() ? g.edges[e][d & 1] : g.boundary[(e - g.edge_count() + (d & 1)) % g.n]);
    }
    return out;
}

strand_result trace_strands(const plabic_graph& g) {
    validate(g);
    auto em = build(g);
    int D = 2 * em.E;
    std::vector<bool> used(D, false);
    std::vector<int> bidx(g.vertex_count(), 0);
    for (int i = 1; i <= g.n; ++i) bidx[g.boundary[i - 1]] = i;

    auto step = [&](int d) {
        int v = em.head(d);
        int back = d ^ 1;
        bool cw = (g.color[v] == vcolor::black) == black_turns_clockwise;
        return cw ? em.cw_next(v, back) : em.ccw_prev(v, back);
    };

    strand_result out;
    out.strands.resize(g.n);
    std::vector<int> perm(g.n);
    std::map<int, int> colors;
    for (int i = 1; i <= g.n; ++i) {
        int b = g.boundary[i - 1];
        strand s;
        s.start = i;
        int d = em.rot[b][1];  // the leg
        for (;;) {
            if (used[d]) throw invalid_input("strand tracing revisited a dart");
            used[d] = true;
            s.darts.push_back(d);
            int v = em.head(d);
            if (g.color[v] == vcolor::boundary) {
                s.id = bidx[v];
                break;
            }
            d = step(d);
        }
        perm[i - 1] = s.id;
        if (s.id == i) {
            // the vertex where the strand turns back (middle of its path) decides the color
            int leaf = em.head(s.darts[(s.darts.size() - 1) / 2]);
            colors[i] = g.color[leaf] == vcolor::white ? -1 : 1;
        }
        out.strands[s.id - 1] = s;
    }
    for (int d = 0; d < D; ++d) {
        if (used[d]) continue;
        strand loop;
        for (int x = d; !used[x]; x = step(x)) {
            used[x] = true;
            loop.darts.push_back(x);
        }
        out.loops.push_back(loop);
    }
    out.perm = make_decorated(perm, colors);
    return out;
}

namespace {

bool is_crossing_edge(const plabic_graph& g, int e) {
    auto [a, b] = g.edges[e];
    vcolor ca = g.color[a], cb = g.color[b];
    return ca != vcolor::boundary && cb != vcolor::boundary && ca != cb;
}

bool out_and_back(const strand& s) {
    if (s.darts.size() % 2) return false;
    for (std::size_t t = 0; t < s.darts.size(); ++t)
        if (s.darts[t] != (s.darts[s.darts.size() - 1 - t] ^ 1)) return false;
    return true;
}

} // namespace

reduced_verdict check_reduced(const plabic_graph& g) {
    auto st = trace_strands(g);
    reduced_verdict v;
    auto fail = [&](int cond, std::string w) {
        v.reduced = false;
        v.condition = cond;
        v.witness = std::move(w);
        return v;
    };
    if (!st.loops.empty()) {
        std::ostringstream os;
        os << "closed strand through";
        for (int d : st.loops[0].darts) os << " " << vname(g.edges[d / 2][d & 1]);
        return fail(1, os.str());
    }
    // crossing edges along each strand, in order
    std::vector<std::vector<int>> cross(g.n);
    std::vector<std::vector<int>> users(g.edge_count());
    for (int i = 1; i <= g.n; ++i) {
        const auto& s = st.strands[i - 1];
        for (int d : s.darts)
            if (is_crossing_edge(g, d / 2)) {
                cross[i - 1].push_back(d / 2);
                users[d / 2].push_back(i);
            }
        if (s.start == s.id && out_and_back(s)) continue;
        auto sorted = cross[i - 1];
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            return fail(2, "strand " + std::to_string(i) + " crosses itself on edge " + std::to_string(*dup));
    }
    for (int a = 1; a <= g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b) {
            std::vector<int> along_a, along_b;
            for (int e : cross[a - 1])
                if (std::count(users[e].begin(), users[e].end(), b)) along_a.push_back(e);
            if (along_a.size() < 2) continue;
            for (int e : cross[b - 1])
                if (std::count(users[e].begin(), users[e].end(), a)) along_b.push_back(e);
            std::reverse(along_b.begin(), along_b.end());
            if (along_a != along_b) {
                std::ostringstream os;
                os << "strands " << a << " and " << b << " cross at edges";
                for (int e : along_a) os << " " << e;
                os << " in the same order";
                return fail(3, os.str());
            }
        }
    return v;
}

face_labeling face_labels(const plabic_graph& g) {
    auto verdict = check_reduced(g);
    if (!verdict.reduced) throw invalid_input("face labels need a reduced graph: " + verdict.witness);
    auto st = trace_strands(g);
    auto em = build(g);
    auto fs = faces_of(em);
    int F = static_cast<int>(fs.faces.size());
    std::vector<subset> label(F, 0);
    for (int i = 1; i <= g.n; ++i) {
        const auto& s = st.strands[i - 1];
        if (s.start == i) {
            if (st.perm.color(i) == -1)
                for (auto& l : label) l |= elem(i);
            continue;
        }
        std::vector<int> parity(em.E, 0);
        for (int d : s.darts) parity[d / 2] ^= 1;
        // two-color the faces: crossing edge e flips the side iff strand i uses e an odd number of times
        std::vector<int> side(F, -1);
        std::vector<std::vector<std::pair<int, int>>> adj(F);
        for (int e = 0; e < em.E; ++e) {
            int f1 = fs.face_of_dart[2 * e], f2 = fs.face_of_dart[2 * e + 1];
            adj[f1].emplace_back(f2, parity[e]);
            adj[f2].emplace_back(f1, parity[e]);
        }
        int seed = fs.face_of_dart[s.darts.back()];
        side[seed] = 1;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (auto [h, p] : adj[f]) {
                int want = side[f] ^ p;
                if (side[h] < 0) {
                    side[h] = want;
                    stack.push_back(h);
                } else if (side[h] != want) {
                    throw invalid_input("strand " + std::to_string(i) + " does not split the disk in two");
                }
            }
        }
        for (int f = 0; f < F; ++f)
            if (side[f] == 1) label[f] |= elem(i);
    }
    face_labeling out;
    for (int f = 0; f < F; ++f) {
        if (f == fs.outer) continue;
        out.faces.push_back(f);
        out.labels.push_back(label[f]);
    }
    out.k = out.labels.empty() ? 0 : card(out.labels[0]);
    for (auto l : out.labels)
        if (card(l) != out.k) throw invalid_input("face labels have different sizes");
    return out;
}

int face_count(const plabic_graph& g) { return static_cast<int>(trace_faces(g).faces.size()) - 1; }

std::vector<std::array<int, 4>> square_faces(const plabic_graph& g) {
    auto fs = trace_faces(g);
    std::vector<std::array<int, 4>> out;
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
        if (f == fs.outer || fs.faces[f].size() != 4) continue;
        auto vs = face_vertices(g, fs, f);
        bool ok = true;
        for (int t = 0; t < 4 && ok; ++t) {
            int v = vs[t];
            ok = g.color[v] != vcolor::boundary && g.rotation[v].size() == 3 && g.color[v] != g.color[vs[(t + 1) % 4]];
        }
        std::set<int> distinct(vs.begin(), vs.end());
        if (ok && distinct.size() == 4) out.push_back({vs[0], vs[1], vs[2], vs[3]});
    }
    return out;
}

namespace {

// drop vertices/edges marked dead and renumber everything
plabic_graph compact(const plabic_graph& g, const std::vector<bool>& dead_v, const std::vector<bool>& dead_e) {
    std::vector<int> vmap(g.vertex_count(), -1), emap(g.edge_count(), -1);
    plabic_graph out;
    out.n = g.n;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dead_v[v]) {
            vmap[v] = out.vertex_count();
            out.color.push_back(g.color[v]);
        }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!dead_e[e]) {
            emap[e] = out.edge_count();
            out.edges.push_back({vmap[g.edges[e][0]], vmap[g.edges[e][1]]});
        }
    out.rotation.resize(out.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dead_v[v])
            for (int e : g.rotation[v]) out.rotation[vmap[v]].push_back(emap[e]);
    for (int b : g.boundary) out.boundary.push_back(vmap[b]);
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw invalid_input("move precondition failed: " + what);
}

// rotation of v read cyclically starting just after edge e
std::vector<int> after(const plabic_graph& g, int v, int e) {
    const auto& r = g.rotation[v];
    auto it = std::find(r.begin(), r.end(), e);
    std::vector<int> out;
    for (std::size_t t = 1; t < r.size(); ++t) out.push_back(r[(it - r.begin() + t) % r.size()]);
    return out;
}

} // namespace

plabic_graph apply_move(const plabic_graph& g, const move_spec& m) {
    validate(g);
    auto internal = [&](int v) { return v >= 0 && v < g.vertex_count() && g.color[v] != vcolor::boundary; };
    plabic_graph out = g;
    switch (m.kind) {
    case move_kind::m1: {
        require(m.vertices.size() == 4, "square move needs four vertices");
        std::set<int> want(m.vertices.begin(), m.vertices.end());
        bool found = false;
        for (auto sq : square_faces(g))
            if (std::set<int>(sq.begin(), sq.end()) == want) found = true;
        require(found, "vertices do not bound a square face of trivalent internal vertices with alternating colors");
        for (int v : m.vertices) out.color[v] = g.color[v] == vcolor::black ? vcolor::white : vcolor::black;
        break;
    }
    case move_kind::m2:
        if (!m.reverse) {
            int e = m.edge;
            require(e >= 0 && e < g.edge_count(), "edge id out of range");
            auto [u, v] = g.edges[e];
            require(internal(u) && internal(v) && g.color[u] == g.color[v], "edge must join two internal vertices of one color");
            for (int f = 0; f < g.edge_count(); ++f)
                require(f == e || !((g.edges[f][0] == u && g.edges[f][1] == v) || (g.edges[f][0] == v && g.edges[f][1] == u)),
                        "endpoints are joined by a parallel edge");
            auto merged = after(g, u, e);
            for (int f : after(g, v, e)) merged.push_back(f);
            out.rotation[u] = merged;
            out.rotation[v].clear();
            for (auto& ed : out.edges)
                for (auto& x : ed)
                    if (x == v) x = u;
            std::vector<bool> dv(g.vertex_count(), false), de(g.edge_count(), false);
            dv[v] = true;
            de[e] = true;
            out = compact(out, dv, de);
        } else {
            require(m.vertices.size() == 1 && internal(m.vertices[0]), "expansion needs one internal vertex");
            int w = m.vertices[0];
            const auto& r = g.rotation[w];
            int deg = static_cast<int>(r.size());
            require(m.count >= 1 && m.count <= deg - 1, "count must leave both halves nonempty");
            require(m.start >= 0 && m.start < deg, "start index out of range");
            std::vector<int> block, rest;
            for (int t = 0; t < deg; ++t) (t < m.count ? block : rest).push_back(r[(m.start + t) % deg]);
            int nv = out.vertex_count(), ne = out.edge_count();
            out.color.push_back(g.color[w]);
            out.edges.push_back({w, nv});
            for (int f : block)
                for (auto& x : out.edges[f])
                    if (x == w) x = nv;
            out.rotation[w] = {ne};
            out.rotation[w].insert(out.rotation[w].end(), rest.begin(), rest.end());
            out.rotation.push_back({ne});
            out.rotation.back().insert(out.rotation.back().end(), block.begin(), block.end());
        }
        break;
    case move_kind::m3:
        if (!m.reverse) {
            int e = m.edge;
            require(e >= 0 && e < g.edge_count(), "edge id out of range");
            require(m.color != vcolor::boundary, "inserted vertex must be black or white");
            auto [u, v] = g.edges[e];
            int x = out.vertex_count(), e2 = out.edge_count();
            out.color.push_back(m.color);
            out.edges[e] = {u, x};
            out.edges.push_back({x, v});
            std::replace(out.rotation[v].begin(), out.rotation[v].end(), e, e2);
            out.rotation.push_back({e, e2});
        } else {
            require(m.vertices.size() == 1 && internal(m.vertices[0]), "removal needs one internal vertex");
            int x = m.vertices[0];
            require(g.rotation[x].size() == 2, "vertex must have degree 2");
            int e1 = std::min(g.rotation[x][0], g.rotation[x][1]);
            int e2 = std::max(g.rotation[x][0], g.rotation[x][1]);
            int a = g.edges[e1][0] == x ? g.edges[e1][1] : g.edges[e1][0];
            int b = g.edges[e2][0] == x ? g.edges[e2][1] : g.edges[e2][0];
            require(a != b, "both neighbours are the same vertex");
            for (auto& y : out.edges[e1])
                if (y == x) y = b;
            std::replace(out.rotation[b].begin(), out.rotation[b].end(), e2, e1);
            std::vector<bool> dv(g.vertex_count(), false), de(g.edge_count(), false);
            dv[x] = true;
            de[e2] = true;
            out.rotation[x].clear();
            out = compact(out, dv, de);
        }
        break;
    }
    validate(out);
    return out;
}

} // namespace wsep
