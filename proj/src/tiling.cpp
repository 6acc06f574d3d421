#include "wsep/tiling.hpp"
#include "wsep/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wsep {

using geom::i128;
using geom::point;

namespace {

std::pair<subset, subset> edge_key(subset a, subset b) { return a < b ? std::pair(a, b) : std::pair(b, a); }

} // namespace

plabic_tiling build_tiling(const collection& c) {
    require_valid(c);
    plabic_tiling t;
    t.coll = c;
    const int n = c.n, k = c.k;
    // clique key -> (distinguishing element, member)
    std::map<subset, std::vector<std::pair<int, subset>>> white, black;
    for (auto I : c.sets) {
        for (int a : members(I)) white[I & ~elem(a)].emplace_back(a, I);
        for (int b = 1; b <= n; ++b)
            if (!has(I, b)) black[I | elem(b)].emplace_back(b, I);
    }
    std::set<std::pair<subset, subset>> edges;
    auto add_edge = [&](subset a, subset b) { edges.insert(edge_key(a, b)); };
    auto add_faces = [&](auto& cliques, face_color col) {
        for (auto& [key, mem] : cliques) {
            std::sort(mem.begin(), mem.end());
            if (mem.size() < 3) continue;
            tiling_face f{col, key, {}};
            for (auto& [x, I] : mem) f.cycle.push_back(I);
            for (std::size_t j = 0; j < f.cycle.size(); ++j) add_edge(f.cycle[j], f.cycle[(j + 1) % f.cycle.size()]);
            t.faces.push_back(std::move(f));
        }
    };
    if (k >= 1) add_faces(white, face_color::white);
    if (k <= n - 1) add_faces(black, face_color::black);
    // two-element cliques that coincide: W(I n J) = B(I u J) = {I, J}
    for (std::size_t a = 0; a < c.sets.size(); ++a)
        for (std::size_t b = a + 1; b < c.sets.size(); ++b) {
            subset I = c.sets[a], J = c.sets[b];
            if (card(I ^ J) != 2) continue;
            auto w = white.find(I & J);
            auto bl = black.find(I | J);
            if (w != white.end() && bl != black.end() && w->second.size() == 2 && bl->second.size() == 2)
                add_edge(I, J);
        }
    t.edges.assign(edges.begin(), edges.end());
    return t;
}

polygon default_polygon(int n) {
    check_ground(n);
    constexpr std::int64_t R = 5525;
    std::vector<point> pts;
    for (std::int64_t x = -R; x <= R; ++x) {
        std::int64_t y2 = R * R - x * x;
        auto y = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(y2))));
        while (y * y > y2) --y;
        while ((y + 1) * (y + 1) <= y2) ++y;
        if (y * y != y2) continue;
        pts.push_back({x, y});
        if (y) pts.push_back({x, -y});
    }
    std::sort(pts.begin(), pts.end());
    std::vector<bool> taken(pts.size(), false);
    polygon p;
    p.den = R;
    p.version = "lattice-circle-5525/v1";
    const double pi = std::acos(-1.0);
    for (int i = 1; i <= n; ++i) {
        double target = pi / 2 - 2 * pi * (i - 1) / n;
        std::size_t best = 0;
        double bestd = 1e9;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (taken[j]) continue;
            double d = std::remainder(std::atan2(double(pts[j].y), double(pts[j].x)) - target, 2 * pi);
            if (std::fabs(d) < bestd) bestd = std::fabs(d), best = j;
        }
        taken[best] = true;
        p.v.push_back(pts[best]);
    }
    if (n >= 3 && !geom::strictly_convex_cw(p.v)) throw std::logic_error("default polygon is not convex");
    return p;
}

polygon make_polygon(const std::vector<std::array<std::int64_t, 4>>& pts) {
    polygon p;
    p.version = "user";
    std::int64_t L = 1;
    for (auto& q : pts) {
        if (q[1] <= 0 || q[3] <= 0) throw invalid_input("polygon denominators must be positive");
        for (auto d : {q[1], q[3]}) {
            L = std::lcm(L, d);
            if (L > (std::int64_t{1} << 40)) throw invalid_input("polygon denominators too large");
        }
    }
    for (auto& q : pts) {
        i128 x = i128(q[0]) * (L / q[1]), y = i128(q[2]) * (L / q[3]);
        if (x > (i128(1) << 50) || x < -(i128(1) << 50) || y > (i128(1) << 50) || y < -(i128(1) << 50))
            throw invalid_input("polygon coordinates too large");
        p.v.push_back({static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
    }
    p.den = L;
    if (p.v.size() >= 3 && !geom::strictly_convex_cw(p.v))
        throw invalid_input("polygon must be strictly convex with vertices in clockwise order");
    if (p.v.size() == 2 && p.v[0] == p.v[1]) throw invalid_input("polygon vertices must be distinct");
    return p;
}

point embed_point(subset I, const polygon& p) {
    point s{0, 0};
    for (int a : members(I)) s = s + p.v[a - 1];
    return s;
}

namespace {

std::string face_name(const tiling_face& f, int n) {
    return std::string(f.color == face_color::white ? "W(" : "B(") + to_string(f.key, n) + ")";
}

std::vector<point> face_points(const tiling_face& f, const std::map<subset, point>& coords) {
    std::vector<point> out;
    for (auto I : f.cycle) out.push_back(coords.at(I));
    return out;
}

} // namespace

embedded_tiling embed_tiling(const plabic_tiling& t, std::optional<polygon> poly) {
    const int n = t.coll.n;
    embedded_tiling et;
    et.tiling = t;
    et.poly = poly ? *poly : default_polygon(n);
    if (static_cast<int>(et.poly.v.size()) != n) throw invalid_input("polygon must have n vertices");
    for (auto I : t.coll.sets) et.coords[I] = embed_point(I, et.poly);
    auto name = [&](subset I) { return to_string(I, n); };

    std::map<point, subset> at;
    for (auto [I, p] : et.coords) {
        auto [it, fresh] = at.emplace(p, I);
        if (!fresh) throw embedding_violation("coincident vertices", name(it->second), name(I));
    }
    std::vector<std::vector<point>> polys;
    for (const auto& f : t.faces) {
        polys.push_back(face_points(f, et.coords));
        if (!geom::strictly_convex_cw(polys.back()))
            throw embedding_violation("face is not a clockwise convex polygon", face_name(f, n), face_name(f, n));
    }
    for (std::size_t a = 0; a < polys.size(); ++a)
        for (std::size_t b = a + 1; b < polys.size(); ++b)
            if (geom::convex_interiors_overlap(polys[a], polys[b]))
                throw embedding_violation("overlapping faces", face_name(t.faces[a], n), face_name(t.faces[b], n));
    const auto& E = t.edges;
    for (std::size_t a = 0; a < E.size(); ++a) {
        point p = et.coords[E[a].first], q = et.coords[E[a].second];
        for (std::size_t b = a + 1; b < E.size(); ++b)
            if (geom::segments_overlap(p, q, et.coords[E[b].first], et.coords[E[b].second]))
                throw embedding_violation("crossing edges", name(E[a].first) + "-" + name(E[a].second),
                                          name(E[b].first) + "-" + name(E[b].second));
        for (auto [I, r] : et.coords)
            if (geom::in_segment_interior(r, p, q))
                throw embedding_violation("vertex on an edge", name(I), name(E[a].first) + "-" + name(E[a].second));
    }
    for (std::size_t f = 0; f < polys.size(); ++f)
        for (auto [I, r] : et.coords)
            if (geom::strictly_inside_convex(r, polys[f]))
                throw embedding_violation("vertex inside a face", name(I), face_name(t.faces[f], n));
    return et;
}

int necklace_winding(const necklace& anchor, subset J, const polygon& poly) {
    validate(anchor);
    if (!is_connected(anchor)) throw invalid_input("winding test needs a connected necklace");
    if (card(J) != anchor.k) throw invalid_input("subset size differs from the necklace rank");
    for (auto I : anchor.entries) {
        if (I == J) throw invalid_input("subset is a necklace entry");
        if (!weakly_separated_unchecked(I, J, anchor.n))
            throw invalid_input("subset is not weakly separated from necklace entry " + to_string(I, anchor.n));
    }
    std::vector<point> curve;
    for (auto I : anchor.entries) curve.push_back(embed_point(I, poly));
    return geom::winding_cw(embed_point(J, poly), curve);
}

bool inside_necklace_curve(const necklace& anchor, subset J) {
    return necklace_winding(anchor, J, default_polygon(anchor.n)) == 1;
}

i128 faces_area2(const embedded_tiling& et) {
    i128 s = 0;
    for (const auto& f : et.tiling.faces) s += geom::area2(face_points(f, et.coords));
    return s;
}

i128 necklace_area2(const necklace& anchor, const polygon& poly) {
    std::vector<point> curve;
    for (auto I : anchor.entries) curve.push_back(embed_point(I, poly));
    return geom::area2(curve);
}

namespace {

// graph for one connected component on its own ground set [m]
plabic_graph component_graph(const collection& c, const decorated_perm& p) {
    const int m = c.n;
    plabic_graph g;
    g.n = m;
    for (int i = 0; i < m; ++i) {
        g.color.push_back(vcolor::boundary);
        g.boundary.push_back(i);
        g.rotation.emplace_back();
    }
    auto add_vertex = [&](vcolor col) {
        g.color.push_back(col);
        g.rotation.emplace_back();
        return g.vertex_count() - 1;
    };
    auto add_edge = [&](int a, int b) {
        g.edges.push_back({a, b});
        return g.edge_count() - 1;
    };
    if (m == 1) {
        int leaf = add_vertex(p.color(1) == -1 ? vcolor::white : vcolor::black);
        int e = add_edge(0, leaf);
        g.rotation[0] = {e};
        g.rotation[leaf] = {e};
        return g;
    }
    if (m == 2) {
        int mid = add_vertex(vcolor::white);
        int e1 = add_edge(0, mid), e2 = add_edge(mid, 1);
        g.rotation[0] = {e1};
        g.rotation[1] = {e2};
        g.rotation[mid] = {e1, e2};
        return g;
    }
    auto t = build_tiling(c);
    const auto& nk = *c.anchor;
    // tiling edge -> faces using it
    std::map<std::pair<subset, subset>, std::vector<int>> users;
    for (int f = 0; f < static_cast<int>(t.faces.size()); ++f) {
        const auto& cyc = t.faces[f].cycle;
        for (std::size_t j = 0; j < cyc.size(); ++j) users[edge_key(cyc[j], cyc[(j + 1) % cyc.size()])].push_back(f);
    }
    std::vector<int> fv;
    for (const auto& f : t.faces) fv.push_back(add_vertex(f.color == face_color::white ? vcolor::white : vcolor::black));
    std::map<std::pair<subset, subset>, int> graph_edge;
    for (int i = 1; i <= m; ++i) {
        auto seg = edge_key(nk.at(i), nk.at(i % m + 1));
        auto it = users.find(seg);
        if (it == users.end() || it->second.size() != 1)
            throw std::logic_error("necklace segment is not on exactly one tile");
        int e = add_edge(i - 1, fv[it->second[0]]);
        g.rotation[i - 1] = {e};
        graph_edge[seg] = e;
    }
    for (auto& [seg, fs] : users) {
        if (graph_edge.count(seg)) continue;
        if (fs.size() != 2) throw std::logic_error("interior tiling edge not shared by two tiles");
        graph_edge[seg] = add_edge(fv[fs[0]], fv[fs[1]]);
    }
    for (int f = 0; f < static_cast<int>(t.faces.size()); ++f) {
        const auto& cyc = t.faces[f].cycle;
        for (std::size_t j = 0; j < cyc.size(); ++j)
            g.rotation[fv[f]].push_back(graph_edge.at(edge_key(cyc[j], cyc[(j + 1) % cyc.size()])));
    }
    return g;
}

} // namespace

plabic_graph tiling_to_plabic(const collection& c) {
    if (!c.anchor) throw invalid_input("tiling_to_plabic needs an anchored collection");
    if (!is_maximal(c)) throw invalid_input("collection is not maximal in its positroid");
    const int n = c.n;
    auto perm = necklace_to_decorated(*c.anchor);
    auto cc = connected_components(perm);

    plabic_graph g;
    g.n = n;
    for (int i = 0; i < n; ++i) {
        g.color.push_back(vcolor::boundary);
        g.boundary.push_back(i);
        g.rotation.emplace_back();
    }
    for (std::size_t b = 0; b < cc.blocks.size(); ++b) {
        auto ground = members(cc.blocks[b]);
        const auto& p = cc.perms[b];
        auto sub_nk = decorated_to_necklace(p);
        std::set<subset> parts;
        for (auto J : c.sets) parts.insert(restrict_to(J, ground));
        auto sub = make_collection(static_cast<int>(ground.size()), sub_nk.k,
                                   std::vector<subset>(parts.begin(), parts.end()), sub_nk);
        if (!validate(sub).ok() || static_cast<int>(sub.size()) != length(sub_nk) + 1)
            throw std::logic_error("component collection is not maximal");
        auto h = component_graph(sub, p);
        // splice: local boundary j -> global boundary ground[j-1], internal vertices appended
        std::vector<int> vmap(h.vertex_count());
        for (int j = 0; j < h.n; ++j) vmap[j] = ground[j] - 1;
        for (int v = h.n; v < h.vertex_count(); ++v) {
            vmap[v] = g.vertex_count();
            g.color.push_back(h.color[v]);
            g.rotation.emplace_back();
        }
        int ebase = g.edge_count();
        for (auto [a, b2] : h.edges) g.edges.push_back({vmap[a], vmap[b2]});
        for (int v = 0; v < h.vertex_count(); ++v)
            for (int e : h.rotation[v]) g.rotation[vmap[v]].push_back(ebase + e);
    }
    validate(g);
    auto fl = face_labels(g);
    auto labels = fl.labels;
    std::sort(labels.begin(), labels.end());
    if (labels != c.sets) throw std::logic_error("dual graph face labels differ from the collection");
    if (trace_strands(g).perm != perm) throw std::logic_error("dual graph has the wrong strand permutation");
    return g;
}

plabic_tiling plabic_to_tiling(const plabic_graph& g) {
    auto fl = face_labels(g);
    auto perm = trace_strands(g).perm;
    auto nk = decorated_to_necklace(perm);
    return build_tiling(make_collection(g.n, nk.k, fl.labels, nk));
}

} // namespace wsep
