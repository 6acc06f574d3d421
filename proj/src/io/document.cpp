#include "wsep/io/document.hpp"
#include "wsep/errors.hpp"

#include <algorithm>
#include <numeric>

namespace wsep::io {

namespace {

const json& field(const json& obj, const char* key, const std::string& loc) {
    if (!obj.is_object()) throw parse_error("expected an object", loc.empty() ? "/" : loc);
    auto it = obj.find(key);
    if (it == obj.end()) throw parse_error(std::string("missing field '") + key + "'", loc.empty() ? "/" : loc);
    return *it;
}

int int_field(const json& obj, const char* key, const std::string& loc) {
    const auto& v = field(obj, key, loc);
    if (!v.is_number_integer()) throw parse_error("expected an integer", loc + "/" + key);
    return v.get<int>();
}

const json& array_field(const json& obj, const char* key, const std::string& loc) {
    const auto& v = field(obj, key, loc);
    if (!v.is_array()) throw parse_error("expected an array", loc + "/" + key);
    return v;
}

void expect_kind(const json& doc, const char* kind) {
    auto k = document_kind(doc);
    if (k != kind) throw parse_error("expected a " + std::string(kind) + " document, got '" + k + "'", "/kind");
}

json header(const char* kind) {
    json d;
    d["kind"] = kind;
    d["version"] = format_version;
    return d;
}

// wraps library validation failures with a location
template <class F> auto at(const std::string& loc, F f) {
    try {
        return f();
    } catch (const invalid_input& e) {
        throw parse_error(e.what(), loc);
    }
}

json rational_pair(std::int64_t x, std::int64_t y, std::int64_t den) {
    auto g1 = std::gcd(x, den), g2 = std::gcd(y, den);
    return json::array({x / g1, den / g1, y / g2, den / g2});
}

std::array<std::int64_t, 4> rational_from_json(const json& v, const std::string& loc) {
    if (!v.is_array() || v.size() != 4) throw parse_error("expected [num, den, num, den]", loc);
    std::array<std::int64_t, 4> q{};
    for (std::size_t t = 0; t < 4; ++t) {
        if (!v[t].is_number_integer()) throw parse_error("expected an integer", loc + "/" + std::to_string(t));
        q[t] = v[t].get<std::int64_t>();
    }
    if (q[1] <= 0 || q[3] <= 0) throw parse_error("denominators must be positive", loc);
    return q;
}

std::vector<subset> necklace_entries(const json& arr, int n, const std::string& loc) {
    std::vector<subset> out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(subset_from_json(arr[i], n, loc + "/" + std::to_string(i)));
    return out;
}

necklace necklace_from_entries(int n, std::vector<subset> e, const std::string& loc) {
    if (static_cast<int>(e.size()) != n) throw parse_error("necklace needs n entries", loc);
    necklace nk{n, e.empty() ? 0 : card(e[0]), std::move(e)};
    at(loc, [&] {
        validate(nk);
        return 0;
    });
    return nk;
}

const char* color_name(vcolor c) {
    switch (c) {
    case vcolor::boundary: return "boundary";
    case vcolor::black: return "black";
    case vcolor::white: return "white";
    }
    return "";
}

} // namespace

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports a byte offset; turn it into line:column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') ++line, col = 1;
            else ++col;
        }
        throw parse_error("malformed JSON", std::to_string(line) + ":" + std::to_string(col));
    }
}

namespace {

// containers whose compact form fits on the line stay on one line
void pretty(const json& v, int indent, std::string& out) {
    std::string flat = v.dump();
    if (!v.is_structured() || v.empty() || flat.size() + indent <= 100) {
        out += flat;
        return;
    }
    std::string pad(indent + 2, ' ');
    bool obj = v.is_object();
    out += obj ? "{\n" : "[\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        if (obj) out += json(it.key()).dump() + ": ";
        pretty(*it, indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + (obj ? "}" : "]");
}

} // namespace

std::string dump(const json& doc) {
    std::string out;
    pretty(doc, 0, out);
    return out + "\n";
}

std::string document_kind(const json& doc) {
    const auto& v = field(doc, "version", "");
    if (!v.is_string()) throw parse_error("version must be a string", "/version");
    if (v.get<std::string>() != format_version)
        throw parse_error("unsupported version '" + v.get<std::string>() + "'", "/version");
    const auto& k = field(doc, "kind", "");
    if (!k.is_string()) throw parse_error("kind must be a string", "/kind");
    return k.get<std::string>();
}

json subset_json(subset s) {
    json a = json::array();
    for (int x : members(s)) a.push_back(x);
    return a;
}

subset subset_from_json(const json& v, int n, const std::string& loc) {
    if (!v.is_array()) throw parse_error("expected an array of elements", loc);
    std::vector<int> xs;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (!v[t].is_number_integer()) throw parse_error("expected an integer", loc + "/" + std::to_string(t));
        xs.push_back(v[t].get<int>());
    }
    if (!std::is_sorted(xs.begin(), xs.end())) throw parse_error("elements must be sorted ascending", loc);
    return at(loc, [&] { return make_subset(xs, n); });
}

json to_json(const collection& c) {
    json d = header("collection");
    d["n"] = c.n;
    d["k"] = c.k;
    json sets = json::array();
    for (auto s : c.sets) sets.push_back(subset_json(s));
    d["sets"] = sets;
    if (c.anchor) {
        json nk = json::array();
        for (auto e : c.anchor->entries) nk.push_back(subset_json(e));
        d["anchor"] = {{"necklace", nk}};
    }
    return d;
}

collection collection_from_json(const json& doc, bool strict) {
    expect_kind(doc, "collection");
    int n = int_field(doc, "n", "");
    int k = int_field(doc, "k", "");
    at("/n", [&] {
        check_ground(n);
        return 0;
    });
    const auto& arr = array_field(doc, "sets", "");
    std::vector<subset> sets;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto loc = "/sets/" + std::to_string(i);
        sets.push_back(subset_from_json(arr[i], n, loc));
        if (strict && card(sets.back()) != k)
            throw parse_error("set " + to_string(sets.back(), n) + " does not have " + std::to_string(k) + " elements",
                              loc);
    }
    std::optional<necklace> anchor;
    if (doc.contains("anchor")) {
        const auto& nkarr = array_field(field(doc, "anchor", ""), "necklace", "/anchor");
        anchor = necklace_from_entries(n, necklace_entries(nkarr, n, "/anchor/necklace"), "/anchor/necklace");
    }
    auto c = at("/sets", [&] { return make_collection(n, k, sets, anchor); });
    if (strict) {
        auto r = validate(c);
        if (!r.not_separated.empty()) {
            auto [a, b] = r.not_separated.front();
            throw parse_error("sets " + to_string(a, n) + " and " + to_string(b, n) + " are not weakly separated",
                              "/sets");
        }
        if (!r.outside_positroid.empty())
            throw parse_error("set " + to_string(r.outside_positroid.front(), n) + " is outside the positroid",
                              "/sets");
        if (!r.missing_necklace.empty())
            throw parse_error("necklace entry " + to_string(r.missing_necklace.front(), n) + " is missing", "/sets");
    }
    return c;
}

json to_json(const necklace& nk) {
    json d = header("necklace");
    d["n"] = nk.n;
    d["k"] = nk.k;
    json e = json::array();
    for (auto s : nk.entries) e.push_back(subset_json(s));
    d["necklace"] = e;
    return d;
}

necklace necklace_from_json(const json& doc) {
    expect_kind(doc, "necklace");
    int n = int_field(doc, "n", "");
    at("/n", [&] {
        check_ground(n);
        return 0;
    });
    auto nk = necklace_from_entries(n, necklace_entries(array_field(doc, "necklace", ""), n, "/necklace"), "/necklace");
    if (doc.contains("k") && int_field(doc, "k", "") != nk.k) throw parse_error("k disagrees with the entries", "/k");
    return nk;
}

json to_json(const decorated_perm& p) {
    json d = header("permutation");
    d["n"] = p.n;
    d["perm"] = p.perm;
    json colors = json::object();
    for (int i = 1; i <= p.n; ++i)
        if (p(i) == i) colors[std::to_string(i)] = p.color(i);
    d["colors"] = colors;
    return d;
}

decorated_perm permutation_from_json(const json& doc) {
    expect_kind(doc, "permutation");
    int n = int_field(doc, "n", "");
    const auto& arr = array_field(doc, "perm", "");
    if (static_cast<int>(arr.size()) != n) throw parse_error("perm must have n entries", "/perm");
    std::vector<int> perm;
    for (std::size_t t = 0; t < arr.size(); ++t) {
        if (!arr[t].is_number_integer()) throw parse_error("expected an integer", "/perm/" + std::to_string(t));
        perm.push_back(arr[t].get<int>());
    }
    std::map<int, int> colors;
    if (doc.contains("colors")) {
        const auto& c = field(doc, "colors", "");
        if (!c.is_object()) throw parse_error("expected an object", "/colors");
        for (auto it = c.begin(); it != c.end(); ++it) {
            auto loc = "/colors/" + it.key();
            int i = 0;
            try {
                std::size_t used = 0;
                i = std::stoi(it.key(), &used);
                if (used != it.key().size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw parse_error("color keys must be fixed points", loc);
            }
            if (!it.value().is_number_integer()) throw parse_error("expected +1 or -1", loc);
            colors[i] = it.value().get<int>();
        }
    }
    return at("/perm", [&] { return make_decorated(perm, colors); });
}

json to_json(const plabic_graph& g) {
    json d = header("plabic-graph");
    d["n"] = g.n;
    json vs = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) vs.push_back({{"id", v}, {"color", color_name(g.color[v])}});
    d["vertices"] = vs;
    d["boundary"] = g.boundary;
    json es = json::array();
    for (auto e : g.edges) es.push_back(json::array({e[0], e[1]}));
    d["edges"] = es;
    json rot = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) rot[std::to_string(v)] = g.rotation[v];
    d["rotation"] = rot;
    return d;
}

plabic_graph plabic_from_json(const json& doc) {
    expect_kind(doc, "plabic-graph");
    plabic_graph g;
    g.n = int_field(doc, "n", "");
    at("/n", [&] {
        check_ground(g.n);
        return 0;
    });
    const auto& vs = array_field(doc, "vertices", "");
    std::map<long long, int> index;
    for (std::size_t t = 0; t < vs.size(); ++t) {
        auto loc = "/vertices/" + std::to_string(t);
        long long id = int_field(vs[t], "id", loc);
        const auto& c = field(vs[t], "color", loc);
        if (!c.is_string()) throw parse_error("color must be a string", loc + "/color");
        auto name = c.get<std::string>();
        if (name == "boundary") g.color.push_back(vcolor::boundary);
        else if (name == "black") g.color.push_back(vcolor::black);
        else if (name == "white") g.color.push_back(vcolor::white);
        else throw parse_error("unknown color '" + name + "'", loc + "/color");
        if (!index.emplace(id, static_cast<int>(t)).second) throw parse_error("duplicate vertex id", loc + "/id");
    }
    auto vertex = [&](const json& v, const std::string& loc) {
        if (!v.is_number_integer()) throw parse_error("expected a vertex id", loc);
        auto it = index.find(v.get<long long>());
        if (it == index.end()) throw parse_error("unknown vertex id", loc);
        return it->second;
    };
    const auto& bd = array_field(doc, "boundary", "");
    for (std::size_t t = 0; t < bd.size(); ++t) g.boundary.push_back(vertex(bd[t], "/boundary/" + std::to_string(t)));
    const auto& es = array_field(doc, "edges", "");
    for (std::size_t t = 0; t < es.size(); ++t) {
        auto loc = "/edges/" + std::to_string(t);
        if (!es[t].is_array() || es[t].size() != 2) throw parse_error("expected [id, id]", loc);
        g.edges.push_back({vertex(es[t][0], loc + "/0"), vertex(es[t][1], loc + "/1")});
    }
    const auto& rot = field(doc, "rotation", "");
    if (!rot.is_object()) throw parse_error("expected an object", "/rotation");
    g.rotation.assign(g.color.size(), {});
    for (auto it = rot.begin(); it != rot.end(); ++it) {
        auto loc = "/rotation/" + it.key();
        long long id = 0;
        try {
            std::size_t used = 0;
            id = std::stoll(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw parse_error("rotation keys must be vertex ids", loc);
        }
        auto vi = index.find(id);
        if (vi == index.end()) throw parse_error("unknown vertex id", loc);
        if (!it.value().is_array()) throw parse_error("expected an array of edge indices", loc);
        for (const auto& e : it.value()) {
            if (!e.is_number_integer()) throw parse_error("expected an edge index", loc);
            g.rotation[vi->second].push_back(e.get<int>());
        }
    }
    at("/", [&] {
        validate(g);
        return 0;
    });
    return g;
}

json to_json(const embedded_tiling& et) {
    const auto& c = et.tiling.coll;
    json d = to_json(c);
    d["kind"] = "tiling";
    json poly = json::object();
    poly["version"] = et.poly.version;
    json pv = json::array();
    for (auto p : et.poly.v) pv.push_back(rational_pair(p.x, p.y, et.poly.den));
    poly["vertices"] = pv;
    d["polygon"] = poly;
    json coords = json::object();
    for (auto s : c.sets) {
        auto p = et.coords.at(s);
        coords[to_string(s, c.n)] = rational_pair(p.x, p.y, et.poly.den);
    }
    d["coords"] = coords;
    json es = json::array();
    for (auto [a, b] : et.tiling.edges) es.push_back(json::array({subset_json(a), subset_json(b)}));
    d["edges"] = es;
    json fs = json::array();
    for (const auto& f : et.tiling.faces) {
        json cyc = json::array();
        for (auto s : f.cycle) cyc.push_back(subset_json(s));
        fs.push_back({{"color", f.color == face_color::white ? "white" : "black"},
                      {"key", subset_json(f.key)},
                      {"cycle", cyc}});
    }
    d["faces"] = fs;
    return d;
}

embedded_tiling tiling_from_json(const json& doc) {
    expect_kind(doc, "tiling");
    json as_coll = doc;
    as_coll["kind"] = "collection";
    auto c = collection_from_json(as_coll, true);
    const auto& poly = field(doc, "polygon", "");
    const auto& pv = array_field(poly, "vertices", "/polygon");
    std::vector<std::array<std::int64_t, 4>> pts;
    for (std::size_t t = 0; t < pv.size(); ++t)
        pts.push_back(rational_from_json(pv[t], "/polygon/vertices/" + std::to_string(t)));
    if (static_cast<int>(pts.size()) != c.n) throw parse_error("polygon needs n vertices", "/polygon/vertices");
    auto p = at("/polygon", [&] { return make_polygon(pts); });
    const auto& ver = field(poly, "version", "/polygon");
    if (!ver.is_string()) throw parse_error("expected a string", "/polygon/version");
    p.version = ver.get<std::string>();
    embedded_tiling et;
    try {
        et = embed_tiling(build_tiling(c), p);
    } catch (const embedding_violation& e) {
        throw parse_error(e.what(), "/coords");
    }
    // the derived parts must match what the document claims
    json again = to_json(et);
    for (const char* key : {"coords", "edges", "faces"})
        if (field(doc, key, "") != again[key])
            throw parse_error(std::string(key) + " do not match the collection", std::string("/") + key);
    return et;
}

json site_json(const mutation_site& s) {
    return {{"S", subset_json(s.S)}, {"a", s.a},
            {"b", s.b},              {"c", s.c},
            {"d", s.d},              {"removed", subset_json(s.removed())},
            {"added", subset_json(s.added())}};
}

mutation_site site_from_json(const json& v, int n, const std::string& loc) {
    mutation_site s;
    s.S = subset_from_json(field(v, "S", loc), n, loc + "/S");
    s.a = int_field(v, "a", loc);
    s.b = int_field(v, "b", loc);
    s.c = int_field(v, "c", loc);
    s.d = int_field(v, "d", loc);
    return s;
}

json report_json(const std::string& suite, bool ok, const std::string& summary,
                 const std::vector<std::string>& details) {
    json d = header("report");
    d["suite"] = suite;
    d["ok"] = ok;
    d["summary"] = summary;
    d["details"] = details;
    return d;
}

} // namespace wsep::io
