#include "wsep/io/service.hpp"
#include "wsep/errors.hpp"
#include "wsep/io/document.hpp"

namespace wsep::io {

namespace {

response error(int status, const std::string& kind, const std::string& message, const std::string& location = {}) {
    json e = {{"kind", kind}, {"message", message}};
    if (!location.empty()) e["location"] = location;
    return {status, json{{"error", e}}.dump()};
}

response ok(const json& body) { return {200, body.dump()}; }

json violations(const validation_report& r, int n) {
    auto list = [&](const std::vector<subset>& v) {
        json a = json::array();
        for (auto s : v) a.push_back(to_string(s, n));
        return a;
    };
    json pairs = json::array();
    for (auto [a, b] : r.not_separated) pairs.push_back(json::array({to_string(a, n), to_string(b, n)}));
    return {{"wrong_size", list(r.wrong_size)},
            {"not_separated", pairs},
            {"outside_positroid", list(r.outside_positroid)},
            {"missing_necklace", list(r.missing_necklace)}};
}

const necklace& anchor_of(const collection& c) {
    if (!c.anchor) throw invalid_input("the collection needs an anchor necklace");
    return *c.anchor;
}

response route(const std::string& path, const json& body) {
    if (path == "/validate") {
        auto c = collection_from_json(body, false);
        auto r = validate(c);
        json out = {{"valid", r.ok()}, {"document", to_json(c)}, {"violations", violations(r, c.n)}};
        if (r.ok() && c.anchor) out["maximal"] = is_maximal(c);
        return ok(out);
    }
    if (path == "/maximalize") {
        auto c = collection_from_json(body);
        anchor_of(c);
        return ok({{"document", to_json(extend_to_maximal(c))}});
    }
    if (path == "/mutations") {
        auto c = collection_from_json(body);
        json sites = json::array();
        for (const auto& s : mutation_sites(c)) sites.push_back(site_json(s));
        return ok({{"document", to_json(c)}, {"sites", sites}});
    }
    if (path == "/mutate") {
        if (!body.is_object() || !body.contains("document") || !body.contains("site"))
            throw parse_error("expected {document, site}", "/");
        auto c = collection_from_json(body["document"]);
        auto site = site_from_json(body["site"], c.n, "/site");
        auto next = apply_mutation(c, site);
        return ok({{"document", to_json(next)}, {"site", site_json(site)}, {"inverse", site_json(mirrored(site))}});
    }
    if (path == "/tiling") {
        auto c = collection_from_json(body);
        return ok({{"document", to_json(embed_tiling(build_tiling(c)))}});
    }
    if (path == "/necklace") {
        auto kind = document_kind(body);
        if (kind == "permutation") {
            auto p = permutation_from_json(body);
            return ok({{"document", to_json(decorated_to_necklace(p))}, {"input", to_json(p)}});
        }
        if (kind == "necklace") {
            auto nk = necklace_from_json(body);
            return ok({{"document", to_json(necklace_to_decorated(nk))}, {"input", to_json(nk)}});
        }
        throw parse_error("expected a permutation or necklace document", "/kind");
    }
    return error(404, "not_found", "no route " + path);
}

} // namespace

response handle_request(const std::string& method, const std::string& path, const std::string& body) {
    static const char* posts[] = {"/validate", "/maximalize", "/mutations", "/mutate", "/tiling", "/necklace"};
    if (path == "/health") {
        if (method != "GET") return error(405, "method_not_allowed", "use GET");
        return ok({{"status", "ok"}, {"version", format_version}});
    }
    bool known = false;
    for (auto p : posts) known = known || path == p;
    if (!known) return error(404, "not_found", "no route " + path);
    if (method != "POST") return error(405, "method_not_allowed", "use POST");
    try {
        return route(path, parse_text(body));
    } catch (const parse_error& e) {
        return error(400, "parse_error", e.what(), e.location);
    } catch (const invalid_input& e) {
        return error(422, "precondition", e.what());
    } catch (const resource_error& e) {
        return error(422, "budget", e.what());
    } catch (const embedding_violation& e) {
        return error(422, "embedding", e.what());
    }
}

} // namespace wsep::io
