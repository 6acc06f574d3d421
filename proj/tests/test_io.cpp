#include "doctest.h"
#include "fixtures.hpp"

#include "wsep/errors.hpp"
#include "wsep/io/service.hpp"
#include "wsep/io/svg.hpp"

#include <set>

using namespace wsep;
using io::json;

static std::string location_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const parse_error& e) {
        return e.location;
    }
    return "<no error>";
}

TEST_CASE("fixtures round trip byte for byte") {
    for (auto name : {"octagon.json", "disconnected.json", "octagon_collection.json", "disconnected_collection.json",
                      "n4_maximal.json", "incomplete.json", "disconnected_perm.json", "octagon_tiling.json"}) {
        INFO(name);
        auto text = read_fixture(name);
        auto doc = io::parse_text(text);
        auto kind = io::document_kind(doc);
        json again;
        if (kind == "collection") again = io::to_json(io::collection_from_json(doc));
        else if (kind == "plabic-graph") again = io::to_json(io::plabic_from_json(doc));
        else if (kind == "permutation") again = io::to_json(io::permutation_from_json(doc));
        else if (kind == "tiling") again = io::to_json(io::tiling_from_json(doc));
        CHECK(io::dump(again) == text);
    }
    auto nk = decorated_to_necklace(io::permutation_from_json(load_fixture("disconnected_perm.json")));
    auto text = io::dump(io::to_json(nk));
    CHECK(io::dump(io::to_json(io::necklace_from_json(io::parse_text(text)))) == text);
    auto colored = make_decorated({1, 3, 2, 4}, {{1, -1}, {4, 1}});
    CHECK(io::permutation_from_json(io::to_json(colored)) == colored);
}

TEST_CASE("the n=4 collection document") {
    auto c = io::collection_from_json(
        io::parse_text(R"({"kind":"collection","version":"1","n":4,"k":2,"sets":[[1,2],[1,3],[1,4],[2,3],[3,4]]})"));
    CHECK(c.size() == 5);
    CHECK(validate(c).ok());
    c.anchor = uniform_necklace(4, 2);
    CHECK(is_maximal(c));
}

TEST_CASE("parse errors carry locations") {
    auto bad = load_fixture("bad_13_24.json");
    try {
        io::collection_from_json(bad);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        std::string what = e.what();
        CHECK(what.find("13") != std::string::npos);
        CHECK(what.find("24") != std::string::npos);
        CHECK(e.location == "/sets");
    }
    // raw parse keeps the pair for reporting
    auto raw = io::collection_from_json(bad, false);
    CHECK(validate(raw).not_separated.size() == 1);

    CHECK(location_of([] { io::parse_text("{\n  \"kind\": ,\n}"); }) == "2:11");
    CHECK(location_of([] { io::collection_from_json(io::parse_text(R"({"kind":"collection","version":"2"})")); }) ==
          "/version");
    CHECK(location_of([] { io::collection_from_json(io::parse_text(R"({"kind":"tiling","version":"1"})")); }) ==
          "/kind");
    CHECK(location_of([] {
              io::collection_from_json(io::parse_text(R"({"kind":"collection","version":"1","n":4,"k":2,"sets":[[1,2],[3,1]]})"));
          }) == "/sets/1");
    CHECK(location_of([] {
              io::collection_from_json(io::parse_text(R"({"kind":"collection","version":"1","n":4,"k":2,"sets":[[1,2],[1,5]]})"));
          }) == "/sets/1");
    CHECK(location_of([] {
              io::collection_from_json(io::parse_text(R"({"kind":"collection","version":"1","n":4,"k":2,"sets":[[1,2,3]]})"));
          }) == "/sets/0");
    CHECK(location_of([] { io::collection_from_json(io::parse_text(R"({"kind":"collection","version":"1","k":2})")); }) ==
          "/");
    CHECK(location_of([] {
              io::permutation_from_json(io::parse_text(R"({"kind":"permutation","version":"1","n":2,"perm":[1,1]})"));
          }) == "/perm");
    CHECK(location_of([] {
              io::necklace_from_json(io::parse_text(R"({"kind":"necklace","version":"1","n":2,"necklace":[[1],[1,2]]})"));
          }) == "/necklace");
    auto g = load_fixture("octagon.json");
    g["edges"][0] = json::array({0, 99});
    CHECK(location_of([&] { io::plabic_from_json(g); }) == "/edges/0/1");
    auto t = load_fixture("octagon_tiling.json");
    t["coords"]["123"][0] = 1;
    CHECK(location_of([&] { io::tiling_from_json(t); }) == "/coords");
}

TEST_CASE("decimal rendering") {
    CHECK(io::decimal(1, 3) == "0.333333");
    CHECK(io::decimal(2, 3) == "0.666667");
    CHECK(io::decimal(-1, 2000000) == "-0.000001");
    CHECK(io::decimal(-1, 3000000) == "0.000000");
    CHECK(io::decimal(7, 1) == "7.000000");
    CHECK(io::decimal(-15, 4, 1) == "-3.8");
}

TEST_CASE("svg output") {
    auto g = io::plabic_from_json(load_fixture("octagon.json"));
    auto svg = io::render_svg(g);
    CHECK(svg == read_fixture("octagon.svg"));
    CHECK(svg == io::render_svg(g));
    CHECK(svg.find("6 decimal places") != std::string::npos);
    std::set<std::string> labels;
    for (std::size_t p = svg.find("<text"); p != std::string::npos; p = svg.find("<text", p + 1)) {
        auto a = svg.find('>', p) + 1;
        labels.insert(svg.substr(a, svg.find('<', a) - a));
    }
    CHECK(labels == std::set<std::string>{"123", "234", "345", "456", "567", "678", "178", "128", "127", "137", "136",
                                          "135", "134", "167", "156", "145"});
    auto single = io::render_svg(embed_tiling(build_tiling(make_collection(3, 1, {elem(2)}))));
    CHECK(std::count(single.begin(), single.end(), '\n') > 0);
    CHECK(single.find("<circle") != std::string::npos);
    CHECK(single.find("<circle", single.find("<circle") + 1) == std::string::npos);
    CHECK(single.find(">2</text>") != std::string::npos);

    auto dis = io::render_svg(io::plabic_from_json(load_fixture("disconnected.json")));
    std::size_t texts = 0;
    for (std::size_t p = dis.find("<text"); p != std::string::npos; p = dis.find("<text", p + 1)) ++texts;
    CHECK(texts == 9);
}

static json body_of(const io::response& r) { return io::parse_text(r.body); }

TEST_CASE("service: health and routing") {
    auto h = io::handle_request("GET", "/health", "");
    CHECK(h.status == 200);
    CHECK(body_of(h) == json{{"status", "ok"}, {"version", "1"}});
    CHECK(io::handle_request("GET", "/nowhere", "").status == 404);
    CHECK(io::handle_request("GET", "/mutate", "").status == 405);
    CHECK(io::handle_request("POST", "/health", "").status == 405);
    auto r = io::handle_request("POST", "/validate", "{not json");
    CHECK(r.status == 400);
    CHECK(body_of(r)["error"]["location"].get<std::string>().rfind("1:", 0) == 0);
}

TEST_CASE("service: mutations and mutate") {
    auto doc = read_fixture("n4_maximal.json");
    auto r = io::handle_request("POST", "/mutations", doc);
    REQUIRE(r.status == 200);
    auto sites = body_of(r)["sites"];
    REQUIRE(sites.size() == 1);
    CHECK(sites[0]["S"] == json::array());
    CHECK(sites[0]["a"] == 1);
    CHECK(sites[0]["b"] == 2);
    CHECK(sites[0]["c"] == 3);
    CHECK(sites[0]["d"] == 4);

    json req = {{"document", io::parse_text(doc)}, {"site", sites[0]}};
    auto m1 = io::handle_request("POST", "/mutate", req.dump());
    REQUIRE(m1.status == 200);
    auto after = body_of(m1);
    CHECK(after["document"]["sets"] == io::parse_text(R"([[1,2],[2,3],[1,4],[2,4],[3,4]])"));
    json back = {{"document", after["document"]}, {"site", after["inverse"]}};
    auto m2 = io::handle_request("POST", "/mutate", back.dump());
    REQUIRE(m2.status == 200);
    CHECK(io::dump(body_of(m2)["document"]) == doc);

    // the same site again is no longer a site
    auto again = io::handle_request("POST", "/mutate", json{{"document", after["document"]}, {"site", sites[0]}}.dump());
    CHECK(again.status == 422);
    CHECK(body_of(again)["error"]["kind"] == "precondition");
}

TEST_CASE("service: canonical forms and errors") {
    auto doc = io::parse_text(read_fixture("n4_maximal.json"));
    auto shuffled = doc;
    std::reverse(shuffled["sets"].begin(), shuffled["sets"].end());
    auto r = io::handle_request("POST", "/validate", shuffled.dump());
    REQUIRE(r.status == 200);
    CHECK(body_of(r)["document"] == doc);
    CHECK(body_of(r)["valid"] == true);
    CHECK(body_of(r)["maximal"] == true);

    auto bad = read_fixture("bad_13_24.json");
    auto v = io::handle_request("POST", "/validate", bad);
    CHECK(v.status == 200);
    CHECK(body_of(v)["valid"] == false);
    CHECK(body_of(v)["violations"]["not_separated"] == io::parse_text(R"([["13","24"]])"));
    auto t = io::handle_request("POST", "/tiling", bad);
    CHECK(t.status == 400);
    CHECK(body_of(t)["error"]["message"].get<std::string>().find("13 and 24") != std::string::npos);

    auto unanchored = io::handle_request("POST", "/maximalize", R"({"kind":"collection","version":"1","n":4,"k":2,"sets":[[1,2]]})");
    CHECK(unanchored.status == 422);
    auto inc = io::handle_request("POST", "/maximalize", read_fixture("incomplete.json"));
    REQUIRE(inc.status == 200);
    CHECK(body_of(inc)["document"]["sets"].size() == 10);
}

TEST_CASE("service: tiling and necklace") {
    auto r = io::handle_request("POST", "/tiling", read_fixture("octagon_collection.json"));
    REQUIRE(r.status == 200);
    CHECK(body_of(r)["document"] == load_fixture("octagon_tiling.json"));

    auto p = io::handle_request("POST", "/necklace", read_fixture("disconnected_perm.json"));
    REQUIRE(p.status == 200);
    auto nk = body_of(p)["document"];
    CHECK(nk["kind"] == "necklace");
    CHECK(nk["k"] == 5);
    auto q = io::handle_request("POST", "/necklace", nk.dump());
    REQUIRE(q.status == 200);
    CHECK(body_of(q)["document"] == load_fixture("disconnected_perm.json"));
    CHECK(io::handle_request("POST", "/necklace", read_fixture("n4_maximal.json")).status == 400);
}
