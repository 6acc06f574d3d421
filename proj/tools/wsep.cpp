// Command line front end: exit 0 on success, 1 when a violation is found, 2 on usage errors.
#include "wsep/collection.hpp"
#include "wsep/errors.hpp"
#include "wsep/io/document.hpp"
#include "wsep/io/server.hpp"
#include "wsep/io/svg.hpp"
#include "wsep/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace wsep;
using io::json;

namespace {

// a violation found in the input (exit 1)
struct violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load(const std::string& path) { return io::parse_text(read_file(path)); }

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError("expected a comma separated list of integers, got '" + text + "'");
        }
    }
    return out;
}

// "i:c,j:c" fixed-point colors
std::map<int, int> parse_colors(const std::string& text) {
    std::map<int, int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("colors look like 3:-1,5:1");
        try {
            out[std::stoi(tok.substr(0, colon))] = std::stoi(tok.substr(colon + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("colors look like 3:-1,5:1");
        }
    }
    return out;
}

// the positroid selected by --uniform/-n/-k, --perm/--colors or --necklace FILE
struct positroid_source {
    bool uniform = false;
    int n = 0, k = -1;
    std::string perm, colors, necklace_file;

    void add_to(CLI::App* app) {
        app->add_flag("--uniform", uniform, "uniform positroid (all k-subsets of [n])");
        app->add_option("-n", n, "ground set size");
        app->add_option("-k", k, "rank");
        app->add_option("--perm", perm, "decorated permutation, e.g. 3,4,1,2");
        app->add_option("--colors", colors, "fixed point colors, e.g. 2:-1");
        app->add_option("--necklace", necklace_file, "necklace or permutation document");
    }

    necklace get() const {
        int chosen = uniform + !perm.empty() + !necklace_file.empty();
        if (chosen != 1) throw CLI::ValidationError("choose exactly one of --uniform, --perm, --necklace");
        if (uniform) {
            if (n < 1 || k < 0 || k > n) throw CLI::ValidationError("--uniform needs -n and 0 <= k <= n");
            return uniform_necklace(n, k);
        }
        if (!perm.empty()) return decorated_to_necklace(make_decorated(parse_ints(perm), parse_colors(colors)));
        auto doc = load(necklace_file);
        if (io::document_kind(doc) == "permutation") return decorated_to_necklace(io::permutation_from_json(doc));
        return io::necklace_from_json(doc);
    }
};

std::string line(const collection& c) {
    std::string s;
    for (auto x : c.sets) s += (s.empty() ? "" : " ") + to_string(x, c.n);
    return s;
}

int run_check(const std::string& path) {
    auto doc = load(path);
    auto kind = io::document_kind(doc);
    if (kind == "collection") {
        auto c = io::collection_from_json(doc, false);
        auto r = validate(c);
        if (!r.ok()) throw violation(r.describe(c.n));
        std::cout << "valid collection: " << c.size() << " sets";
        if (c.anchor) std::cout << (is_maximal(c) ? ", maximal" : ", not maximal") << " in its positroid";
        std::cout << "\n";
    } else if (kind == "plabic-graph") {
        auto g = io::plabic_from_json(doc);
        auto st = trace_strands(g);
        auto v = check_reduced(g);
        if (!v.reduced)
            throw violation("not reduced (condition " + std::to_string(v.condition) + "): " + v.witness);
        std::cout << "reduced plabic graph, strand permutation " << io::to_json(st.perm)["perm"].dump() << ", "
                  << face_count(g) << " faces\n";
    } else if (kind == "tiling") {
        auto et = io::tiling_from_json(doc);
        std::cout << "certified tiling: " << et.tiling.coll.size() << " vertices, " << et.tiling.faces.size()
                  << " faces\n";
    } else if (kind == "necklace") {
        io::necklace_from_json(doc);
        std::cout << "valid necklace\n";
    } else if (kind == "permutation") {
        io::permutation_from_json(doc);
        std::cout << "valid decorated permutation\n";
    } else {
        throw parse_error("unknown document kind '" + kind + "'", "/kind");
    }
    return 0;
}

// collection document that must be valid
collection load_collection(const std::string& path) {
    auto c = io::collection_from_json(load(path));
    return c;
}

int run_verify(const std::string& suite, int n, int k, int m) {
    suites::result r;
    auto need = [](bool ok, const char* what) {
        if (!ok) throw CLI::ValidationError(what);
    };
    if (suite == "purity") {
        need(n >= 1 && k >= 0 && k <= n, "purity needs -n and -k");
        r = suites::purity(n, k);
    } else if (suite == "connectedness") {
        need(n >= 1, "connectedness needs -n");
        r = suites::connectedness(n);
    } else if (suite == "winding") {
        need(n >= 1, "winding needs -n");
        r = suites::winding(n);
    } else if (suite == "duality") {
        need(n >= 1, "duality needs -n");
        r = suites::duality(n);
    } else if (suite == "hull") {
        need(n >= 1, "hull needs -n");
        r = suites::hull(n);
    } else if (suite == "lz") {
        if (m < 1) m = n;
        need(m >= 1, "lz needs -m");
        r = suites::lz(m);
    } else {
        throw CLI::ValidationError("unknown suite " + suite);
    }
    std::cout << r.summary << "\n";
    for (const auto& f : r.failures) std::cerr << f << "\n";
    return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weakly separated collections workbench"};
    app.require_subcommand(1);

    std::string file;
    auto* check = app.add_subcommand("check", "validate a document");
    check->add_option("file", file, "document (- for stdin)")->required();

    auto* neck = app.add_subcommand("necklace", "convert between permutation and necklace documents");
    std::string perm_text, colors_text;
    neck->add_option("file", file, "permutation or necklace document");
    neck->add_option("--perm", perm_text, "decorated permutation, e.g. 3,4,1,2");
    neck->add_option("--colors", colors_text, "fixed point colors, e.g. 2:-1");

    auto* bases = app.add_subcommand("bases", "list positroid bases");
    positroid_source bases_src;
    bool bases_count = false;
    bases_src.add_to(bases);
    bases->add_flag("--count", bases_count, "print only the number of bases");

    auto* maximalize = app.add_subcommand("maximalize", "extend an anchored collection to a maximal one");
    maximalize->add_option("file", file, "collection document")->required();

    auto* muts = app.add_subcommand("mutations", "list mutation sites");
    muts->add_option("file", file, "collection document")->required();

    auto* mutate = app.add_subcommand("mutate", "apply one mutation");
    int site_index = -1;
    std::string site_S, site_abcd;
    mutate->add_option("file", file, "collection document")->required();
    mutate->add_option("--index", site_index, "position in the mutations list");
    mutate->add_option("--S", site_S, "S as comma separated elements");
    mutate->add_option("--abcd", site_abcd, "a,b,c,d");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate maximal collections");
    positroid_source enum_src;
    std::string mode = "closure";
    bool enum_count = false;
    enum_src.add_to(enumerate);
    enumerate->add_option("--mode", mode, "closure or bruteforce")->check(CLI::IsMember({"closure", "bruteforce"}));
    enumerate->add_flag("--count", enum_count, "print only the number of collections");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int vn = 0, vk = -1, vm = 0;
    verify->add_option("suite", suite, "purity|connectedness|winding|duality|hull|lz")
        ->required()
        ->check(CLI::IsMember({"purity", "connectedness", "winding", "duality", "hull", "lz"}));
    verify->add_option("-n", vn, "ground set size");
    verify->add_option("-k", vk, "rank");
    verify->add_option("-m", vm, "permutation size for lz");

    auto* render = app.add_subcommand("render", "draw a collection, tiling or plabic graph as SVG");
    std::string out_path;
    bool no_labels = false;
    render->add_option("file", file, "collection, tiling or plabic-graph document")->required();
    render->add_option("-o,--output", out_path, "output file (default stdout)");
    render->add_flag("--no-labels", no_labels, "omit vertex labels");

    auto* serve = app.add_subcommand("serve", "start the wire service");
    std::string host = "127.0.0.1";
    int port = 8080;
    serve->add_option("--host", host, "address to bind");
    serve->add_option("--port", port, "port to bind");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(file);
        if (*neck) {
            if (!perm_text.empty() == !file.empty()) throw CLI::ValidationError("give a document or --perm");
            if (!perm_text.empty()) {
                auto p = make_decorated(parse_ints(perm_text), parse_colors(colors_text));
                std::cout << io::dump(io::to_json(decorated_to_necklace(p)));
                return 0;
            }
            auto doc = load(file);
            if (io::document_kind(doc) == "permutation")
                std::cout << io::dump(io::to_json(decorated_to_necklace(io::permutation_from_json(doc))));
            else
                std::cout << io::dump(io::to_json(necklace_to_decorated(io::necklace_from_json(doc))));
            return 0;
        }
        if (*bases) {
            auto nk = bases_src.get();
            auto b = positroid_bases(nk);
            if (bases_count) std::cout << b.size() << "\n";
            else
                for (auto s : b) std::cout << to_string(s, nk.n) << "\n";
            return 0;
        }
        if (*maximalize) {
            std::cout << io::dump(io::to_json(extend_to_maximal(load_collection(file))));
            return 0;
        }
        if (*muts) {
            json sites = json::array();
            for (const auto& s : mutation_sites(load_collection(file))) sites.push_back(io::site_json(s));
            std::cout << sites.dump(2) << "\n";
            return 0;
        }
        if (*mutate) {
            auto c = load_collection(file);
            mutation_site site;
            if (site_index >= 0) {
                auto sites = mutation_sites(c);
                if (site_index >= static_cast<int>(sites.size()))
                    throw CLI::ValidationError("only " + std::to_string(sites.size()) + " mutation sites");
                site = sites[site_index];
            } else {
                auto abcd = parse_ints(site_abcd);
                if (abcd.size() != 4) throw CLI::ValidationError("give --index or --abcd a,b,c,d (and --S)");
                site = {site_S.empty() ? 0 : make_subset(parse_ints(site_S), c.n), abcd[0], abcd[1], abcd[2], abcd[3]};
            }
            std::cout << io::dump(io::to_json(apply_mutation(c, site)));
            return 0;
        }
        if (*enumerate) {
            auto nk = enum_src.get();
            auto all = enumerate_maximal(nk, mode == "closure" ? enumeration_mode::closure : enumeration_mode::bruteforce);
            if (enum_count) std::cout << all.size() << "\n";
            else
                for (const auto& c : all) std::cout << line(c) << "\n";
            return 0;
        }
        if (*verify) return run_verify(suite, vn, vk, vm);
        if (*render) {
            auto doc = load(file);
            auto kind = io::document_kind(doc);
            io::svg_options opts;
            opts.labels = !no_labels;
            std::string svg;
            if (kind == "plabic-graph") svg = io::render_svg(io::plabic_from_json(doc), opts);
            else if (kind == "tiling") svg = io::render_svg(io::tiling_from_json(doc), opts);
            else svg = io::render_svg(embed_tiling(build_tiling(io::collection_from_json(doc))), opts);
            if (out_path.empty()) std::cout << svg;
            else std::ofstream(out_path) << svg;
            return 0;
        }
        if (*serve) {
            bool ok = io::serve(host, port, [&](const io::server_handle& h) {
                std::cerr << "listening on " << host << ":" << h.port << "\n";
            });
            if (!ok) {
                std::cerr << "cannot bind " << host << ":" << port << "\n";
                return 2;
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const violation& e) {
        std::cerr << e.what();
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "invalid document: " << e.what() << "\n";
        return 1;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const embedding_violation& e) {
        std::cerr << "embedding violation: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
