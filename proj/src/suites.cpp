#include "wsep/suites.hpp"
#include "wsep/collection.hpp"
#include "wsep/lz.hpp"
#include "wsep/tiling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wsep::suites {

namespace {

constexpr std::size_t max_failures = 20;

std::string perm_string(const decorated_perm& p) {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= p.n; ++i) {
        os << (i > 1 ? "," : "") << p(i);
        if (p(i) == i) os << (p.color(i) > 0 ? "+" : "-");
    }
    os << "]";
    return os.str();
}

std::string sets_string(const std::vector<subset>& v, int n) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + to_string(x, n);
    return s;
}

} // namespace

void result::fail(const std::string& what) {
    ok = false;
    if (failures.size() < max_failures) failures.push_back(what);
}

std::vector<decorated_perm> all_decorated_perms(int n) {
    check_ground(n);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<decorated_perm> out;
    do {
        std::vector<int> fixed;
        for (int i = 1; i <= n; ++i)
            if (p[i - 1] == i) fixed.push_back(i);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fixed.size()); ++mask) {
            std::map<int, int> colors;
            for (std::size_t t = 0; t < fixed.size(); ++t) colors[fixed[t]] = (mask >> t) & 1u ? -1 : 1;
            out.push_back(make_decorated(p, colors));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

result purity(int n, int k) {
    result r;
    r.name = "purity";
    auto all = enumerate_maximal(uniform_necklace(n, k), enumeration_mode::closure);
    std::size_t want = static_cast<std::size_t>(k * (n - k) + 1);
    for (const auto& c : all)
        if (c.size() != want)
            r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": collection of size " +
                   std::to_string(c.size()) + ": " + sets_string(c.sets, n));
    r.summary = r.ok ? "all maximal collections have size " + std::to_string(want) + " (" +
                           std::to_string(all.size()) + " collections, n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + ")"
                     : "maximal collections of the wrong size found";
    return r;
}

result enumeration_count(int n, int k, bool compare_modes) {
    result r;
    r.name = "enumerate";
    auto nk = uniform_necklace(n, k);
    auto closure = enumerate_maximal(nk, enumeration_mode::closure);
    r.summary = std::to_string(closure.size());
    if (compare_modes && enumerate_maximal(nk, enumeration_mode::bruteforce) != closure)
        r.fail("closure and bruteforce disagree for n=" + std::to_string(n) + " k=" + std::to_string(k));
    return r;
}

result connectedness(const std::vector<decorated_perm>& perms, const std::string& scope) {
    result r;
    r.name = "connectedness";
    std::size_t collections = 0;
    for (const auto& p : perms) {
        auto nk = decorated_to_necklace(p);
        auto closure = enumerate_maximal(nk, enumeration_mode::closure);
        auto brute = enumerate_maximal(nk, enumeration_mode::bruteforce);
        collections += brute.size();
        std::size_t want = static_cast<std::size_t>(length(nk) + 1);
        for (const auto& c : brute)
            if (c.size() != want)
                r.fail(perm_string(p) + ": maximal collection of size " + std::to_string(c.size()) + ", expected " +
                       std::to_string(want));
        if (closure != brute)
            r.fail(perm_string(p) + ": mutation closure reaches " + std::to_string(closure.size()) + " of " +
                   std::to_string(brute.size()) + " maximal collections");
    }
    r.summary = (r.ok ? "pure and mutation-connected: " : "violations found: ") + std::to_string(perms.size()) +
                " decorated permutations, " + std::to_string(collections) + " maximal collections (" + scope + ")";
    return r;
}

result connectedness(int n) { return connectedness(all_decorated_perms(n), "n=" + std::to_string(n)); }

duality_result duality_checks(int n) {
    duality_result d;
    d.faces.name = "face count";
    d.round_trip.name = "duality";
    std::size_t graphs = 0;
    for (const auto& p : all_decorated_perms(n)) {
        auto nk = decorated_to_necklace(p);
        int l = length(nk);
        for (const auto& c : enumerate_maximal(nk, enumeration_mode::closure)) {
            ++graphs;
            auto where = perm_string(p) + " {" + sets_string(c.sets, n) + "}";
            try {
                auto g = tiling_to_plabic(c);
                if (!check_reduced(g).reduced) d.round_trip.fail(where + ": dual graph not reduced");
                if (trace_strands(g).perm != p) d.round_trip.fail(where + ": wrong strand permutation");
                auto labels = face_labels(g).labels;
                std::sort(labels.begin(), labels.end());
                if (labels != c.sets) d.round_trip.fail(where + ": face labels differ");
                if (face_count(g) != l + 1)
                    d.faces.fail(where + ": " + std::to_string(face_count(g)) + " faces, expected " +
                                 std::to_string(l + 1));
            } catch (const std::exception& e) {
                d.round_trip.fail(where + ": " + e.what());
                d.faces.fail(where + ": no dual graph");
            }
        }
    }
    auto tail = std::to_string(graphs) + " maximal collections (n=" + std::to_string(n) + ")";
    d.faces.summary = (d.faces.ok ? "dual graphs have l+1 faces: " : "violations found: ") + tail;
    d.round_trip.summary =
        (d.round_trip.ok ? "dual graphs reduced with face labels C and the anchor's permutation: "
                         : "violations found: ") +
        tail;
    return d;
}

result duality(int n) {
    auto d = duality_checks(n);
    result r = d.round_trip;
    for (const auto& f : d.faces.failures) r.fail(f);
    r.ok = d.round_trip.ok && d.faces.ok;
    r.summary = r.ok ? "dual graphs reduced with face labels C and l+1 faces: " +
                           d.round_trip.summary.substr(d.round_trip.summary.find(": ") + 2)
                     : "violations found: " + d.round_trip.summary.substr(d.round_trip.summary.find(": ") + 2);
    return r;
}

result winding(int n) {
    result r;
    r.name = "winding";
    std::size_t checked = 0, necklaces = 0;
    std::set<necklace, bool (*)(const necklace&, const necklace&)> seen(
        [](const necklace& a, const necklace& b) { return a.entries < b.entries; });
    for (const auto& p : all_decorated_perms(n)) {
        auto nk = decorated_to_necklace(p);
        if (!is_connected(nk) || !seen.insert(nk).second) continue;
        ++necklaces;
        for (auto J : positroid_bases(uniform_necklace(n, nk.k))) {
            bool admissible = true;
            for (auto I : nk.entries) admissible = admissible && I != J && weakly_separated_unchecked(I, J, n);
            if (!admissible) continue;
            ++checked;
            bool inside = inside_necklace_curve(nk, J);
            if (inside != positroid_contains(nk, J))
                r.fail(perm_string(p) + " J=" + to_string(J, n) + ": winding says " + (inside ? "inside" : "outside"));
        }
    }
    r.summary = (r.ok ? "winding agrees with membership: " : "violations found: ") + std::to_string(checked) +
                " subsets over " + std::to_string(necklaces) + " connected necklaces (n=" + std::to_string(n) + ")";
    return r;
}

result hull(int n) {
    result r;
    r.name = "hull";
    std::size_t perms = 0;
    for (const auto& p : all_decorated_perms(n)) {
        auto nk = decorated_to_necklace(p);
        if (!is_connected(nk)) continue;
        ++perms;
        std::set<subset> seen;
        for (const auto& c : enumerate_maximal(nk, enumeration_mode::closure)) {
            auto labels = face_labels(tiling_to_plabic(c)).labels;
            seen.insert(labels.begin(), labels.end());
        }
        auto want = positroid_hull(nk);
        if (std::vector<subset>(seen.begin(), seen.end()) != want)
            r.fail(perm_string(p) + ": union of face labels {" +
                   sets_string(std::vector<subset>(seen.begin(), seen.end()), n) + "} vs filtered positroid {" +
                   sets_string(want, n) + "}");
    }
    r.summary = (r.ok ? "face-label unions equal the alignment-filtered positroid: " : "violations found: ") +
                std::to_string(perms) + " connected decorated permutations (n=" + std::to_string(n) + ")";
    return r;
}

result lz(int m) {
    result r;
    r.name = "lz";
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    std::size_t count = 0;
    do {
        auto ctx = make_chamber(w);
        auto rep = verify_lz_purity(ctx);
        ++count;
        if (!rep.ok()) {
            std::string ws;
            for (int x : w) ws += std::to_string(x);
            r.fail("w=" + ws + ": " + rep.describe());
        }
    } while (std::next_permutation(w.begin(), w.end()));
    r.summary = (r.ok ? "maximal collections of H(w) have size m+l(w)+1 and pad onto the positroid: "
                      : "violations found: ") +
                std::to_string(count) + " permutations (m=" + std::to_string(m) + ")";
    return r;
}

} // namespace wsep::suites
