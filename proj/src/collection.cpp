#include "wsep/collection.hpp"
#include "wsep/budget.hpp"
#include "wsep/cliques.hpp"
#include "wsep/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace wsep {

bool collection::contains(subset s) const { return std::binary_search(sets.begin(), sets.end(), s); }

collection make_collection(int n, int k, std::vector<subset> sets, std::optional<necklace> anchor) {
    check_ground(n);
    if (k < 0 || k > n) throw invalid_input("rank " + std::to_string(k) + " out of range");
    std::sort(sets.begin(), sets.end());
    for (std::size_t t = 0; t < sets.size(); ++t) {
        if (sets[t] & ~full_set(n)) throw invalid_input("set outside ground set [" + std::to_string(n) + "]");
        if (t && sets[t] == sets[t - 1]) throw invalid_input("duplicate set " + to_string(sets[t], n));
    }
    if (anchor) {
        validate(*anchor);
        if (anchor->n != n || anchor->k != k) throw invalid_input("anchor necklace has a different n or k");
    }
    return collection{n, k, std::move(sets), std::move(anchor)};
}

collection necklace_collection(const necklace& nk) {
    validate(nk);
    auto e = nk.entries;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return collection{nk.n, nk.k, std::move(e), nk};
}

std::string validation_report::describe(int n) const {
    std::ostringstream os;
    for (auto s : wrong_size) os << "wrong size: " << to_string(s, n) << "\n";
    for (auto [a, b] : not_separated)
        os << "not weakly separated: " << to_string(a, n) << " " << to_string(b, n) << "\n";
    for (auto s : outside_positroid) os << "outside positroid: " << to_string(s, n) << "\n";
    for (auto s : missing_necklace) os << "missing necklace entry: " << to_string(s, n) << "\n";
    return os.str();
}

validation_report validate(const collection& c) {
    validation_report r;
    for (auto s : c.sets)
        if (card(s) != c.k) r.wrong_size.push_back(s);
    for (std::size_t a = 0; a < c.sets.size(); ++a)
        for (std::size_t b = a + 1; b < c.sets.size(); ++b)
            if (card(c.sets[a]) == card(c.sets[b]) && !weakly_separated_unchecked(c.sets[a], c.sets[b], c.n))
                r.not_separated.emplace_back(c.sets[a], c.sets[b]);
    if (c.anchor) {
        for (auto s : c.sets)
            if (card(s) == c.k && !positroid_contains(*c.anchor, s)) r.outside_positroid.push_back(s);
        auto e = c.anchor->entries;
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (auto s : e)
            if (!c.contains(s)) r.missing_necklace.push_back(s);
    }
    return r;
}

void require_valid(const collection& c) {
    auto r = validate(c);
    if (!r.ok()) throw invalid_input("invalid collection:\n" + r.describe(c.n));
}

namespace {

const necklace& require_anchor(const collection& c) {
    if (!c.anchor) throw invalid_input("operation needs an anchored collection");
    return *c.anchor;
}

bool compatible(const collection& c, subset J) {
    for (auto s : c.sets)
        if (!weakly_separated_unchecked(s, J, c.n)) return false;
    return true;
}

} // namespace

bool is_maximal(const collection& c) {
    const auto& nk = require_anchor(c);
    require_valid(c);
    for (auto J : positroid_bases(nk))
        if (!c.contains(J) && compatible(c, J)) return false;
    return true;
}

collection extend_to_maximal(const collection& c) {
    const auto& nk = require_anchor(c);
    require_valid(c);
    collection out = c;
    // one colex pass is enough: a skipped candidate stays incompatible as sets are only added
    for (auto J : positroid_bases(nk)) {
        if (out.contains(J) || !compatible(out, J)) continue;
        out.sets.insert(std::upper_bound(out.sets.begin(), out.sets.end(), J), J);
    }
    return out;
}

mutation_site mirrored(const mutation_site& s) {
    // after the flip the roles rotate: Sbd is removed, Sca/Sac comes back
    if (s.b < s.d) return {s.S, s.b, s.c, s.d, s.a};
    return {s.S, s.d, s.a, s.b, s.c};
}

std::vector<mutation_site> mutation_sites(const collection& c) {
    std::vector<mutation_site> out;
    if (c.k < 2) return out;
    int n = c.n;
    for (auto X : c.sets) {
        auto xs = members(X);
        for (std::size_t p = 0; p < xs.size(); ++p)
            for (std::size_t q = p + 1; q < xs.size(); ++q) {
                int a = xs[p], cc = xs[q];
                subset S = X & ~elem(a) & ~elem(cc);
                std::vector<int> bs, ds;
                for (int b = a + 1; b < cc; ++b)
                    if (!has(X, b) && c.contains(S | elem(a) | elem(b)) && c.contains(S | elem(b) | elem(cc)))
                        bs.push_back(b);
                if (bs.empty()) continue;
                for (int d = 1; d <= n; ++d) {
                    if ((d >= a && d <= cc) || has(X, d)) continue;
                    if (c.contains(S | elem(cc) | elem(d)) && c.contains(S | elem(d) | elem(a))) ds.push_back(d);
                }
                for (int b : bs)
                    for (int d : ds) out.push_back({S, a, b, cc, d});
            }
    }
    std::sort(out.begin(), out.end(), [](const mutation_site& x, const mutation_site& y) {
        return std::tuple(x.removed(), x.a, x.b, x.c, x.d) < std::tuple(y.removed(), y.a, y.b, y.c, y.d);
    });
    return out;
}

collection apply_mutation(const collection& c, const mutation_site& site) {
    int n = c.n;
    auto bad = [&](const std::string& why) {
        return invalid_input("not a mutation site (" + why + ")");
    };
    for (int x : {site.a, site.b, site.c, site.d})
        if (x < 1 || x > n) throw bad("element out of range");
    if (site.S & ~full_set(n)) throw bad("S outside ground set");
    subset abcd = elem(site.a) | elem(site.b) | elem(site.c) | elem(site.d);
    if (card(abcd) != 4 || (abcd & site.S)) throw bad("a, b, c, d must be distinct and outside S");
    if (!cyclically_ordered({site.a, site.b, site.c, site.d}, n)) throw bad("a, b, c, d not cyclically ordered");
    if (card(site.S) != c.k - 2) throw bad("S must have size k-2");
    const subset S = site.S;
    auto need = [&](int x, int y, const char* name) {
        if (!c.contains(S | elem(x) | elem(y))) throw bad(std::string(name) + " missing from collection");
    };
    need(site.a, site.b, "Sab");
    need(site.b, site.c, "Sbc");
    need(site.c, site.d, "Scd");
    need(site.d, site.a, "Sda");
    need(site.a, site.c, "Sac");
    if (c.contains(site.added())) throw bad("Sbd already present");
    collection out = c;
    out.sets.erase(std::lower_bound(out.sets.begin(), out.sets.end(), site.removed()));
    out.sets.insert(std::upper_bound(out.sets.begin(), out.sets.end(), site.added()), site.added());
    return out;
}

namespace {

struct vec_hash {
    std::size_t operator()(const std::vector<subset>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto s : v) {
            h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return h;
    }
};

void check_scott(const collection& c) {
    if (static_cast<int>(c.size()) > c.k * (c.n - c.k) + 1)
        throw std::logic_error("collection exceeds k(n-k)+1 members");
}

std::vector<collection> closure(const necklace& anchor, const enumeration_options& opts) {
    collection start = extend_to_maximal(necklace_collection(anchor));
    std::unordered_set<std::vector<subset>, vec_hash> seen{start.sets};
    std::deque<collection> queue{start};
    std::vector<collection> out;
    const auto cap = enumeration_budget();
    while (!queue.empty()) {
        collection cur = std::move(queue.front());
        queue.pop_front();
        check_scott(cur);
        for (const auto& site : mutation_sites(cur)) {
            collection next = apply_mutation(cur, site);
            if (opts.verify_each_step) {
                require_valid(next);
                if (next.size() != cur.size() || !is_maximal(next))
                    throw std::logic_error("mutation broke maximality");
            }
            if (seen.insert(next.sets).second) {
                if (seen.size() > cap) throw resource_error("closure enumeration exceeded the budget");
                queue.push_back(std::move(next));
            }
        }
        out.push_back(std::move(cur));
    }
    return out;
}

std::vector<collection> bruteforce(const necklace& anchor) {
    collection base = necklace_collection(anchor);
    std::vector<subset> cand;
    for (auto J : positroid_bases(anchor))
        if (!base.contains(J) && compatible(base, J)) cand.push_back(J);
    std::vector<collection> out;
    // every maximal compatible family of candidates extends the necklace
    for_each_maximal_clique(
        cand.size(),
        [&](std::size_t x, std::size_t y) { return weakly_separated_unchecked(cand[x], cand[y], anchor.n); },
        [&](const std::vector<std::size_t>& clique) {
            collection c = base;
            for (auto i : clique) c.sets.push_back(cand[i]);
            std::sort(c.sets.begin(), c.sets.end());
            check_scott(c);
            out.push_back(std::move(c));
        });
    return out;
}

} // namespace

std::vector<collection> enumerate_maximal(const necklace& anchor, enumeration_mode mode,
                                          const enumeration_options& opts) {
    validate(anchor);
    auto out = mode == enumeration_mode::closure ? closure(anchor, opts) : bruteforce(anchor);
    std::sort(out.begin(), out.end(), [](const collection& x, const collection& y) { return x.sets < y.sets; });
    return out;
}

std::vector<subset> positroid_hull(const necklace& anchor) {
    auto p = necklace_to_decorated(anchor);
    auto al = alignments_and_length(p, anchor.k);
    std::vector<subset> out;
    // (i,j) aligned forces pi(i) in J => pi(j) in J; fixed-point pairs are vacuous or automatic
    for (auto J : positroid_bases(anchor)) {
        bool keep = true;
        for (auto [i, j] : al.pairs)
            if (has(J, p(i)) && !has(J, p(j))) {
                keep = false;
                break;
            }
        if (keep) out.push_back(J);
    }
    return out;
}

} // namespace wsep
