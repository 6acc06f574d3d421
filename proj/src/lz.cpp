#include "wsep/lz.hpp"
#include "wsep/budget.hpp"
#include "wsep/cliques.hpp"
#include "wsep/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wsep {

chamber_context make_chamber(std::vector<int> w) {
    chamber_context ctx{static_cast<int>(w.size()), std::move(w)};
    validate(ctx);
    return ctx;
}

void validate(const chamber_context& ctx) {
    // the padded ground set has 2m elements
    if (ctx.m < 1 || 2 * ctx.m > max_ground) throw invalid_input("chamber size out of range");
    if (static_cast<int>(ctx.w.size()) != ctx.m) throw invalid_input("permutation has the wrong length");
    std::vector<bool> seen(ctx.m + 1, false);
    for (int v : ctx.w) {
        if (v < 1 || v > ctx.m || seen[v]) throw invalid_input("w is not a permutation of [m]");
        seen[v] = true;
    }
}

int inversions(const chamber_context& ctx) {
    int c = 0;
    for (int a = 1; a <= ctx.m; ++a)
        for (int b = a + 1; b <= ctx.m; ++b)
            if (ctx(a) > ctx(b)) ++c;
    return c;
}

namespace {

// true when no element of `inner` sits strictly between min and max of `outer`
bool not_between(subset outer, subset inner) {
    if (!outer || !inner) return true;
    int lo = __builtin_ctzll(outer), hi = 63 - __builtin_clzll(outer);
    subset span = (hi - lo + 1 == 64) ? ~subset{0} : (((subset{1} << (hi - lo + 1)) - 1) << lo);
    return (inner & span) == 0;
}

} // namespace

bool lz_weakly_separated(subset I, subset J, int m) {
    check_ground(m);
    if ((I | J) & ~full_set(m)) throw invalid_input("set outside ground set [" + std::to_string(m) + "]");
    subset i_only = I & ~J, j_only = J & ~I;
    if (card(I) >= card(J) && not_between(i_only, j_only)) return true;
    if (card(J) >= card(I) && not_between(j_only, i_only)) return true;
    return false;
}

subset pad(subset I, int m) {
    if (m < 1 || 2 * m > max_ground) throw invalid_input("chamber size out of range");
    if (I & ~full_set(m)) throw invalid_input("set outside ground set [" + std::to_string(m) + "]");
    return I | (full_set(2 * m) & ~full_set(m + card(I)));
}

std::vector<subset> w_chamber(const chamber_context& ctx) {
    validate(ctx);
    if (ctx.m >= 63) throw resource_error("w-chamber set too large");
    require_budget(std::uint64_t{1} << ctx.m, "w-chamber set");
    std::vector<subset> out;
    for (subset I = 0; I <= full_set(ctx.m); ++I) {
        bool keep = true;
        for (int a = 1; a <= ctx.m && keep; ++a) {
            if (!has(I, a)) continue;
            for (int b = a + 1; b <= ctx.m; ++b)
                if (ctx(a) < ctx(b) && !has(I, b)) {
                    keep = false;
                    break;
                }
        }
        if (keep) out.push_back(I);
    }
    return out;
}

decorated_perm w_hat(const chamber_context& ctx) {
    validate(ctx);
    const int m = ctx.m;
    std::vector<int> inv(m + 1);
    for (int a = 1; a <= m; ++a) inv[ctx(a)] = a;
    std::vector<int> perm;
    for (int v = 2 * m; v > m; --v) perm.push_back(v);
    for (int v = m; v >= 1; --v) perm.push_back(inv[v]);
    return make_decorated(std::move(perm));
}

std::string lz_report::describe() const {
    std::ostringstream os;
    os << collections << " maximal collections of H(w), expected size " << expected_size;
    if (!wrong_sizes.empty()) {
        os << "; wrong sizes:";
        for (auto s : wrong_sizes) os << " " << s;
    }
    os << "; padding " << (padding_bijective ? "bijects onto" : "does not match") << " the "
       << positroid_collections << " positroid collections";
    return os.str();
}

lz_report verify_lz_purity(const chamber_context& ctx) {
    const int m = ctx.m;
    lz_report r;
    r.m = m;
    r.expected_size = m + inversions(ctx) + 1;
    auto H = w_chamber(ctx);
    std::vector<std::vector<subset>> padded;
    for_each_maximal_clique(
        H.size(), [&](std::size_t x, std::size_t y) { return lz_weakly_separated(H[x], H[y], m); },
        [&](const std::vector<std::size_t>& clique) {
            ++r.collections;
            if (static_cast<int>(clique.size()) != r.expected_size) r.wrong_sizes.push_back(clique.size());
            std::vector<subset> p;
            for (auto i : clique) p.push_back(pad(H[i], m));
            std::sort(p.begin(), p.end());
            padded.push_back(std::move(p));
        });
    std::sort(padded.begin(), padded.end());
    auto target = enumerate_maximal(decorated_to_necklace(w_hat(ctx)), enumeration_mode::closure);
    r.positroid_collections = target.size();
    std::vector<std::vector<subset>> want;
    for (auto& c : target) want.push_back(c.sets);
    std::sort(want.begin(), want.end());
    r.padding_bijective = padded == want;
    return r;
}

} // namespace wsep
