#include "wsep/positroid.hpp"
#include "wsep/budget.hpp"
#include "wsep/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace wsep {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long double r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(r + 0.5L);
}

int mod1(int a, int n) { return ((a - 1) % n + n) % n + 1; }

} // namespace

void validate(const decorated_perm& p) {
    check_ground(p.n);
    if (static_cast<int>(p.perm.size()) != p.n || static_cast<int>(p.col.size()) != p.n)
        throw invalid_input("decorated permutation arrays must have length n");
    std::vector<bool> hit(p.n + 1, false);
    for (int i = 1; i <= p.n; ++i) {
        int v = p(i);
        if (v < 1 || v > p.n || hit[v]) throw invalid_input("perm is not a bijection of [n]");
        hit[v] = true;
        int c = p.color(i);
        if (v == i) {
            if (c != 1 && c != -1)
                throw invalid_input("fixed point " + std::to_string(i) + " needs color +1 or -1");
        } else if (c != 0) {
            throw invalid_input("color given for non-fixed point " + std::to_string(i));
        }
    }
}

decorated_perm make_decorated(std::vector<int> perm, const std::map<int, int>& colors) {
    decorated_perm p;
    p.n = static_cast<int>(perm.size());
    p.perm = std::move(perm);
    p.col.assign(p.n, 0);
    for (auto [i, c] : colors) {
        if (i < 1 || i > p.n) throw invalid_input("color key " + std::to_string(i) + " out of range");
        p.col[i - 1] = c;
    }
    validate(p);
    return p;
}

void validate(const necklace& nk) {
    check_ground(nk.n);
    if (static_cast<int>(nk.entries.size()) != nk.n) throw invalid_input("necklace must have n entries");
    if (nk.k < 0 || nk.k > nk.n) throw invalid_input("necklace rank out of range");
    for (int i = 1; i <= nk.n; ++i) {
        subset cur = nk.at(i), nxt = nk.at(mod1(i + 1, nk.n));
        if (cur & ~full_set(nk.n)) throw invalid_input("necklace entry outside ground set");
        if (card(cur) != nk.k)
            throw invalid_input("necklace entry I_" + std::to_string(i) + " has size " + std::to_string(card(cur)));
        if (!has(cur, i)) {
            if (nxt != cur)
                throw invalid_input("I_" + std::to_string(i + 1) + " must equal I_" + std::to_string(i) +
                                    " since " + std::to_string(i) + " is not in it");
        } else if ((cur & ~elem(i) & ~nxt) != 0) {
            throw invalid_input("I_" + std::to_string(mod1(i + 1, nk.n)) + " must contain I_" +
                                std::to_string(i) + " minus " + std::to_string(i));
        }
    }
}

necklace uniform_necklace(int n, int k) { return decorated_to_necklace(uniform_perm(n, k)); }

decorated_perm uniform_perm(int n, int k) {
    check_ground(n);
    if (k < 0 || k > n) throw invalid_input("rank out of range");
    std::vector<int> perm(n);
    std::map<int, int> colors;
    for (int i = 1; i <= n; ++i) perm[i - 1] = mod1(i + k, n);
    // k = 0 or k = n: every point is fixed
    if (k == 0 || k == n)
        for (int i = 1; i <= n; ++i) colors[i] = k == 0 ? 1 : -1;
    return make_decorated(std::move(perm), colors);
}

necklace decorated_to_necklace(const decorated_perm& p) {
    validate(p);
    int n = p.n;
    std::vector<int> inv(n + 1);
    for (int i = 1; i <= n; ++i) inv[p(i)] = i;
    necklace nk;
    nk.n = n;
    nk.entries.resize(n);
    for (int i = 1; i <= n; ++i) {
        subset s = 0;
        for (int j = 1; j <= n; ++j) {
            if (p(j) == j) {
                if (p.color(j) == -1) s |= elem(j);
            } else if (shifted_rank(i, j, n) < shifted_rank(i, inv[j], n)) {
                s |= elem(j);
            }
        }
        nk.entries[i - 1] = s;
    }
    nk.k = card(nk.entries[0]);
    return nk;
}

decorated_perm necklace_to_decorated(const necklace& nk) {
    validate(nk);
    int n = nk.n;
    std::vector<int> perm(n);
    std::map<int, int> colors;
    for (int i = 1; i <= n; ++i) {
        subset cur = nk.at(i), nxt = nk.at(mod1(i + 1, n));
        if (!has(cur, i)) {
            perm[i - 1] = i;
            colors[i] = 1;
            continue;
        }
        subset added = nxt & ~(cur & ~elem(i));
        if (card(added) != 1) throw invalid_input("malformed necklace step at " + std::to_string(i));
        int j = __builtin_ctzll(added) + 1;
        perm[i - 1] = j;
        if (j == i) colors[i] = -1;
    }
    try {
        return make_decorated(std::move(perm), colors);
    } catch (const invalid_input& e) {
        throw invalid_input(std::string("necklace does not come from a permutation: ") + e.what());
    }
}

namespace {

// ordered condition for (i,j); fixed points enter through their color
bool aligned(const decorated_perm& p, int i, int j) {
    int n = p.n, pi = p(i), pj = p(j);
    bool loop_i = pi == i && p.color(i) == 1, fixed_i = pi == i;
    bool coloop_j = pj == j && p.color(j) == -1, fixed_j = pj == j;
    if (fixed_i && !loop_i) return false;
    if (fixed_j && !coloop_j) return false;
    if (loop_i && coloop_j) return true;
    std::vector<int> seq;
    if (loop_i) seq = {i, pj, j};
    else if (coloop_j) seq = {i, pi, j};
    else seq = {i, pi, pj, j};
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    return cyclically_ordered(seq, n);
}

} // namespace

alignment_info alignments_and_length(const decorated_perm& p, int k) {
    validate(p);
    int n = p.n;
    int nk_k = decorated_to_necklace(p).k;
    if (k != nk_k)
        throw invalid_input("rank " + std::to_string(k) + " does not match the permutation's rank " +
                            std::to_string(nk_k));
    alignment_info out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (aligned(p, i, j)) out.pairs.emplace_back(i, j);
            else if (aligned(p, j, i)) out.pairs.emplace_back(j, i);
        }
    out.count = static_cast<int>(out.pairs.size());
    out.length = k * (n - k) - out.count;
    return out;
}

int length(const necklace& nk) { return alignments_and_length(necklace_to_decorated(nk), nk.k).length; }

bool positroid_contains(const necklace& nk, subset J) {
    if (card(J) != nk.k)
        throw invalid_input("subset size " + std::to_string(card(J)) + " differs from rank " +
                            std::to_string(nk.k));
    if (J & ~full_set(nk.n)) throw invalid_input("subset outside ground set");
    for (int i = 1; i <= nk.n; ++i)
        if (!shifted_leq(i, nk.at(i), J, nk.n)) return false;
    return true;
}

std::vector<subset> positroid_bases(const necklace& nk) {
    require_budget(binomial(nk.n, nk.k), "positroid base enumeration");
    std::vector<subset> out;
    if (nk.k == 0) {
        out.push_back(0);
        return out;
    }
    for (subset s = full_set(nk.k); s; s = next_same_size(s, nk.n))
        if (positroid_contains(nk, s)) out.push_back(s);
    return out;
}

struct positroid::cache {
    std::once_flag once;
    std::vector<subset> bases;
};

positroid::positroid(necklace nk) : nk_(std::move(nk)), cache_(std::make_shared<cache>()) { validate(nk_); }

const std::vector<subset>& positroid::bases() const {
    std::call_once(cache_->once, [this] { cache_->bases = positroid_bases(nk_); });
    return cache_->bases;
}

subset restrict_to(subset s, const std::vector<int>& ground) {
    subset out = 0;
    for (std::size_t t = 0; t < ground.size(); ++t)
        if (has(s, ground[t])) out |= elem(static_cast<int>(t) + 1);
    return out;
}

subset lift_from(subset s, const std::vector<int>& ground) {
    subset out = 0;
    for (std::size_t t = 0; t < ground.size(); ++t)
        if (has(s, static_cast<int>(t) + 1)) out |= elem(ground[t]);
    return out;
}

noncrossing_components connected_components(const decorated_perm& p) {
    validate(p);
    int n = p.n;
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 1; i <= n; ++i) parent[find(i)] = find(p(i));

    std::vector<subset> blocks;
    auto collect = [&] {
        std::map<int, subset> by_root;
        for (int i = 1; i <= n; ++i) by_root[find(i)] |= elem(i);
        blocks.clear();
        for (auto& [r, s] : by_root) blocks.push_back(s);
    };
    // merge interleaving blocks until the partition is noncrossing
    for (bool merged = true; merged;) {
        merged = false;
        collect();
        for (std::size_t a = 0; a < blocks.size() && !merged; ++a)
            for (std::size_t b = a + 1; b < blocks.size() && !merged; ++b)
                if (!weakly_separated_unchecked(blocks[a], blocks[b], n)) {
                    parent[find(__builtin_ctzll(blocks[a]) + 1)] = find(__builtin_ctzll(blocks[b]) + 1);
                    merged = true;
                }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](subset x, subset y) { return __builtin_ctzll(x) < __builtin_ctzll(y); });

    noncrossing_components out;
    out.blocks = blocks;
    for (subset b : blocks) {
        auto ground = members(b);
        std::vector<int> perm;
        std::map<int, int> colors;
        for (std::size_t t = 0; t < ground.size(); ++t) {
            int img = p(ground[t]);
            int rel = static_cast<int>(std::find(ground.begin(), ground.end(), img) - ground.begin()) + 1;
            perm.push_back(rel);
            if (p.color(ground[t])) colors[static_cast<int>(t) + 1] = p.color(ground[t]);
        }
        out.perms.push_back(make_decorated(std::move(perm), colors));
    }
    return out;
}

bool is_connected(const necklace& nk) {
    validate(nk);
    auto e = nk.entries;
    std::sort(e.begin(), e.end());
    return std::adjacent_find(e.begin(), e.end()) == e.end();
}

necklace_split direct_sum_split(const necklace& nk, int i, int j) {
    validate(nk);
    int n = nk.n;
    if (i < 1 || i > n || j < 1 || j > n) throw invalid_input("split points out of range");
    if (i == j) throw invalid_input("split points must differ");
    if (nk.at(i) != nk.at(j))
        throw invalid_input("I_" + std::to_string(i) + " differs from I_" + std::to_string(j) + ", cannot split");
    necklace_split out;
    for (int x = i; x != j; x = mod1(x + 1, n)) out.first_ground.push_back(x);
    for (int x = j; x != i; x = mod1(x + 1, n)) out.second_ground.push_back(x);
    auto part = [&](const std::vector<int>& ground) {
        necklace r;
        r.n = static_cast<int>(ground.size());
        for (int m : ground) r.entries.push_back(restrict_to(nk.at(m), ground));
        r.k = card(r.entries[0]);
        validate(r);
        return r;
    };
    out.first = part(out.first_ground);
    out.second = part(out.second_ground);
    return out;
}

} // namespace wsep
