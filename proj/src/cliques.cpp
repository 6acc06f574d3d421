#include "wsep/cliques.hpp"
#include "wsep/budget.hpp"
#include "wsep/errors.hpp"

#include <cstdint>

namespace wsep {

namespace {

// minimal dynamic bitset for the clique search
struct bits {
    std::vector<std::uint64_t> w;
    explicit bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bits operator&(const bits& o) const {
        bits r = *this;
        for (std::size_t t = 0; t < w.size(); ++t) r.w[t] &= o.w[t];
        return r;
    }
    bits minus(const bits& o) const {
        bits r = *this;
        for (std::size_t t = 0; t < w.size(); ++t) r.w[t] &= ~o.w[t];
        return r;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    template <class F> void each(F f) const {
        for (std::size_t t = 0; t < w.size(); ++t)
            for (auto x = w[t]; x; x &= x - 1) f(t * 64 + __builtin_ctzll(x));
    }
};

} // namespace

void for_each_maximal_clique(std::size_t m, const std::function<bool(std::size_t, std::size_t)>& adjacent,
                             const std::function<void(const std::vector<std::size_t>&)>& emit) {
    std::vector<bits> adj(m, bits(m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = x + 1; y < m; ++y)
            if (adjacent(x, y)) {
                adj[x].set(y);
                adj[y].set(x);
            }
    std::vector<std::size_t> clique;
    std::uint64_t steps = 0;
    const auto cap = enumeration_budget();
    auto rec = [&](auto&& self, bits P, bits X) -> void {
        if (++steps > cap) throw resource_error("clique search exceeded the budget");
        if (!P.any() && !X.any()) {
            emit(clique);
            return;
        }
        std::size_t pivot = 0, best = 0;
        bool have = false;
        auto consider = [&](std::size_t u) {
            std::size_t c = (P & adj[u]).count();
            if (!have || c > best) pivot = u, best = c, have = true;
        };
        P.each(consider);
        X.each(consider);
        bits todo = P.minus(adj[pivot]);
        todo.each([&](std::size_t v) {
            clique.push_back(v);
            self(self, P & adj[v], X & adj[v]);
            clique.pop_back();
            P.reset(v);
            X.set(v);
        });
    };
    bits P(m), X(m);
    for (std::size_t i = 0; i < m; ++i) P.set(i);
    rec(rec, P, X);
}

} // namespace wsep
