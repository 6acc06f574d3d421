#pragma once

#include "wsep/cyclic.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace wsep {

// (I_1..I_n); entries[i-1] is I_i
struct necklace {
    int n = 0;
    int k = 0;
    std::vector<subset> entries;

    subset at(int i) const { return entries[i - 1]; }
    bool operator==(const necklace&) const = default;
};

// perm[i-1] = pi(i); col[i-1] is +1 (loop) or -1 (coloop) on fixed points, 0 elsewhere
struct decorated_perm {
    int n = 0;
    std::vector<int> perm;
    std::vector<int> col;

    int operator()(int i) const { return perm[i - 1]; }
    int color(int i) const { return col[i - 1]; }
    bool operator==(const decorated_perm&) const = default;
};

decorated_perm make_decorated(std::vector<int> perm, const std::map<int, int>& colors = {});
void validate(const decorated_perm& p);
void validate(const necklace& nk);

necklace uniform_necklace(int n, int k);
decorated_perm uniform_perm(int n, int k);

necklace decorated_to_necklace(const decorated_perm& p);
decorated_perm necklace_to_decorated(const necklace& nk);

struct alignment_info {
    // one ordered pair per aligned unordered pair, in the order that satisfies the condition
    std::vector<std::pair<int, int>> pairs;
    int count = 0;
    int length = 0;
};

alignment_info alignments_and_length(const decorated_perm& p, int k);
int length(const necklace& nk);

bool positroid_contains(const necklace& nk, subset J);
std::vector<subset> positroid_bases(const necklace& nk);

// Positroid as its necklace; bases are filled on first request
class positroid {
public:
    explicit positroid(necklace nk);
    const necklace& anchor() const { return nk_; }
    bool contains(subset J) const { return positroid_contains(nk_, J); }
    const std::vector<subset>& bases() const;

private:
    struct cache;
    necklace nk_;
    std::shared_ptr<cache> cache_;
};

struct noncrossing_components {
    std::vector<subset> blocks;            // sorted by smallest element
    std::vector<decorated_perm> perms;     // block elements relabeled 1..|block| in increasing order
};

noncrossing_components connected_components(const decorated_perm& p);
bool is_connected(const necklace& nk);

// relabel the elements of `ground` (listed in their new order) as 1..m
subset restrict_to(subset s, const std::vector<int>& ground);
subset lift_from(subset s, const std::vector<int>& ground);

struct necklace_split {
    necklace first, second;
    std::vector<int> first_ground, second_ground;  // [i,j) and [j,i) in cyclic order
};

necklace_split direct_sum_split(const necklace& nk, int i, int j);

} // namespace wsep
