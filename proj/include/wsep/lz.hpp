#pragma once

#include "wsep/collection.hpp"
#include "wsep/cyclic.hpp"
#include "wsep/positroid.hpp"

#include <string>
#include <vector>

namespace wsep {

// a permutation w of [m]; w[a-1] = w(a)
struct chamber_context {
    int m = 0;
    std::vector<int> w;

    int operator()(int a) const { return w[a - 1]; }
};

chamber_context make_chamber(std::vector<int> w);
void validate(const chamber_context& ctx);

// number of inversions of w
int inversions(const chamber_context& ctx);

// Unequal-size separation on the linear order of [m]: the larger side's difference
// may not have an element of the smaller side's difference strictly between two of its own.
bool lz_weakly_separated(subset I, subset J, int m);

// I together with m+|I|+1..2m; always an m-subset of [2m]
subset pad(subset I, int m);

// H(w): all I with a in I => b in I whenever a < b and w(a) < w(b); colex order
std::vector<subset> w_chamber(const chamber_context& ctx);

// [2m, 2m-1, .., m+1, w^-1(m), .., w^-1(1)]; no fixed points, rank m
decorated_perm w_hat(const chamber_context& ctx);

struct lz_report {
    int m = 0;
    int expected_size = 0;                 // m + inversions + 1
    std::size_t collections = 0;           // maximal LZ collections of H(w)
    std::size_t positroid_collections = 0; // maximal collections inside M_{I(w-hat)}
    std::vector<std::size_t> wrong_sizes;  // sizes of offending collections
    bool padding_bijective = false;

    bool ok() const { return wrong_sizes.empty() && padding_bijective; }
    std::string describe() const;
};

// Brute force over H(w), compared with the enumeration of the padded positroid.
lz_report verify_lz_purity(const chamber_context& ctx);

} // namespace wsep
