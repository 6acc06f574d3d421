#pragma once

#include "wsep/cyclic.hpp"
#include "wsep/positroid.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wsep {

// A collection of k-subsets of [n], kept colex-sorted and duplicate free.
struct collection {
    int n = 0;
    int k = 0;
    std::vector<subset> sets;
    std::optional<necklace> anchor;

    bool contains(subset s) const;
    std::size_t size() const { return sets.size(); }
    bool operator==(const collection&) const = default;
};

// sorts `sets`; throws invalid_input on duplicates, elements outside [n] or a mismatched anchor.
// Sizes and weak separation are checked by validate().
collection make_collection(int n, int k, std::vector<subset> sets, std::optional<necklace> anchor = {});

// the necklace entries (deduplicated) as an anchored collection
collection necklace_collection(const necklace& nk);

struct validation_report {
    std::vector<subset> wrong_size;
    std::vector<std::pair<subset, subset>> not_separated;
    std::vector<subset> outside_positroid;
    std::vector<subset> missing_necklace;

    bool ok() const {
        return wrong_size.empty() && not_separated.empty() && outside_positroid.empty() && missing_necklace.empty();
    }
    std::string describe(int n) const;
};

validation_report validate(const collection& c);
// throws invalid_input carrying the report when c is not a valid collection
void require_valid(const collection& c);

bool is_maximal(const collection& c);
collection extend_to_maximal(const collection& c);

struct mutation_site {
    subset S = 0;
    int a = 0, b = 0, c = 0, d = 0;

    subset removed() const { return S | elem(a) | elem(c); }
    subset added() const { return S | elem(b) | elem(d); }
    bool operator==(const mutation_site&) const = default;
};

// the site that undoes apply_mutation at `s`
mutation_site mirrored(const mutation_site& s);

std::vector<mutation_site> mutation_sites(const collection& c);
collection apply_mutation(const collection& c, const mutation_site& site);

enum class enumeration_mode { closure, bruteforce };

struct enumeration_options {
    // re-validate and re-check maximality after every mutation (slow)
    bool verify_each_step = false;
};

std::vector<collection> enumerate_maximal(const necklace& anchor, enumeration_mode mode,
                                          const enumeration_options& opts = {});

std::vector<subset> positroid_hull(const necklace& anchor);

} // namespace wsep
