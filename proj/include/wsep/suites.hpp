#pragma once

#include "wsep/positroid.hpp"

#include <string>
#include <vector>

// Verification suites shared by the CLI `verify` command and the acceptance binary.
namespace wsep::suites {

struct result {
    std::string name;
    bool ok = true;
    std::string summary;
    std::vector<std::string> failures;  // capped; the count is in the summary

    void fail(const std::string& what);
};

// every decorated permutation of [n] with every fixed-point coloring
std::vector<decorated_perm> all_decorated_perms(int n);

// closure enumeration of the uniform positroid; all sizes k(n-k)+1
result purity(int n, int k);
// number of maximal collections for the uniform (n,k) positroid, closure vs bruteforce
result enumeration_count(int n, int k, bool compare_modes);
// for each decorated permutation of [n]: sizes l+1 and closure reaches every bruteforce collection
result connectedness(int n);
result connectedness(const std::vector<decorated_perm>& perms, const std::string& scope);
// For each maximal anchored collection of every decorated permutation of [n], the dual graph:
// faces: has l+1 faces; round_trip: is reduced with the anchor's strand permutation and face labels C.
struct duality_result {
    result faces, round_trip;
};
duality_result duality_checks(int n);
// both parts of duality_checks
result duality(int n);
// winding verdict against positroid membership, all connected necklaces of [n]
result winding(int n);
// union of face labels of all dual graphs against the alignment-filtered positroid, connected, size n
result hull(int n);
// all w in S_m
result lz(int m);

} // namespace wsep::suites
