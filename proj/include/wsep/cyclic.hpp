#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wsep {

// A subset of [n] as a bitmask: element a (1-based) is bit a-1.
// Numeric order of masks of equal size is colex order.
using subset = std::uint64_t;

constexpr int max_ground = 64;

void check_ground(int n);

inline subset elem(int a) { return subset{1} << (a - 1); }
inline bool has(subset s, int a) { return (s >> (a - 1)) & 1u; }
inline int card(subset s) { return __builtin_popcountll(s); }
subset full_set(int n);

subset make_subset(const std::vector<int>& elems, int n);
std::vector<int> members(subset s);
// "135" for n<10, "1,3,5" otherwise; empty set prints as "{}"
std::string to_string(subset s, int n);
// inverse of to_string, also accepts "{}" and the comma form for any n
subset parse_subset(const std::string& text, int n);

// rotation a -> a+1 (n -> 1)
subset rotate(subset s, int n);

// relabel so that i becomes 1 (the <_i order becomes the usual one)
subset rotate_to_front(subset s, int i, int n);

// next subset of the same size in colex order (Gosper); 0 when past the last
subset next_same_size(subset s, int n);

// a <_i b in the order i < i+1 < ... < n < 1 < ... < i-1
inline int shifted_rank(int i, int a, int n) { return ((a - i) % n + n) % n; }

bool cyclically_ordered(const std::vector<int>& seq, int n);

enum class interval_kind { open, closed, half_open_left, half_open_right };

struct cyclic_interval {
    int a, b;
    interval_kind kind;
};

// (a,a) is [n] minus a; [a,a] is {a}; [a,a) and (a,a] are empty
subset interval_members(const cyclic_interval& iv, int n);

bool weakly_separated(subset I, subset J, int n);
// no size check; for callers that already know |I| = |J|
bool weakly_separated_unchecked(subset I, subset J, int n);

bool shifted_leq(int i, subset I, subset J, int n);

} // namespace wsep
