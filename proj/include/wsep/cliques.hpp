#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace wsep {

// Calls `emit` once per maximal clique of the graph on 0..m-1 (Bron-Kerbosch with pivoting).
// `adjacent` is queried once per unordered pair. Throws resource_error past the enumeration budget.
void for_each_maximal_clique(std::size_t m, const std::function<bool(std::size_t, std::size_t)>& adjacent,
                             const std::function<void(const std::vector<std::size_t>&)>& emit);

} // namespace wsep
