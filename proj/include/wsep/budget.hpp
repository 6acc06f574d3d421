#pragma once

#include <cstdint>

namespace wsep {

// Upper bound on the number of objects an enumeration may touch.
// Reads WORKBENCH_BUDGET; defaults to 50 million.
std::uint64_t enumeration_budget();

// throws resource_error when `needed` exceeds the budget
void require_budget(std::uint64_t needed, const char* what);

} // namespace wsep
