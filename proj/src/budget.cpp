#include "wsep/budget.hpp"
#include "wsep/errors.hpp"

#include <cstdlib>
#include <string>

namespace wsep {

std::uint64_t enumeration_budget() {
    // re-read every call so tests and the CLI can adjust it at runtime
    const char* env = std::getenv("WORKBENCH_BUDGET");
    if (!env || !*env) return 50'000'000;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end) throw invalid_input(std::string("WORKBENCH_BUDGET is not a number: ") + env);
    return v;
}

void require_budget(std::uint64_t needed, const char* what) {
    auto cap = enumeration_budget();
    if (needed > cap)
        throw resource_error(std::string(what) + " needs " + std::to_string(needed) + " steps, budget is " +
                             std::to_string(cap));
}

} // namespace wsep
