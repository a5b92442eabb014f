#include "teachdim/budget.hpp"

#include <cstdlib>
#include <string>

namespace teachdim {

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("TEACHDIM_BUDGET_NODES")) {
        try {
            const unsigned long long v = std::stoull(env);
            if (v > 0) b.max_nodes = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            // Ignore malformed values; keep the default.
        }
    }
    return b;
}

}  // namespace teachdim
