#pragma once

#include <cstddef>

#include "teachdim/errors.hpp"

namespace teachdim {

// Node budget shared by all exhaustive engines. A "node" is one unit of
// search work (a new version space, a backtracking step, an expanded
// protocol state). Exceeding the budget raises ResourceError instead of
// silently truncating.
struct Budget {
    std::size_t max_nodes = 50'000'000;

    // Reads TEACHDIM_BUDGET_NODES when set, else returns the default.
    static Budget from_env();
};

// Counter handed through an engine run.
class BudgetMeter {
public:
    explicit BudgetMeter(const Budget& budget, const char* op)
        : limit_(budget.max_nodes), op_(op) {}

    void charge(std::size_t nodes = 1) {
        used_ += nodes;
        if (used_ > limit_) throw ResourceError(std::string(op_) + " exceeded node budget", limit_);
    }

    std::size_t used() const { return used_; }

private:
    std::size_t used_ = 0;
    std::size_t limit_;
    const char* op_;
};

}  // namespace teachdim
