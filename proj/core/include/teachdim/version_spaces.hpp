#pragma once

#include <vector>

#include "teachdim/budget.hpp"
#include "teachdim/hypothesis_class.hpp"

namespace teachdim {

// All distinct nonempty realizable version spaces of the class, i.e. the
// sets H(Z) over arbitrary example sets Z. Computed as the closure of the
// full class under single-example intersection. The full class is first;
// the rest follow in deterministic BFS order.
std::vector<VersionSpace> enumerate_version_spaces(const HypothesisClass& cls,
                                                   const Budget& budget = Budget::from_env());

}  // namespace teachdim
