#pragma once

#include <optional>
#include <string>

#include "teachdim/budget.hpp"
#include "teachdim/preference.hpp"
#include "teachdim/verdicts.hpp"

namespace teachdim {

// Semantic family-membership checks. These quantify the version-space
// argument over *realizable* version spaces only (the sets H(Z)); those are
// the only spaces any engine or protocol ever evaluates.
enum class FamilyCheck { kConst, kGlobal, kGvs, kLocal, kLvs, kWsls };

std::string to_string(FamilyCheck check);
std::optional<FamilyCheck> family_check_from_string(const std::string& s);

// Verifies that sigma's eval is invariant in the arguments the family
// ignores (const/global/gvs/local), that it is unconstrained (lvs), or that
// the current hypothesis is always the unique argmin while consistent
// (wsls). Violations come back with a concrete counterexample.
FamilyVerdict check_family(const PreferenceFunction& sigma, FamilyCheck family,
                           const HypothesisClass& cls, const Budget& budget = Budget::from_env());

}  // namespace teachdim
