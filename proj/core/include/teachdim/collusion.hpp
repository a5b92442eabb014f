#pragma once

#include "teachdim/budget.hpp"
#include "teachdim/preference.hpp"
#include "teachdim/verdicts.hpp"

namespace teachdim {

// Collusion-freeness verifier for the sequential protocol. Explores every
// reachable protocol state (H_t, h_{t-1}) from (full class, h0); wherever
// the learner's preferred hypothesis is unique, say {h^}, it checks that no
// set S of h^-consistent examples can move the argmin off h^. Example order
// within S is irrelevant: only the induced version space and the fixed
// current hypothesis h^ enter the check, so S ranges over sets.
FamilyVerdict is_collusion_free(const PreferenceFunction& sigma, const HypothesisClass& cls,
                                int h0, const Budget& budget = Budget::from_env());

}  // namespace teachdim
