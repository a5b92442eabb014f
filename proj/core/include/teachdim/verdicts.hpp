#pragma once

#include <string>
#include <variant>
#include <vector>

#include "teachdim/hypothesis_class.hpp"
#include "teachdim/preference.hpp"

namespace teachdim {

// Two eval triples that the claimed family says must agree but do not.
struct EvalMismatch {
    int h_prime_a = 0;
    VersionSpace space_a;
    int h_a = 0;
    Rank rank_a = 0;
    int h_prime_b = 0;
    VersionSpace space_b;
    int h_b = 0;
    Rank rank_b = 0;
};

// A (version space, current hypothesis) pair whose argmin is not {current}.
struct ArgminMismatch {
    VersionSpace space;
    int h = 0;
    std::vector<int> argmin;
};

// A reachable protocol state with a consistent example set that moves the
// learner off its uniquely preferred hypothesis.
struct CollusionWitness {
    VersionSpace state_space;
    int state_current = 0;
    int preferred = 0;
    std::vector<LabeledExample> adversary_examples;
    std::vector<int> argmin_after;
};

// Two distinct hypotheses each consistent with the other's teaching set.
struct ClashWitness {
    int h1 = 0;
    int h2 = 0;
};

using VerdictWitness =
    std::variant<std::monostate, EvalMismatch, ArgminMismatch, CollusionWitness, ClashWitness>;

// Outcome of a verification pass. When holds is false the witness is a
// concrete, re-checkable counterexample and detail describes it.
struct FamilyVerdict {
    std::string check;
    bool holds = true;
    std::string detail;
    VerdictWitness witness;
};

}  // namespace teachdim
