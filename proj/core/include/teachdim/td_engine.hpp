#pragma once

#include <limits>
#include <vector>

#include "teachdim/budget.hpp"
#include "teachdim/learner.hpp"
#include "teachdim/preference.hpp"

namespace teachdim {

// Teaching cost: a step count or the infinity sentinel. Infinity is an
// explicit state, never a large integer.
struct TdCost {
    long steps = 0;
    bool infinite = false;

    static TdCost infinity() { return TdCost{0, true}; }
    bool operator==(const TdCost& o) const {
        return infinite == o.infinite && (infinite || steps == o.steps);
    }
    bool operator<(const TdCost& o) const {
        if (infinite != o.infinite) return o.infinite;
        return steps < o.steps;
    }
};

// Candidate hypotheses the learner may jump to when example z arrives in
// state (H, h): the argmin over H intersected with z's consistent set.
// Throws DomainError if z eliminates all of H.
IndexSet candidate_set(const HypothesisClass& cls, const PreferenceFunction& sigma,
                       const VersionSpace& H, int h, const LabeledExample& z);

// One step of the worst-case optimal teaching line: the teacher's example
// and the adversarial learner's reply.
struct AdversarialStep {
    LabeledExample example;
    int responded = 0;
};

struct TargetWitness {
    int target = 0;
    TdCost cost;
    std::vector<AdversarialStep> line;

    TeachingSequence sequence() const {
        TeachingSequence s;
        for (const auto& st : line) s.push_back(st.example);
        return s;
    }
};

struct TdOptions {
    bool include_initial_target = false;
    Budget budget = Budget::from_env();
};

// Exact minimax solver for the worst-case optimal teaching cost of one
// target. States are (version space, current hypothesis) pairs; the teacher
// minimizes over target-labeled examples (uninformative ones included),
// the learner adversarially maximizes over its preferred set. Memoized per
// version space; version spaces only shrink, and within one space the
// uninformative-example subgame is solved by value iteration.
class TdSolver {
public:
    TdSolver(const HypothesisClass& cls, const PreferenceFunction& sigma, int target,
             const Budget& budget = Budget::from_env());

    // Worst-case optimal cost from (H, h). 0 iff h == target.
    TdCost cost(const VersionSpace& H, int h);

    // Cost of teaching the target from itself under the protocol reading
    // (termination is only checked after an example), used when the initial
    // hypothesis is included as a target.
    TdCost protocol_cost_from_self();

    // Worst-case optimal teaching line from (full class, h0); the line's
    // length equals cost(full, h0).
    TargetWitness witness(int h0);

private:
    struct Level;
    const Level& solve(const VersionSpace& H);

    const HypothesisClass& cls_;
    const PreferenceFunction& sigma_;
    int target_;
    BudgetMeter meter_;
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// The full D_sigma value for one (H, h, target) triple.
TdCost d_sigma(const HypothesisClass& cls, const PreferenceFunction& sigma, const VersionSpace& H,
               int h, int target, const Budget& budget = Budget::from_env());

struct TdSigmaResult {
    TdCost value;
    int h0 = 0;
    bool include_initial_target = false;
    std::vector<TargetWitness> per_target;  // ascending by target index
};

// TD(sigma) for a fixed initial hypothesis: the max over targets of the
// per-target worst-case optimal cost. The target equal to h0 is excluded
// unless options.include_initial_target is set, in which case it enters at
// its protocol cost.
TdSigmaResult td_of_sigma(const HypothesisClass& cls, const PreferenceFunction& sigma, int h0,
                          const TdOptions& options = {});

// Checks a claimed adversarial teaching line: every example carries the
// target's label, every reply is a legal candidate, no premature
// termination, and the line ends exactly at the target.
bool verify_td_witness(const HypothesisClass& cls, const PreferenceFunction& sigma, int h0,
                       const TargetWitness& witness);

}  // namespace teachdim
