#pragma once

#include <string>
#include <utility>
#include <vector>

#include "teachdim/preference.hpp"

namespace teachdim {

// How a simulated learner resolves ties in its preferred set.
// kAdversarialAgainstTarget picks the lowest-index candidate different from
// the session target when one exists (the worst case for the teacher);
// kLowestIndex is for reproducible demos.
enum class TieMode { kAdversarialAgainstTarget, kLowestIndex };

std::string to_string(TieMode mode);

struct LearnerState {
    int current = 0;          // h_{t-1}
    VersionSpace space;       // H_{t-1}
    TeachingSequence history; // Z_{t-1}
};

LearnerState initial_state(const HypothesisClass& cls, int h0);

struct TrajectoryStep {
    LabeledExample example;
    std::size_t space_size = 0;      // |H_t| after the example
    std::vector<int> candidates;     // argmin set the learner chose from
    int chosen = 0;                  // h_t
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;
    bool terminated = false;
    std::size_t steps_used = 0;
};

// One protocol step: intersect the version space with the example, then let
// the learner jump to its preferred set, breaking ties per tie_mode.
// target is only consulted by kAdversarialAgainstTarget.
// Throws InputError if the example empties the version space.
std::pair<LearnerState, IndexSet> learner_step(const HypothesisClass& cls,
                                               const PreferenceFunction& sigma,
                                               const LearnerState& state, const LabeledExample& z,
                                               TieMode tie_mode, int target = -1);

// Replays a teaching sequence, stopping as soon as the learner reaches the
// target. Teaching a target equal to h0 succeeds at cost 0. Sequences that
// disagree with the target's labels are rejected (teachers cannot lie).
Trajectory run_protocol(const HypothesisClass& cls, const PreferenceFunction& sigma, int h0,
                        int target, const TeachingSequence& sequence, TieMode tie_mode);

// One line per step: t=<k> z=(<x>,<y>) H=<count> candidates={...} chosen=<h>
std::string format_trajectory(const HypothesisClass& cls, const Trajectory& trajectory);

}  // namespace teachdim
