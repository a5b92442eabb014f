#include "teachdim/learner.hpp"

#include <sstream>

namespace teachdim {

std::string to_string(TieMode mode) {
    return mode == TieMode::kAdversarialAgainstTarget ? "adversarial" : "lowest-index";
}

LearnerState initial_state(const HypothesisClass& cls, int h0) {
    cls.check_hypothesis(h0);
    LearnerState s;
    s.current = h0;
    s.space = cls.full_set();
    return s;
}

std::pair<LearnerState, IndexSet> learner_step(const HypothesisClass& cls,
                                               const PreferenceFunction& sigma,
                                               const LearnerState& state, const LabeledExample& z,
                                               TieMode tie_mode, int target) {
    sigma.require_bound_to(cls);
    cls.check_example(z);

    VersionSpace next = state.space & cls.consistent_mask(z.instance, z.label);
    if (next.empty())
        throw InputError("example (" + cls.instance_name(z.instance) + "," +
                         std::to_string(z.label) + ") eliminates every remaining hypothesis");

    IndexSet candidates = sigma.argmin_set(next, state.current);

    int chosen = -1;
    if (tie_mode == TieMode::kAdversarialAgainstTarget && target >= 0) {
        candidates.for_each([&](std::size_t c) {
            if (chosen < 0 && static_cast<int>(c) != target) chosen = static_cast<int>(c);
        });
        if (chosen < 0) chosen = target;  // candidates == {target}
    } else {
        chosen = static_cast<int>(candidates.first());
    }

    LearnerState out;
    out.current = chosen;
    out.space = std::move(next);
    out.history = state.history;
    out.history.push_back(z);
    return {std::move(out), std::move(candidates)};
}

Trajectory run_protocol(const HypothesisClass& cls, const PreferenceFunction& sigma, int h0,
                        int target, const TeachingSequence& sequence, TieMode tie_mode) {
    cls.check_hypothesis(target);
    for (const auto& z : sequence) {
        cls.check_example(z);
        if (cls.label(target, z.instance) != z.label)
            throw InputError("teaching sequence disagrees with the target on instance " +
                             cls.instance_name(z.instance));
    }

    Trajectory trajectory;
    LearnerState state = initial_state(cls, h0);
    if (state.current == target) {
        trajectory.terminated = true;
        trajectory.steps_used = 0;
        return trajectory;
    }

    for (const auto& z : sequence) {
        auto [next, candidates] = learner_step(cls, sigma, state, z, tie_mode, target);
        TrajectoryStep step;
        step.example = z;
        step.space_size = next.space.count();
        for (std::size_t c : candidates.elements()) step.candidates.push_back(static_cast<int>(c));
        step.chosen = next.current;
        trajectory.steps.push_back(std::move(step));
        state = std::move(next);
        if (state.current == target) {
            trajectory.terminated = true;
            trajectory.steps_used = trajectory.steps.size();
            return trajectory;
        }
    }
    trajectory.terminated = false;
    trajectory.steps_used = trajectory.steps.size();
    return trajectory;
}

std::string format_trajectory(const HypothesisClass& cls, const Trajectory& trajectory) {
    std::ostringstream os;
    for (std::size_t t = 0; t < trajectory.steps.size(); ++t) {
        const auto& step = trajectory.steps[t];
        os << "t=" << (t + 1) << " z=(" << cls.instance_name(step.example.instance) << ","
           << step.example.label << ") H=" << step.space_size << " candidates={";
        for (std::size_t i = 0; i < step.candidates.size(); ++i) {
            if (i) os << ",";
            os << cls.hypothesis_name(step.candidates[i]);
        }
        os << "} chosen=" << cls.hypothesis_name(step.chosen) << "\n";
    }
    os << (trajectory.terminated ? "terminated" : "not-terminated") << " steps="
       << trajectory.steps_used << "\n";
    return os.str();
}

}  // namespace teachdim
