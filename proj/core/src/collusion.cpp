#include "teachdim/collusion.hpp"

#include <deque>
#include <unordered_set>

#include "teachdim/detail/argmin_cache.hpp"

namespace teachdim {

namespace {
using detail::SpaceHypKey;
using SpaceHyp = detail::SpaceHypKey;
using SpaceHypHash = detail::SpaceHypKeyHash;
}  // namespace

FamilyVerdict is_collusion_free(const PreferenceFunction& sigma, const HypothesisClass& cls,
                                int h0, const Budget& budget) {
    sigma.require_bound_to(cls);
    cls.check_hypothesis(h0);

    FamilyVerdict verdict;
    verdict.check = "collusion-free";

    BudgetMeter meter(budget, "collusion-freeness check");
    detail::ArgminCache argmins(sigma);
    const int n = cls.instance_count();

    std::unordered_set<SpaceHyp, SpaceHypHash> checked;
    FamilyVerdict failure;

    // Checks one (H_t, preferred) pair against all consistent example sets,
    // enumerating distinct induced version spaces.
    auto check_stability = [&](const VersionSpace& H, int state_current, int preferred) -> bool {
        if (!checked.insert(SpaceHyp{H, preferred}).second) return true;
        std::vector<LabeledExample> chosen;
        auto recurse = [&](auto&& self, int x, const VersionSpace& reduced) -> bool {
            meter.charge();
            const IndexSet& mins = argmins.get(reduced, preferred);
            if (!(mins.is_singleton() && mins.contains(static_cast<std::size_t>(preferred)))) {
                CollusionWitness w;
                w.state_space = H;
                w.state_current = state_current;
                w.preferred = preferred;
                w.adversary_examples = chosen;
                for (std::size_t i : mins.elements()) w.argmin_after.push_back(static_cast<int>(i));
                failure.check = verdict.check;
                failure.holds = false;
                failure.detail = "learner leaves " + cls.hypothesis_name(preferred) + " after " +
                                 std::to_string(chosen.size()) + " consistent example(s)";
                failure.witness = std::move(w);
                return false;
            }
            for (int xi = x; xi < n; ++xi) {
                const int label = cls.label(preferred, xi);
                VersionSpace next = reduced & cls.consistent_mask(xi, label);
                if (next == reduced) continue;  // example adds nothing new
                chosen.push_back(LabeledExample{xi, label});
                if (!self(self, xi + 1, next)) return false;
                chosen.pop_back();
            }
            return true;
        };
        return recurse(recurse, 0, H);
    };

    // BFS over post-jump protocol states; check pairs are the mid-transition
    // (H_t, h_{t-1}) states plus the initial one.
    std::unordered_set<SpaceHyp, SpaceHypHash> seen;
    std::deque<SpaceHyp> queue;
    const VersionSpace full = cls.full_set();
    seen.insert(SpaceHyp{full, h0});
    queue.push_back(SpaceHyp{full, h0});

    {
        const IndexSet& first = argmins.get(full, h0);
        if (first.is_singleton() &&
            !check_stability(full, h0, static_cast<int>(first.first())))
            return failure;
    }

    while (!queue.empty()) {
        SpaceHyp state = queue.front();
        queue.pop_front();
        meter.charge();

        for (int x = 0; x < n; ++x) {
            for (int y = 0; y <= 1; ++y) {
                VersionSpace next = state.space & cls.consistent_mask(x, y);
                if (next.empty()) continue;
                const IndexSet& mins = argmins.get(next, state.h);
                if (mins.is_singleton()) {
                    const int preferred = static_cast<int>(mins.first());
                    if (!check_stability(next, state.h, preferred)) return failure;
                }
                mins.for_each([&](std::size_t c) {
                    SpaceHyp succ{next, static_cast<int>(c)};
                    if (seen.insert(succ).second) queue.push_back(std::move(succ));
                });
            }
        }
    }
    return verdict;
}

}  // namespace teachdim
