#include "teachdim/td_engine.hpp"

#include <algorithm>
#include <unordered_map>

#include "teachdim/detail/argmin_cache.hpp"

namespace teachdim {

namespace {
// Values are step counts bounded by |X| whenever finite; kUnreached is the
// internal sentinel and never leaks into arithmetic.
constexpr int kUnreached = std::numeric_limits<int>::max() / 4;
}  // namespace

IndexSet candidate_set(const HypothesisClass& cls, const PreferenceFunction& sigma,
                       const VersionSpace& H, int h, const LabeledExample& z) {
    sigma.require_bound_to(cls);
    cls.check_example(z);
    VersionSpace reduced = H & cls.consistent_mask(z.instance, z.label);
    if (reduced.empty())
        throw DomainError("example (" + cls.instance_name(z.instance) + "," +
                          std::to_string(z.label) + ") eliminates all hypotheses in the space");
    return sigma.argmin_set(reduced, h);
}

struct TdSolver::Level {
    struct Move {
        int x = -1;
        bool pass = false;
        bool valid = false;
    };
    std::vector<int> value;  // per current hypothesis
    std::vector<Move> move;
    int pass_x = -1;  // representative uninformative example, -1 if none
};

struct TdSolver::Impl {
    explicit Impl(const PreferenceFunction& sigma) : argmins(sigma) {}
    detail::ArgminCache argmins;
    std::unordered_map<VersionSpace, Level, IndexSetHash> levels;
};

TdSolver::TdSolver(const HypothesisClass& cls, const PreferenceFunction& sigma, int target,
                   const Budget& budget)
    : cls_(cls), sigma_(sigma), target_(target), meter_(budget, "td engine"),
      impl_(std::make_shared<Impl>(sigma)) {
    sigma.require_bound_to(cls);
    cls.check_hypothesis(target);
}

const TdSolver::Level& TdSolver::solve(const VersionSpace& root) {
    {
        auto it = impl_->levels.find(root);
        if (it != impl_->levels.end()) return it->second;
    }

    const int m = cls_.hypothesis_count();
    const int n = cls_.instance_count();

    // Iterative post-order over the shrinking version-space lattice.
    struct Pending {
        VersionSpace space;
        std::vector<std::pair<int, VersionSpace>> informative;  // instance, child
        int pass_x = -1;
        std::size_t next_child = 0;
        bool expanded = false;
    };
    std::vector<Pending> stack;
    stack.push_back(Pending{root, {}, -1, 0, false});

    while (!stack.empty()) {
        Pending& top = stack.back();
        if (impl_->levels.count(top.space)) {
            stack.pop_back();
            continue;
        }
        if (!top.expanded) {
            top.expanded = true;
            meter_.charge();
            for (int x = 0; x < n; ++x) {
                const int y = cls_.label(target_, x);
                VersionSpace child = top.space & cls_.consistent_mask(x, y);
                if (child == top.space) {
                    if (top.pass_x < 0) top.pass_x = x;
                } else {
                    top.informative.emplace_back(x, std::move(child));
                }
            }
        }
        bool descended = false;
        while (top.next_child < top.informative.size()) {
            const VersionSpace& child = top.informative[top.next_child].second;
            ++top.next_child;
            if (!impl_->levels.count(child)) {
                stack.push_back(Pending{child, {}, -1, 0, false});
                descended = true;
                break;
            }
        }
        if (descended) continue;

        // All children solved; finalize this level.
        Pending done = std::move(stack.back());
        stack.pop_back();

        Level lv;
        lv.value.assign(static_cast<std::size_t>(m), kUnreached);
        lv.move.assign(static_cast<std::size_t>(m), Level::Move{});
        lv.pass_x = done.pass_x;
        lv.value[target_] = 0;

        auto combine = [&](const IndexSet& candidates, const std::vector<int>& child_values) {
            if (candidates.is_singleton() && candidates.contains(static_cast<std::size_t>(target_)))
                return 1;
            int worst = 0;
            candidates.for_each([&](std::size_t c) {
                if (static_cast<int>(c) == target_) return;
                worst = std::max(worst, child_values[c]);
            });
            return worst >= kUnreached ? kUnreached : 1 + worst;
        };

        for (const auto& [x, child] : done.informative) {
            const Level& cl = impl_->levels.at(child);
            for (int h = 0; h < m; ++h) {
                if (h == target_) continue;
                const IndexSet& cands = impl_->argmins.get(child, h);
                const int v = combine(cands, cl.value);
                if (v < lv.value[h]) {
                    lv.value[h] = v;
                    lv.move[h] = Level::Move{x, false, true};
                }
            }
        }

        if (done.pass_x >= 0) {
            // Uninformative examples leave the version space fixed but can
            // move the learner; solve the within-level subgame by value
            // iteration, which converges to the exact minimax from the
            // informative-only upper bounds.
            bool changed = true;
            while (changed) {
                changed = false;
                for (int h = 0; h < m; ++h) {
                    if (h == target_) continue;
                    const IndexSet& cands = impl_->argmins.get(done.space, h);
                    const int v = combine(cands, lv.value);
                    if (v < lv.value[h]) {
                        lv.value[h] = v;
                        lv.move[h] = Level::Move{done.pass_x, true, true};
                        changed = true;
                    }
                }
            }
        }

        impl_->levels.emplace(done.space, std::move(lv));
    }
    return impl_->levels.at(root);
}

TdCost TdSolver::cost(const VersionSpace& H, int h) {
    cls_.check_hypothesis(h);
    if (!H.contains(static_cast<std::size_t>(target_)))
        throw DomainError("target hypothesis is not in the version space");
    if (h == target_) return TdCost{0, false};
    const Level& lv = solve(H);
    if (lv.value[h] >= kUnreached) return TdCost::infinity();
    return TdCost{lv.value[h], false};
}

TdCost TdSolver::protocol_cost_from_self() {
    const VersionSpace full = cls_.full_set();
    solve(full);

    int best = kUnreached;
    auto combine = [&](const IndexSet& candidates, const std::vector<int>& child_values) {
        if (candidates.is_singleton() && candidates.contains(static_cast<std::size_t>(target_)))
            return 1;
        int worst = 0;
        candidates.for_each([&](std::size_t c) {
            if (static_cast<int>(c) == target_) return;
            worst = std::max(worst, child_values[c]);
        });
        return worst >= kUnreached ? kUnreached : 1 + worst;
    };
    for (int x = 0; x < cls_.instance_count(); ++x) {
        const int y = cls_.label(target_, x);
        VersionSpace child = full & cls_.consistent_mask(x, y);
        const IndexSet& cands = impl_->argmins.get(child, target_);
        const std::vector<int>& values = solve(child).value;  // solve is a lookup when cached
        best = std::min(best, combine(cands, values));
    }
    if (best >= kUnreached) return TdCost::infinity();
    return TdCost{best, false};
}

TargetWitness TdSolver::witness(int h0) {
    cls_.check_hypothesis(h0);
    TargetWitness w;
    w.target = target_;

    VersionSpace H = cls_.full_set();
    int h = h0;

    // Teaching the initial hypothesis itself: the first move comes from the
    // protocol-cost evaluation, after which the normal policy applies.
    if (h0 == target_) {
        w.cost = protocol_cost_from_self();
        if (w.cost.infinite) return w;
        int best = kUnreached;
        int best_x = -1;
        for (int x = 0; x < cls_.instance_count(); ++x) {
            const int y = cls_.label(target_, x);
            VersionSpace child = H & cls_.consistent_mask(x, y);
            const IndexSet& cands = impl_->argmins.get(child, target_);
            const std::vector<int>& values = solve(child).value;
            int v;
            if (cands.is_singleton() && cands.contains(static_cast<std::size_t>(target_))) {
                v = 1;
            } else {
                int worst = 0;
                cands.for_each([&](std::size_t c) {
                    if (static_cast<int>(c) != target_) worst = std::max(worst, values[c]);
                });
                v = worst >= kUnreached ? kUnreached : 1 + worst;
            }
            if (v < best) {
                best = v;
                best_x = x;
            }
        }
        const LabeledExample z{best_x, cls_.label(target_, best_x)};
        VersionSpace child = H & cls_.consistent_mask(z.instance, z.label);
        const IndexSet& cands = impl_->argmins.get(child, target_);
        const std::vector<int>& values = solve(child).value;
        int reply = target_;
        int reply_value = -1;
        cands.for_each([&](std::size_t c) {
            if (static_cast<int>(c) == target_) return;
            if (values[c] > reply_value) {
                reply_value = values[c];
                reply = static_cast<int>(c);
            }
        });
        w.line.push_back(AdversarialStep{z, reply});
        if (reply == target_) return w;
        H = std::move(child);
        h = reply;
    } else {
        w.cost = cost(H, h);
        if (w.cost.infinite) return w;
    }

    while (h != target_) {
        const Level::Move mv = solve(H).move[h];
        if (!mv.valid) break;  // unreachable when cost is finite
        const LabeledExample z{mv.x, cls_.label(target_, mv.x)};
        VersionSpace child = H & cls_.consistent_mask(z.instance, z.label);
        const IndexSet& cands = impl_->argmins.get(child, h);
        const std::vector<int>& values = solve(child).value;

        // Worst reply: the candidate with the largest remaining cost,
        // lowest index on ties, never the target unless forced.
        int reply = -1;
        int reply_value = -1;
        cands.for_each([&](std::size_t c) {
            if (static_cast<int>(c) == target_) return;
            if (values[c] > reply_value) {
                reply_value = values[c];
                reply = static_cast<int>(c);
            }
        });
        if (reply < 0) reply = target_;

        w.line.push_back(AdversarialStep{z, reply});
        H = std::move(child);
        h = reply;
    }
    return w;
}

TdCost d_sigma(const HypothesisClass& cls, const PreferenceFunction& sigma, const VersionSpace& H,
               int h, int target, const Budget& budget) {
    TdSolver solver(cls, sigma, target, budget);
    return solver.cost(H, h);
}

TdSigmaResult td_of_sigma(const HypothesisClass& cls, const PreferenceFunction& sigma, int h0,
                          const TdOptions& options) {
    sigma.require_bound_to(cls);
    cls.check_hypothesis(h0);

    TdSigmaResult result;
    result.h0 = h0;
    result.include_initial_target = options.include_initial_target;
    result.value = TdCost{0, false};

    bool any = false;
    for (int target = 0; target < cls.hypothesis_count(); ++target) {
        if (target == h0 && !options.include_initial_target) continue;
        TdSolver solver(cls, sigma, target, options.budget);
        TargetWitness w = solver.witness(h0);
        if (!any || result.value < w.cost) {
            result.value = w.cost;
            any = true;
        }
        result.per_target.push_back(std::move(w));
    }
    if (!any) result.value = TdCost{0, false};  // single-hypothesis class
    return result;
}

bool verify_td_witness(const HypothesisClass& cls, const PreferenceFunction& sigma, int h0,
                       const TargetWitness& witness) {
    if (witness.cost.infinite) return false;
    if (static_cast<long>(witness.line.size()) != witness.cost.steps) return false;
    if (h0 == witness.target && witness.line.empty()) return witness.cost.steps == 0;

    VersionSpace H = cls.full_set();
    int h = h0;
    for (std::size_t t = 0; t < witness.line.size(); ++t) {
        const auto& step = witness.line[t];
        if (cls.label(witness.target, step.example.instance) != step.example.label)
            return false;  // teacher lied
        IndexSet cands = candidate_set(cls, sigma, H, h, step.example);
        if (!cands.contains(static_cast<std::size_t>(step.responded))) return false;
        const bool last = t + 1 == witness.line.size();
        if ((step.responded == witness.target) != last) return false;
        H &= cls.consistent_mask(step.example.instance, step.example.label);
        h = step.responded;
    }
    return h == witness.target;
}

}  // namespace teachdim
