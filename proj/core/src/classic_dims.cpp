#include "teachdim/classic_dims.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace teachdim {

namespace {

// Visits all size-k subsets of [0, n) in lexicographic order until fn
// returns true; returns whether fn accepted one.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    if (k > n) return false;
    while (true) {
        if (fn(pick)) return true;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

FamilyVerdict is_nonclashing(const HypothesisClass& cls, const TeacherMapping& mapping) {
    const int m = cls.hypothesis_count();
    if (static_cast<int>(mapping.sets.size()) != m)
        throw InputError("teacher mapping must assign a set to every hypothesis");
    for (int h = 0; h < m; ++h)
        if (!consistent(h, cls, mapping.sets[h]))
            throw InputError("teaching set for " + cls.hypothesis_name(h) +
                             " is not labeled by it");

    FamilyVerdict verdict;
    verdict.check = "non-clashing";
    std::vector<VersionSpace> spaces;
    spaces.reserve(static_cast<std::size_t>(m));
    for (int h = 0; h < m; ++h) spaces.push_back(version_space(cls, mapping.sets[h]));

    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (spaces[a].contains(static_cast<std::size_t>(b)) &&
                spaces[b].contains(static_cast<std::size_t>(a))) {
                verdict.holds = false;
                verdict.detail = cls.hypothesis_name(a) + " and " + cls.hypothesis_name(b) +
                                 " are each consistent with the other's teaching set";
                verdict.witness = ClashWitness{a, b};
                return verdict;
            }
        }
    }
    return verdict;
}

MinTeachingSetResult min_teaching_set(const HypothesisClass& cls, int h, const VersionSpace& within,
                                      const Budget& budget) {
    cls.check_hypothesis(h);
    if (!within.contains(static_cast<std::size_t>(h)))
        throw DomainError("hypothesis must belong to the class it is taught within");

    BudgetMeter meter(budget, "minimal teaching set search");
    const int n = cls.instance_count();
    MinTeachingSetResult result;
    for (int k = 0; k <= n; ++k) {
        bool found = for_each_combination(n, k, [&](const std::vector<int>& instances) {
            meter.charge();
            VersionSpace vs = within;
            for (int x : instances) vs &= cls.consistent_mask(x, cls.label(h, x));
            if (!(vs.is_singleton() && vs.contains(static_cast<std::size_t>(h)))) return false;
            result.size = k;
            result.examples.clear();
            for (int x : instances) result.examples.push_back(LabeledExample{x, cls.label(h, x)});
            return true;
        });
        if (found) return result;
    }
    // Full labeling always identifies h: rows are distinct.
    throw DomainError("no teaching set found; class invariant violated");
}

WcTdResult wc_td(const HypothesisClass& cls, const Budget& budget) {
    WcTdResult result;
    const VersionSpace full = cls.full_set();
    for (int h = 0; h < cls.hypothesis_count(); ++h) {
        result.per_hypothesis.push_back(min_teaching_set(cls, h, full, budget));
        if (result.per_hypothesis.back().size > result.value) {
            result.value = result.per_hypothesis.back().size;
            result.worst_hypothesis = h;
        }
    }
    return result;
}

RtdResult rtd(const HypothesisClass& cls, const Budget& budget) {
    RtdResult result;
    const int m = cls.hypothesis_count();
    result.per_hypothesis.resize(static_cast<std::size_t>(m));

    VersionSpace remaining = cls.full_set();
    while (!remaining.empty()) {
        int round_min = cls.instance_count() + 1;
        std::vector<int> members;
        std::vector<MinTeachingSetResult> sets;
        remaining.for_each([&](std::size_t h) {
            members.push_back(static_cast<int>(h));
            sets.push_back(min_teaching_set(cls, static_cast<int>(h), remaining, budget));
            round_min = std::min(round_min, sets.back().size);
        });

        std::vector<int> peeled;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (sets[i].size == round_min) {
                peeled.push_back(members[i]);
                result.per_hypothesis[members[i]] = sets[i];
                remaining.erase(static_cast<std::size_t>(members[i]));
            }
        }
        result.rounds.push_back(std::move(peeled));
        result.round_cost.push_back(round_min);
        result.value = std::max(result.value, round_min);
    }
    return result;
}

namespace {

struct NctdCandidate {
    std::vector<LabeledExample> examples;
    VersionSpace consistent;  // hypotheses consistent with the set
};

// Backtracking assignment of candidate teaching sets with forward checking
// on the pairwise no-clash constraint.
class NctdSearch {
public:
    NctdSearch(const HypothesisClass& cls, int k, BudgetMeter& meter) : cls_(cls), meter_(meter) {
        const int m = cls.hypothesis_count();
        candidates_.resize(static_cast<std::size_t>(m));
        for (int h = 0; h < m; ++h) {
            for (int size = 0; size <= k; ++size) {
                for_each_combination(cls.instance_count(), size, [&](const std::vector<int>& xs) {
                    NctdCandidate c;
                    for (int x : xs) c.examples.push_back(LabeledExample{x, cls.label(h, x)});
                    c.consistent = version_space(cls_, c.examples);
                    candidates_[h].push_back(std::move(c));
                    return false;
                });
            }
        }
        feasible_.assign(static_cast<std::size_t>(m), {});
        for (int h = 0; h < m; ++h)
            feasible_[h].assign(candidates_[h].size(), true);
        chosen_.assign(static_cast<std::size_t>(m), -1);
    }

    bool run() { return assign(0); }

    TeacherMapping mapping() const {
        TeacherMapping t;
        for (std::size_t h = 0; h < chosen_.size(); ++h)
            t.sets.push_back(candidates_[h][static_cast<std::size_t>(chosen_[h])].examples);
        return t;
    }

private:
    bool clashes(int ha, const NctdCandidate& ca, int hb, const NctdCandidate& cb) const {
        return ca.consistent.contains(static_cast<std::size_t>(hb)) &&
               cb.consistent.contains(static_cast<std::size_t>(ha));
    }

    // Picks the unassigned hypothesis with the fewest feasible candidates.
    int next_hypothesis() const {
        int best = -1;
        std::size_t best_count = 0;
        for (std::size_t h = 0; h < chosen_.size(); ++h) {
            if (chosen_[h] >= 0) continue;
            std::size_t count = 0;
            for (bool f : feasible_[h])
                if (f) ++count;
            if (best < 0 || count < best_count) {
                best = static_cast<int>(h);
                best_count = count;
            }
        }
        return best;
    }

    bool assign(int depth) {
        if (depth == static_cast<int>(chosen_.size())) return true;
        const int h = next_hypothesis();
        for (std::size_t ci = 0; ci < candidates_[h].size(); ++ci) {
            if (!feasible_[h][ci]) continue;
            meter_.charge();
            chosen_[h] = static_cast<int>(ci);

            // Forward-check: prune clashing candidates of unassigned peers.
            std::vector<std::pair<int, std::size_t>> pruned;
            bool dead = false;
            for (std::size_t other = 0; other < chosen_.size() && !dead; ++other) {
                if (chosen_[other] >= 0) continue;
                bool any = false;
                for (std::size_t cj = 0; cj < candidates_[other].size(); ++cj) {
                    if (!feasible_[other][cj]) continue;
                    if (clashes(h, candidates_[h][ci], static_cast<int>(other),
                                candidates_[other][cj])) {
                        feasible_[other][cj] = false;
                        pruned.emplace_back(static_cast<int>(other), cj);
                    } else {
                        any = true;
                    }
                }
                if (!any) dead = true;
            }

            if (!dead && assign(depth + 1)) return true;

            for (auto [other, cj] : pruned) feasible_[other][cj] = true;
            chosen_[h] = -1;
        }
        return false;
    }

    const HypothesisClass& cls_;
    BudgetMeter& meter_;
    std::vector<std::vector<NctdCandidate>> candidates_;
    std::vector<std::vector<bool>> feasible_;
    std::vector<int> chosen_;
};

}  // namespace

NctdResult nctd(const HypothesisClass& cls, std::optional<int> max_size_hint,
                const Budget& budget) {
    BudgetMeter meter(budget, "nctd search");
    const int cap = max_size_hint.value_or(cls.instance_count());
    for (int k = 0; k <= cap; ++k) {
        NctdSearch search(cls, k, meter);
        if (search.run()) {
            NctdResult result;
            result.value = k;
            result.mapping = search.mapping();
            return result;
        }
    }
    // The full-labeling mapping is always non-clashing, so this needs a cap
    // below instance_count to be reachable.
    throw InputError("no non-clashing mapping within max size " + std::to_string(cap));
}

VcdResult vcd(const HypothesisClass& cls, const std::optional<std::vector<int>>& instance_subset,
              const Budget& budget) {
    BudgetMeter meter(budget, "vcd search");
    std::vector<int> universe;
    if (instance_subset) {
        universe = *instance_subset;
        for (int x : universe) cls.check_instance(x);
    } else {
        for (int x = 0; x < cls.instance_count(); ++x) universe.push_back(x);
    }

    const int m = cls.hypothesis_count();
    int max_size = 0;
    while ((1 << (max_size + 1)) <= m && max_size + 1 <= static_cast<int>(universe.size()))
        ++max_size;

    VcdResult result;
    for (int size = max_size; size >= 1; --size) {
        bool found = for_each_combination(static_cast<int>(universe.size()), size,
                                          [&](const std::vector<int>& pick) {
            meter.charge();
            std::set<unsigned> patterns;
            for (int h = 0; h < m; ++h) {
                unsigned p = 0;
                for (std::size_t i = 0; i < pick.size(); ++i)
                    p |= static_cast<unsigned>(cls.label(h, universe[pick[i]])) << i;
                patterns.insert(p);
            }
            if (patterns.size() != (1u << size)) return false;
            result.value = size;
            result.shattered.clear();
            for (int i : pick) result.shattered.push_back(universe[i]);
            return true;
        });
        if (found) return result;
    }
    return result;  // a single point is shattered only if both labels occur
}

}  // namespace teachdim
