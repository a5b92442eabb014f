#include "teachdim/sigma_search.hpp"

#include <algorithm>
#include <limits>

namespace teachdim {

namespace {

// Recursively extends a partial rank vector: position i gets either an
// existing rank value (0..used-1) or the next fresh one.
void weak_orders(std::vector<int>& ranks, std::size_t i, int used,
                 const std::function<void(const std::vector<int>&)>& fn) {
    if (i == ranks.size()) {
        fn(ranks);
        return;
    }
    for (int r = 0; r <= used; ++r) {
        ranks[i] = r;
        weak_orders(ranks, i + 1, std::max(used, r + 1), fn);
    }
}

}  // namespace

void for_each_weak_order(int m, const std::function<void(const std::vector<int>&)>& fn) {
    if (m < 1) throw InputError("weak orders need m >= 1");
    std::vector<int> ranks(static_cast<std::size_t>(m), 0);
    weak_orders(ranks, 0, 0, fn);
}

SigmaTdGlobalResult sigma_td_global(const HypothesisClass& cls, int h0, int max_m,
                                    const TdOptions& options) {
    cls.check_hypothesis(h0);
    const int m = cls.hypothesis_count();
    if (m > max_m)
        throw ResourceError("sigma_td_global enumerates all weak orders; m = " +
                                std::to_string(m) + " exceeds the cap (use rtd instead)",
                            static_cast<std::size_t>(max_m));

    SigmaTdGlobalResult result;
    ClassPtr cls_copy = std::make_shared<HypothesisClass>(cls);
    // The reduction theorems quantify the max over every target including
    // the initial hypothesis, so the minimization prices h0 at its protocol
    // cost no matter what the caller's flag says.
    TdOptions full_range = options;
    full_range.include_initial_target = true;
    bool any = false;
    for_each_weak_order(m, [&](const std::vector<int>& ranks) {
        ++result.orders_enumerated;
        if (any && !result.value.infinite && result.value.steps <= 1) return;  // cannot improve
        std::vector<Rank> r(ranks.begin(), ranks.end());
        PreferenceFunction sigma = build_global(cls_copy, r);
        TdSigmaResult run = td_of_sigma(cls, sigma, h0, full_range);
        if (!any || run.value < result.value) {
            any = true;
            result.value = run.value;
            result.best_ranks = std::move(r);
        }
    });
    return result;
}

bool exists_local_td1(const HypothesisClass& cls, int h0) {
    cls.check_hypothesis(h0);
    const int m = cls.hypothesis_count();
    const int n = cls.instance_count();

    bool found = false;
    for_each_weak_order(m, [&](const std::vector<int>& row) {
        if (found) return;
        // Check that every target is the unique argmin of its row over some
        // one-example version space it is consistent with.
        for (int target = 0; target < m; ++target) {
            if (target == h0) continue;
            bool taught = false;
            for (int x = 0; x < n && !taught; ++x) {
                const VersionSpace& vs = cls.consistent_mask(x, cls.label(target, x));
                int best = std::numeric_limits<int>::max();
                bool unique = false;
                bool is_target = false;
                vs.for_each([&](std::size_t hp) {
                    if (row[hp] < best) {
                        best = row[hp];
                        unique = true;
                        is_target = static_cast<int>(hp) == target;
                    } else if (row[hp] == best) {
                        unique = false;
                    }
                });
                taught = unique && is_target;
            }
            if (!taught) return;
        }
        found = true;
    });
    return found;
}

bool wsls_td1_impossible(const HypothesisClass& cls, int h0) {
    cls.check_hypothesis(h0);
    // Examples inconsistent with h0, one per instance; each can make the
    // learner adopt at most one hypothesis in a single step.
    const long capacity = cls.instance_count();
    const long targets = cls.hypothesis_count() - 1;
    return targets > capacity;
}

std::optional<GapSearchResult> find_gvs_beats_local_class(int max_instances, int max_hypotheses,
                                                          const Budget& budget) {
    for (int n = 2; n <= max_instances; ++n) {
        const int universe = 1 << n;
        for (int m = 2; m <= std::min(max_hypotheses, universe); ++m) {
            // All m-subsets of the 2^n labelings, lexicographic.
            std::vector<int> pick(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) pick[i] = i;
            while (true) {
                std::vector<std::vector<int>> rows;
                for (int v : pick) {
                    std::vector<int> row(static_cast<std::size_t>(n));
                    for (int x = 0; x < n; ++x) row[x] = (v >> (n - 1 - x)) & 1;
                    rows.push_back(std::move(row));
                }
                auto cls = std::make_shared<HypothesisClass>(rows);
                RtdResult r = rtd(*cls, budget);
                if (r.value == 2) {
                    try {
                        NctdResult nc = nctd(*cls, 1, budget);
                        GapSearchResult gap;
                        gap.found = cls;
                        gap.nctd_result = std::move(nc);
                        gap.rtd_result = std::move(r);
                        return gap;
                    } catch (const InputError&) {
                        // NCTD exceeds 1 for this class; keep searching.
                    }
                }

                int i = m - 1;
                while (i >= 0 && pick[i] == universe - m + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace teachdim
