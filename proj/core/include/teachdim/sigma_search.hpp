#pragma once

#include <functional>
#include <optional>

#include "teachdim/classic_dims.hpp"
#include "teachdim/td_engine.hpp"

namespace teachdim {

// Calls fn for every weak order on m elements, encoded as a rank vector
// whose distinct values are exactly 0..k-1 for some k. There are
// count_pref_relations(m) of them.
void for_each_weak_order(int m, const std::function<void(const std::vector<int>&)>& fn);

struct SigmaTdGlobalResult {
    TdCost value;
    std::vector<Rank> best_ranks;
    unsigned long long orders_enumerated = 0;
};

// Exact min over all global preference functions of TD(sigma): every weak
// order on the class is realized as a rank vector and solved. m is capped
// (default 7); larger classes should use rtd, which the reduction theorem
// makes equivalent. The max over targets always includes h0 at its
// protocol cost; dropping it can undercut RTD (a global sigma that ranks
// h0 dead last teaches everything else first, so only the h0 cost keeps
// the minimization honest).
SigmaTdGlobalResult sigma_td_global(const HypothesisClass& cls, int h0, int max_m = 7,
                                    const TdOptions& options = {});

// Whether any local preference function teaches every target from h0 with
// a single example. Only the sigma(.; ., h0) row can influence one-step
// teaching, so the search is exhaustive over weak orders of that row.
bool exists_local_td1(const HypothesisClass& cls, int h0);

// One-step capacity bound for win-stay lose-shift learners: the first
// example that moves the learner off h0 must be inconsistent with h0, and
// there are only instance_count such examples, each teaching at most one
// target. Returns true when m-1 targets exceed that capacity, certifying
// that every wsls sigma needs at least two examples for some target.
bool wsls_td1_impossible(const HypothesisClass& cls, int h0);

struct GapSearchResult {
    ClassPtr found;
    NctdResult nctd_result;   // value 1, with witness mapping
    RtdResult rtd_result;     // value 2
};

// Brute-force search for a class with NCTD = 1 and RTD = 2. On such a
// class no local preference function reaches TD 1 for any h0 while some
// gvs one does, so the version-space-indexed family strictly wins.
std::optional<GapSearchResult> find_gvs_beats_local_class(
    int max_instances = 3, int max_hypotheses = 6, const Budget& budget = Budget::from_env());

}  // namespace teachdim
