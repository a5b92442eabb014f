#pragma once

#include <map>
#include <string>
#include <vector>

#include "teachdim/family_check.hpp"
#include "teachdim/preference.hpp"

namespace teachdim {

// Rooted tree over all hypotheses of a class. Ordered children define the
// strict preference of a node over its non-self candidates; each non-root
// node carries the example whose arrival makes the learner jump to it from
// its parent.
struct PreferenceTree {
    int root = 0;
    std::vector<std::vector<int>> children;  // ordered, per hypothesis
    std::vector<int> parent;                 // -1 at the root
    std::vector<LabeledExample> edge;        // edge[v] moves parent[v] -> v
    int depth_bound = 0;

    // Construction-local names from the source table, where applicable
    // (e.g. "h9" -> binary-order index), empty otherwise.
    std::map<std::string, int> names;

    int depth() const;
    bool covers(int m) const;
    // Path examples from the root; the node's teaching sequence.
    TeachingSequence path_sequence(int node) const;
};

// Local-family sigma realizing the tree: each node prefers itself (rank 0),
// then its children in order (ranks 1..degree), then everything else at
// rank m-1. The result is in the local and wsls families.
PreferenceFunction tree_to_local_sigma(ClassPtr cls, const PreferenceTree& tree);

// Depth-3 tree over the powerset class of size 7 whose induced local sigma
// teaches every hypothesis in at most 3 examples. The left branch is the
// published construction verbatim; the remaining branches are completed
// deterministically under the same constraints.
PreferenceTree powerset7_tree();

// The doubling step: lifts a normalized local+wsls sigma over powerset(k)
// to powerset(2k) with at most twice the teaching cost. Pivot hypotheses
// (last k labels zero) inherit the coarse ranks on the first k instances;
// within a pivot's group the fine ranks act on the last k instances, offset
// by 2^k; everything else sits at 2^(2k)-1.
PreferenceFunction double_sigma(const PreferenceFunction& sigma_k,
                                const Budget& budget = Budget::from_env());

// Additive composition over a disjoint union: ranks of the two operands
// added on the factored version space. Both operands must be wsls (checked).
// The result is wsls on the union and tagged lvs.
PreferenceFunction wsls_disjoint_union_sigma(PrefPtr sigma_a, PrefPtr sigma_b,
                                             const Budget& budget = Budget::from_env());

// Compiles a weak order given as a rank vector into a global-family sigma.
PreferenceFunction order_to_global_sigma(ClassPtr cls, std::vector<Rank> ranks);

// Expands a composite (disjoint-union) sigma into explicit lvs entries,
// one per (current hypothesis, realizable version space). Needed to
// serialize such functions; bounded by the budget.
PreferenceFunction materialize_lvs(const PreferenceFunction& sigma,
                                   const Budget& budget = Budget::from_env());

}  // namespace teachdim
