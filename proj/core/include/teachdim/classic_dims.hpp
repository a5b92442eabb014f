#pragma once

#include <optional>
#include <vector>

#include "teachdim/budget.hpp"
#include "teachdim/hypothesis_class.hpp"
#include "teachdim/verdicts.hpp"

namespace teachdim {

// Batch-model teacher: one example set per hypothesis, each labeled by it.
struct TeacherMapping {
    std::vector<std::vector<LabeledExample>> sets;  // indexed by hypothesis
};

// Pairwise no-clash check: no two distinct hypotheses may each be
// consistent with the other's teaching set.
FamilyVerdict is_nonclashing(const HypothesisClass& cls, const TeacherMapping& mapping);

struct MinTeachingSetResult {
    int size = 0;
    std::vector<LabeledExample> examples;
};

// Smallest set of examples labeled by h whose version space within `within`
// is exactly {h}; iterative deepening over subset size.
MinTeachingSetResult min_teaching_set(const HypothesisClass& cls, int h, const VersionSpace& within,
                                      const Budget& budget = Budget::from_env());

struct WcTdResult {
    int value = 0;
    int worst_hypothesis = 0;
    std::vector<MinTeachingSetResult> per_hypothesis;
};

WcTdResult wc_td(const HypothesisClass& cls, const Budget& budget = Budget::from_env());

struct RtdResult {
    int value = 0;
    // Hypotheses in peel order; each round removes every hypothesis whose
    // minimal teaching set within the remaining class has the round cost.
    std::vector<std::vector<int>> rounds;
    std::vector<int> round_cost;
    // Teaching set of each hypothesis within the class remaining when its
    // round was peeled.
    std::vector<MinTeachingSetResult> per_hypothesis;
};

RtdResult rtd(const HypothesisClass& cls, const Budget& budget = Budget::from_env());

struct NctdResult {
    int value = 0;
    TeacherMapping mapping;
};

// Exact minimum over non-clashing teacher mappings of max |T(h)|, by
// iterative deepening on the size bound with clash-propagating
// backtracking. max_size_hint, when given, caps the deepening.
NctdResult nctd(const HypothesisClass& cls, std::optional<int> max_size_hint = std::nullopt,
                const Budget& budget = Budget::from_env());

struct VcdResult {
    int value = 0;
    std::vector<int> shattered;  // a maximum shattered set
};

// Exact VC dimension w.r.t. instance_subset (all instances by default),
// enumerating candidate sets by size descending with early exit.
VcdResult vcd(const HypothesisClass& cls,
              const std::optional<std::vector<int>>& instance_subset = std::nullopt,
              const Budget& budget = Budget::from_env());

}  // namespace teachdim
