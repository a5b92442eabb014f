#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "teachdim/errors.hpp"
#include "teachdim/index_set.hpp"

namespace teachdim {

// A version space is a subset of hypothesis indices.
using VersionSpace = IndexSet;

// One labeled instance. The label is a bit; the instance is an index into
// the class's instance set.
struct LabeledExample {
    int instance = 0;
    int label = 0;

    bool operator==(const LabeledExample& o) const {
        return instance == o.instance && label == o.label;
    }
};

// Ordered sequence of examples as handed to the learner. Repeats are legal.
using TeachingSequence = std::vector<LabeledExample>;

// Default cap on the number of hypotheses, so exhaustive engines fail fast
// instead of hanging on oversized inputs.
inline constexpr std::size_t kDefaultMaxHypotheses = std::size_t{1} << 20;

// Finite class of boolean hypotheses over a finite instance set, stored as
// an m x n bit matrix. Immutable after construction; all queries are pure.
class HypothesisClass {
public:
    // rows[i][x] is hypothesis i's label on instance x (values 0/1).
    HypothesisClass(std::vector<std::vector<int>> rows,
                    std::vector<std::string> instance_names = {},
                    std::vector<std::string> hypothesis_names = {},
                    std::size_t max_hypotheses = kDefaultMaxHypotheses);

    int instance_count() const { return n_; }
    int hypothesis_count() const { return m_; }

    int label(int hypothesis, int instance) const {
        check_hypothesis(hypothesis);
        check_instance(instance);
        return rows_[hypothesis][instance];
    }

    // Mask of hypotheses consistent with (instance, label).
    const IndexSet& consistent_mask(int instance, int label) const {
        check_instance(instance);
        if (label != 0 && label != 1) throw InputError("label must be 0 or 1");
        return masks_[static_cast<std::size_t>(instance) * 2 + label];
    }

    IndexSet full_set() const { return IndexSet::full(static_cast<std::size_t>(m_)); }

    const std::string& instance_name(int instance) const {
        check_instance(instance);
        return instance_names_[instance];
    }
    const std::string& hypothesis_name(int hypothesis) const {
        check_hypothesis(hypothesis);
        return hypothesis_names_[hypothesis];
    }

    // Name lookup; returns -1 when absent.
    int find_instance(const std::string& name) const;
    int find_hypothesis(const std::string& name) const;

    // Hash of the label matrix only (names are metadata). Used to bind
    // preference functions to value-equal classes.
    std::uint64_t matrix_hash() const { return matrix_hash_; }

    void check_instance(int instance) const {
        if (instance < 0 || instance >= n_)
            throw InputError("instance index " + std::to_string(instance) + " out of range [0, " +
                             std::to_string(n_) + ")");
    }
    void check_hypothesis(int hypothesis) const {
        if (hypothesis < 0 || hypothesis >= m_)
            throw InputError("hypothesis index " + std::to_string(hypothesis) +
                             " out of range [0, " + std::to_string(m_) + ")");
    }
    void check_example(const LabeledExample& z) const {
        check_instance(z.instance);
        if (z.label != 0 && z.label != 1) throw InputError("label must be 0 or 1");
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::uint64_t matrix_hash_ = 0;
    std::vector<std::vector<int>> rows_;
    std::vector<IndexSet> masks_;  // [instance * 2 + label]
    std::vector<std::string> instance_names_;
    std::vector<std::string> hypothesis_names_;
};

using ClassPtr = std::shared_ptr<const HypothesisClass>;

// True iff hypothesis agrees with every example in Z.
bool consistent(int hypothesis, const HypothesisClass& cls, const std::vector<LabeledExample>& Z);

// Version space induced by Z: exactly the hypotheses consistent with every
// example. version_space(cls, {}) is the full class.
VersionSpace version_space(const HypothesisClass& cls, const std::vector<LabeledExample>& Z);

// Number of instances on which the two hypotheses disagree.
int hamming(const HypothesisClass& cls, int h, int h_prime);

// Powerset class over k instances: 2^k hypotheses in increasing binary
// order, most-significant bit = instance 0. k is capped (default 16).
ClassPtr powerset_class(int k, int max_k = 16);

// The 10x5 Warmuth class, rows h1..h10, instances x1..x5.
ClassPtr warmuth_class();

// Disjoint union: b's instances are renumbered by offset n_a; hypotheses
// are all pairs in row-major order (a outer, b inner).
ClassPtr disjoint_union(const HypothesisClass& a, const HypothesisClass& b,
                        std::size_t max_hypotheses = kDefaultMaxHypotheses);

// Index helpers for disjoint unions built by disjoint_union().
inline int union_index(const HypothesisClass& b, int ha, int hb) {
    return ha * b.hypothesis_count() + hb;
}

}  // namespace teachdim
