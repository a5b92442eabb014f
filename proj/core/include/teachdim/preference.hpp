#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "teachdim/hypothesis_class.hpp"

namespace teachdim {

// Ranks are exact scaled integers. They are only compared (and added, in
// the disjoint-union composition), never combined otherwise, so integer
// arithmetic keeps ties unambiguous.
using Rank = std::int64_t;

enum class PrefFamily { kConst, kGlobal, kGvs, kLocal, kLvs };

std::string to_string(PrefFamily family);
std::optional<PrefFamily> pref_family_from_string(const std::string& s);

// Compressed description of a set of version spaces: H matches iff
// required <= H <= required | optional.
struct VersionSpacePattern {
    IndexSet required;
    IndexSet optional;

    bool matches(const IndexSet& H) const {
        return required.is_subset_of(H) && H.is_subset_of(required | optional);
    }
};

struct GvsEntry {
    VersionSpacePattern pattern;
    std::vector<Rank> ranks;  // length m
};

struct LvsEntry {
    int current = -1;  // -1 = wildcard over the learner's current hypothesis
    VersionSpacePattern pattern;
    std::vector<Rank> ranks;  // length m
};

// A family-tagged realization of sigma(h'; H, h), bound to one hypothesis
// class. The family tag describes the *representation*; semantic family
// membership is what check_family decides. Lookups are total: gvs/lvs
// tables resolve first-match-wins with an explicit default rank.
// Immutable after construction.
class PreferenceFunction {
public:
    PrefFamily family() const { return family_; }
    const ClassPtr& bound_class() const { return class_; }
    Rank default_rank() const { return default_rank_; }

    // Throws BindingError unless this function is bound to a class with the
    // same label matrix.
    void require_bound_to(const HypothesisClass& cls) const;

    Rank eval(int h_prime, const VersionSpace& H, int h) const;

    // Nonempty subset of H achieving the minimum rank; ties preserved.
    IndexSet argmin_set(const VersionSpace& H, int h) const;

    // Ranks of all m candidates for a fixed (H, h). Resolves table entries
    // and union projections once, so bulk checks prefer this over per-
    // candidate eval.
    std::vector<Rank> rank_vector(const VersionSpace& H, int h) const;

    // Representation access (used by serialization and the constructions).
    bool is_hamming_local() const { return hamming_local_; }
    Rank const_value() const { return const_value_; }
    const std::vector<Rank>& global_ranks() const { return global_ranks_; }
    const std::vector<std::vector<Rank>>& local_ranks() const { return local_ranks_; }
    const std::vector<GvsEntry>& gvs_entries() const { return gvs_entries_; }
    const std::vector<LvsEntry>& lvs_entries() const { return lvs_entries_; }
    bool is_composite() const { return static_cast<bool>(part_a_); }
    const std::shared_ptr<const PreferenceFunction>& part_a() const { return part_a_; }
    const std::shared_ptr<const PreferenceFunction>& part_b() const { return part_b_; }

    friend PreferenceFunction build_const(ClassPtr cls, Rank c);
    friend PreferenceFunction build_global(ClassPtr cls, std::vector<Rank> ranks);
    friend PreferenceFunction build_local_table(ClassPtr cls, std::vector<std::vector<Rank>> matrix);
    friend PreferenceFunction build_local_hamming(ClassPtr cls);
    friend PreferenceFunction build_gvs(ClassPtr cls, std::vector<GvsEntry> entries, Rank default_rank);
    friend PreferenceFunction build_lvs(ClassPtr cls, std::vector<LvsEntry> entries, Rank default_rank);
    friend PreferenceFunction build_additive_composite(ClassPtr union_cls,
                                                       std::shared_ptr<const PreferenceFunction> a,
                                                       std::shared_ptr<const PreferenceFunction> b);

private:
    explicit PreferenceFunction(PrefFamily family, ClassPtr cls)
        : family_(family), class_(std::move(cls)) {}

    PrefFamily family_;
    ClassPtr class_;
    Rank default_rank_ = 0;

    Rank const_value_ = 0;
    std::vector<Rank> global_ranks_;
    bool hamming_local_ = false;
    std::vector<std::vector<Rank>> local_ranks_;  // [h][h']
    std::vector<GvsEntry> gvs_entries_;
    std::vector<LvsEntry> lvs_entries_;

    // Additive disjoint-union backend: eval factors H into the two operand
    // version spaces and sums the operand ranks.
    std::shared_ptr<const PreferenceFunction> part_a_;
    std::shared_ptr<const PreferenceFunction> part_b_;
};

using PrefPtr = std::shared_ptr<const PreferenceFunction>;

// Constructors for the table shapes. Each validates arity and pattern
// invariants and returns a total, bound sigma.
PreferenceFunction build_const(ClassPtr cls, Rank c = 0);
PreferenceFunction build_global(ClassPtr cls, std::vector<Rank> ranks);
PreferenceFunction build_local_table(ClassPtr cls, std::vector<std::vector<Rank>> matrix);
PreferenceFunction build_local_hamming(ClassPtr cls);
PreferenceFunction build_gvs(ClassPtr cls, std::vector<GvsEntry> entries, Rank default_rank);
PreferenceFunction build_lvs(ClassPtr cls, std::vector<LvsEntry> entries, Rank default_rank);

// Internal to the disjoint-union construction; exposed for it.
PreferenceFunction build_additive_composite(ClassPtr union_cls, PrefPtr a, PrefPtr b);

inline Rank eval(const PreferenceFunction& sigma, int h_prime, const VersionSpace& H, int h) {
    return sigma.eval(h_prime, H, h);
}

inline IndexSet argmin_set(const PreferenceFunction& sigma, const VersionSpace& H, int h) {
    return sigma.argmin_set(H, h);
}

}  // namespace teachdim
