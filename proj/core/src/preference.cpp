#include "teachdim/preference.hpp"

#include <algorithm>
#include <limits>

namespace teachdim {

std::string to_string(PrefFamily family) {
    switch (family) {
        case PrefFamily::kConst: return "const";
        case PrefFamily::kGlobal: return "global";
        case PrefFamily::kGvs: return "gvs";
        case PrefFamily::kLocal: return "local";
        case PrefFamily::kLvs: return "lvs";
    }
    return "?";
}

std::optional<PrefFamily> pref_family_from_string(const std::string& s) {
    if (s == "const") return PrefFamily::kConst;
    if (s == "global") return PrefFamily::kGlobal;
    if (s == "gvs") return PrefFamily::kGvs;
    if (s == "local") return PrefFamily::kLocal;
    if (s == "lvs") return PrefFamily::kLvs;
    return std::nullopt;
}

void PreferenceFunction::require_bound_to(const HypothesisClass& cls) const {
    if (class_.get() == &cls) return;
    if (class_->hypothesis_count() == cls.hypothesis_count() &&
        class_->instance_count() == cls.instance_count() &&
        class_->matrix_hash() == cls.matrix_hash())
        return;
    throw BindingError("preference function is bound to a different hypothesis class");
}

namespace {

void check_index(int i, int m, const char* what) {
    if (i < 0 || i >= m) throw InputError(std::string(what) + " index out of range");
}

// Splits a union-class version space into its two factor spaces. Realizable
// version spaces of a disjoint union always factor this way.
void project_union(const VersionSpace& H, int ma, int mb, VersionSpace& Ha, VersionSpace& Hb) {
    Ha = VersionSpace(static_cast<std::size_t>(ma));
    Hb = VersionSpace(static_cast<std::size_t>(mb));
    H.for_each([&](std::size_t idx) {
        Ha.insert(idx / static_cast<std::size_t>(mb));
        Hb.insert(idx % static_cast<std::size_t>(mb));
    });
}

}  // namespace

Rank PreferenceFunction::eval(int h_prime, const VersionSpace& H, int h) const {
    const int m = class_->hypothesis_count();
    check_index(h_prime, m, "hypothesis");
    check_index(h, m, "hypothesis");
    if (H.universe_size() != static_cast<std::size_t>(m))
        throw BindingError("version space universe does not match the bound class");

    if (part_a_) {
        const int ma = part_a_->bound_class()->hypothesis_count();
        const int mb = part_b_->bound_class()->hypothesis_count();
        VersionSpace Ha, Hb;
        project_union(H, ma, mb, Ha, Hb);
        return part_a_->eval(h_prime / mb, Ha, h / mb) + part_b_->eval(h_prime % mb, Hb, h % mb);
    }

    switch (family_) {
        case PrefFamily::kConst:
            return const_value_;
        case PrefFamily::kGlobal:
            return global_ranks_[h_prime];
        case PrefFamily::kLocal:
            if (hamming_local_) return hamming(*class_, h, h_prime);
            return local_ranks_[h][h_prime];
        case PrefFamily::kGvs:
            for (const auto& e : gvs_entries_)
                if (e.pattern.matches(H)) return e.ranks[h_prime];
            return default_rank_;
        case PrefFamily::kLvs:
            for (const auto& e : lvs_entries_)
                if ((e.current < 0 || e.current == h) && e.pattern.matches(H))
                    return e.ranks[h_prime];
            return default_rank_;
    }
    return default_rank_;
}

namespace {

// Rank of candidate i computed through a resolver that has already fixed
// (H, h); keeps argmin/rank_vector single-pass over table entries.
struct ResolvedRanks {
    const std::vector<Rank>* table = nullptr;  // matched gvs/lvs entry
    Rank fallback = 0;
    bool use_fallback = false;
};

}  // namespace

IndexSet PreferenceFunction::argmin_set(const VersionSpace& H, int h) const {
    if (H.empty()) throw DomainError("argmin over an empty version space");

    if (part_a_) {
        const int mb = part_b_->bound_class()->hypothesis_count();
        const int ma = part_a_->bound_class()->hypothesis_count();
        VersionSpace Ha, Hb;
        project_union(H, ma, mb, Ha, Hb);
        std::vector<Rank> va(static_cast<std::size_t>(ma)), vb(static_cast<std::size_t>(mb));
        Ha.for_each([&](std::size_t i) { va[i] = part_a_->eval(static_cast<int>(i), Ha, h / mb); });
        Hb.for_each([&](std::size_t j) { vb[j] = part_b_->eval(static_cast<int>(j), Hb, h % mb); });
        Rank best = std::numeric_limits<Rank>::max();
        IndexSet out(H.universe_size());
        H.for_each([&](std::size_t idx) {
            const Rank r = va[idx / static_cast<std::size_t>(mb)] + vb[idx % static_cast<std::size_t>(mb)];
            if (r < best) {
                best = r;
                out = IndexSet(H.universe_size());
                out.insert(idx);
            } else if (r == best) {
                out.insert(idx);
            }
        });
        return out;
    }

    // The matching gvs/lvs entry depends only on (H, h); resolve it once.
    ResolvedRanks rr;
    if (family_ == PrefFamily::kGvs || family_ == PrefFamily::kLvs) {
        rr.use_fallback = true;
        rr.fallback = default_rank_;
        if (family_ == PrefFamily::kGvs) {
            for (const auto& e : gvs_entries_)
                if (e.pattern.matches(H)) {
                    rr.table = &e.ranks;
                    break;
                }
        } else {
            for (const auto& e : lvs_entries_)
                if ((e.current < 0 || e.current == h) && e.pattern.matches(H)) {
                    rr.table = &e.ranks;
                    break;
                }
        }
    }

    Rank best = std::numeric_limits<Rank>::max();
    IndexSet out(H.universe_size());
    H.for_each([&](std::size_t i) {
        Rank r;
        if (rr.table)
            r = (*rr.table)[i];
        else if (rr.use_fallback)
            r = rr.fallback;
        else
            r = eval(static_cast<int>(i), H, h);
        if (r < best) {
            best = r;
            out = IndexSet(H.universe_size());
            out.insert(i);
        } else if (r == best) {
            out.insert(i);
        }
    });
    return out;
}

std::vector<Rank> PreferenceFunction::rank_vector(const VersionSpace& H, int h) const {
    const int m = class_->hypothesis_count();
    std::vector<Rank> out(static_cast<std::size_t>(m));

    if (part_a_) {
        const int mb = part_b_->bound_class()->hypothesis_count();
        const int ma = part_a_->bound_class()->hypothesis_count();
        VersionSpace Ha, Hb;
        project_union(H, ma, mb, Ha, Hb);
        std::vector<Rank> va = part_a_->rank_vector(Ha, h / mb);
        std::vector<Rank> vb = part_b_->rank_vector(Hb, h % mb);
        for (int i = 0; i < m; ++i) out[i] = va[i / mb] + vb[i % mb];
        return out;
    }

    switch (family_) {
        case PrefFamily::kConst:
            std::fill(out.begin(), out.end(), const_value_);
            return out;
        case PrefFamily::kGlobal:
            return global_ranks_;
        case PrefFamily::kLocal:
            if (hamming_local_) {
                for (int i = 0; i < m; ++i) out[i] = hamming(*class_, h, i);
                return out;
            }
            return local_ranks_[h];
        case PrefFamily::kGvs:
            for (const auto& e : gvs_entries_)
                if (e.pattern.matches(H)) return e.ranks;
            break;
        case PrefFamily::kLvs:
            for (const auto& e : lvs_entries_)
                if ((e.current < 0 || e.current == h) && e.pattern.matches(H)) return e.ranks;
            break;
    }
    std::fill(out.begin(), out.end(), default_rank_);
    return out;
}

namespace {

void check_rank_array(const std::vector<Rank>& ranks, int m) {
    if (static_cast<int>(ranks.size()) != m)
        throw InputError("rank array must have length m = " + std::to_string(m));
}

void check_pattern(const VersionSpacePattern& p, int m) {
    if (p.required.universe_size() != static_cast<std::size_t>(m) ||
        p.optional.universe_size() != static_cast<std::size_t>(m))
        throw InputError("pattern universe does not match the class");
    if (p.required.intersects(p.optional))
        throw InputError("pattern required and optional masks overlap");
}

}  // namespace

PreferenceFunction build_const(ClassPtr cls, Rank c) {
    PreferenceFunction pf(PrefFamily::kConst, std::move(cls));
    pf.const_value_ = c;
    pf.default_rank_ = c;
    return pf;
}

PreferenceFunction build_global(ClassPtr cls, std::vector<Rank> ranks) {
    check_rank_array(ranks, cls->hypothesis_count());
    PreferenceFunction pf(PrefFamily::kGlobal, std::move(cls));
    pf.global_ranks_ = std::move(ranks);
    return pf;
}

PreferenceFunction build_local_table(ClassPtr cls, std::vector<std::vector<Rank>> matrix) {
    const int m = cls->hypothesis_count();
    if (static_cast<int>(matrix.size()) != m) throw InputError("local table must have m rows");
    for (const auto& row : matrix) check_rank_array(row, m);
    PreferenceFunction pf(PrefFamily::kLocal, std::move(cls));
    pf.local_ranks_ = std::move(matrix);
    return pf;
}

PreferenceFunction build_local_hamming(ClassPtr cls) {
    PreferenceFunction pf(PrefFamily::kLocal, std::move(cls));
    pf.hamming_local_ = true;
    return pf;
}

PreferenceFunction build_gvs(ClassPtr cls, std::vector<GvsEntry> entries, Rank default_rank) {
    const int m = cls->hypothesis_count();
    for (const auto& e : entries) {
        check_pattern(e.pattern, m);
        check_rank_array(e.ranks, m);
    }
    PreferenceFunction pf(PrefFamily::kGvs, std::move(cls));
    pf.gvs_entries_ = std::move(entries);
    pf.default_rank_ = default_rank;
    return pf;
}

PreferenceFunction build_lvs(ClassPtr cls, std::vector<LvsEntry> entries, Rank default_rank) {
    const int m = cls->hypothesis_count();
    for (const auto& e : entries) {
        if (e.current >= m || e.current < -1) throw InputError("lvs current hypothesis out of range");
        check_pattern(e.pattern, m);
        check_rank_array(e.ranks, m);
    }
    PreferenceFunction pf(PrefFamily::kLvs, std::move(cls));
    pf.lvs_entries_ = std::move(entries);
    pf.default_rank_ = default_rank;
    return pf;
}

PreferenceFunction build_additive_composite(ClassPtr union_cls, PrefPtr a, PrefPtr b) {
    const int ma = a->bound_class()->hypothesis_count();
    const int mb = b->bound_class()->hypothesis_count();
    if (union_cls->hypothesis_count() != ma * mb)
        throw InputError("union class size does not match the operand classes");
    PreferenceFunction pf(PrefFamily::kLvs, std::move(union_cls));
    pf.part_a_ = std::move(a);
    pf.part_b_ = std::move(b);
    return pf;
}

}  // namespace teachdim
