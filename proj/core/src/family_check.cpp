#include "teachdim/family_check.hpp"

#include "teachdim/version_spaces.hpp"

namespace teachdim {

std::string to_string(FamilyCheck check) {
    switch (check) {
        case FamilyCheck::kConst: return "const";
        case FamilyCheck::kGlobal: return "global";
        case FamilyCheck::kGvs: return "gvs";
        case FamilyCheck::kLocal: return "local";
        case FamilyCheck::kLvs: return "lvs";
        case FamilyCheck::kWsls: return "wsls";
    }
    return "?";
}

std::optional<FamilyCheck> family_check_from_string(const std::string& s) {
    if (s == "const") return FamilyCheck::kConst;
    if (s == "global") return FamilyCheck::kGlobal;
    if (s == "gvs") return FamilyCheck::kGvs;
    if (s == "local") return FamilyCheck::kLocal;
    if (s == "lvs") return FamilyCheck::kLvs;
    if (s == "wsls") return FamilyCheck::kWsls;
    return std::nullopt;
}

namespace {

std::string triple_text(const HypothesisClass& cls, int h_prime, const VersionSpace& H, int h,
                        Rank r) {
    return "sigma(" + cls.hypothesis_name(h_prime) + "; |H|=" + std::to_string(H.count()) + ", " +
           cls.hypothesis_name(h) + ") = " + std::to_string(r);
}

FamilyVerdict mismatch(const HypothesisClass& cls, FamilyCheck check, int hp_a,
                       const VersionSpace& Ha, int ha, Rank ra, int hp_b, const VersionSpace& Hb,
                       int hb, Rank rb) {
    FamilyVerdict v;
    v.check = to_string(check);
    v.holds = false;
    v.detail = triple_text(cls, hp_a, Ha, ha, ra) + " vs " + triple_text(cls, hp_b, Hb, hb, rb);
    v.witness = EvalMismatch{hp_a, Ha, ha, ra, hp_b, Hb, hb, rb};
    return v;
}

}  // namespace

FamilyVerdict check_family(const PreferenceFunction& sigma, FamilyCheck family,
                           const HypothesisClass& cls, const Budget& budget) {
    sigma.require_bound_to(cls);
    FamilyVerdict verdict;
    verdict.check = to_string(family);

    // Any total function of (h', H, h) is in the lvs family.
    if (family == FamilyCheck::kLvs) return verdict;

    const auto spaces = enumerate_version_spaces(cls, budget);
    const int m = cls.hypothesis_count();
    BudgetMeter meter(budget, "family check");

    if (family == FamilyCheck::kWsls) {
        for (const auto& H : spaces) {
            std::vector<std::size_t> members = H.elements();
            for (std::size_t h : members) {
                meter.charge();
                IndexSet mins = sigma.argmin_set(H, static_cast<int>(h));
                if (!(mins.is_singleton() && mins.contains(h))) {
                    verdict.holds = false;
                    verdict.detail = "argmin from " + cls.hypothesis_name(static_cast<int>(h)) +
                                     " over a consistent version space is not {" +
                                     cls.hypothesis_name(static_cast<int>(h)) + "}";
                    ArgminMismatch w;
                    w.space = H;
                    w.h = static_cast<int>(h);
                    for (std::size_t i : mins.elements()) w.argmin.push_back(static_cast<int>(i));
                    verdict.witness = std::move(w);
                    return verdict;
                }
            }
        }
        return verdict;
    }

    const VersionSpace& full = spaces.front();

    switch (family) {
        case FamilyCheck::kConst: {
            const Rank ref = sigma.eval(0, full, 0);
            for (const auto& H : spaces) {
                for (int h = 0; h < m; ++h) {
                    meter.charge();
                    const auto ranks = sigma.rank_vector(H, h);
                    for (int hp = 0; hp < m; ++hp)
                        if (ranks[hp] != ref)
                            return mismatch(cls, family, 0, full, 0, ref, hp, H, h, ranks[hp]);
                }
            }
            break;
        }
        case FamilyCheck::kGlobal: {
            const auto ref = sigma.rank_vector(full, 0);
            for (const auto& H : spaces) {
                for (int h = 0; h < m; ++h) {
                    meter.charge();
                    const auto ranks = sigma.rank_vector(H, h);
                    for (int hp = 0; hp < m; ++hp)
                        if (ranks[hp] != ref[hp])
                            return mismatch(cls, family, hp, full, 0, ref[hp], hp, H, h, ranks[hp]);
                }
            }
            break;
        }
        case FamilyCheck::kGvs: {
            for (const auto& H : spaces) {
                const auto ref = sigma.rank_vector(H, 0);
                for (int h = 1; h < m; ++h) {
                    meter.charge();
                    const auto ranks = sigma.rank_vector(H, h);
                    for (int hp = 0; hp < m; ++hp)
                        if (ranks[hp] != ref[hp])
                            return mismatch(cls, family, hp, H, 0, ref[hp], hp, H, h, ranks[hp]);
                }
            }
            break;
        }
        case FamilyCheck::kLocal: {
            for (int h = 0; h < m; ++h) {
                const auto ref = sigma.rank_vector(full, h);
                for (const auto& H : spaces) {
                    meter.charge();
                    const auto ranks = sigma.rank_vector(H, h);
                    for (int hp = 0; hp < m; ++hp)
                        if (ranks[hp] != ref[hp])
                            return mismatch(cls, family, hp, full, h, ref[hp], hp, H, h, ranks[hp]);
                }
            }
            break;
        }
        default:
            break;
    }
    return verdict;
}

}  // namespace teachdim
