#include <doctest.h>

#include <random>

#include "teachdim/family_check.hpp"
#include "teachdim/version_spaces.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace teachdim;

TEST_CASE("eval on the paper fixtures") {
    auto cls = warmuth_class();
    const VersionSpace full = cls->full_set();

    auto sc = fixtures::warmuth_const(cls);
    for (int hp = 0; hp < 10; ++hp) CHECK(sc.eval(hp, full, 3) == 0);

    auto sl = fixtures::warmuth_local(cls);
    CHECK(sl.eval(2, full, 0) == 4);  // hamming(h1, h3)

    auto sg = fixtures::warmuth_gvs(cls);
    const VersionSpace h1h6 = fixtures::make_set(10, {0, 5});
    CHECK(sg.eval(0, h1h6, 3) == 0);
    CHECK(sg.eval(0, full, 3) == 1);  // unlisted space: default
}

TEST_CASE("argmin_set") {
    auto cls = warmuth_class();
    auto sc = fixtures::warmuth_const(cls);
    const VersionSpace full = cls->full_set();
    CHECK(sc.argmin_set(full, 0) == full);

    // From h1 over H((x3,1)) = {h2,h3,h7,h8,h10}, hamming picks h2.
    auto sl = fixtures::warmuth_local(cls);
    VersionSpace vs = version_space(*cls, {{2, 1}});
    IndexSet mins = sl.argmin_set(vs, 0);
    CHECK(mins.is_singleton());
    CHECK(mins.contains(1));

    // lvs: {h1} plus any subset of {h5,h6,h8,h10} keeps h1 first from h1.
    auto slvs = fixtures::warmuth_lvs(cls);
    for (int mask = 0; mask < 16; ++mask) {
        VersionSpace H(10);
        H.insert(0);
        const int opts[4] = {4, 5, 7, 9};
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) H.insert(static_cast<std::size_t>(opts[b]));
        IndexSet am = slvs.argmin_set(H, 0);
        CHECK(am.is_singleton());
        CHECK(am.contains(0));
    }

    CHECK_THROWS_AS(sc.argmin_set(VersionSpace(10), 0), DomainError);
}

TEST_CASE("gvs fixture assigns rank zero to exactly the 20 listed pairs") {
    auto cls = warmuth_class();
    auto sg = fixtures::warmuth_gvs(cls);
    const auto spaces = enumerate_version_spaces(*cls);
    int zeros = 0;
    for (const auto& H : spaces)
        for (int hp = 0; hp < 10; ++hp)
            if (sg.eval(hp, H, 0) == 0) ++zeros;
    // Every listed space is realizable, one zero-ranked hypothesis each.
    CHECK(zeros == 20);
}

TEST_CASE("builder validation") {
    auto cls = warmuth_class();
    CHECK_THROWS_AS(build_global(cls, std::vector<Rank>(3, 0)), InputError);
    CHECK_THROWS_AS(build_local_table(cls, {{0}}), InputError);

    VersionSpacePattern overlapping;
    overlapping.required = fixtures::make_set(10, {1});
    overlapping.optional = fixtures::make_set(10, {1, 2});
    CHECK_THROWS_AS(
        build_gvs(cls, {GvsEntry{overlapping, std::vector<Rank>(10, 0)}}, 0), InputError);

    auto p2 = powerset_class(2);
    auto sigma_p2 = build_const(p2, 0);
    CHECK_THROWS_AS(sigma_p2.require_bound_to(*cls), BindingError);
}

TEST_CASE("check_family classifies the fixtures") {
    auto cls = warmuth_class();
    const Budget budget;

    auto sc = fixtures::warmuth_const(cls);
    CHECK(check_family(sc, FamilyCheck::kConst, *cls, budget).holds);

    auto sl = fixtures::warmuth_local(cls);
    CHECK(check_family(sl, FamilyCheck::kLocal, *cls, budget).holds);
    auto global_verdict = check_family(sl, FamilyCheck::kGlobal, *cls, budget);
    CHECK_FALSE(global_verdict.holds);
    // The counterexample is re-checkable.
    const auto& w = std::get<EvalMismatch>(global_verdict.witness);
    CHECK(sl.eval(w.h_prime_a, w.space_a, w.h_a) == w.rank_a);
    CHECK(sl.eval(w.h_prime_b, w.space_b, w.h_b) == w.rank_b);
    CHECK(w.rank_a != w.rank_b);

    auto slvs = fixtures::warmuth_lvs(cls);
    CHECK(check_family(slvs, FamilyCheck::kLvs, *cls, budget).holds);
    CHECK_FALSE(check_family(slvs, FamilyCheck::kGvs, *cls, budget).holds);

    auto sg = fixtures::warmuth_gvs(cls);
    CHECK(check_family(sg, FamilyCheck::kGvs, *cls, budget).holds);
    CHECK_FALSE(check_family(sg, FamilyCheck::kGlobal, *cls, budget).holds);
}

TEST_CASE("family checks are monotone along the containment diagram") {
    std::mt19937 rng(11);
    const Budget budget;
    for (int trial = 0; trial < 30; ++trial) {
        auto cls = oracle::random_class(rng, 3, 4);
        std::vector<PreferenceFunction> sigmas;
        sigmas.push_back(build_const(cls, 2));
        sigmas.push_back(oracle::random_global(rng, cls));
        sigmas.push_back(oracle::random_local(rng, cls));
        sigmas.push_back(oracle::random_gvs(rng, cls, enumerate_version_spaces(*cls, budget)));
        for (const auto& sigma : sigmas) {
            const bool is_const = check_family(sigma, FamilyCheck::kConst, *cls, budget).holds;
            const bool is_global = check_family(sigma, FamilyCheck::kGlobal, *cls, budget).holds;
            const bool is_gvs = check_family(sigma, FamilyCheck::kGvs, *cls, budget).holds;
            const bool is_local = check_family(sigma, FamilyCheck::kLocal, *cls, budget).holds;
            const bool is_lvs = check_family(sigma, FamilyCheck::kLvs, *cls, budget).holds;
            if (is_const) CHECK(is_global);
            if (is_global) {
                CHECK(is_gvs);
                CHECK(is_local);
            }
            CHECK(is_lvs);
            // The intersection collapses to global.
            CHECK((is_gvs && is_local) == is_global);
        }
    }
}
