#include <doctest.h>

#include "teachdim/collusion.hpp"
#include "teachdim/family_check.hpp"
#include "fixtures.hpp"

using namespace teachdim;

TEST_CASE("constant preferences are collusion-free on any class") {
    auto cls = warmuth_class();
    auto sigma = fixtures::warmuth_const(cls);
    for (int h0 : {0, 3, 9}) CHECK(is_collusion_free(sigma, *cls, h0).holds);
}

TEST_CASE("win-stay lose-shift fixtures are collusion-free") {
    auto cls = warmuth_class();
    auto slvs = fixtures::warmuth_lvs(cls);
    CHECK(is_collusion_free(slvs, *cls, 0).holds);

    auto sl = fixtures::warmuth_local(cls);
    CHECK(is_collusion_free(sl, *cls, 0).holds);

    auto sg = fixtures::warmuth_gvs(cls);
    CHECK(is_collusion_free(sg, *cls, 0).holds);
}

TEST_CASE("the adversarial lvs witness is rejected with a concrete state") {
    auto cls = fixtures::adversarial_class();
    auto sigma = fixtures::adversarial_lvs(cls);
    FamilyVerdict verdict = is_collusion_free(sigma, *cls, 0);
    REQUIRE_FALSE(verdict.holds);

    const auto& w = std::get<CollusionWitness>(verdict.witness);
    CHECK(w.preferred == 1);
    REQUIRE(w.adversary_examples.size() == 1);
    CHECK(w.adversary_examples[0].instance == 0);
    CHECK(w.adversary_examples[0].label == 0);

    // Re-check the witness: the examples are consistent with the preferred
    // hypothesis yet the argmin moves off it.
    for (const auto& z : w.adversary_examples)
        CHECK(cls->label(w.preferred, z.instance) == z.label);
    VersionSpace after = w.state_space;
    for (const auto& z : w.adversary_examples) after &= cls->consistent_mask(z.instance, z.label);
    IndexSet mins = sigma.argmin_set(after, w.preferred);
    const bool stays = mins.is_singleton() && mins.contains(static_cast<std::size_t>(w.preferred));
    CHECK_FALSE(stays);
    std::vector<int> got;
    for (std::size_t i : mins.elements()) got.push_back(static_cast<int>(i));
    CHECK(got == w.argmin_after);
}
