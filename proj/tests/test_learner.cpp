#include <doctest.h>

#include "teachdim/learner.hpp"
#include "fixtures.hpp"

using namespace teachdim;

TEST_CASE("learner_step follows the hamming preference") {
    auto cls = warmuth_class();
    auto sigma = fixtures::warmuth_local(cls);

    LearnerState state = initial_state(*cls, 0);  // h1
    auto [after_x3, cands1] = learner_step(*cls, sigma, state, {2, 1},
                                           TieMode::kAdversarialAgainstTarget, 2);
    CHECK(after_x3.current == 1);  // h2 at distance 2
    CHECK(cands1.is_singleton());

    auto [after_x4, cands2] = learner_step(*cls, sigma, after_x3, {3, 1},
                                           TieMode::kAdversarialAgainstTarget, 2);
    CHECK(after_x4.current == 2);  // h3, the published sequence endpoint
    CHECK(after_x4.space.elements() == std::vector<std::size_t>{2, 7});

    // Constant sigma: the candidate set is the whole reduced space.
    auto sc = fixtures::warmuth_const(cls);
    auto [_, cands3] = learner_step(*cls, sc, state, {0, 1}, TieMode::kLowestIndex);
    CHECK(cands3 == version_space(*cls, {{0, 1}}));

    // An example wiping out the space is rejected.
    LearnerState narrow = after_x4;
    CHECK_THROWS_AS(learner_step(*cls, sigma, narrow, {0, 1}, TieMode::kLowestIndex),
                    InputError);
}

TEST_CASE("run_protocol replays the published sequences") {
    auto cls = warmuth_class();

    // lvs teaches h9 from h1 with the single example x1 (label 0).
    auto slvs = fixtures::warmuth_lvs(cls);
    Trajectory t = run_protocol(*cls, slvs, 0, 8, {{0, 0}}, TieMode::kAdversarialAgainstTarget);
    CHECK(t.terminated);
    CHECK(t.steps_used == 1);

    // Teaching the initial hypothesis costs nothing.
    Trajectory t0 = run_protocol(*cls, slvs, 0, 0, {}, TieMode::kAdversarialAgainstTarget);
    CHECK(t0.terminated);
    CHECK(t0.steps_used == 0);

    // Constant sigma, target h1, sequence (x1,x2,x4) labeled by h1.
    auto sc = fixtures::warmuth_const(cls);
    Trajectory t1 = run_protocol(*cls, sc, 1, 0, {{0, 1}, {1, 1}, {3, 0}},
                                 TieMode::kAdversarialAgainstTarget);
    CHECK(t1.terminated);
    CHECK(t1.steps_used == 3);

    // local (hamming) teaches h3 from h1 via (x3, x4).
    auto sl = fixtures::warmuth_local(cls);
    Trajectory t2 = run_protocol(*cls, sl, 0, 2, {{2, 1}, {3, 1}},
                                 TieMode::kAdversarialAgainstTarget);
    CHECK(t2.terminated);
    CHECK(t2.steps_used == 2);

    // Lying teachers are rejected: h3 labels x1 as 0.
    CHECK_THROWS_AS(run_protocol(*cls, sl, 0, 2, {{0, 1}}, TieMode::kLowestIndex), InputError);
}

TEST_CASE("trajectory dump format is stable") {
    auto cls = warmuth_class();
    auto sl = fixtures::warmuth_local(cls);
    Trajectory t = run_protocol(*cls, sl, 0, 2, {{2, 1}, {3, 1}},
                                TieMode::kAdversarialAgainstTarget);
    CHECK(format_trajectory(*cls, t) ==
          "t=1 z=(x3,1) H=5 candidates={h2} chosen=h2\n"
          "t=2 z=(x4,1) H=2 candidates={h3} chosen=h3\n"
          "terminated steps=2\n");
}
