#include <gtest/gtest.h>

#include "fixtures.h"
#include "fscsynth/fsc/from_instantiation.h"
#include "fscsynth/fsc/fsc.h"
#include "fscsynth/models/errors.h"
#include "fscsynth/models/instantiate.h"
#include "fscsynth/transforms/induced.h"
#include "generators.h"

namespace fscsynth {
namespace {

using testing::Rng;

Rational entry(Mc<Rational> const& mc, StateId s, StateId t) {
    for (auto const& tr : mc.rows[s]) {
        if (tr.target == t) return tr.value;
    }
    return 0;
}

Fsc memorylessFsc(Pomdp const& m, std::vector<std::vector<std::pair<std::string, Rational>>> const& choices) {
    Fsc fsc(1, m.numObservations);
    for (ObservationId z = 0; z < m.numObservations; ++z) {
        for (auto const& [label, p] : choices[z]) {
            auto a = static_cast<ActionId>(
                std::find(m.mdp.actions.begin(), m.mdp.actions.end(), label) - m.mdp.actions.begin());
            fsc.actionMap[0][z].emplace_back(a, p);
            fsc.memoryUpdate[0][z][a] = {{0, Rational(1)}};
        }
        canonicalizeDistribution(fsc.actionMap[0][z]);
    }
    return fsc;
}

TEST(InducedMcTest, UniformTwoNodeControllerOnFragment) {
    auto m = testing::fragmentPomdp();
    auto induced = inducedMc(m, uniformFsc(m, 2));
    auto from = induced.find(0, 0);
    auto to = induced.find(1, 0);
    ASSERT_TRUE(from && to);
    EXPECT_EQ(entry(induced.mc, *from, *to), Rational(3, 20));
    EXPECT_EQ(induced.mc.initial, *from);
}

TEST(InducedMcTest, DiracMemorylessControllerOnFullyObservableModel) {
    PomdpBuilder b;
    b.numStates = 3;
    b.numObservations = 3;
    b.observation = {0, 1, 2};
    b.edges = {{0, "a", 1, 1}, {0, "b", 2, 1}, {1, "a", 1, 1}, {2, "a", 2, 1}};
    b.goal = {1};
    auto m = b.build();
    auto fsc = memorylessFsc(m, {{{"b", 1}}, {{"a", 1}}, {{"a", 1}}});
    auto induced = inducedMc(m, fsc);
    ASSERT_EQ(induced.mc.numStates(), 2u);
    EXPECT_EQ(induced.productIndex, (std::vector<std::uint64_t>{0, 2}));
    EXPECT_EQ(entry(induced.mc, 0, 1), 1);
    EXPECT_TRUE(induced.mc.goal.empty());
}

TEST(InducedMcTest, UnsupportedActionIsRejected) {
    auto m = testing::threeActionPomdp();
    Fsc fsc = uniformFsc(m, 1);
    // Action a1 is not available at observation 1.
    fsc.actionMap[0][1] = {{0, Rational(1)}};
    fsc.memoryUpdate[0][1][0] = {{0, Rational(1)}};
    EXPECT_THROW(inducedMc(m, fsc), ModelError);
    EXPECT_THROW(fsc.validate(m), ModelError);
}

TEST(InducedMcTest, RowsAreStochasticAndFragmentIsBounded) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        auto m = testing::randomPomdp(rng);
        std::size_t k = testing::uniform(rng, 1, 3);
        auto induced = inducedMc(m, uniformFsc(m, k));
        EXPECT_LE(induced.mc.numStates(), m.numStates() * k);
        for (auto const& row : induced.mc.rows) {
            Rational sum = 0;
            for (auto const& t : row) sum += t.value;
            EXPECT_EQ(sum, 1);
        }
    }
}

TEST(FscFromInstantiationTest, UniformInstantiationGivesUniformController) {
    auto m = testing::fragmentPomdp();
    auto induced = inducedPmc(m, 2);
    Instantiation u(induced.pmc.parameters.size());
    for (ParamId id = 0; id < induced.info.size(); ++id) {
        auto const& info = induced.info[id];
        std::size_t choices = info.role == ParamRole::P ? induced.actions[info.observation].size() : 2;
        u.set(id, Rational(1, choices));
    }
    EXPECT_EQ(fscFromInstantiation(m, induced, u), uniformFsc(m, 2));
}

TEST(FscFromInstantiationTest, SingleActionModelHasTrivialController) {
    auto m = testing::cyclePomdp();
    auto induced = inducedPmc(m, 1);
    EXPECT_EQ(induced.pmc.parameters.size(), 0u);
    auto fsc = fscFromInstantiation(m, induced, Instantiation());
    EXPECT_EQ(fsc, uniformFsc(m, 1));
}

TEST(FscFromInstantiationTest, NotWellDefinedIsRejected) {
    auto m = testing::fragmentPomdp();
    auto induced = inducedPmc(m, 1);
    Instantiation u(induced.pmc.parameters.size());
    for (ParamId id = 0; id < u.size(); ++id) u.set(id, Rational(3, 2));
    EXPECT_THROW(fscFromInstantiation(m, induced, u), ModelError);
}

// The controller described by u induces exactly the instantiated pMC on the reachable fragment.
void expectCorrespondence(Pomdp const& m, InducedPmc const& induced, Instantiation const& u) {
    auto fsc = fscFromInstantiation(m, induced, u);
    auto product = inducedMc(m, fsc);
    auto applied = applyInstantiation(induced.pmc, u).mc;
    for (StateId i = 0; i < product.mc.numStates(); ++i) {
        StateId original = static_cast<StateId>(product.productIndex[i]);
        std::vector<Transition<Rational>> mapped;
        for (auto const& t : product.mc.rows[i]) {
            mapped.push_back({static_cast<StateId>(product.productIndex[t.target]), t.value});
        }
        ASSERT_EQ(mapped, applied.rows[original]);
        EXPECT_EQ(contains(product.mc.goal, i), contains(applied.goal, original));
        EXPECT_EQ(contains(product.mc.bad, i), contains(applied.bad, original));
    }
    EXPECT_EQ(product.productIndex[product.mc.initial], applied.initial);
}

TEST(FscFromInstantiationTest, SmallModelCorrespondsEdgeForEdge) {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        auto m = testing::randomPomdp(rng, {.maxStates = 3, .maxActions = 2, .maxObservations = 2});
        auto induced = inducedPmc(m, 2);
        expectCorrespondence(m, induced, testing::randomInstantiation(induced.pmc, rng, testing::uniform(rng, 0, 1) == 1));
    }
}

TEST(FscFromInstantiationTest, CorrespondenceOnRandomTriples) {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        auto m = testing::randomPomdp(rng, {.withRewards = true});
        std::size_t k = testing::uniform(rng, 1, 3);
        auto topology = testing::uniform(rng, 0, 1) ? Topology::Full : Topology::Counter;
        auto induced = inducedPmc(m, k, topology);
        auto u = testing::randomInstantiation(induced.pmc, rng, testing::uniform(rng, 0, 1) == 1);
        expectCorrespondence(m, induced, u);
    }
}

TEST(FscFromInstantiationTest, OtherVariantsCorrespond) {
    Rng rng(19);
    for (int i = 0; i < 50; ++i) {
        auto m = testing::randomPomdp(rng);
        std::size_t k = testing::uniform(rng, 1, 3);
        for (auto variant : {Variant::Substituted, Variant::ActionRestricted}) {
            auto induced = inducedPmc(m, k, Topology::Full, variant);
            expectCorrespondence(m, induced, testing::randomInstantiation(induced.pmc, rng, true));
        }
    }
}

TEST(FscFromInstantiationTest, InstantiationFromControllerInvertsInteriorPoints) {
    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        auto m = testing::randomPomdp(rng);
        std::size_t k = testing::uniform(rng, 1, 3);
        for (auto variant : {Variant::Standard, Variant::Substituted, Variant::ActionRestricted}) {
            auto induced = inducedPmc(m, k, Topology::Full, variant);
            auto u = testing::randomInstantiation(induced.pmc, rng, true);
            EXPECT_EQ(instantiationFromFsc(m, induced, fscFromInstantiation(m, induced, u)), u);
        }
    }
}

TEST(CounterTopologyTest, ProductMovesOnlyToSameOrNextNode) {
    Rng rng(29);
    for (int i = 0; i < 50; ++i) {
        auto m = testing::randomPomdp(rng);
        std::size_t k = testing::uniform(rng, 2, 4);
        auto induced = inducedPmc(m, k, Topology::Counter);
        auto fsc = fscFromInstantiation(m, induced, testing::randomInstantiation(induced.pmc, rng, true));
        EXPECT_TRUE(fsc.respectsCounter());
        auto product = inducedMc(m, fsc);
        for (StateId s = 0; s < product.mc.numStates(); ++s) {
            NodeId n = product.product(s).second;
            for (auto const& t : product.mc.rows[s]) {
                NodeId next = product.product(t.target).second;
                EXPECT_TRUE(next == n || next == n + 1);
            }
        }
    }
}

TEST(FscFormatTest, RoundTripsRandomControllers) {
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        auto m = testing::randomPomdp(rng);
        auto induced = inducedPmc(m, testing::uniform(rng, 1, 3));
        auto fsc = fscFromInstantiation(m, induced, testing::randomInstantiation(induced.pmc, rng, false));
        EXPECT_EQ(parseFsc(writeFsc(fsc, m), m), fsc);
    }
}

TEST(FscFormatTest, ErrorsCarryPositions) {
    auto m = testing::fragmentPomdp();
    try {
        parseFsc("fsc\nnodes 2\nact 0 0 a1:1/2 zz:1/2\n", m);
        FAIL();
    } catch (ParseError const& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 16u);
    }
    EXPECT_THROW(parseFsc("fsc\nnodes 1\nact 0 0 a1:1/2\nupd 0 0 a1 0:1\n", m), ModelError);
}

TEST(SimulationTest, GoalAtInitialStateAlwaysReaches) {
    auto m = testing::loopOrLeavePomdp();
    m.mdp.initial = 1;
    auto result = simulate(m, uniformFsc(m, 1), {.episodes = 100, .seed = 3});
    EXPECT_EQ(result.frequency, 1.0);
}

TEST(SimulationTest, NeverLeavingNeverReaches) {
    auto m = testing::loopOrLeavePomdp();
    auto fsc = memorylessFsc(m, {{{"a2", 1}}});
    auto result = simulate(m, fsc, {.episodes = 200, .horizon = 50, .seed = 1});
    EXPECT_EQ(result.reached, 0u);
    EXPECT_EQ(result.truncated, 200u);
}

TEST(SimulationTest, ResultDoesNotDependOnThreadCount) {
    auto m = testing::randomizationPomdp();
    auto fsc = uniformFsc(m, 2);
    auto one = simulate(m, fsc, {.episodes = 5000, .seed = 42, .threads = 1});
    auto four = simulate(m, fsc, {.episodes = 5000, .seed = 42, .threads = 4});
    EXPECT_EQ(one.reached, four.reached);
    EXPECT_EQ(one.meanReward, four.meanReward);
}

TEST(SimulationTest, AgreesWithMixedStrategyValue) {
    // Mixing l and r evenly at the ambiguous observation reaches the goal with probability 2/3.
    auto m = testing::randomizationPomdp();
    auto fsc = memorylessFsc(m, {{{"go", 1}}, {{"l", Rational(1, 2)}, {"r", Rational(1, 2)}}});
    auto result = simulate(m, fsc, {.episodes = 100000, .seed = 7});
    EXPECT_NEAR(result.frequency, 2.0 / 3.0, 3 * result.standardError);
}

TEST(SimulationTest, MeanRewardOfCycle) {
    // Every episode pays 1 + 2 on its way to the goal.
    auto m = testing::cyclePomdp();
    auto result = simulate(m, uniformFsc(m, 1), {.episodes = 50000, .seed = 9});
    EXPECT_EQ(result.frequency, 1.0);
    EXPECT_DOUBLE_EQ(result.meanReward, 3.0);
}

}  // namespace
}  // namespace fscsynth
