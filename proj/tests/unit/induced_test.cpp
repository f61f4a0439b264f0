#include <gtest/gtest.h>

#include "fixtures.h"
#include "fscsynth/fsc/from_instantiation.h"
#include "fscsynth/models/expression.h"
#include "fscsynth/models/instantiate.h"
#include "fscsynth/transforms/induced.h"
#include "generators.h"

namespace fscsynth {
namespace {

using testing::Rng;

Polynomial poly(InducedPmc const& induced, std::string const& text) {
    ParameterTable names = induced.pmc.parameters;
    return parsePolynomial(text, names);
}

TEST(InducedPmcTest, ThreeActionModelWithOneNode) {
    auto m = testing::threeActionPomdp();
    auto induced = inducedPmc(m, 1);
    auto expected = testing::threeActionPmc();
    ASSERT_EQ(induced.pmc.parameters.size(), 3u);
    EXPECT_EQ(induced.pmc.rows, expected.rows);
    EXPECT_EQ(induced.pmc.effectiveGroups(), expected.effectiveGroups());
    EXPECT_EQ(induced.pmc.entry(0, 1), poly(induced, "p_z0_n0_a1"));
    EXPECT_EQ(induced.pmc.entry(0, 3), poly(induced, "0.5*p_z0_n0_a2 + 1 - p_z0_n0_a1 - p_z0_n0_a2"));
    EXPECT_EQ(induced.pmc.entry(1, 0), poly(induced, "0.5*p_z1_n0_a2"));
}

TEST(InducedPmcTest, FragmentWithTwoNodesHasEightTerms) {
    auto m = testing::fragmentPomdp();
    auto induced = inducedPmc(m, 2);
    StateId source = induced.productState(0, 0);
    EXPECT_EQ(induced.pmc.rows[source].size(), 8u);
    auto at = [&](StateId s, NodeId n) { return induced.pmc.entry(source, induced.productState(s, n)); };
    EXPECT_EQ(at(1, 0), poly(induced, "0.6*p_z0_n0_a1*q_z0_n0_a1_m0"));
    EXPECT_EQ(at(1, 1), poly(induced, "0.6*p_z0_n0_a1*(1-q_z0_n0_a1_m0)"));
    EXPECT_EQ(at(2, 0), poly(induced, "0.4*p_z0_n0_a1*q_z0_n0_a1_m0"));
    EXPECT_EQ(at(3, 0), poly(induced, "0.7*(1-p_z0_n0_a1)*q_z0_n0_a2_m0"));
    EXPECT_EQ(at(4, 1), poly(induced, "0.3*(1-p_z0_n0_a1)*(1-q_z0_n0_a2_m0)"));
}

TEST(InducedPmcTest, SingleActionSingleObservationHasOnlyMemoryParameters) {
    PomdpBuilder b;
    b.numStates = 2;
    b.numObservations = 1;
    b.observation = {0, 0};
    b.edges = {{0, "a", 1, Rational(1, 2)}, {0, "a", 0, Rational(1, 2)}, {1, "a", 1, 1}};
    b.goal = {1};
    auto m = b.build();
    EXPECT_EQ(inducedPmc(m, 1).pmc.parameters.size(), 0u);
    // With more nodes only the memory update remains free.
    for (std::size_t k = 1; k <= 3; ++k) {
        auto induced = inducedPmc(m, k);
        EXPECT_EQ(induced.pmc.parameters.size(), k * (k - 1));
        for (auto const& info : induced.info) EXPECT_EQ(info.role, ParamRole::Q);
        EXPECT_EQ(induced.pmc.numStates(), 2 * k);
        EXPECT_EQ(induced.pmc.entry(induced.productState(1, 0), induced.productState(1, k - 1)),
                  k == 1 ? Polynomial(1) : Polynomial(1) - poly(induced, "q_z0_n0_a_m0") -
                                               (k == 3 ? poly(induced, "q_z0_n0_a_m1") : Polynomial()));
    }
}

TEST(ParamCountTest, SmallExamples) {
    PomdpBuilder b;
    b.numStates = 2;
    b.numObservations = 2;
    b.observation = {0, 1};
    b.edges = {{0, "a", 1, 1}, {0, "b", 0, 1}, {1, "a", 1, 1}, {1, "b", 0, 1}};
    auto m = b.build();
    EXPECT_EQ(paramCount(m, 1), 2u);
    EXPECT_EQ(paramCount(m, 2), 12u);
    EXPECT_EQ(paramCount(testing::cyclePomdp(), 1), 0u);
}

TEST(ParamCountTest, MatchesTableSizeOnGeneratorGrid) {
    Rng rng(37);
    for (std::size_t states = 1; states <= 6; ++states) {
        for (std::size_t obs = 1; obs <= 3; ++obs) {
            for (int rep = 0; rep < 5; ++rep) {
                auto m = testing::randomPomdp(rng, {.maxStates = std::max<std::size_t>(states, 2), .maxObservations = obs});
                for (std::size_t k = 1; k <= 3; ++k) {
                    EXPECT_EQ(inducedPmc(m, k).pmc.parameters.size(), paramCount(m, k));
                    std::size_t restricted = 0;
                    for (ObservationId z = 0; z < m.numObservations; ++z) {
                        std::size_t a = m.actionsOf(z).size();
                        if (a > 0) restricted += k * (a - 1) + k * (k - 1);
                    }
                    EXPECT_EQ(inducedPmc(m, k, Topology::Full, Variant::ActionRestricted).pmc.parameters.size(),
                              restricted);
                }
            }
        }
    }
}

TEST(InducedPmcTest, RowsSumToOneSymbolically) {
    Rng rng(41);
    for (int i = 0; i < 60; ++i) {
        auto m = testing::randomPomdp(rng, {.withRewards = true});
        std::size_t k = testing::uniform(rng, 1, 3);
        for (auto topology : {Topology::Full, Topology::Counter}) {
            for (auto variant :
                 {Variant::Standard, Variant::Substituted, Variant::ActionRestricted, Variant::NextObservation}) {
                auto induced = inducedPmc(m, k, topology, variant);
                EXPECT_TRUE(induced.pmc.rowsSumToOne());
                EXPECT_NO_THROW(induced.pmc.validate());
            }
        }
    }
}

TEST(SubstitutedPmcTest, FragmentMatchesSubstitutedColumn) {
    auto m = testing::fragmentPomdp();
    auto induced = inducedPmc(m, 2, Topology::Full, Variant::Substituted);
    StateId source = induced.productState(0, 0);
    auto at = [&](StateId s, NodeId n) { return induced.pmc.entry(source, induced.productState(s, n)); };
    EXPECT_EQ(at(1, 0), poly(induced, "0.6*r_z0_n0_a1_m0"));
    EXPECT_EQ(at(1, 1), poly(induced, "0.6*r_z0_n0_a1_m1"));
    EXPECT_EQ(at(3, 0), poly(induced, "0.7*r_z0_n0_a2_m0"));
    EXPECT_EQ(at(3, 1), poly(induced, "0.7*(1 - r_z0_n0_a1_m0 - r_z0_n0_a1_m1 - r_z0_n0_a2_m0)"));
    for (auto const& t : induced.pmc.rows[source]) EXPECT_LE(t.value.totalDegree(), 1u);
}

TEST(SubstitutedPmcTest, SingleNodeMatchesStandardUpToRenaming) {
    Rng rng(43);
    for (int i = 0; i < 30; ++i) {
        auto m = testing::randomPomdp(rng);
        auto standard = inducedPmc(m, 1);
        auto substituted = inducedPmc(m, 1, Topology::Full, Variant::Substituted);
        EXPECT_EQ(standard.pmc.rows, substituted.pmc.rows);
    }
}

TEST(SubstitutedPmcTest, ValuesAgreeUnderProductMapping) {
    Rng rng(47);
    for (int i = 0; i < 50; ++i) {
        auto m = testing::randomPomdp(rng, {.withRewards = true});
        std::size_t k = testing::uniform(rng, 1, 3);
        auto standard = inducedPmc(m, k);
        auto substituted = inducedPmc(m, k, Topology::Full, Variant::Substituted);
        auto u = testing::randomInstantiation(standard.pmc, rng, testing::uniform(rng, 0, 1) == 1);
        auto r = substituteInstantiation(standard, substituted, u);
        auto a = applyInstantiation(standard.pmc, u);
        auto b = applyInstantiation(substituted.pmc, r);
        EXPECT_TRUE(b.wellDefined);
        EXPECT_EQ(a.mc.rows, b.mc.rows);
        EXPECT_EQ(a.mc.rewards, b.mc.rewards);
    }
}

TEST(ActionRestrictedPmcTest, FragmentSharesMemoryParameter) {
    auto m = testing::fragmentPomdp();
    auto induced = inducedPmc(m, 2, Topology::Full, Variant::ActionRestricted);
    StateId source = induced.productState(0, 0);
    auto at = [&](StateId s, NodeId n) { return induced.pmc.entry(source, induced.productState(s, n)); };
    EXPECT_EQ(at(1, 0), poly(induced, "0.6*p_z0_n0_a1*q_z0_n0_m0"));
    EXPECT_EQ(at(3, 0), poly(induced, "0.7*(1-p_z0_n0_a1)*q_z0_n0_m0"));
    EXPECT_EQ(at(4, 1), poly(induced, "0.3*(1-p_z0_n0_a1)*(1-q_z0_n0_m0)"));
}

TEST(ActionRestrictedPmcTest, SingleActionMatchesStandardUpToRenaming) {
    auto m = testing::cyclePomdp();
    for (std::size_t k = 1; k <= 3; ++k) {
        EXPECT_EQ(inducedPmc(m, k).pmc.rows, inducedPmc(m, k, Topology::Full, Variant::ActionRestricted).pmc.rows);
    }
}

TEST(NextObservationPmcTest, FragmentKeysMemoryBySuccessorObservation) {
    auto m = testing::fragmentPomdp();
    auto induced = inducedPmc(m, 2, Topology::Full, Variant::NextObservation);
    StateId source = induced.productState(0, 0);
    auto at = [&](StateId s, NodeId n) { return induced.pmc.entry(source, induced.productState(s, n)); };
    // s2 carries z1, s3 carries z0.
    EXPECT_EQ(at(1, 0), poly(induced, "0.6*p_z0_n0_a1*q_z1_n0_a1_m0"));
    EXPECT_EQ(at(2, 0), poly(induced, "0.4*p_z0_n0_a1*q_z0_n0_a1_m0"));
    EXPECT_EQ(at(3, 1), poly(induced, "0.7*(1-p_z0_n0_a1)*(1-q_z1_n0_a2_m0)"));
}

TEST(NextObservationPmcTest, SingleObservationCoincidesWithStandard) {
    Rng rng(53);
    for (int i = 0; i < 30; ++i) {
        auto m = testing::randomPomdp(rng, {.maxObservations = 1});
        std::size_t k = testing::uniform(rng, 1, 3);
        auto standard = inducedPmc(m, k);
        auto next = inducedPmc(m, k, Topology::Full, Variant::NextObservation);
        ASSERT_EQ(standard.pmc.parameters.size(), next.pmc.parameters.size());
        // Parameters are declared in the same order, so ids coincide.
        EXPECT_EQ(standard.pmc.rows, next.pmc.rows);
    }
}

TEST(CounterTopologyTest, PinsNonAdjacentMemoryMoves) {
    auto m = testing::fragmentPomdp();
    auto induced = inducedPmc(m, 3, Topology::Counter);
    for (StateId s = 0; s < induced.pmc.numStates(); ++s) {
        NodeId n = s % 3;
        for (auto const& t : induced.pmc.rows[s]) {
            NodeId next = t.target % 3;
            EXPECT_TRUE(next == n || next == n + 1);
        }
    }
    EXPECT_FALSE(induced.find(ParamRole::Q, 0, 2, 0, 2).has_value());
}

}  // namespace
}  // namespace fscsynth
