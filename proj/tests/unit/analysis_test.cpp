#include <gtest/gtest.h>

#include <cmath>

#include "../support/fixtures.h"
#include "../support/generators.h"
#include "fscsynth/analysis/elimination.h"
#include "fscsynth/analysis/mc_check.h"
#include "fscsynth/analysis/mdp_optimal.h"
#include "fscsynth/analysis/pmc_checker.h"
#include "fscsynth/analysis/region.h"
#include "fscsynth/fsc/from_instantiation.h"
#include "fscsynth/models/expression.h"
#include "fscsynth/models/instantiate.h"
#include "fscsynth/models/io.h"
#include "fscsynth/transforms/induced.h"
#include "fscsynth/transforms/normalize.h"

namespace fscsynth {
namespace {

using testing::Rng;

Rational q(char const* text) { return parseRational(text); }

Value<Rational> exactValue(Pmc const& pmc, Instantiation const& u, Specification const& spec) {
    auto inst = applyInstantiation(pmc, u);
    return checkMc(inst.mc, spec);
}

Specification reach() { return parseSpecification("P> 0.5 [!bad U goal]"); }

Instantiation single(ParamId numParams, ParamId p, Rational const& v) {
    Instantiation u(numParams);
    u.set(p, v);
    return u;
}

// ---- Markov chains -------------------------------------------------------

TEST(McCheck, GeometricSeriesReachesGoalSurely) {
    Mc<Rational> mc;
    mc.rows = {{{0, q("0.7")}, {1, q("0.3")}}, {{1, 1}}};
    mc.goal = {1};
    EXPECT_EQ(reachAvoidProb(mc), 1);
    EXPECT_DOUBLE_EQ(reachAvoidProb(toDoubleMc(mc)), 1.0);
}

TEST(McCheck, InitialGoalGivesOneAndZeroReward) {
    Mc<Rational> mc;
    mc.rows = {{{0, 1}}};
    mc.goal = {0};
    mc.rewards = {5};
    EXPECT_EQ(reachAvoidProb(mc), 1);
    EXPECT_EQ(expectedReward(mc), (Value<Rational>{0, false}));
}

TEST(McCheck, ExpectedRewardOfChainAndLoop) {
    Mc<Rational> chain;
    chain.rows = {{{1, 1}}, {{1, 1}}};
    chain.goal = {1};
    chain.rewards = {3, 0};
    EXPECT_EQ(expectedReward(chain), (Value<Rational>{3, false}));

    Mc<Rational> loop;
    loop.rows = {{{0, q("0.5")}, {1, q("0.5")}}, {{1, 1}}};
    loop.goal = {1};
    loop.rewards = {1, 0};
    EXPECT_EQ(expectedReward(loop), (Value<Rational>{2, false}));
    EXPECT_NEAR(expectedReward(toDoubleMc(loop)).value, 2.0, 1e-10);
}

TEST(McCheck, RewardIsInfiniteWhenGoalMayBeMissed) {
    Mc<Rational> mc;
    mc.rows = {{{1, q("0.5")}, {2, q("0.5")}}, {{1, 1}}, {{2, 1}}};
    mc.goal = {1};
    mc.rewards = {1, 0, 0};
    EXPECT_TRUE(expectedReward(mc).infinite);
}

TEST(McCheck, UnreachableGoalGivesZero) {
    Mc<Rational> mc;
    mc.rows = {{{0, 1}}, {{1, 1}}};
    mc.goal = {1};
    auto g = graphOf(mc);
    auto sets = qualitativeSets(g, mc.goal, {});
    EXPECT_EQ(sets.zero, (StateSet{0}));
    EXPECT_EQ(reachAvoidProb(mc), 0);
}

TEST(McCheck, FloatSolverAgreesWithExactSolve) {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        auto m = testing::randomPomdp(rng, {.withRewards = true});
        auto induced = inducedPmc(m, 2);
        auto u = testing::randomInstantiation(induced.pmc, rng);
        auto mc = applyInstantiation(induced.pmc, u).mc;
        auto exact = reachAvoidAll(mc);
        auto approx = reachAvoidAll(toDoubleMc(mc));
        for (std::size_t s = 0; s < exact.size(); ++s) EXPECT_NEAR(exact[s].get_d(), approx[s], 1e-8);
        auto exactReward = expectedRewardAll(mc);
        auto approxReward = expectedRewardAll(toDoubleMc(mc));
        for (std::size_t s = 0; s < exact.size(); ++s) {
            ASSERT_EQ(exactReward[s].infinite, approxReward[s].infinite);
            if (!exactReward[s].infinite) {
                EXPECT_NEAR(exactReward[s].value.get_d(), approxReward[s].value, 1e-8 * (1 + approxReward[s].value));
            }
        }
    }
}

// ---- pMC checker ---------------------------------------------------------

TEST(PmcChecker, LoopOrLeaveDependsOnlyOnWhetherLeavingIsPossible) {
    auto induced = inducedPmc(testing::loopOrLeavePomdp(), 1);
    auto p = induced.pmc.parameters.find("p_z0_n0_a1");
    ASSERT_TRUE(p.has_value());
    PmcChecker checker(induced.pmc, reach());
    std::size_t n = induced.pmc.parameters.size();
    EXPECT_EQ(checker.check(single(n, *p, 0)).value, 0);
    EXPECT_EQ(checker.recomputations(), 1u);
    for (char const* c : {"0.001", "0.5", "0.999"}) {
        EXPECT_EQ(checker.check(single(n, *p, q(c))).value, 1) << c;
    }
    std::vector<double> tiny{1e-9};
    EXPECT_DOUBLE_EQ(checker.check(std::span<double const>(tiny)).value, 1.0);
    EXPECT_EQ(checker.recomputations(), 1u);
    // Leaving surely zeroes the looping action, which is a boundary point as well.
    EXPECT_EQ(checker.check(single(n, *p, 1)).value, 1);
    EXPECT_EQ(checker.recomputations(), 2u);
}

TEST(PmcChecker, MatchesDirectCheckOnRandomModels) {
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        auto m = testing::randomPomdp(rng, {.withRewards = true});
        auto induced = inducedPmc(m, 1 + i % 2);
        for (auto const* text : {"P> 0.5 [!bad U goal]", "P>= 0.5 [F goal]", "Emin<= 3 [F goal]"}) {
            auto spec = parseSpecification(text);
            PmcChecker checker(induced.pmc, spec);
            for (int j = 0; j < 5; ++j) {
                auto u = testing::randomInstantiation(induced.pmc, rng, j % 2 == 0);
                auto expected = exactValue(induced.pmc, u, spec);
                EXPECT_EQ(checker.check(u), expected) << text;
                auto approx = checker.check(std::span<double const>(u.toDouble()));
                ASSERT_EQ(approx.infinite, expected.infinite);
                if (!expected.infinite) EXPECT_NEAR(approx.value, expected.value.get_d(), 1e-8 * (1 + approx.value));
            }
        }
    }
}

// ---- MDP optimum -----------------------------------------------------------

TEST(MdpOptimal, UnderlyingMdpOfThreeActionModelReachesGoalSurely) {
    auto m = testing::threeActionPomdp();
    auto opt = mdpOptimal(m.mdp, reach());
    EXPECT_EQ(opt.value, (Value<Rational>{1, false}));
    EXPECT_TRUE(opt.strategy[0].has_value());
}

TEST(MdpOptimal, SingleActionMdpMatchesItsChain) {
    auto m = testing::cyclePomdp();
    auto induced = inducedPmc(m, 1);
    Instantiation none(0);
    for (auto const* text : {"P> 0.5 [F goal]", "Emin<= 3 [F goal]", "Emax>= 3 [F goal]"}) {
        auto spec = parseSpecification(text);
        EXPECT_EQ(mdpOptimal(m.mdp, spec).value, exactValue(induced.pmc, none, spec)) << text;
    }
}

TEST(MdpOptimal, DominatesEverySampledController) {
    Rng rng(17);
    for (int i = 0; i < 40; ++i) {
        auto m = testing::randomPomdp(rng, {.withRewards = true});
        for (auto const* text : {"P> 0.5 [!bad U goal]", "Emin<= 3 [F goal]", "Emax>= 3 [F goal]"}) {
            auto spec = parseSpecification(text);
            auto opt = mdpOptimal(m.mdp, spec).value;
            for (std::size_t k = 1; k <= 2; ++k) {
                auto induced = inducedPmc(m, k);
                for (int j = 0; j < 5; ++j) {
                    auto v = exactValue(induced.pmc, testing::randomInstantiation(induced.pmc, rng, j != 0), spec);
                    if (spec.searchDirection() == Direction::Maximize) {
                        EXPECT_TRUE(opt.infinite || (!v.infinite && v.value <= opt.value)) << text;
                    } else {
                        EXPECT_TRUE(v.infinite || (!opt.infinite && opt.value <= v.value)) << text;
                    }
                }
            }
        }
    }
}

TEST(MdpOptimal, NormalizationPreservesTheOptimum) {
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        auto m = testing::randomPomdp(rng, {.maxActions = 4, .withRewards = true});
        auto binary = makeBinary(m).pomdp;
        auto simple = makeSimple(binary).pomdp;
        for (auto const* text : {"P> 0.5 [!bad U goal]", "Emin<= 3 [F goal]"}) {
            auto spec = parseSpecification(text);
            auto expected = mdpOptimal(m.mdp, spec).value;
            EXPECT_EQ(mdpOptimal(binary.mdp, spec).value, expected) << text;
            EXPECT_EQ(mdpOptimal(simple.mdp, spec).value, expected) << text;
        }
    }
}

// ---- state elimination -----------------------------------------------------

TEST(StateElimination, ChainPmcClosedForm) {
    auto d = testing::chainPmc();
    auto f = stateEliminate(d, d.goal, d.bad);
    EXPECT_EQ(f.toString(&d.parameters), "(5 + 3*p)/10");
    auto expected = RationalFunction(parsePolynomial("0.5 + 0.3*p", d.parameters));
    EXPECT_TRUE(f.equivalent(expected));
}

TEST(StateElimination, ParameterFreeChainIsConstant) {
    auto m = testing::randomizationPomdp();
    auto induced = inducedPmc(m, 1);
    Instantiation u(induced.pmc.parameters.size());
    for (ParamId p = 0; p < u.size(); ++p) u.set(p, q("0.5"));
    auto fixed = applyInstantiation(induced.pmc, u).mc;
    Pmc constant;
    constant.rows.resize(fixed.numStates());
    for (StateId s = 0; s < fixed.numStates(); ++s) {
        for (auto const& t : fixed.rows[s]) constant.rows[s].push_back({t.target, Polynomial(t.value)});
    }
    constant.goal = fixed.goal;
    auto f = stateEliminate(constant, constant.goal, {});
    ASSERT_TRUE(f.isConstant());
    EXPECT_EQ(f.numerator().constantTerm() / f.denominator().constantTerm(), q("2/3"));
    EXPECT_EQ(q("2/3"), reachAvoidProb(fixed, false));
}

TEST(StateElimination, ThreeActionPmcReachesGoalSurelyOnTheInterior) {
    auto d = testing::threeActionPmc();
    auto f = stateEliminate(d, d.goal, d.bad);
    EXPECT_TRUE(f.equivalent(RationalFunction(Polynomial(1))));
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        auto u = testing::randomInstantiation(d, rng);
        EXPECT_EQ(exactValue(d, u, reach()).value, 1);
    }
}

TEST(StateElimination, AgreesWithExactCheckOnRandomSimplePmcs) {
    Rng rng(29);
    for (int i = 0; i < 30; ++i) {
        auto d = testing::randomSimplePmc(rng, 12, 4);
        auto f = stateEliminate(d, d.goal, d.bad);
        for (int j = 0; j < 50; ++j) {
            auto u = testing::randomInstantiation(d, rng);
            EXPECT_EQ(f.evaluate(u), exactValue(d, u, reach()).value);
        }
    }
}

TEST(StateElimination, AgreesWithExactCheckOnInducedPmcs) {
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        // Two memory nodes on five states give closed forms with 10^4+ terms; keep k = 2 small.
        bool twoNodes = i % 2 == 1;
        auto m = testing::randomPomdp(rng, {.maxStates = twoNodes ? 3u : 5u,
                                            .maxActions = 2,
                                            .maxObservations = twoNodes ? 2u : 3u,
                                            .withRewards = true});
        auto induced = inducedPmc(m, twoNodes ? 2 : 1);
        auto const& d = induced.pmc;
        for (auto const* text : {"P> 0.5 [!bad U goal]", "Emin<= 3 [F goal]"}) {
            auto spec = parseSpecification(text);
            auto f = closedForm(d, spec);
            for (int j = 0; j < 50; ++j) {
                auto u = testing::randomInstantiation(d, rng);
                auto v = exactValue(d, u, spec);
                ASSERT_EQ(v.infinite, f.infinite) << text;
                if (!v.infinite) EXPECT_EQ(f.value.evaluate(u), v.value) << text;
            }
        }
    }
}

TEST(StateElimination, OrderDoesNotChangeTheCanonicalResult) {
    Rng rng(37);
    for (int i = 0; i < 20; ++i) {
        auto m = testing::randomPomdp(rng, {.maxStates = 5, .maxActions = 2, .maxObservations = 3, .withRewards = true});
        auto d = inducedPmc(m, 1).pmc;
        for (auto const* text : {"P> 0.5 [!bad U goal]", "Emin<= 3 [F goal]"}) {
            auto spec = parseSpecification(text);
            auto degree = closedForm(d, spec, EliminationOrder::Degree);
            auto forward = closedForm(d, spec, EliminationOrder::Forward);
            auto reverse = closedForm(d, spec, EliminationOrder::Reverse);
            EXPECT_EQ(degree.infinite, forward.infinite);
            EXPECT_EQ(degree.value, forward.value) << text;
            EXPECT_EQ(degree.value, reverse.value) << text;
        }
    }
}

TEST(StateElimination, RewardClosedFormOfCycle) {
    auto induced = inducedPmc(testing::cyclePomdp(), 1);
    auto f = closedForm(induced.pmc, parseSpecification("Emin<= 3 [F goal]"));
    EXPECT_FALSE(f.infinite);
    EXPECT_EQ(f.value.toString(), "3");
}

// ---- region bounds and absence -------------------------------------------

Region box(Pmc const& d, char const* lo, char const* hi) {
    return Region{std::vector<Interval>(d.parameters.size(), Interval{q(lo), q(hi)})};
}

TEST(RegionBounds, ChainPmcIsExact) {
    auto d = testing::chainPmc();
    auto b = regionBounds(d, box(d, "0.1", "0.9"), reach());
    EXPECT_EQ(b.lower, (Value<Rational>{q("0.53"), false}));
    EXPECT_EQ(b.upper, (Value<Rational>{q("0.77"), false}));
}

TEST(RegionBounds, DegenerateRegionIsThePointValue) {
    auto d = testing::chainPmc();
    auto b = regionBounds(d, box(d, "0.3", "0.3"), reach());
    EXPECT_EQ(b.lower.value, q("0.59"));
    EXPECT_EQ(b.upper.value, q("0.59"));
}

TEST(RegionBounds, RejectsRegionsOutsideTheOpenUnitInterval) {
    auto d = testing::chainPmc();
    EXPECT_THROW(regionBounds(d, box(d, "0", "0.5"), reach()), std::invalid_argument);
    EXPECT_THROW(regionBounds(d, box(d, "0.5", "1"), reach()), std::invalid_argument);
    EXPECT_THROW(regionBounds(d, box(d, "0.6", "0.5"), reach()), std::invalid_argument);
    auto g = testing::threeActionPmc();
    EXPECT_THROW(regionBounds(g, box(g, "0.6", "0.7"), reach()), std::invalid_argument);
}

Region randomRegion(Pmc const& d, Rng& rng) {
    Region r;
    for (ParamId p = 0; p < d.parameters.size(); ++p) {
        Rational a = testing::randomOpenUnit(rng, 30), b = testing::randomOpenUnit(rng, 30);
        if (b < a) std::swap(a, b);
        r.bounds.push_back({a, b});
    }
    return r;
}

Instantiation sampleIn(Region const& r, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Instantiation u(r.bounds.size());
    for (ParamId p = 0; p < r.bounds.size(); ++p) {
        Rational t(unit(rng));
        u.set(p, r.bounds[p].lower + t * (r.bounds[p].upper - r.bounds[p].lower));
    }
    return u;
}

TEST(RegionBounds, ContainSampledValuesOfRandomSimplePmcs) {
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        auto d = testing::randomSimplePmc(rng, 12, 4);
        auto region = randomRegion(d, rng);
        auto b = regionBounds(d, region, reach());
        PmcChecker checker(d, reach());
        for (int j = 0; j < 1000; ++j) {
            auto v = checker.check(std::span<double const>(sampleIn(region, rng).toDouble())).value;
            EXPECT_GE(v, b.lower.value.get_d() - 1e-9);
            EXPECT_LE(v, b.upper.value.get_d() + 1e-9);
        }
    }
}

TEST(RegionBounds, ContainValuesOfInducedPmcs) {
    Rng rng(43);
    for (int i = 0; i < 20; ++i) {
        auto m = testing::randomPomdp(rng, {.maxStates = 6, .maxActions = 3, .withRewards = true});
        auto d = inducedPmc(m, 1).pmc;
        auto region = Region::uniform(d.parameters.size(), q("1/20"));
        for (auto const* text : {"P> 0.5 [!bad U goal]", "Emin<= 3 [F goal]"}) {
            auto spec = parseSpecification(text);
            auto b = regionBounds(d, region, spec);
            for (int j = 0; j < 50; ++j) {
                auto u = testing::randomInstantiation(d, rng);
                if (!region.contains(u)) continue;
                auto v = exactValue(d, u, spec);
                EXPECT_TRUE(b.upper.infinite || (!v.infinite && v.value <= b.upper.value)) << text;
                EXPECT_TRUE(v.infinite || (!b.lower.infinite && b.lower.value <= v.value)) << text;
            }
        }
    }
}

TEST(RegionBounds, ShrinkingNeverLoosens) {
    Rng rng(47);
    for (int i = 0; i < 30; ++i) {
        auto d = testing::randomSimplePmc(rng, 12, 4);
        auto outer = randomRegion(d, rng);
        Region inner = outer;
        for (auto& iv : inner.bounds) {
            Rational w = iv.upper - iv.lower;
            iv.lower += w / 4;
            iv.upper -= w / 3;
        }
        auto a = regionBounds(d, outer, reach());
        auto b = regionBounds(d, inner, reach());
        EXPECT_LE(a.lower.value, b.lower.value);
        EXPECT_GE(a.upper.value, b.upper.value);
    }
}

TEST(RegionFormat, RoundTrip) {
    auto d = testing::threeActionPmc();
    Region r{{{q("0.1"), q("0.2")}, {q("1/3"), q("0.5")}, {q("0.01"), q("0.99")}}};
    auto text = writeRegion(r, d.parameters);
    EXPECT_EQ(text, "p1 in [1/10, 1/5]\np2 in [1/3, 1/2]\nq in [1/100, 99/100]\n");
    auto back = parseRegion(text, d.parameters);
    EXPECT_EQ(back.bounds, r.bounds);
    EXPECT_THROW(parseRegion("p1 in [0.1, 0.2]\n", d.parameters), ParseError);
    EXPECT_THROW(parseRegion("x in [0.1, 0.2]\n", d.parameters), ParseError);
}

TEST(ProveAbsence, ChainPmcThresholdAboveTheBestValue) {
    auto d = testing::chainPmc();
    auto result = proveAbsence(d, parseSpecification("P> 0.8 [F goal]"), box(d, "0.01", "0.99"));
    EXPECT_TRUE(result.absent);
    EXPECT_EQ(result.bound, (Value<Rational>{q("0.797"), false}));
    EXPECT_EQ(result.regionsChecked, 1u);
}

TEST(ProveAbsence, SatisfiableThresholdIsInconclusive) {
    auto d = testing::chainPmc();
    auto result = proveAbsence(d, parseSpecification("P> 0.5 [F goal]"), box(d, "0.01", "0.99"), 4);
    EXPECT_FALSE(result.absent);
    EXPECT_GT(result.bound.value, q("0.5"));
}

TEST(ProveAbsence, ThresholdAboveTheMdpOptimum) {
    auto m = testing::binaryPomdp();
    auto opt = mdpOptimal(m.mdp, reach()).value.value;
    EXPECT_EQ(opt, q("0.8"));
    for (std::size_t k = 1; k <= 2; ++k) {
        auto d = inducedPmc(m, k, Topology::Full, k == 1 ? Variant::Standard : Variant::Substituted).pmc;
        auto spec = parseSpecification("P> 0.8 [!bad U goal]");
        auto result = proveAbsence(d, spec, Region::uniform(d.parameters.size(), q("0.01")));
        EXPECT_TRUE(result.absent);
    }
}

TEST(ProveAbsence, NeverContradictsSampling) {
    Rng rng(53);
    for (int i = 0; i < 20; ++i) {
        auto d = testing::randomSimplePmc(rng, 10, 3);
        auto region = randomRegion(d, rng);
        PmcChecker checker(d, reach());
        auto mid = checker.check(std::span<double const>(sampleIn(region, rng).toDouble())).value;
        auto spec = parseSpecification("P> " + std::to_string(std::min(0.99, mid + 0.05)) + " [!bad U goal]");
        auto result = proveAbsence(d, spec, region, 3);
        if (!result.absent) continue;
        PmcChecker sampler(d, spec);
        for (int j = 0; j < 10000; ++j) {
            auto v = sampler.check(std::span<double const>(sampleIn(region, rng).toDouble()));
            EXPECT_FALSE(satisfies(spec, v));
        }
    }
}

// For a boundary point with value v > lambda, some projection into [eps, 1-eps]
// keeps the value above lambda.
TEST(EpsilonRestriction, BoundarySolutionsSurviveProjection) {
    Rng rng(59);
    int tested = 0;
    while (tested < 20) {
        auto d = testing::randomSimplePmc(rng, 10, 3);
        Instantiation u(d.parameters.size());
        for (ParamId p = 0; p < u.size(); ++p) u.set(p, testing::uniform(rng, 0, 2) == 0 ? Rational(0) : Rational(1));
        auto v = exactValue(d, u, reach()).value;
        if (v == 0) continue;
        ++tested;
        Rational lambda = v - q("1/1000");
        Rational eps = q("1/4");
        bool found = false;
        for (int step = 0; step < 60 && !found; ++step, eps /= 2) {
            Instantiation projected(u.size());
            for (ParamId p = 0; p < u.size(); ++p) {
                projected.set(p, std::clamp<Rational>(u.at(p), eps, Rational(1 - eps)));
            }
            found = exactValue(d, projected, reach()).value > lambda;
        }
        EXPECT_TRUE(found);
    }
}

// ---- next-observation controllers via intermediate states ------------------

TEST(IntermediateStates, RealizeNextObservationControllers) {
    Rng rng(61);
    for (int i = 0; i < 30; ++i) {
        auto m = testing::randomPomdp(rng, {.maxStates = 5, .maxActions = 2, .maxObservations = 3});
        std::size_t k = 2;
        auto next = inducedPmc(m, k, Topology::Full, Variant::NextObservation);
        auto u = testing::randomInstantiation(next.pmc, rng);
        auto norm = insertIntermediateStates(m);
        auto standard = inducedPmc(norm.pomdp, k);

        auto originalAction = [&](ActionId a) {
            auto const& labels = m.mdp.actions;
            auto it = std::find(labels.begin(), labels.end(), norm.pomdp.mdp.actions[a]);
            return static_cast<ActionId>(it - labels.begin());
        };
        Instantiation w(standard.pmc.parameters.size());
        for (auto const& [info, id] : standard.index) {
            auto const& origin = norm.observations[info.observation];
            if (origin.tag.empty()) {
                if (info.role == ParamRole::P) {
                    auto src = next.find(ParamRole::P, origin.origin, info.node, originalAction(info.action));
                    ASSERT_TRUE(src.has_value());
                    w.set(id, u.at(*src));
                } else {
                    w.set(id, info.target == info.node ? Rational(1) : Rational(0));
                }
            } else {
                ASSERT_EQ(info.role, ParamRole::Q);
                auto src = next.find(ParamRole::Q, origin.origin, info.node, static_cast<ActionId>(origin.index),
                                     info.target);
                ASSERT_TRUE(src.has_value());
                w.set(id, u.at(*src));
            }
        }
        auto spec = reach();
        EXPECT_EQ(exactValue(standard.pmc, w, spec), exactValue(next.pmc, u, spec));
    }
}

// ---- simulation against exact values ---------------------------------------

TEST(Simulation, AgreesWithExactValueOfInducedChain) {
    Rng rng(67);
    for (int i = 0; i < 5; ++i) {
        auto m = testing::randomPomdp(rng, {.maxStates = 6});
        auto induced = inducedPmc(m, 2);
        auto u = testing::randomInstantiation(induced.pmc, rng);
        auto fsc = fscFromInstantiation(m, induced, u);
        auto exact = exactValue(induced.pmc, u, reach()).value.get_d();
        SimulationConfig config;
        config.episodes = 20000;
        config.horizon = 2000;
        config.seed = 100 + i;
        auto sim = simulate(m, fsc, config);
        EXPECT_LE(std::abs(sim.frequency - exact), 4 * sim.standardError + 1e-3);
    }
}

}  // namespace
}  // namespace fscsynth
