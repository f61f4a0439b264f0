#include "fscsynth/analysis/pmc_checker.h"

namespace fscsynth {

namespace {

StateSet relevantBad(Pmc const& pmc, Specification const& spec) {
    return spec.kind == SpecKind::ReachAvoidProb && spec.avoidBad ? pmc.bad : StateSet{};
}

}  // namespace

PmcChecker::PmcChecker(Pmc const& pmc, Specification const& spec, FloatSolverConfig config)
    : pmc_(pmc), spec_(spec), config_(config), sets_(qualitativeSets(graphOf(pmc), pmc.goal, relevantBad(pmc, spec))) {}

template <typename V>
Value<V> PmcChecker::solve(Mc<V> const& mc, bool boundary) const {
    QualitativeSets fresh;
    if (boundary) {
        ++recomputations_;
        fresh = qualitativeSets(graphOf(mc), mc.goal, relevantBad(pmc_, spec_));
    }
    QualitativeSets const& sets = boundary ? fresh : sets_;
    if (spec_.kind == SpecKind::ExpectedReward) {
        if constexpr (std::is_same_v<V, double>) {
            return expectedRewardAll(mc, sets, config_)[mc.initial];
        } else {
            return expectedRewardAll(mc, sets)[mc.initial];
        }
    }
    if constexpr (std::is_same_v<V, double>) {
        return {reachAvoidAll(mc, sets, config_)[mc.initial], false};
    } else {
        return {reachAvoidAll(mc, sets)[mc.initial], false};
    }
}

Value<double> PmcChecker::check(std::span<double const> u) const {
    Mc<double> mc;
    mc.initial = pmc_.initial;
    mc.goal = pmc_.goal;
    mc.bad = pmc_.bad;
    mc.rows.resize(pmc_.numStates());
    bool boundary = false;
    for (StateId s = 0; s < pmc_.numStates(); ++s) {
        for (auto const& t : pmc_.rows[s]) {
            double v = t.value.evaluate(u);
            if (v > 0) {
                mc.rows[s].push_back({t.target, v});
            } else {
                boundary = true;
            }
        }
    }
    for (auto const& r : pmc_.rewards) mc.rewards.push_back(r.evaluate(u));
    return solve(mc, boundary);
}

Value<Rational> PmcChecker::check(Instantiation const& u) const {
    Mc<Rational> mc;
    mc.initial = pmc_.initial;
    mc.goal = pmc_.goal;
    mc.bad = pmc_.bad;
    mc.rows.resize(pmc_.numStates());
    bool boundary = false;
    for (StateId s = 0; s < pmc_.numStates(); ++s) {
        for (auto const& t : pmc_.rows[s]) {
            Rational v = t.value.evaluate(u, &pmc_.parameters);
            if (v > 0) {
                mc.rows[s].push_back({t.target, v});
            } else {
                boundary = true;
            }
        }
    }
    for (auto const& r : pmc_.rewards) mc.rewards.push_back(r.evaluate(u, &pmc_.parameters));
    return solve(mc, boundary);
}

}  // namespace fscsynth
