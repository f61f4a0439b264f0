#include "generators.h"

#include <algorithm>
#include <numeric>

namespace fscsynth::testing {

Rational fraction(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rational randomOpenUnit(Rng& rng, unsigned denominatorBound) {
    unsigned b = static_cast<unsigned>(uniform(rng, 2, denominatorBound));
    unsigned a = static_cast<unsigned>(uniform(rng, 1, b - 1));
    Rational r(a, b);
    r.canonicalize();
    return r;
}

namespace {

std::vector<Rational> randomDistribution(Rng& rng, std::size_t size, bool allowZero) {
    std::vector<unsigned> weights(size);
    for (auto& w : weights) w = static_cast<unsigned>(uniform(rng, allowZero ? 0 : 1, 6));
    if (std::accumulate(weights.begin(), weights.end(), 0u) == 0) weights[0] = 1;
    unsigned total = std::accumulate(weights.begin(), weights.end(), 0u);
    std::vector<Rational> result;
    for (unsigned w : weights) {
        Rational r(w, total);
        r.canonicalize();
        result.push_back(r);
    }
    return result;
}

std::vector<StateId> distinctStates(Rng& rng, std::size_t n, std::size_t count) {
    std::vector<StateId> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(count, n));
    return all;
}

}  // namespace

Pomdp randomPomdp(Rng& rng, PomdpShape const& shape) {
    static char const* const kLabels[] = {"a", "b", "c", "d", "e"};
    PomdpBuilder b;
    b.numStates = uniform(rng, 2, shape.maxStates);
    b.initial = static_cast<StateId>(uniform(rng, 0, b.numStates - 1));
    b.numObservations = uniform(rng, 1, std::min(shape.maxObservations, b.numStates));
    for (StateId s = 0; s < b.numStates; ++s) {
        b.observation.push_back(s < b.numObservations ? s : static_cast<ObservationId>(uniform(rng, 0, b.numObservations - 1)));
    }
    std::shuffle(b.observation.begin(), b.observation.end(), rng);

    std::vector<std::vector<std::string>> actionsOf(b.numObservations);
    std::size_t labelCount = std::min<std::size_t>(shape.maxActions, 5);
    for (auto& acts : actionsOf) {
        std::vector<std::string> pool(kLabels, kLabels + labelCount);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(uniform(rng, 1, labelCount));
        acts = pool;
    }
    for (StateId s = 0; s < b.numStates; ++s) {
        for (auto const& a : actionsOf[b.observation[s]]) {
            auto targets = distinctStates(rng, b.numStates, uniform(rng, 1, 3));
            auto probs = randomDistribution(rng, targets.size(), false);
            for (std::size_t i = 0; i < targets.size(); ++i) b.edges.push_back({s, a, targets[i], probs[i]});
            if (shape.withRewards) b.rewards.emplace_back(s, a, Rational(static_cast<long>(uniform(rng, 0, 3))));
        }
    }
    auto labelled = distinctStates(rng, b.numStates, 2);
    b.goal.push_back(labelled[0]);
    if (shape.withBad && labelled.size() > 1 && uniform(rng, 0, 1) == 1) b.bad.push_back(labelled[1]);
    Pomdp m = b.build();
    m.validate();
    return m;
}

Pmc randomSimplePmc(Rng& rng, std::size_t maxStates, std::size_t maxParams) {
    Pmc d;
    std::size_t n = uniform(rng, 2, maxStates);
    d.rows.resize(n);
    d.initial = static_cast<StateId>(uniform(rng, 0, n - 1));
    std::vector<StateId> parametric;
    for (StateId s = 0; s < n; ++s) {
        if (uniform(rng, 0, 1) == 1) parametric.push_back(s);
    }
    if (parametric.empty()) parametric.push_back(static_cast<StateId>(uniform(rng, 0, n - 1)));
    std::size_t m = uniform(rng, 1, std::min(maxParams, parametric.size()));
    for (std::size_t i = 0; i < m; ++i) d.parameters.add("p" + std::to_string(i));

    for (StateId s = 0; s < n; ++s) {
        auto it = std::find(parametric.begin(), parametric.end(), s);
        if (it != parametric.end()) {
            std::size_t index = static_cast<std::size_t>(it - parametric.begin());
            ParamId p = static_cast<ParamId>(index < m ? index : uniform(rng, 0, m - 1));
            auto targets = distinctStates(rng, n, 2);
            Polynomial x = Polynomial::variable(p);
            d.rows[s].push_back({targets[0], x});
            d.rows[s].push_back({targets[1], Polynomial(1) - x});
        } else {
            auto targets = distinctStates(rng, n, uniform(rng, 1, 3));
            auto probs = randomDistribution(rng, targets.size(), false);
            for (std::size_t i = 0; i < targets.size(); ++i) d.rows[s].push_back({targets[i], Polynomial(probs[i])});
        }
        canonicalizeRow(d.rows[s]);
    }
    auto labelled = distinctStates(rng, n, 2);
    d.goal.push_back(labelled[0]);
    if (labelled.size() > 1 && uniform(rng, 0, 2) == 0) d.bad.push_back(labelled[1]);
    d.validate();
    return d;
}

Instantiation randomInstantiation(Pmc const& pmc, Rng& rng, bool interior) {
    Instantiation u(pmc.parameters.size());
    for (auto const& group : pmc.effectiveGroups()) {
        auto probs = randomDistribution(rng, group.size() + 1, !interior);
        for (std::size_t i = 0; i < group.size(); ++i) u.set(group[i], probs[i]);
    }
    return u;
}

}  // namespace fscsynth::testing
