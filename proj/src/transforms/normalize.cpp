#include "fscsynth/transforms/normalize.h"

#include <map>
#include <set>

#include "fscsynth/models/errors.h"

namespace fscsynth {

namespace {

Normalized identity(Pomdp const& m) {
    Normalized out{m, {}, {}};
    for (StateId s = 0; s < m.numStates(); ++s) out.states.push_back({s, "", 0});
    for (ObservationId z = 0; z < m.numObservations; ++z) out.observations.push_back({z, "", 0});
    return out;
}

/// Builder pre-filled with the original states, observations and labels.
PomdpBuilder startBuilder(Pomdp const& m) {
    PomdpBuilder b;
    b.numStates = m.numStates();
    b.initial = m.mdp.initial;
    b.numObservations = m.numObservations;
    b.observation = m.observation;
    b.goal = m.mdp.goal;
    b.bad = m.mdp.bad;
    return b;
}

void copyChoice(PomdpBuilder& b, Pomdp const& m, StateId source, Choice const& c) {
    std::string const& label = m.mdp.actions[c.action];
    for (auto const& t : c.distribution) b.edges.push_back({source, label, t.target, t.value});
    if (c.reward != 0) b.rewards.emplace_back(source, label, c.reward);
}

std::string freshLabel(Pomdp const& m, std::string label) {
    while (std::binary_search(m.mdp.actions.begin(), m.mdp.actions.end(), label)) label += "'";
    return label;
}

bool isDirac(Choice const& c) { return c.distribution.size() == 1; }

}  // namespace

Normalized insertIntermediateStates(Pomdp const& m) {
    std::string const step = freshLabel(m, "_step");
    // Observation of the intermediate states, one per (action, successor observation).
    std::set<std::pair<ActionId, ObservationId>> keys;
    for (StateId s = 0; s < m.numStates(); ++s) {
        for (auto const& c : m.mdp.choices[s]) {
            for (auto const& t : c.distribution) keys.emplace(c.action, m.observation[t.target]);
        }
    }
    Normalized out = identity(m);
    PomdpBuilder b = startBuilder(m);
    std::map<std::pair<ActionId, ObservationId>, ObservationId> obsOf;
    for (auto const& key : keys) {
        obsOf.emplace(key, static_cast<ObservationId>(b.numObservations++));
        out.observations.push_back({key.second, "after:" + m.mdp.actions[key.first], key.first});
    }
    for (StateId s = 0; s < m.numStates(); ++s) {
        for (auto const& c : m.mdp.choices[s]) {
            std::string const& label = m.mdp.actions[c.action];
            std::map<ObservationId, std::vector<Transition<Rational>>> classes;
            for (auto const& t : c.distribution) classes[m.observation[t.target]].push_back(t);
            for (auto const& [z, members] : classes) {
                StateId mid = static_cast<StateId>(b.numStates++);
                b.observation.push_back(obsOf.at({c.action, z}));
                out.states.push_back({s, "after:" + label, z});
                Rational mass = 0;
                for (auto const& t : members) mass += t.value;
                b.edges.push_back({s, label, mid, mass});
                for (auto const& t : members) b.edges.push_back({mid, step, t.target, Rational(t.value / mass)});
            }
            if (c.reward != 0) b.rewards.emplace_back(s, label, c.reward);
        }
    }
    out.pomdp = b.build();
    return out;
}

Normalized makeBinary(Pomdp const& m) {
    bool binary = true;
    for (StateId s = 0; s < m.numStates(); ++s) binary = binary && m.mdp.choices[s].size() <= 2;
    if (binary) return identity(m);

    std::string const rest = freshLabel(m, "rest");
    Normalized out = identity(m);
    PomdpBuilder b = startBuilder(m);
    // Auxiliary observation <z, depth> for depth >= 1.
    std::map<std::pair<ObservationId, std::size_t>, ObservationId> auxObs;
    auto observationFor = [&](ObservationId z, std::size_t depth) {
        auto [it, inserted] = auxObs.try_emplace({z, depth}, static_cast<ObservationId>(b.numObservations));
        if (inserted) {
            ++b.numObservations;
            out.observations.push_back({z, "depth", depth});
        }
        return it->second;
    };
    for (StateId s = 0; s < m.numStates(); ++s) {
        auto const& choices = m.mdp.choices[s];
        if (choices.size() <= 2) {
            for (auto const& c : choices) copyChoice(b, m, s, c);
            continue;
        }
        StateId current = s;
        for (std::size_t depth = 0; depth + 2 < choices.size(); ++depth) {
            copyChoice(b, m, current, choices[depth]);
            StateId next = static_cast<StateId>(b.numStates++);
            b.observation.push_back(observationFor(m.observation[s], depth + 1));
            out.states.push_back({s, "depth", depth + 1});
            b.edges.push_back({current, rest, next, Rational(1)});
            current = next;
        }
        copyChoice(b, m, current, choices[choices.size() - 2]);
        copyChoice(b, m, current, choices.back());
    }
    out.pomdp = b.build();
    return out;
}

Normalized makeSimple(Pomdp const& m) {
    for (StateId s = 0; s < m.numStates(); ++s) {
        if (m.mdp.choices[s].size() > 2) throw ModelError("makeSimple expects a binary POMDP");
    }
    bool simple = true;
    for (auto const& choices : m.mdp.choices) {
        if (choices.size() == 2) simple = simple && isDirac(choices[0]) && isDirac(choices[1]);
    }
    if (simple) return identity(m);
    Normalized out = identity(m);
    PomdpBuilder b = startBuilder(m);
    std::map<std::pair<ObservationId, ActionId>, ObservationId> auxObs;
    for (StateId s = 0; s < m.numStates(); ++s) {
        auto const& choices = m.mdp.choices[s];
        for (auto const& c : choices) {
            if (choices.size() < 2 || isDirac(c)) {
                copyChoice(b, m, s, c);
                continue;
            }
            std::string const& label = m.mdp.actions[c.action];
            StateId aux = static_cast<StateId>(b.numStates++);
            ObservationId z = m.observation[s];
            auto [it, inserted] = auxObs.try_emplace({z, c.action}, static_cast<ObservationId>(b.numObservations));
            if (inserted) {
                ++b.numObservations;
                out.observations.push_back({z, "branch:" + label, c.action});
            }
            b.observation.push_back(it->second);
            out.states.push_back({s, "branch:" + label, c.action});
            b.edges.push_back({s, label, aux, Rational(1)});
            for (auto const& t : c.distribution) b.edges.push_back({aux, label, t.target, t.value});
            if (c.reward != 0) b.rewards.emplace_back(s, label, c.reward);
        }
    }
    out.pomdp = b.build();
    return out;
}

Pomdp pmcToPomdp(Pmc const& d) {
    if (!d.isSimple() || !d.rowsSumToOne()) throw ModelError("pMC is not simple");
    for (auto const& g : d.groups) {
        if (g.size() > 1) throw ModelError("pMC is not simple: a parameter group couples several parameters");
    }
    std::size_t numParams = d.parameters.size();
    PomdpBuilder b;
    b.numStates = d.numStates();
    b.initial = d.initial;
    b.numObservations = numParams + 1;
    b.goal = d.goal;
    b.bad = d.bad;
    bool anyFree = false;
    for (StateId s = 0; s < d.numStates(); ++s) {
        Polynomial reward = d.hasRewards() ? d.rewards[s] : Polynomial();
        std::optional<ParamId> p;
        for (auto const& t : d.rows[s]) {
            if (!t.value.isConstant()) p = t.value.parameters().front();
        }
        auto params = reward.parameters();
        // Both actions may lead to the same state, leaving the parameter in the reward only.
        bool rewardOnly = !p && params.size() == 1 && d.rows[s].size() == 1;
        if (rewardOnly) p = params.front();
        if (!reward.isAffine() || params.size() > 1 || (params.size() == 1 && params.front() != p)) {
            throw ModelError("reward of state " + std::to_string(s) + " is not affine in the parameter of its row");
        }
        if (!p) {
            anyFree = true;
            b.observation.push_back(static_cast<ObservationId>(numParams));
            for (auto const& t : d.rows[s]) b.edges.push_back({s, "a", t.target, t.value.constantTerm()});
            if (!reward.isZero()) b.rewards.emplace_back(s, "a", reward.constantTerm());
            continue;
        }
        b.observation.push_back(*p);
        Polynomial param = Polynomial::variable(*p);
        for (auto const& t : d.rows[s]) {
            if (rewardOnly) {
                b.edges.push_back({s, "a", t.target, Rational(1)});
                b.edges.push_back({s, "b", t.target, Rational(1)});
            } else {
                b.edges.push_back({s, t.value == param ? "a" : "b", t.target, Rational(1)});
            }
        }
        // r(p) = p * r(1) + (1 - p) * r(0).
        Rational atZero = reward.constantTerm();
        Rational atOne = atZero + reward.coefficient(Monomial::variable(*p));
        if (atOne != 0) b.rewards.emplace_back(s, "a", atOne);
        if (atZero != 0) b.rewards.emplace_back(s, "b", atZero);
    }
    if (!anyFree) --b.numObservations;
    Pomdp m = b.build();
    m.validate();
    return m;
}

}  // namespace fscsynth
