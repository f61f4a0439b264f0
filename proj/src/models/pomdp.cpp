#include "fscsynth/models/pomdp.h"

#include <algorithm>
#include <map>

#include "fscsynth/models/errors.h"

namespace fscsynth {

std::optional<StateId> Pomdp::representative(ObservationId z) const {
    for (StateId s = 0; s < observation.size(); ++s) {
        if (observation[s] == z) return s;
    }
    return std::nullopt;
}

std::vector<ActionId> Pomdp::actionsOf(ObservationId z) const {
    auto s = representative(z);
    return s ? mdp.enabledActions(*s) : std::vector<ActionId>{};
}

void Pomdp::validate() const {
    std::size_t n = mdp.numStates();
    if (n == 0) throw ModelError("model has no states");
    if (mdp.initial >= n) throw ModelError("initial state " + std::to_string(mdp.initial) + " out of range");
    if (observation.size() != n) throw ModelError("observation function does not cover every state");
    for (StateId s = 0; s < n; ++s) {
        if (observation[s] >= numObservations) {
            throw ModelError("state " + std::to_string(s) + " has undeclared observation " +
                             std::to_string(observation[s]));
        }
        if (mdp.choices[s].empty()) throw ModelError("deadlock state " + std::to_string(s) + " has no actions");
        for (auto const& c : mdp.choices[s]) {
            Rational sum = 0;
            for (auto const& t : c.distribution) {
                if (t.target >= n) throw ModelError("transition to undeclared state " + std::to_string(t.target));
                if (t.value < 0 || t.value > 1) {
                    throw ModelError("state " + std::to_string(s) + " action " + mdp.actions[c.action] +
                                     " has probability outside [0,1]");
                }
                sum += t.value;
            }
            if (sum != 1) {
                throw ModelError("state " + std::to_string(s) + " action " + mdp.actions[c.action] +
                                 " sums to " + toString(sum) + " instead of 1");
            }
            if (c.reward < 0) throw ModelError("negative reward at state " + std::to_string(s));
        }
    }
    std::map<ObservationId, StateId> seen;
    for (StateId s = 0; s < n; ++s) {
        auto [it, inserted] = seen.emplace(observation[s], s);
        if (!inserted && mdp.enabledActions(it->second) != mdp.enabledActions(s)) {
            throw ModelError("states " + std::to_string(it->second) + " and " + std::to_string(s) +
                             " share observation " + std::to_string(observation[s]) +
                             " but enable different actions");
        }
    }
    for (auto const* set : {&mdp.goal, &mdp.bad}) {
        for (StateId s : *set) {
            if (s >= n) throw ModelError("label refers to undeclared state " + std::to_string(s));
        }
    }
    for (StateId s : mdp.goal) {
        if (contains(mdp.bad, s)) throw ModelError("state " + std::to_string(s) + " is both goal and bad");
    }
}

Pomdp PomdpBuilder::build() const {
    Pomdp m;
    m.numObservations = numObservations;
    m.observation = observation;
    m.mdp.initial = initial;
    m.mdp.goal = goal;
    m.mdp.bad = bad;
    normalize(m.mdp.goal);
    normalize(m.mdp.bad);

    std::vector<std::string> labels;
    for (auto const& e : edges) labels.push_back(e.action);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    m.mdp.actions = labels;
    auto idOf = [&](std::string const& label) -> std::optional<ActionId> {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label) return std::nullopt;
        return static_cast<ActionId>(it - labels.begin());
    };

    std::vector<std::map<ActionId, Choice>> byAction(numStates);
    for (auto const& e : edges) {
        if (e.source >= numStates) throw ModelError("transition from undeclared state " + std::to_string(e.source));
        ActionId a = *idOf(e.action);
        auto& c = byAction[e.source].try_emplace(a, Choice{a, {}, 0}).first->second;
        c.distribution.push_back({e.target, e.probability});
    }
    for (auto const& [s, label, r] : rewards) {
        auto a = idOf(label);
        if (s >= numStates || !a || !byAction[s].contains(*a)) {
            throw ModelError("reward for unavailable action '" + label + "' at state " + std::to_string(s));
        }
        byAction[s][*a].reward += r;
    }
    m.mdp.choices.resize(numStates);
    for (StateId s = 0; s < numStates; ++s) {
        for (auto& [a, c] : byAction[s]) {
            canonicalizeRow(c.distribution);
            m.mdp.choices[s].push_back(std::move(c));
        }
    }
    return m;
}

}  // namespace fscsynth
