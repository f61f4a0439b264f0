#include "fscsynth/transforms/induced.h"

#include <set>
#include <tuple>

#include "fscsynth/models/errors.h"

namespace fscsynth {

std::optional<ParamId> InducedPmc::find(ParamRole role, ObservationId z, NodeId n, ActionId a, NodeId target) const {
    auto it = index.find(ParamInfo{role, z, n, a, role == ParamRole::P ? NodeId(0) : target});
    if (it == index.end()) return std::nullopt;
    return it->second;
}

NodeSupport nodeSupport(Topology topology, std::size_t k, NodeId n) {
    NodeSupport support;
    NodeId last = static_cast<NodeId>(k - 1);
    if (topology == Topology::Full) {
        for (NodeId t = 0; t < k; ++t) support.targets.push_back(t);
        support.remainder = last;
    } else if (n < last) {
        support.targets = {n, n + 1};
        support.remainder = n + 1;
    } else {
        support.targets = {last};
        support.remainder = last;
    }
    return support;
}

namespace {

Polynomial param(InducedPmc const& induced, ParamRole role, ObservationId z, NodeId n, ActionId a, NodeId target) {
    auto id = induced.find(role, z, n, a, target);
    if (!id) throw ModelError("induced pMC has no such parameter");
    return Polynomial::variable(*id);
}

}  // namespace

Polynomial actionFactor(InducedPmc const& induced, ObservationId z, NodeId n, ActionId a) {
    if (induced.variant == Variant::Substituted) {
        Polynomial sum;
        for (NodeId t : nodeSupport(induced.topology, induced.numNodes, n).targets) {
            sum += jointFactor(induced, z, n, a, t, z);
        }
        return sum;
    }
    if (a != induced.remain[z]) return param(induced, ParamRole::P, z, n, a, 0);
    Polynomial rest(1);
    for (ActionId b : induced.actions[z]) {
        if (b != a) rest -= param(induced, ParamRole::P, z, n, b, 0);
    }
    return rest;
}

Polynomial memoryFactor(InducedPmc const& induced, ObservationId z, NodeId n, ActionId a, NodeId target,
                        ObservationId next) {
    if (induced.variant == Variant::Substituted) {
        throw std::logic_error("the substituted pMC has no separate memory factor");
    }
    auto support = nodeSupport(induced.topology, induced.numNodes, n);
    ObservationId key = induced.variant == Variant::NextObservation ? next : z;
    ActionId action = induced.variant == Variant::ActionRestricted ? kAnyAction : a;
    auto q = [&](NodeId t) { return param(induced, ParamRole::Q, key, n, action, t); };
    if (!std::binary_search(support.targets.begin(), support.targets.end(), target)) return Polynomial();
    if (target != support.remainder) return q(target);
    Polynomial rest(1);
    for (NodeId t : support.targets) {
        if (t != support.remainder) rest -= q(t);
    }
    return rest;
}

Polynomial jointFactor(InducedPmc const& induced, ObservationId z, NodeId n, ActionId a, NodeId target,
                       ObservationId next) {
    if (induced.variant != Variant::Substituted) {
        return actionFactor(induced, z, n, a) * memoryFactor(induced, z, n, a, target, next);
    }
    auto support = nodeSupport(induced.topology, induced.numNodes, n);
    if (!std::binary_search(support.targets.begin(), support.targets.end(), target)) return Polynomial();
    if (a != induced.remain[z] || target != support.remainder) return param(induced, ParamRole::R, z, n, a, target);
    Polynomial rest(1);
    for (ActionId b : induced.actions[z]) {
        for (NodeId t : support.targets) {
            if (b != a || t != target) rest -= param(induced, ParamRole::R, z, n, b, t);
        }
    }
    return rest;
}

InducedPmc inducedPmc(Pomdp const& m, std::size_t k, Topology topology, Variant variant) {
    if (k == 0) throw ModelError("a controller needs at least one node");
    InducedPmc result;
    result.variant = variant;
    result.topology = topology;
    result.numNodes = k;
    std::size_t numObs = m.numObservations;
    result.actions.resize(numObs);
    result.remain.assign(numObs, kAnyAction);
    for (ObservationId z = 0; z < numObs; ++z) {
        result.actions[z] = m.actionsOf(z);
        if (!result.actions[z].empty()) result.remain[z] = result.actions[z].back();
    }

    // Next-observation memory parameters exist for each (z', n, a) that some transition needs.
    std::set<std::tuple<ObservationId, NodeId, ActionId>> nextKeys;
    if (variant == Variant::NextObservation) {
        for (StateId s = 0; s < m.numStates(); ++s) {
            for (auto const& c : m.mdp.choices[s]) {
                for (auto const& t : c.distribution) {
                    for (NodeId n = 0; n < k; ++n) nextKeys.emplace(m.observation[t.target], n, c.action);
                }
            }
        }
    }

    Pmc& pmc = result.pmc;
    auto label = [&](ActionId a) { return m.mdp.actions[a]; };
    auto add = [&](ParamInfo info, std::string name) {
        ParamId id = pmc.parameters.add(std::move(name));
        result.info.push_back(info);
        result.index.emplace(info, id);
        return id;
    };
    auto prefix = [](char role, ObservationId z, NodeId n) {
        return std::string(1, role) + "_z" + std::to_string(z) + "_n" + std::to_string(n);
    };

    for (ObservationId z = 0; z < numObs; ++z) {
        auto const& actions = result.actions[z];
        for (NodeId n = 0; n < k; ++n) {
            auto support = nodeSupport(topology, k, n);
            if (!actions.empty() && variant != Variant::Substituted) {
                std::vector<ParamId> group;
                for (ActionId a : actions) {
                    if (a == result.remain[z]) continue;
                    group.push_back(add({ParamRole::P, z, n, a, 0}, prefix('p', z, n) + "_" + label(a)));
                }
                if (!group.empty()) pmc.groups.push_back(std::move(group));
            }
            auto memoryGroup = [&](ActionId a, std::string const& base) {
                std::vector<ParamId> group;
                for (NodeId t : support.targets) {
                    if (t == support.remainder) continue;
                    group.push_back(add({ParamRole::Q, z, n, a, t}, base + "_m" + std::to_string(t)));
                }
                if (!group.empty()) pmc.groups.push_back(std::move(group));
            };
            switch (variant) {
                case Variant::Standard:
                    for (ActionId a : actions) memoryGroup(a, prefix('q', z, n) + "_" + label(a));
                    break;
                case Variant::ActionRestricted:
                    if (!actions.empty()) memoryGroup(kAnyAction, prefix('q', z, n));
                    break;
                case Variant::NextObservation:
                    for (auto const& [key, node, a] : nextKeys) {
                        if (key == z && node == n) memoryGroup(a, prefix('q', z, n) + "_" + label(a));
                    }
                    break;
                case Variant::Substituted: {
                    std::vector<ParamId> group;
                    for (ActionId a : actions) {
                        for (NodeId t : support.targets) {
                            if (a == result.remain[z] && t == support.remainder) continue;
                            group.push_back(add({ParamRole::R, z, n, a, t},
                                                prefix('r', z, n) + "_" + label(a) + "_m" + std::to_string(t)));
                        }
                    }
                    if (!group.empty()) pmc.groups.push_back(std::move(group));
                    break;
                }
            }
        }
    }

    std::size_t numStates = m.numStates();
    pmc.rows.resize(numStates * k);
    bool withRewards = m.mdp.hasRewards();
    if (withRewards) pmc.rewards.resize(numStates * k);
    for (StateId s = 0; s < numStates; ++s) {
        ObservationId z = m.observation[s];
        for (NodeId n = 0; n < k; ++n) {
            StateId source = result.productState(s, n);
            auto support = nodeSupport(topology, k, n);
            Pmc::Row row;
            Polynomial reward;
            for (auto const& c : m.mdp.choices[s]) {
                if (withRewards && c.reward != 0) reward += actionFactor(result, z, n, c.action) * c.reward;
                for (auto const& t : c.distribution) {
                    for (NodeId next : support.targets) {
                        Polynomial h = jointFactor(result, z, n, c.action, next, m.observation[t.target]) * t.value;
                        row.push_back({result.productState(t.target, next), std::move(h)});
                    }
                }
            }
            canonicalizeRow(row);
            pmc.rows[source] = std::move(row);
            if (withRewards) pmc.rewards[source] = std::move(reward);
        }
    }
    pmc.initial = result.productState(m.mdp.initial, 0);
    for (StateId s : m.mdp.goal) {
        for (NodeId n = 0; n < k; ++n) pmc.goal.push_back(result.productState(s, n));
    }
    for (StateId s : m.mdp.bad) {
        for (NodeId n = 0; n < k; ++n) pmc.bad.push_back(result.productState(s, n));
    }
    return result;
}

std::size_t paramCount(Pomdp const& m, std::size_t k) {
    std::size_t count = 0;
    for (ObservationId z = 0; z < m.numObservations; ++z) {
        std::size_t actions = m.actionsOf(z).size();
        if (actions == 0) continue;
        count += k * (actions - 1) + k * (k - 1) * actions;
    }
    return count;
}

}  // namespace fscsynth
