#include "fscsynth/fsc/from_instantiation.h"

#include "fscsynth/models/errors.h"
#include "fscsynth/models/instantiate.h"

namespace fscsynth {

Fsc fscFromInstantiation(Pomdp const& m, InducedPmc const& induced, Instantiation const& u) {
    if (induced.variant == Variant::NextObservation) {
        throw ModelError("next-observation instantiations do not describe a controller of this kind");
    }
    auto check = checkWellDefined(induced.pmc, u, 0);
    if (!check.wellDefined) throw ModelError("instantiation is not well-defined");

    std::size_t k = induced.numNodes;
    Fsc fsc(k, m.numObservations);
    for (ObservationId z = 0; z < m.numObservations; ++z) {
        for (NodeId n = 0; n < k; ++n) {
            auto support = nodeSupport(induced.topology, k, n);
            for (ActionId a : induced.actions[z]) {
                Rational pa = actionFactor(induced, z, n, a).evaluate(u, &induced.pmc.parameters);
                if (pa != 0) fsc.actionMap[n][z].emplace_back(a, pa);
                auto& update = fsc.memoryUpdate[n][z][a];
                if (pa == 0 && induced.variant == Variant::Substituted) {
                    update.emplace_back(support.remainder, Rational(1));
                    continue;
                }
                for (NodeId t : support.targets) {
                    Rational q = induced.variant == Variant::Substituted
                                     ? Rational(jointFactor(induced, z, n, a, t, z).evaluate(u) / pa)
                                     : memoryFactor(induced, z, n, a, t, z).evaluate(u, &induced.pmc.parameters);
                    update.emplace_back(t, q);
                }
                canonicalizeDistribution(update);
            }
        }
    }
    return fsc;
}

Instantiation instantiationFromFsc(Pomdp const& m, InducedPmc const& induced, Fsc const& fsc) {
    if (induced.variant == Variant::NextObservation) {
        throw ModelError("next-observation pMCs are not instantiated from controllers");
    }
    if (fsc.numNodes != induced.numNodes || fsc.initialNode != 0) {
        throw ModelError("controller shape does not match the induced pMC");
    }
    fsc.validate(m);
    auto probability = [](auto const& dist, auto item) {
        for (auto const& [i, p] : dist) {
            if (i == item) return p;
        }
        return Rational(0);
    };
    // Memory distribution for (n, z, a); actions never chosen contribute the remainder node.
    auto memory = [&](NodeId n, ObservationId z, ActionId a) -> Distribution<NodeId> {
        auto const& updates = fsc.memoryUpdate[n][z];
        auto it = updates.find(a);
        if (it != updates.end()) return it->second;
        return {{nodeSupport(induced.topology, induced.numNodes, n).remainder, Rational(1)}};
    };

    Instantiation u(induced.pmc.parameters.size());
    for (ParamId id = 0; id < induced.info.size(); ++id) {
        auto const& info = induced.info[id];
        NodeId n = info.node;
        ObservationId z = info.observation;
        switch (info.role) {
            case ParamRole::P:
                u.set(id, probability(fsc.actions(n, z), info.action));
                break;
            case ParamRole::Q:
                if (info.action == kAnyAction) {
                    std::optional<Distribution<NodeId>> shared;
                    for (auto const& [a, p] : fsc.actions(n, z)) {
                        auto d = memory(n, z, a);
                        if (shared && *shared != d) {
                            throw ModelError("controller memory update depends on the action");
                        }
                        shared = d;
                    }
                    u.set(id, shared ? probability(*shared, info.target) : Rational(0));
                } else {
                    u.set(id, probability(memory(n, z, info.action), info.target));
                }
                break;
            case ParamRole::R:
                u.set(id, probability(fsc.actions(n, z), info.action) *
                              probability(memory(n, z, info.action), info.target));
                break;
        }
    }
    auto check = checkWellDefined(induced.pmc, u, 0);
    if (!check.wellDefined) throw ModelError("controller does not respect the memory topology");
    return u;
}

Instantiation substituteInstantiation(InducedPmc const& standard, InducedPmc const& substituted,
                                      Instantiation const& u) {
    if (standard.variant != Variant::Standard || substituted.variant != Variant::Substituted) {
        throw std::invalid_argument("expected a standard and a substituted induced pMC");
    }
    Instantiation result(substituted.pmc.parameters.size());
    for (ParamId id = 0; id < substituted.info.size(); ++id) {
        auto const& info = substituted.info[id];
        Polynomial joint = jointFactor(standard, info.observation, info.node, info.action, info.target, info.observation);
        result.set(id, joint.evaluate(u, &standard.pmc.parameters));
    }
    return result;
}

}  // namespace fscsynth
