#include "fscsynth/transforms/unfold.h"

#include <map>

#include "fscsynth/models/errors.h"
#include "fscsynth/models/instantiate.h"

namespace fscsynth {

namespace {

// Zero-padded so that label order matches (action, node) order.
std::string unfoldedLabel(std::string const& action, NodeId n, std::size_t k) {
    std::string digits = std::to_string(n);
    std::size_t width = std::to_string(k - 1).size();
    return action + "@" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Unfolding unfold(Pomdp const& m, std::size_t k) {
    if (k < 2) throw ModelError("unfolding needs at least two memory nodes");
    PomdpBuilder b;
    b.numStates = m.numStates() * k;
    b.initial = static_cast<StateId>(m.mdp.initial * k);
    b.numObservations = m.numObservations * k;
    std::map<std::string, std::pair<ActionId, NodeId>> origin;
    for (StateId s = 0; s < m.numStates(); ++s) {
        for (NodeId n = 0; n < k; ++n) {
            StateId source = static_cast<StateId>(s * k + n);
            b.observation.push_back(static_cast<ObservationId>(m.observation[s] * k + n));
            for (auto const& c : m.mdp.choices[s]) {
                for (NodeId next = 0; next < k; ++next) {
                    std::string label = unfoldedLabel(m.mdp.actions[c.action], next, k);
                    origin.emplace(label, std::pair{c.action, next});
                    for (auto const& t : c.distribution) {
                        b.edges.push_back({source, label, static_cast<StateId>(t.target * k + next), t.value});
                    }
                    if (c.reward != 0) b.rewards.emplace_back(source, label, c.reward);
                }
            }
        }
    }
    for (StateId s : m.mdp.goal) {
        for (NodeId n = 0; n < k; ++n) b.goal.push_back(static_cast<StateId>(s * k + n));
    }
    for (StateId s : m.mdp.bad) {
        for (NodeId n = 0; n < k; ++n) b.bad.push_back(static_cast<StateId>(s * k + n));
    }
    Unfolding result;
    result.pomdp = b.build();
    result.numNodes = k;
    for (auto const& label : result.pomdp.mdp.actions) result.actionOrigin.push_back(origin.at(label));
    return result;
}

Instantiation mapUnfoldingInstantiation(Unfolding const& unfolding, InducedPmc const& induced,
                                        InducedPmc const& unfoldedInduced, Instantiation const& u) {
    if (induced.variant != Variant::Standard || induced.topology != Topology::Full ||
        induced.numNodes != unfolding.numNodes || unfoldedInduced.numNodes != 1) {
        throw std::invalid_argument("expected the standard induced pMCs of a model and of its unfolding");
    }
    if (!checkWellDefined(induced.pmc, u, 0).wellDefined) throw ModelError("instantiation is not well-defined");
    std::size_t k = unfolding.numNodes;
    Instantiation result(unfoldedInduced.pmc.parameters.size());
    for (ParamId id = 0; id < unfoldedInduced.info.size(); ++id) {
        auto const& info = unfoldedInduced.info[id];
        ObservationId z = static_cast<ObservationId>(info.observation / k);
        NodeId n = static_cast<NodeId>(info.observation % k);
        auto [a, next] = unfolding.actionOrigin[info.action];
        result.set(id, jointFactor(induced, z, n, a, next, z).evaluate(u, &induced.pmc.parameters));
    }
    return result;
}

}  // namespace fscsynth
