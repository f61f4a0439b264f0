#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fscsynth/fsc/fsc.h"
#include "fscsynth/models/pmc.h"
#include "fscsynth/models/pomdp.h"

namespace fscsynth {

enum class Variant { Standard, Substituted, ActionRestricted, NextObservation };

enum class ParamRole {
    P,  // action choice p^{z,n}_a
    Q,  // memory update q^{z,n}_{a,n'} (action-independent for the action-restricted variant)
    R,  // joint action and memory choice r^{z,n}_{a,n'}
};

inline constexpr ActionId kAnyAction = static_cast<ActionId>(-1);

struct ParamInfo {
    ParamRole role;
    ObservationId observation;  // for next-observation Q parameters: the successor's observation
    NodeId node;
    ActionId action;  // kAnyAction for action-restricted Q parameters
    NodeId target;    // successor node (Q, R); unused for P

    friend auto operator<=>(ParamInfo const&, ParamInfo const&) = default;
};

/// Result of the POMDP-to-pMC translation. Product state <s, n> has id s * k + n.
struct InducedPmc {
    Pmc pmc;
    std::vector<ParamInfo> info;
    Variant variant = Variant::Standard;
    Topology topology = Topology::Full;
    std::size_t numNodes = 1;
    // Remain(z): lexicographically last action of A(z) (kAnyAction for unused observations).
    std::vector<ActionId> remain;
    // A(z) per observation.
    std::vector<std::vector<ActionId>> actions;
    std::map<ParamInfo, ParamId> index;

    std::optional<ParamId> find(ParamRole role, ObservationId z, NodeId n, ActionId a, NodeId target = 0) const;
    StateId productState(StateId s, NodeId n) const { return static_cast<StateId>(s * numNodes + n); }
};

/// Memory successors allowed from node n, and the node receiving the remainder.
struct NodeSupport {
    std::vector<NodeId> targets;
    NodeId remainder;
};
NodeSupport nodeSupport(Topology topology, std::size_t k, NodeId n);

/// Probability of choosing `a` at (z, n): p, the remainder 1 - sum p, or for the
/// substituted variant the sum of the joint parameters.
Polynomial actionFactor(InducedPmc const& induced, ObservationId z, NodeId n, ActionId a);
/// Probability of moving to `target` after choosing `a` at (z, n); `next` is the
/// successor's observation (used by the next-observation variant only).
/// Not available for the substituted variant.
Polynomial memoryFactor(InducedPmc const& induced, ObservationId z, NodeId n, ActionId a, NodeId target,
                        ObservationId next);
/// Probability of choosing `a` and moving to `target`; the product of the two factors
/// except for the substituted variant, where it is r or the joint remainder.
Polynomial jointFactor(InducedPmc const& induced, ObservationId z, NodeId n, ActionId a, NodeId target,
                       ObservationId next);

InducedPmc inducedPmc(Pomdp const& m, std::size_t k, Topology topology = Topology::Full,
                      Variant variant = Variant::Standard);

/// Parameter count of the standard full-topology construction, by formula.
std::size_t paramCount(Pomdp const& m, std::size_t k);

}  // namespace fscsynth
