#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fscsynth/models/mc.h"
#include "fscsynth/models/pomdp.h"

namespace fscsynth {

using NodeId = std::uint32_t;

template <typename T>
using Distribution = std::vector<std::pair<T, Rational>>;

/// Sorts by item, merges duplicates and drops zero entries.
template <typename T>
void canonicalizeDistribution(Distribution<T>& dist) {
    std::sort(dist.begin(), dist.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
    Distribution<T> merged;
    for (auto& [item, p] : dist) {
        if (!merged.empty() && merged.back().first == item) {
            merged.back().second += p;
        } else {
            merged.emplace_back(item, p);
        }
    }
    std::erase_if(merged, [](auto const& e) { return e.second == 0; });
    dist = std::move(merged);
}

enum class Topology { Full, Counter };

/// Finite-state controller with nodes 0..numNodes-1.
struct Fsc {
    std::size_t numNodes = 1;
    NodeId initialNode = 0;
    // actionMap[n][z]: distribution over actions, sorted by action id, positive entries only.
    std::vector<std::vector<Distribution<ActionId>>> actionMap;
    // memoryUpdate[n][z][a]: distribution over successor nodes.
    std::vector<std::vector<std::map<ActionId, Distribution<NodeId>>>> memoryUpdate;

    Fsc() = default;
    Fsc(std::size_t nodes, std::size_t observations);

    Distribution<ActionId> const& actions(NodeId n, ObservationId z) const { return actionMap[n][z]; }
    Distribution<NodeId> const& update(NodeId n, ObservationId z, ActionId a) const;

    /// Throws ModelError unless supports lie in A(z) and every distribution sums to one.
    void validate(Pomdp const& m) const;
    /// Whether every update from node n stays within {n, n+1}.
    bool respectsCounter() const;

    friend bool operator==(Fsc const&, Fsc const&) = default;
};

/// Controller that picks uniformly among A(z) and moves uniformly among all nodes.
Fsc uniformFsc(Pomdp const& m, std::size_t k);

/// Copy of `fsc` with `extra` unreachable nodes that imitate node 0's choices.
Fsc withExtraNodes(Fsc const& fsc, Pomdp const& m, std::size_t extra);

Fsc parseFsc(std::string_view text, Pomdp const& m);
std::string writeFsc(Fsc const& fsc, Pomdp const& m);

/// Reachable fragment of the product. productIndex[i] = s * k + n for fragment state i,
/// increasing in i; the initial state is fragment state of <s_I, n_I>.
struct InducedMc {
    Mc<Rational> mc;
    std::size_t numNodes = 1;
    std::vector<std::uint64_t> productIndex;

    std::pair<StateId, NodeId> product(StateId i) const {
        return {static_cast<StateId>(productIndex[i] / numNodes), static_cast<NodeId>(productIndex[i] % numNodes)};
    }
    /// Fragment state of <s, n>, if reachable.
    std::optional<StateId> find(StateId s, NodeId n) const;
};

/// Product of POMDP and FSC, restricted to states reachable from <s_I, n_I>.
InducedMc inducedMc(Pomdp const& m, Fsc const& fsc);

struct SimulationResult {
    std::size_t episodes = 0;
    std::size_t reached = 0;      // goal reached before any bad state
    std::size_t truncated = 0;    // horizon hit before goal or bad
    double frequency = 0;         // reached / episodes
    double standardError = 0;
    double meanReward = 0;        // mean reward accumulated until goal or cut-off
};

struct SimulationConfig {
    std::size_t episodes = 10000;
    std::size_t horizon = 10000;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    // Stop at bad states (reach-avoid); otherwise only the goal ends an episode.
    bool avoidBad = true;
};

/// Monte-Carlo estimate; results depend only on the seed, not on the thread count.
SimulationResult simulate(Pomdp const& m, Fsc const& fsc, SimulationConfig const& config);

}  // namespace fscsynth
