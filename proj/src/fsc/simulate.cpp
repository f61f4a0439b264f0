#include <algorithm>
#include <cmath>
#include <thread>

#include "fscsynth/fsc/fsc.h"

namespace fscsynth {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform(std::uint64_t& state) { return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53; }

/// Cumulative probabilities with the matching items.
template <typename T>
struct Sampler {
    std::vector<T> items;
    std::vector<double> cumulative;

    T draw(std::uint64_t& state) const {
        double x = uniform(state) * cumulative.back();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
        std::size_t i = std::min<std::size_t>(it - cumulative.begin(), items.size() - 1);
        return items[i];
    }
};

template <typename T, typename Range, typename Item, typename Weight>
Sampler<T> makeSampler(Range const& range, Item item, Weight weight) {
    Sampler<T> s;
    double total = 0;
    for (auto const& e : range) {
        total += toDouble(weight(e));
        s.items.push_back(item(e));
        s.cumulative.push_back(total);
    }
    return s;
}

struct Outcome {
    bool reached = false;
    bool truncated = false;
    double reward = 0;
};

}  // namespace

SimulationResult simulate(Pomdp const& m, Fsc const& fsc, SimulationConfig const& config) {
    fsc.validate(m);
    std::size_t numStates = m.numStates();
    std::size_t numActions = m.mdp.actions.size();
    std::size_t numObs = m.numObservations;

    // successor[s * |Act| + a], reward[s * |Act| + a]
    std::vector<Sampler<StateId>> successor(numStates * numActions);
    std::vector<double> reward(numStates * numActions, 0.0);
    for (StateId s = 0; s < numStates; ++s) {
        for (auto const& c : m.mdp.choices[s]) {
            successor[s * numActions + c.action] = makeSampler<StateId>(
                c.distribution, [](auto const& t) { return t.target; }, [](auto const& t) { return t.value; });
            reward[s * numActions + c.action] = toDouble(c.reward);
        }
    }
    std::vector<Sampler<ActionId>> act(fsc.numNodes * numObs);
    std::vector<Sampler<NodeId>> upd(fsc.numNodes * numObs * numActions);
    for (NodeId n = 0; n < fsc.numNodes; ++n) {
        for (ObservationId z = 0; z < numObs; ++z) {
            auto const& dist = fsc.actions(n, z);
            act[n * numObs + z] = makeSampler<ActionId>(
                dist, [](auto const& e) { return e.first; }, [](auto const& e) { return e.second; });
            for (auto const& [a, p] : dist) {
                upd[(n * numObs + z) * numActions + a] = makeSampler<NodeId>(
                    fsc.update(n, z, a), [](auto const& e) { return e.first; }, [](auto const& e) { return e.second; });
            }
        }
    }
    auto goal = toMask(m.mdp.goal, numStates);
    auto bad = toMask(m.mdp.bad, numStates);

    auto runEpisode = [&](std::size_t episode) {
        std::uint64_t state = config.seed ^ (0xd1b54a32d192ed03ULL * (episode + 1));
        splitmix64(state);
        Outcome out;
        StateId s = m.mdp.initial;
        NodeId n = fsc.initialNode;
        for (std::size_t step = 0;; ++step) {
            if (goal[s]) {
                out.reached = true;
                return out;
            }
            if (config.avoidBad && bad[s]) return out;
            if (step == config.horizon) {
                out.truncated = true;
                return out;
            }
            ObservationId z = m.observation[s];
            ActionId a = act[n * numObs + z].draw(state);
            out.reward += reward[s * numActions + a];
            StateId next = successor[s * numActions + a].draw(state);
            n = upd[(n * numObs + z) * numActions + a].draw(state);
            s = next;
        }
    };

    std::vector<Outcome> outcomes(config.episodes);
    std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, config.episodes));
    if (threads == 1) {
        for (std::size_t e = 0; e < config.episodes; ++e) outcomes[e] = runEpisode(e);
    } else {
        std::vector<std::thread> workers;
        for (std::size_t t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t e = t; e < config.episodes; e += threads) outcomes[e] = runEpisode(e);
            });
        }
        for (auto& w : workers) w.join();
    }

    SimulationResult result;
    result.episodes = config.episodes;
    double rewardSum = 0;
    for (auto const& o : outcomes) {
        result.reached += o.reached;
        result.truncated += o.truncated;
        rewardSum += o.reward;
    }
    if (config.episodes > 0) {
        double n = static_cast<double>(config.episodes);
        result.frequency = result.reached / n;
        result.standardError = std::sqrt(result.frequency * (1 - result.frequency) / n);
        result.meanReward = rewardSum / n;
    }
    return result;
}

}  // namespace fscsynth
