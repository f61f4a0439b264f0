#include "fscsynth/analysis/elimination.h"

#include <algorithm>
#include <map>
#include <set>

#include "fscsynth/analysis/qualitative.h"

namespace fscsynth {
namespace {

class EliminationGraph {
   public:
    // Keeps the states in `keep`; edges into other states are dropped.
    EliminationGraph(Pmc const& pmc, std::vector<char> const& keep, bool withRewards)
        : out_(pmc.numStates()), in_(pmc.numStates()), reward_(pmc.numStates()) {
        for (StateId s = 0; s < pmc.numStates(); ++s) {
            if (!keep[s]) continue;
            for (auto const& t : pmc.rows[s]) {
                if (!keep[t.target] || t.value.isZero()) continue;
                out_[s][t.target] += RationalFunction(t.value);
                in_[t.target].insert(s);
            }
            if (withRewards) reward_[s] = RationalFunction(pmc.rewards[s]);
        }
    }

    std::size_t degree(StateId s) const {
        std::size_t in = in_[s].size() - in_[s].count(s);
        std::size_t out = out_[s].size() - out_[s].count(s);
        return in * out;
    }

    void eliminate(StateId s) {
        RationalFunction scale(Polynomial(1));
        if (auto loop = out_[s].find(s); loop != out_[s].end()) {
            scale = RationalFunction(Polynomial(1)) / (RationalFunction(Polynomial(1)) - loop->second);
            out_[s].erase(loop);
            in_[s].erase(s);
        }
        for (StateId p : in_[s]) {
            RationalFunction a = out_[p].at(s) * scale;
            out_[p].erase(s);
            for (auto const& [t, b] : out_[s]) {
                auto& entry = out_[p][t];
                entry += a * b;
                in_[t].insert(p);
            }
            if (!reward_[s].isZero()) {
                reward_[p] += a * reward_[s];
            }
        }
        for (auto const& [t, b] : out_[s]) in_[t].erase(s);
        out_[s].clear();
        in_[s].clear();
        reward_[s] = RationalFunction();
    }

    std::map<StateId, RationalFunction> const& out(StateId s) const { return out_[s]; }
    RationalFunction const& reward(StateId s) const { return reward_[s]; }

   private:
    std::vector<std::map<StateId, RationalFunction>> out_;
    std::vector<std::set<StateId>> in_;
    std::vector<RationalFunction> reward_;
};

// States reachable from the initial state without leaving `allowed`; terminals are kept
// but not expanded.
std::vector<char> forwardReachable(Pmc const& pmc, std::vector<char> const& allowed, std::vector<char> const& terminal) {
    std::vector<char> seen(pmc.numStates(), 0);
    if (!allowed[pmc.initial]) return seen;
    std::vector<StateId> stack{pmc.initial};
    seen[pmc.initial] = 1;
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        if (terminal[s]) continue;
        for (auto const& t : pmc.rows[s]) {
            if (!t.value.isZero() && allowed[t.target] && !seen[t.target]) {
                seen[t.target] = 1;
                stack.push_back(t.target);
            }
        }
    }
    return seen;
}

void eliminateAll(EliminationGraph& graph, std::vector<char> const& eliminable, EliminationOrder order) {
    std::vector<StateId> pending;
    for (StateId s = 0; s < eliminable.size(); ++s) {
        if (eliminable[s]) pending.push_back(s);
    }
    if (order == EliminationOrder::Reverse) std::reverse(pending.begin(), pending.end());
    while (!pending.empty()) {
        std::size_t pick = 0;
        if (order == EliminationOrder::Degree) {
            for (std::size_t i = 1; i < pending.size(); ++i) {
                if (graph.degree(pending[i]) < graph.degree(pending[pick])) pick = i;
            }
        }
        graph.eliminate(pending[pick]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    }
}

RationalFunction finish(RationalFunction numerator, EliminationGraph const& graph, StateId initial) {
    if (auto loop = graph.out(initial).find(initial); loop != graph.out(initial).end()) {
        numerator = numerator / (RationalFunction(Polynomial(1)) - loop->second);
    }
    return numerator.canonical();
}

}  // namespace

RationalFunction stateEliminate(Pmc const& pmc, StateSet const& goal, StateSet const& bad, EliminationOrder order) {
    std::size_t n = pmc.numStates();
    auto sets = qualitativeSets(graphOf(pmc), goal, bad);
    if (contains(goal, pmc.initial)) return RationalFunction(Polynomial(1));
    if (contains(sets.zero, pmc.initial)) return RationalFunction();

    auto terminal = toMask(goal, n);
    std::vector<char> allowed(n, 1);
    for (StateId s : sets.zero) allowed[s] = 0;
    auto keep = forwardReachable(pmc, allowed, terminal);

    EliminationGraph graph(pmc, keep, false);
    std::vector<char> eliminable(n, 0);
    for (StateId s = 0; s < n; ++s) eliminable[s] = keep[s] && !terminal[s] && s != pmc.initial;
    eliminateAll(graph, eliminable, order);

    RationalFunction toGoal;
    for (auto const& [t, v] : graph.out(pmc.initial)) {
        if (terminal[t]) toGoal += v;
    }
    return finish(toGoal, graph, pmc.initial);
}

ClosedForm closedForm(Pmc const& pmc, Specification const& spec, EliminationOrder order) {
    if (spec.kind == SpecKind::ReachAvoidProb) {
        return {stateEliminate(pmc, pmc.goal, spec.avoidBad ? pmc.bad : StateSet{}, order), false};
    }
    std::size_t n = pmc.numStates();
    if (contains(pmc.goal, pmc.initial)) return {RationalFunction(), false};
    auto sets = qualitativeSets(graphOf(pmc), pmc.goal, {});
    if (!contains(sets.one, pmc.initial)) return {RationalFunction(), true};

    auto terminal = toMask(pmc.goal, n);
    std::vector<char> allowed(n, 1);
    auto keep = forwardReachable(pmc, allowed, terminal);
    EliminationGraph graph(pmc, keep, pmc.hasRewards());
    std::vector<char> eliminable(n, 0);
    for (StateId s = 0; s < n; ++s) eliminable[s] = keep[s] && !terminal[s] && s != pmc.initial;
    eliminateAll(graph, eliminable, order);
    return {finish(graph.reward(pmc.initial), graph, pmc.initial), false};
}

}  // namespace fscsynth
