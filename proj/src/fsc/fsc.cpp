#include "fscsynth/fsc/fsc.h"

#include <algorithm>
#include <deque>
#include <sstream>

#include "fscsynth/models/errors.h"
#include "fscsynth/models/io.h"

namespace fscsynth {

Fsc::Fsc(std::size_t nodes, std::size_t observations)
    : numNodes(nodes),
      actionMap(nodes, std::vector<Distribution<ActionId>>(observations)),
      memoryUpdate(nodes, std::vector<std::map<ActionId, Distribution<NodeId>>>(observations)) {}

Distribution<NodeId> const& Fsc::update(NodeId n, ObservationId z, ActionId a) const {
    auto const& updates = memoryUpdate[n][z];
    auto it = updates.find(a);
    if (it == updates.end()) {
        throw ModelError("controller has no memory update for node " + std::to_string(n) + ", observation " +
                         std::to_string(z) + ", action " + std::to_string(a));
    }
    return it->second;
}

void Fsc::validate(Pomdp const& m) const {
    if (numNodes == 0) throw ModelError("controller needs at least one node");
    if (initialNode >= numNodes) throw ModelError("initial node out of range");
    if (actionMap.size() != numNodes || memoryUpdate.size() != numNodes) throw ModelError("node tables have the wrong size");
    for (NodeId n = 0; n < numNodes; ++n) {
        if (actionMap[n].size() != m.numObservations || memoryUpdate[n].size() != m.numObservations) {
            throw ModelError("observation tables have the wrong size");
        }
        for (ObservationId z = 0; z < m.numObservations; ++z) {
            auto enabled = m.actionsOf(z);
            if (enabled.empty()) continue;
            Rational sum = 0;
            for (auto const& [a, p] : actionMap[n][z]) {
                if (!std::binary_search(enabled.begin(), enabled.end(), a)) {
                    throw ModelError("node " + std::to_string(n) + " chooses action " + m.mdp.actions.at(a) +
                                     " not available at observation " + std::to_string(z));
                }
                if (p < 0) throw ModelError("negative action probability");
                sum += p;
                Rational updateSum = 0;
                for (auto const& [target, q] : update(n, z, a)) {
                    if (target >= numNodes || q < 0) throw ModelError("invalid memory update");
                    updateSum += q;
                }
                if (updateSum != 1) throw ModelError("memory update does not sum to one");
            }
            if (sum != 1) {
                throw ModelError("action distribution of node " + std::to_string(n) + " at observation " +
                                 std::to_string(z) + " sums to " + toString(sum));
            }
        }
    }
}

bool Fsc::respectsCounter() const {
    for (NodeId n = 0; n < numNodes; ++n) {
        for (auto const& byAction : memoryUpdate[n]) {
            for (auto const& [a, dist] : byAction) {
                for (auto const& [target, q] : dist) {
                    if (q != 0 && target != n && target != n + 1) return false;
                }
            }
        }
    }
    return true;
}

Fsc uniformFsc(Pomdp const& m, std::size_t k) {
    Fsc fsc(k, m.numObservations);
    for (NodeId n = 0; n < k; ++n) {
        for (ObservationId z = 0; z < m.numObservations; ++z) {
            auto enabled = m.actionsOf(z);
            for (ActionId a : enabled) {
                fsc.actionMap[n][z].emplace_back(a, Rational(1, enabled.size()));
                auto& dist = fsc.memoryUpdate[n][z][a];
                for (NodeId t = 0; t < k; ++t) dist.emplace_back(t, Rational(1, k));
            }
        }
    }
    return fsc;
}

Fsc withExtraNodes(Fsc const& fsc, Pomdp const& m, std::size_t extra) {
    Fsc out(fsc.numNodes + extra, m.numObservations);
    out.initialNode = fsc.initialNode;
    for (NodeId n = 0; n < out.numNodes; ++n) {
        NodeId source = n < fsc.numNodes ? n : 0;
        out.actionMap[n] = fsc.actionMap[source];
        out.memoryUpdate[n] = fsc.memoryUpdate[source];
    }
    return out;
}

namespace {

std::optional<ActionId> actionId(Pomdp const& m, std::string_view label) {
    auto it = std::lower_bound(m.mdp.actions.begin(), m.mdp.actions.end(), label);
    if (it == m.mdp.actions.end() || *it != label) return std::nullopt;
    return static_cast<ActionId>(it - m.mdp.actions.begin());
}

[[noreturn]] void fail(SourceLine const& line, std::size_t token, std::string const& message) {
    throw ParseError(message, line.number, token < line.tokens.size() ? line.tokens[token].column : 1);
}

std::uint64_t number(SourceLine const& line, std::size_t token, std::uint64_t bound) {
    std::string text(line.tokens[token].text);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        text.size() > 18) {
        fail(line, token, "expected a non-negative integer");
    }
    std::uint64_t v = std::stoull(text);
    if (v >= bound) fail(line, token, "index " + text + " out of range");
    return v;
}

std::pair<std::string_view, Rational> weighted(SourceLine const& line, std::size_t token) {
    std::string_view t = line.tokens[token].text;
    auto colon = t.rfind(':');
    if (colon == std::string_view::npos) fail(line, token, "expected '<item>:<probability>'");
    try {
        return {t.substr(0, colon), parseRational(t.substr(colon + 1))};
    } catch (std::invalid_argument const&) {
        fail(line, token, "malformed probability");
    }
}

}  // namespace

Fsc parseFsc(std::string_view text, Pomdp const& m) {
    auto lines = splitLines(text);
    if (lines.empty() || lines.front().tokens.front().text != "fsc") {
        throw ParseError("expected 'fsc' header", lines.empty() ? 1 : lines.front().number, 1);
    }
    std::optional<Fsc> fsc;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto const& line = lines[i];
        std::string_view key = line.tokens.front().text;
        if (key == "nodes") {
            if (line.tokens.size() != 2) fail(line, 0, "expected 'nodes <k>'");
            std::uint64_t k = number(line, 1, 1u << 20);
            if (k == 0) fail(line, 1, "a controller needs at least one node");
            fsc.emplace(k, m.numObservations);
            continue;
        }
        if (!fsc) fail(line, 0, "'nodes' must come first");
        if (key == "init") {
            if (line.tokens.size() != 2) fail(line, 0, "expected 'init <n>'");
            fsc->initialNode = static_cast<NodeId>(number(line, 1, fsc->numNodes));
        } else if (key == "act") {
            if (line.tokens.size() < 4) fail(line, 0, "expected 'act <n> <obs> <action>:<prob> ...'");
            auto n = number(line, 1, fsc->numNodes);
            auto z = number(line, 2, m.numObservations);
            for (std::size_t t = 3; t < line.tokens.size(); ++t) {
                auto [label, p] = weighted(line, t);
                auto a = actionId(m, label);
                if (!a) fail(line, t, "unknown action '" + std::string(label) + "'");
                fsc->actionMap[n][z].emplace_back(*a, p);
            }
            canonicalizeDistribution(fsc->actionMap[n][z]);
        } else if (key == "upd") {
            if (line.tokens.size() < 5) fail(line, 0, "expected 'upd <n> <obs> <action> <n'>:<prob> ...'");
            auto n = number(line, 1, fsc->numNodes);
            auto z = number(line, 2, m.numObservations);
            auto a = actionId(m, line.tokens[3].text);
            if (!a) fail(line, 3, "unknown action '" + std::string(line.tokens[3].text) + "'");
            auto& dist = fsc->memoryUpdate[n][z][*a];
            for (std::size_t t = 4; t < line.tokens.size(); ++t) {
                auto [target, p] = weighted(line, t);
                std::uint64_t node = 0;
                try {
                    node = std::stoull(std::string(target));
                } catch (std::exception const&) {
                    fail(line, t, "malformed node");
                }
                if (node >= fsc->numNodes) fail(line, t, "node out of range");
                dist.emplace_back(static_cast<NodeId>(node), p);
            }
            canonicalizeDistribution(dist);
        } else {
            fail(line, 0, "unknown keyword '" + std::string(key) + "'");
        }
    }
    if (!fsc) throw ParseError("missing 'nodes'", lines.back().number, 1);
    fsc->validate(m);
    return *fsc;
}

std::string writeFsc(Fsc const& fsc, Pomdp const& m) {
    std::ostringstream out;
    out << "fsc\nnodes " << fsc.numNodes << "\ninit " << fsc.initialNode << '\n';
    for (NodeId n = 0; n < fsc.numNodes; ++n) {
        for (ObservationId z = 0; z < m.numObservations; ++z) {
            if (fsc.actionMap[n][z].empty()) continue;
            out << "act " << n << ' ' << z;
            for (auto const& [a, p] : fsc.actionMap[n][z]) out << ' ' << m.mdp.actions[a] << ':' << toString(p);
            out << '\n';
        }
    }
    for (NodeId n = 0; n < fsc.numNodes; ++n) {
        for (ObservationId z = 0; z < m.numObservations; ++z) {
            for (auto const& [a, dist] : fsc.memoryUpdate[n][z]) {
                out << "upd " << n << ' ' << z << ' ' << m.mdp.actions[a];
                for (auto const& [t, p] : dist) out << ' ' << t << ':' << toString(p);
                out << '\n';
            }
        }
    }
    return out.str();
}

std::optional<StateId> InducedMc::find(StateId s, NodeId n) const {
    std::uint64_t key = static_cast<std::uint64_t>(s) * numNodes + n;
    auto it = std::lower_bound(productIndex.begin(), productIndex.end(), key);
    if (it == productIndex.end() || *it != key) return std::nullopt;
    return static_cast<StateId>(it - productIndex.begin());
}

InducedMc inducedMc(Pomdp const& m, Fsc const& fsc) {
    std::size_t k = fsc.numNodes;
    auto key = [k](StateId s, NodeId n) { return static_cast<std::uint64_t>(s) * k + n; };

    // Rows over product keys, discovered breadth-first.
    std::map<std::uint64_t, std::vector<Transition<Rational>>> rows;
    std::map<std::uint64_t, Rational> rewards;
    std::deque<std::uint64_t> queue{key(m.mdp.initial, fsc.initialNode)};
    rows[queue.front()];
    while (!queue.empty()) {
        std::uint64_t current = queue.front();
        queue.pop_front();
        StateId s = static_cast<StateId>(current / k);
        NodeId n = static_cast<NodeId>(current % k);
        ObservationId z = m.observation[s];
        std::vector<Transition<Rational>> row;
        Rational reward = 0;
        for (auto const& [a, pa] : fsc.actions(n, z)) {
            Choice const* choice = m.mdp.findChoice(s, a);
            if (!choice) {
                throw ModelError("controller chooses action " + m.mdp.actions.at(a) + " unavailable at state " +
                                 std::to_string(s));
            }
            reward += pa * choice->reward;
            auto const& update = fsc.update(n, z, a);
            for (auto const& t : choice->distribution) {
                for (auto const& [next, pn] : update) {
                    row.push_back({static_cast<StateId>(key(t.target, next)), Rational(pa * t.value * pn)});
                }
            }
        }
        canonicalizeRow(row);
        for (auto const& t : row) {
            if (rows.try_emplace(t.target).second) queue.push_back(t.target);
        }
        rows[current] = std::move(row);
        rewards[current] = reward;
    }

    InducedMc result;
    result.numNodes = k;
    for (auto const& [product, row] : rows) result.productIndex.push_back(product);
    auto index = [&](std::uint64_t product) {
        return static_cast<StateId>(std::lower_bound(result.productIndex.begin(), result.productIndex.end(), product) -
                                    result.productIndex.begin());
    };
    Mc<Rational>& mc = result.mc;
    mc.rows.resize(rows.size());
    bool anyReward = m.mdp.hasRewards();
    for (auto const& [product, row] : rows) {
        StateId i = index(product);
        for (auto const& t : row) mc.rows[i].push_back({index(t.target), t.value});
        if (anyReward) mc.rewards.push_back(rewards[product]);
        StateId s = static_cast<StateId>(product / k);
        if (contains(m.mdp.goal, s)) mc.goal.push_back(i);
        if (contains(m.mdp.bad, s)) mc.bad.push_back(i);
    }
    mc.initial = index(key(m.mdp.initial, fsc.initialNode));
    return result;
}

}  // namespace fscsynth
