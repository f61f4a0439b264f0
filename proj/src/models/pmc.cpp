#include "fscsynth/models/pmc.h"

#include <algorithm>
#include <set>

#include "fscsynth/models/errors.h"

namespace fscsynth {

namespace {
Polynomial const kZero;
}

Polynomial const& Pmc::entry(StateId s, StateId t) const {
    auto const& row = rows[s];
    auto it = std::lower_bound(row.begin(), row.end(), t, [](auto const& tr, StateId x) { return tr.target < x; });
    return it != row.end() && it->target == t ? it->value : kZero;
}

bool Pmc::rowsSumToOne() const {
    for (auto const& row : rows) {
        Polynomial sum;
        for (auto const& t : row) sum += t.value;
        if (!sum.isOne()) return false;
    }
    return true;
}

bool Pmc::isSimple() const {
    for (auto const& row : rows) {
        std::set<ParamId> mentioned;
        for (auto const& t : row) {
            if (t.value.isConstant()) continue;
            auto params = t.value.parameters();
            if (params.size() != 1) return false;
            Polynomial p = Polynomial::variable(params.front());
            if (t.value != p && t.value != Polynomial(1) - p) return false;
            mentioned.insert(params.front());
        }
        if (mentioned.size() > 1) return false;
    }
    return true;
}

std::vector<std::vector<ParamId>> Pmc::effectiveGroups() const {
    std::vector<std::vector<ParamId>> result = groups;
    std::vector<char> covered(parameters.size(), 0);
    for (auto const& g : groups) {
        for (ParamId p : g) covered[p] = 1;
    }
    for (ParamId p = 0; p < parameters.size(); ++p) {
        if (!covered[p]) result.push_back({p});
    }
    return result;
}

void Pmc::validate() const {
    std::size_t n = rows.size();
    if (n == 0) throw ModelError("model has no states");
    if (initial >= n) throw ModelError("initial state " + std::to_string(initial) + " out of range");
    for (StateId s = 0; s < n; ++s) {
        if (rows[s].empty()) throw ModelError("deadlock state " + std::to_string(s) + " has no transitions");
        for (auto const& t : rows[s]) {
            if (t.target >= n) throw ModelError("transition to undeclared state " + std::to_string(t.target));
            for (ParamId p : t.value.parameters()) {
                if (p >= parameters.size()) throw ModelError("undeclared parameter id " + std::to_string(p));
            }
        }
        if (rows[s].size() == 1 && !rows[s].front().value.isOne()) {
            throw ModelError("state " + std::to_string(s) +
                             " has a single successor whose probability is not the constant 1 (trivial branch)");
        }
    }
    for (auto const* set : {&goal, &bad}) {
        for (StateId s : *set) {
            if (s >= n) throw ModelError("label refers to undeclared state " + std::to_string(s));
        }
    }
    for (StateId s : goal) {
        if (contains(bad, s)) throw ModelError("state " + std::to_string(s) + " is both goal and bad");
    }
    std::vector<char> grouped(parameters.size(), 0);
    for (auto const& g : groups) {
        for (ParamId p : g) {
            if (p >= parameters.size()) throw ModelError("group refers to undeclared parameter");
            if (grouped[p]) throw ModelError("parameter '" + parameters.name(p) + "' occurs in two groups");
            grouped[p] = 1;
        }
    }
    if (!rewards.empty() && rewards.size() != n) throw ModelError("reward vector does not cover every state");
}

}  // namespace fscsynth
