#include "fscsynth/synthesis/oracle.h"

#include <stdexcept>
#include <string>

namespace fscsynth {

namespace {

// Whether `a` is strictly better than `b` in direction `d`.
bool better(Value<Rational> const& a, Value<Rational> const& b, Direction d) {
    if (a.infinite || b.infinite) {
        if (a.infinite == b.infinite) return false;
        return d == Direction::Maximize ? a.infinite : b.infinite;
    }
    return d == Direction::Maximize ? a.value > b.value : a.value < b.value;
}

}  // namespace

double deterministicFscCount(Pomdp const& m, std::size_t k) {
    double count = 1;
    for (ObservationId z = 0; z < m.numObservations; ++z) {
        auto enabled = m.actionsOf(z);
        if (enabled.empty()) continue;
        for (std::size_t n = 0; n < k; ++n) count *= static_cast<double>(enabled.size() * k);
    }
    return count;
}

OracleResult bruteForceOracle(Pomdp const& m, std::size_t k, Specification const& spec) {
    if (k == 0) throw std::invalid_argument("controller needs at least one node");
    double count = deterministicFscCount(m, k);
    if (count > kOracleLimit) {
        throw std::length_error("enumeration of " + std::to_string(count) + " deterministic controllers exceeds the limit");
    }

    struct Slot {
        ObservationId z;
        NodeId n;
        std::vector<ActionId> actions;
    };
    std::vector<Slot> slots;
    for (ObservationId z = 0; z < m.numObservations; ++z) {
        auto enabled = m.actionsOf(z);
        if (enabled.empty()) continue;
        for (NodeId n = 0; n < k; ++n) slots.push_back({z, n, enabled});
    }

    Direction direction = spec.searchDirection();
    OracleResult result;
    std::vector<std::size_t> digit(slots.size(), 0);
    bool first = true;
    while (true) {
        Fsc fsc(k, m.numObservations);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            auto const& s = slots[i];
            ActionId a = s.actions[digit[i] / k];
            auto target = static_cast<NodeId>(digit[i] % k);
            fsc.actionMap[s.n][s.z] = {{a, Rational(1)}};
            fsc.memoryUpdate[s.n][s.z][a] = {{target, Rational(1)}};
        }
        auto value = checkMc(inducedMc(m, fsc).mc, spec);
        ++result.enumerated;
        if (first || better(value, result.value, direction)) {
            result.fsc = std::move(fsc);
            result.value = value;
            first = false;
        }

        std::size_t i = 0;
        for (; i < slots.size(); ++i) {
            if (++digit[i] < slots[i].actions.size() * k) break;
            digit[i] = 0;
        }
        if (i == slots.size()) break;
    }
    return result;
}

}  // namespace fscsynth
