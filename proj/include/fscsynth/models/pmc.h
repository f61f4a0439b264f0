#pragma once

#include <vector>

#include "fscsynth/models/mc.h"
#include "fscsynth/models/polynomial.h"

namespace fscsynth {

/// Parametric Markov chain. Parameter groups list parameters whose values must
/// jointly form a sub-distribution (the omitted remainder being 1 minus their sum).
struct Pmc {
    using Row = std::vector<Transition<Polynomial>>;

    ParameterTable parameters;
    std::vector<Row> rows;
    StateId initial = 0;
    StateSet goal;
    StateSet bad;
    std::vector<std::vector<ParamId>> groups;
    // Empty when the chain carries no rewards.
    std::vector<Polynomial> rewards;

    std::size_t numStates() const { return rows.size(); }
    bool hasRewards() const { return !rewards.empty(); }
    Polynomial const& entry(StateId s, StateId t) const;

    /// Every row sums to the constant polynomial 1.
    bool rowsSumToOne() const;
    /// Every entry is a constant, p, or 1-p, and each row mentions at most one parameter.
    bool isSimple() const;
    /// Groups completed by singletons for every parameter not mentioned in any group.
    std::vector<std::vector<ParamId>> effectiveGroups() const;
    /// Rejects deadlocks, dangling ids, overlapping labels and trivial branches.
    void validate() const;

    friend bool operator==(Pmc const&, Pmc const&) = default;
};

}  // namespace fscsynth
