#pragma once

#include "fscsynth/analysis/mc_check.h"
#include "fscsynth/fsc/fsc.h"
#include "fscsynth/models/pomdp.h"
#include "fscsynth/models/specification.h"

namespace fscsynth {

struct OracleResult {
    Fsc fsc;
    Value<Rational> value;
    std::size_t enumerated = 0;
};

inline constexpr double kOracleLimit = 1e7;

/// Number of deterministic k-FSCs: one action and one successor node per used
/// observation and node.
double deterministicFscCount(Pomdp const& m, std::size_t k);

/// Optimum over deterministic k-FSCs with initial node 0, in the specification's search
/// direction, by exhaustive exact model checking. The first optimal FSC in enumeration
/// order is returned. Throws std::length_error when the count exceeds kOracleLimit.
OracleResult bruteForceOracle(Pomdp const& m, std::size_t k, Specification const& spec);

}  // namespace fscsynth
