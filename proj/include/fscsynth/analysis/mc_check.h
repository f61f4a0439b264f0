#pragma once

#include <string>
#include <vector>

#include "fscsynth/analysis/qualitative.h"
#include "fscsynth/models/mc.h"
#include "fscsynth/models/specification.h"

namespace fscsynth {

/// A probability or an expected reward, which may be infinite.
template <typename V>
struct Value {
    V value{};
    bool infinite = false;

    friend bool operator==(Value const&, Value const&) = default;
};

bool satisfies(Specification const& spec, Value<Rational> const& v);
bool satisfies(Specification const& spec, Value<double> const& v);
/// "1/3 (0.333333)" or "inf".
std::string toString(Value<Rational> const& v);
std::string toString(Value<double> const& v);

struct FloatSolverConfig {
    double tolerance = 1e-12;
    std::size_t maxIterations = 1000000;
};

/// Exact solution of the square system A x = b by fraction-free elimination.
/// Throws std::domain_error for singular systems.
std::vector<Rational> solveExact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

/// Probability of "not bad until goal" (or "eventually goal" without avoidance) for every state.
/// With precomputed qualitative sets (bad states belong to the zero set when avoided).
std::vector<Rational> reachAvoidAll(Mc<Rational> const& mc, QualitativeSets const& sets);
std::vector<Rational> reachAvoidAll(Mc<Rational> const& mc, bool avoidBad = true);
std::vector<double> reachAvoidAll(Mc<double> const& mc, QualitativeSets const& sets,
                                  FloatSolverConfig const& config = {});
std::vector<double> reachAvoidAll(Mc<double> const& mc, bool avoidBad = true, FloatSolverConfig const& config = {});

Rational reachAvoidProb(Mc<Rational> const& mc, bool avoidBad = true);
double reachAvoidProb(Mc<double> const& mc, bool avoidBad = true);

/// Expected reward accumulated before reaching the goal; infinite where the goal is
/// reached with probability below one.
std::vector<Value<Rational>> expectedRewardAll(Mc<Rational> const& mc);
std::vector<Value<double>> expectedRewardAll(Mc<double> const& mc, FloatSolverConfig const& config = {});
/// With precomputed sets for plain reachability of the goal.
std::vector<Value<Rational>> expectedRewardAll(Mc<Rational> const& mc, QualitativeSets const& sets);
std::vector<Value<double>> expectedRewardAll(Mc<double> const& mc, QualitativeSets const& sets,
                                             FloatSolverConfig const& config = {});

Value<Rational> expectedReward(Mc<Rational> const& mc);
Value<double> expectedReward(Mc<double> const& mc);

/// Value of `spec` at the initial state of `mc`.
Value<Rational> checkMc(Mc<Rational> const& mc, Specification const& spec);
Value<double> checkMc(Mc<double> const& mc, Specification const& spec);

}  // namespace fscsynth
