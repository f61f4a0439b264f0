#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "fscsynth/analysis/mc_check.h"
#include "fscsynth/models/pmc.h"
#include "fscsynth/models/specification.h"

namespace fscsynth {

struct SearchConfig {
    std::size_t swarmSize = 40;
    std::size_t maxIterations = 500;
    double inertia = 0.72;
    double cognitive = 1.49;
    double social = 1.49;
    // Every group coordinate, remainder included, stays at least epsilon.
    double epsilon = 1e-4;
    std::uint64_t seed = 0;
    std::optional<std::chrono::milliseconds> timeBudget;
    std::size_t threads = 1;
    // Stop at the first iteration whose best particle satisfies the specification.
    bool stopWhenSatisfied = true;

    /// Throws std::invalid_argument for swarms below 2 or epsilon outside (0, 0.5).
    void validate() const;
};

struct SearchResult {
    Instantiation best;
    // Float value found by the search and the exact value of the emitted instantiation.
    Value<double> value;
    Value<Rational> exactValue;
    bool satisfied = false;
    // Best value after each iteration (after the initial swarm for index 0).
    std::vector<double> trace;
    std::size_t evaluations = 0;
    std::size_t iterations = 0;
    bool budgetExhausted = false;
};

/// Maps a point of the unconstrained search space onto group coordinates: each
/// parameter group (with its remainder) gets softmax weights w and coordinates
/// eps + (1 - m eps) w, where m is the group size plus one.
class SimplexEncoding {
   public:
    SimplexEncoding(Pmc const& pmc, double epsilon);

    std::size_t dimension() const { return dimension_; }
    std::size_t numParameters() const { return numParams_; }
    /// Parameter values for a point of the search space.
    std::vector<double> decode(std::vector<double> const& point) const;

   private:
    std::vector<std::vector<ParamId>> groups_;
    std::size_t numParams_ = 0;
    std::size_t dimension_ = 0;
    double epsilon_;
};

/// Particle swarm search over well-defined, min-epsilon instantiations. Fitness is the
/// float specification value in the search direction; infinite expected rewards count
/// as 1e9. Results depend only on the configuration, not on the thread count.
SearchResult psoSearch(Pmc const& pmc, Specification const& spec, SearchConfig const& config = {});

}  // namespace fscsynth
