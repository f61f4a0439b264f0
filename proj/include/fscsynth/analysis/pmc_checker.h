#pragma once

#include <atomic>
#include <span>

#include "fscsynth/analysis/mc_check.h"
#include "fscsynth/models/pmc.h"
#include "fscsynth/models/specification.h"

namespace fscsynth {

/// Model checks instantiations of one pMC. Qualitative sets are computed once from the
/// graph of non-zero entries and reused; an instantiation that zeroes one of those
/// entries is analysed from scratch. Safe to call concurrently; `pmc` must outlive it.
class PmcChecker {
   public:
    PmcChecker(Pmc const& pmc, Specification const& spec, FloatSolverConfig config = {});

    Value<double> check(std::span<double const> u) const;
    Value<Rational> check(Instantiation const& u) const;

    QualitativeSets const& cachedSets() const { return sets_; }
    /// Number of checks that recomputed the qualitative sets.
    std::size_t recomputations() const { return recomputations_.load(); }
    Pmc const& pmc() const { return pmc_; }
    Specification const& specification() const { return spec_; }

   private:
    template <typename V>
    Value<V> solve(Mc<V> const& mc, bool boundary) const;

    Pmc const& pmc_;
    Specification spec_;
    FloatSolverConfig config_;
    QualitativeSets sets_;
    mutable std::atomic<std::size_t> recomputations_{0};
};

}  // namespace fscsynth
