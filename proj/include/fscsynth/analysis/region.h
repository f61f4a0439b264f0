#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fscsynth/analysis/mc_check.h"
#include "fscsynth/models/pmc.h"
#include "fscsynth/models/specification.h"

namespace fscsynth {

struct Interval {
    Rational lower;
    Rational upper;

    friend bool operator==(Interval const&, Interval const&) = default;
};

/// Box of parameter values, indexed by parameter id.
struct Region {
    std::vector<Interval> bounds;

    /// Every parameter in [eps, 1 - eps].
    static Region uniform(std::size_t numParams, Rational const& eps);
    bool contains(Instantiation const& u) const;
    friend bool operator==(Region const&, Region const&) = default;
};

/// Lines `name in [lo, hi]`; every parameter must be covered.
Region parseRegion(std::string_view text, ParameterTable const& params);
std::string writeRegion(Region const& region, ParameterTable const& params);

struct RegionBounds {
    Value<Rational> lower;
    Value<Rational> upper;
};

/// Sound bounds on the specification value over all well-defined instantiations in the
/// region. Each row is relaxed independently: its parameters range over the box
/// intersected with the parameter groups' simplices, so rows must be affine in the
/// parameters (simple, one-node standard or substituted pMCs). Bounds are exact optima
/// of the relaxation. Throws std::invalid_argument for regions outside (0,1), regions
/// without well-defined points, and non-affine rows.
RegionBounds regionBounds(Pmc const& pmc, Region const& region, Specification const& spec);

struct AbsenceResult {
    bool absent = false;   // no instantiation in the region satisfies the specification
    // Relevant bound (upper for lower-bound specifications, lower otherwise); when
    // splitting, the bound of the first region that could not be excluded.
    Value<Rational> bound;
    std::size_t regionsChecked = 0;
};

/// Tries to exclude the region via regionBounds, splitting the widest interval in half
/// up to `maxDepth` times along every branch.
AbsenceResult proveAbsence(Pmc const& pmc, Specification const& spec, Region const& region,
                           std::size_t maxDepth = 0);

}  // namespace fscsynth
