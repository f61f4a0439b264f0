#pragma once

#include <string>
#include <vector>

#include "fscsynth/models/mc.h"
#include "fscsynth/models/pmc.h"

namespace fscsynth {

struct InstantiatedMc {
    Mc<Rational> mc;
    bool wellDefined = true;
    // One human-readable line per offending row or parameter group.
    std::vector<std::string> diagnostics;
};

/// Substitutes `u` into every entry and reward. Entries that evaluate to zero are dropped.
/// Throws MissingParameterError when `u` is not total on the parameters in use.
InstantiatedMc applyInstantiation(Pmc const& pmc, Instantiation const& u);

struct WellDefinedness {
    bool wellDefined = false;
    bool graphPreserving = false;
    bool epsPreserving = false;
};

/// Well-defined: rows are distributions, parameters lie in their intervals and every
/// parameter group is a sub-distribution. Graph-preserving: every parametric entry and
/// every group coordinate (remainder included) lies in (0,1). Eps-preserving: every
/// group coordinate lies in [eps, 1-eps].
WellDefinedness checkWellDefined(Pmc const& pmc, Instantiation const& u, Rational const& eps);

}  // namespace fscsynth
