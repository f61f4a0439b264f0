#include "fscsynth/models/instantiate.h"

namespace fscsynth {

namespace {

// Values of a group's coordinates followed by the remainder 1 - sum.
std::vector<Rational> groupCoordinates(std::vector<ParamId> const& group, Instantiation const& u,
                                       ParameterTable const& names) {
    std::vector<Rational> coords;
    Rational rest = 1;
    for (ParamId p : group) {
        coords.push_back(u.at(p, &names));
        rest -= coords.back();
    }
    coords.push_back(rest);
    return coords;
}

}  // namespace

InstantiatedMc applyInstantiation(Pmc const& pmc, Instantiation const& u) {
    InstantiatedMc result;
    Mc<Rational>& mc = result.mc;
    mc.initial = pmc.initial;
    mc.goal = pmc.goal;
    mc.bad = pmc.bad;
    mc.rows.resize(pmc.numStates());
    for (StateId s = 0; s < pmc.numStates(); ++s) {
        Rational sum = 0;
        std::string offending;
        for (auto const& t : pmc.rows[s]) {
            Rational v = t.value.evaluate(u, &pmc.parameters);
            if (v < 0 || v > 1) offending += " ->" + std::to_string(t.target) + "=" + toString(v);
            sum += v;
            if (v != 0) mc.rows[s].push_back({t.target, std::move(v)});
        }
        if (sum != 1 || !offending.empty()) {
            result.wellDefined = false;
            result.diagnostics.push_back("state " + std::to_string(s) + ": row sums to " + toString(sum) +
                                         (offending.empty() ? "" : "; entries outside [0,1]:" + offending));
        }
    }
    for (auto const& group : pmc.effectiveGroups()) {
        auto coords = groupCoordinates(group, u, pmc.parameters);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            bool bounded = i < group.size()
                               ? coords[i] >= pmc.parameters[group[i]].lower && coords[i] <= pmc.parameters[group[i]].upper
                               : coords[i] >= 0;
            if (!bounded) {
                result.wellDefined = false;
                std::string members;
                for (ParamId p : group) members += (members.empty() ? "" : ", ") + pmc.parameters.name(p);
                result.diagnostics.push_back(
                    "parameters {" + members + "}: " +
                    (i < group.size() ? "value of " + pmc.parameters.name(group[i]) : std::string("remainder")) +
                    " is " + toString(coords[i]) + ", outside its admissible range");
            }
        }
    }
    if (pmc.hasRewards()) {
        for (auto const& r : pmc.rewards) mc.rewards.push_back(r.evaluate(u, &pmc.parameters));
    }
    return result;
}

WellDefinedness checkWellDefined(Pmc const& pmc, Instantiation const& u, Rational const& eps) {
    WellDefinedness w;
    w.wellDefined = applyInstantiation(pmc, u).wellDefined;
    w.graphPreserving = true;
    w.epsPreserving = true;
    for (auto const& row : pmc.rows) {
        for (auto const& t : row) {
            if (t.value.isConstant()) continue;
            Rational v = t.value.evaluate(u, &pmc.parameters);
            if (v <= 0 || v >= 1) w.graphPreserving = false;
        }
    }
    for (auto const& group : pmc.effectiveGroups()) {
        for (Rational const& c : groupCoordinates(group, u, pmc.parameters)) {
            if (c <= 0 || c >= 1) w.graphPreserving = false;
            if (c < eps || c > 1 - eps) w.epsPreserving = false;
        }
    }
    w.graphPreserving = w.graphPreserving && w.wellDefined;
    w.epsPreserving = w.epsPreserving && w.graphPreserving;
    return w;
}

}  // namespace fscsynth
