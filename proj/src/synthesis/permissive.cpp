#include "fscsynth/synthesis/permissive.h"

#include <algorithm>
#include <stdexcept>

#include "fscsynth/analysis/pmc_checker.h"

namespace fscsynth {

PermissiveResult permissiveFromWitnesses(Pmc const& pmc, Specification const& spec,
                                         std::vector<Instantiation> const& witnesses, Rational const& eps) {
    if (witnesses.empty()) throw std::invalid_argument("permissive region needs at least one witness");
    std::size_t numParams = pmc.parameters.size();
    PermissiveResult result;
    Region& region = result.candidate.region;
    region.bounds.resize(numParams);
    for (ParamId p = 0; p < numParams; ++p) {
        Rational lo = witnesses.front().at(p, &pmc.parameters), hi = lo;
        for (auto const& w : witnesses) {
            lo = std::min(lo, w.at(p, &pmc.parameters));
            hi = std::max(hi, w.at(p, &pmc.parameters));
        }
        lo = std::max(lo, eps);
        hi = std::min(hi, Rational(1 - eps));
        if (lo > hi) lo = hi;
        region.bounds[p] = {lo, hi};
    }
    for (auto const& w : witnesses) {
        if (region.contains(w)) result.candidate.witnesses.push_back(w);
    }

    bool point = std::all_of(region.bounds.begin(), region.bounds.end(),
                             [](Interval const& i) { return i.lower == i.upper; });
    if (point) {
        Instantiation u(numParams);
        for (ParamId p = 0; p < numParams; ++p) u.set(p, region.bounds[p].lower);
        PmcChecker checker(pmc, spec);
        result.bound = checker.check(u);
        result.verified = satisfies(spec, result.bound);
        return result;
    }
    try {
        auto bounds = regionBounds(pmc, region, spec);
        result.bound = spec.isLowerBound() ? bounds.lower : bounds.upper;
        result.verified = satisfies(spec, result.bound);
    } catch (std::invalid_argument const& e) {
        result.note = e.what();
    }
    return result;
}

PermissiveResult findPermissive(Pmc const& pmc, Specification const& spec, PermissiveConfig const& config) {
    if (config.maxSearches == 0) throw std::invalid_argument("permissive search needs at least one search");
    std::vector<Instantiation> found;
    std::optional<SearchResult> best;
    Direction direction = spec.searchDirection();
    auto improves = [direction](SearchResult const& a, SearchResult const& b) {
        if (a.satisfied != b.satisfied) return a.satisfied;
        auto const& x = a.exactValue;
        auto const& y = b.exactValue;
        if (x.infinite || y.infinite) {
            if (x.infinite == y.infinite) return false;
            return direction == Direction::Maximize ? x.infinite : y.infinite;
        }
        return direction == Direction::Maximize ? x.value > y.value : x.value < y.value;
    };

    for (std::size_t i = 0; i < config.maxSearches && found.size() < config.witnesses; ++i) {
        SearchConfig search = config.search;
        search.seed = config.search.seed + i;
        auto r = psoSearch(pmc, spec, search);
        if (r.satisfied && std::find(found.begin(), found.end(), r.best) == found.end()) found.push_back(r.best);
        if (!best || improves(r, *best)) best = std::move(r);
    }

    Rational eps(config.search.epsilon);
    if (found.size() < config.witnesses) {
        auto result = permissiveFromWitnesses(pmc, spec, {best->best}, eps);
        result.note = "found " + std::to_string(found.size()) + " of " + std::to_string(config.witnesses) +
                      " witnesses; point region around the best instantiation";
        return result;
    }
    return permissiveFromWitnesses(pmc, spec, found, eps);
}

}  // namespace fscsynth
