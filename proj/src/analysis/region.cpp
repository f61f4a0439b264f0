#include "fscsynth/analysis/region.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fscsynth/models/errors.h"
#include "fscsynth/models/io.h"
#include "policy_iteration.h"

namespace fscsynth {

Region Region::uniform(std::size_t numParams, Rational const& eps) {
    return Region{std::vector<Interval>(numParams, Interval{eps, Rational(1) - eps})};
}

bool Region::contains(Instantiation const& u) const {
    for (ParamId p = 0; p < bounds.size(); ++p) {
        if (!u.has(p) || u.at(p) < bounds[p].lower || u.at(p) > bounds[p].upper) return false;
    }
    return true;
}

Region parseRegion(std::string_view text, ParameterTable const& params) {
    Region region;
    region.bounds.resize(params.size());
    std::vector<char> seen(params.size(), 0);
    for (auto const& line : splitLines(text)) {
        std::string s(line.text);
        auto in = s.find(" in ");
        auto open = s.find('[');
        auto comma = s.find(',');
        auto close = s.find(']');
        if (in == std::string::npos || open == std::string::npos || comma == std::string::npos ||
            close == std::string::npos || !(in < open && open < comma && comma < close)) {
            throw ParseError("expected '<param> in [<lo>, <hi>]'", line.number, line.tokens.front().column);
        }
        auto trim = [](std::string v) {
            v.erase(0, v.find_first_not_of(" \t"));
            v.erase(v.find_last_not_of(" \t") + 1);
            return v;
        };
        std::string name = trim(s.substr(0, in));
        auto id = params.find(name);
        if (!id) throw ParseError("unknown parameter '" + name + "'", line.number, line.tokens.front().column);
        try {
            region.bounds[*id] = {parseRational(trim(s.substr(open + 1, comma - open - 1))),
                                  parseRational(trim(s.substr(comma + 1, close - comma - 1)))};
        } catch (std::invalid_argument const&) {
            throw ParseError("malformed interval bound", line.number, line.tokens.front().column + open);
        }
        seen[*id] = 1;
    }
    for (ParamId p = 0; p < params.size(); ++p) {
        if (!seen[p]) throw ParseError("parameter '" + params.name(p) + "' has no interval", 1, 1);
    }
    return region;
}

std::string writeRegion(Region const& region, ParameterTable const& params) {
    std::ostringstream out;
    for (ParamId p = 0; p < region.bounds.size(); ++p) {
        out << params.name(p) << " in [" << toString(region.bounds[p].lower) << ", "
            << toString(region.bounds[p].upper) << "]\n";
    }
    return out.str();
}

namespace {

using Gain = std::pair<Rational, Rational>;

/// A pMC row with affine entries: entry_t(u) = constant_t + sum_i coefficient_t[i] * u[params[i]].
struct AffineRow {
    std::vector<ParamId> params;
    std::vector<StateId> targets;
    std::vector<Rational> constant;
    std::vector<std::vector<Rational>> coefficient;
    Rational rewardConstant = 0;
    std::vector<Rational> rewardCoefficient;
};

class RelaxedPmc : public detail::ChoiceModel {
   public:
    RelaxedPmc(Pmc const& pmc, Region const& region) : region_(region) {
        std::size_t numParams = pmc.parameters.size();
        if (region.bounds.size() != numParams) throw std::invalid_argument("region does not cover every parameter");
        for (auto const& b : region.bounds) {
            if (b.lower <= 0 || b.upper >= 1 || b.lower > b.upper) {
                throw std::invalid_argument("region must lie inside (0,1) with lower <= upper");
            }
        }
        groupOf_.assign(numParams, 0);
        auto groups = pmc.effectiveGroups();
        for (std::size_t g = 0; g < groups.size(); ++g) {
            Rational budget = 1;
            for (ParamId p : groups[g]) {
                groupOf_[p] = g;
                budget -= region.bounds[p].lower;
            }
            if (budget < 0) throw std::invalid_argument("region contains no well-defined instantiation");
            budget_.push_back(budget);
        }
        for (StateId s = 0; s < pmc.numStates(); ++s) rows_.push_back(makeRow(pmc, s));
    }

    std::size_t numStates() const override { return rows_.size(); }

    std::vector<StateId> possibleSuccessors(StateId s) const override {
        auto const& row = rows_[s];
        std::vector<StateId> out;
        for (std::size_t t = 0; t < row.targets.size(); ++t) {
            std::vector<Gain> gains;
            for (auto const& c : row.coefficient[t]) gains.emplace_back(c, Rational(0));
            if (entry(row, t, vertex(row, gains)) > 0) out.push_back(row.targets[t]);
        }
        return out;
    }

    bool canStayWithin(StateId s, std::vector<char> const& inside) const override {
        auto const& row = rows_[s];
        std::vector<Gain> gains(row.params.size(), {Rational(0), Rational(0)});
        for (std::size_t t = 0; t < row.targets.size(); ++t) {
            if (inside[row.targets[t]]) continue;
            for (std::size_t i = 0; i < row.params.size(); ++i) gains[i].first -= row.coefficient[t][i];
        }
        auto u = vertex(row, gains);
        for (std::size_t t = 0; t < row.targets.size(); ++t) {
            if (!inside[row.targets[t]] && entry(row, t, u) != 0) return false;
        }
        return true;
    }

    detail::ConcreteChoice best(StateId s, std::vector<Rational> const& x, std::vector<char> const& forbidden,
                                Direction direction, bool withReward) const override {
        auto const& row = rows_[s];
        std::vector<Gain> gains(row.params.size(), {Rational(0), Rational(0)});
        for (std::size_t i = 0; i < row.params.size(); ++i) {
            Rational objective = withReward ? row.rewardCoefficient[i] : Rational(0);
            for (std::size_t t = 0; t < row.targets.size(); ++t) {
                if (forbidden[row.targets[t]]) {
                    gains[i].first -= row.coefficient[t][i];
                } else {
                    objective += row.coefficient[t][i] * x[row.targets[t]];
                }
            }
            gains[i].second = direction == Direction::Maximize ? objective : Rational(-objective);
        }
        auto u = vertex(row, gains);
        detail::ConcreteChoice choice;
        for (std::size_t t = 0; t < row.targets.size(); ++t) {
            Rational p = entry(row, t, u);
            if (p != 0) choice.row.push_back({row.targets[t], p});
        }
        choice.reward = row.rewardConstant;
        for (std::size_t i = 0; i < u.size(); ++i) choice.reward += row.rewardCoefficient[i] * u[i];
        choice.point = std::move(u);
        return choice;
    }

   private:
    AffineRow makeRow(Pmc const& pmc, StateId s) const {
        AffineRow row;
        std::vector<Polynomial const*> entries;
        for (auto const& t : pmc.rows[s]) entries.push_back(&t.value);
        Polynomial const* reward = pmc.hasRewards() ? &pmc.rewards[s] : nullptr;
        std::vector<ParamId> params;
        for (auto const* e : entries) {
            if (!e->isAffine()) throw std::invalid_argument("row of state " + std::to_string(s) + " is not affine");
            for (ParamId p : e->parameters()) params.push_back(p);
        }
        if (reward) {
            if (!reward->isAffine()) throw std::invalid_argument("reward of state " + std::to_string(s) + " is not affine");
            for (ParamId p : reward->parameters()) params.push_back(p);
        }
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end()), params.end());
        row.params = params;
        auto coefficients = [&](Polynomial const& poly) {
            std::vector<Rational> c;
            for (ParamId p : params) c.push_back(poly.coefficient(Monomial::variable(p)));
            return c;
        };
        for (auto const& t : pmc.rows[s]) {
            row.targets.push_back(t.target);
            row.constant.push_back(t.value.constantTerm());
            row.coefficient.push_back(coefficients(t.value));
        }
        if (reward) {
            row.rewardConstant = reward->constantTerm();
            row.rewardCoefficient = coefficients(*reward);
        } else {
            row.rewardCoefficient.assign(params.size(), Rational(0));
        }
        return row;
    }

    /// Maximizer of the lexicographic gain over box and group budgets: every parameter
    /// starts at its lower bound and positive-gain parameters are raised greedily.
    std::vector<Rational> vertex(AffineRow const& row, std::vector<Gain> const& gains) const {
        std::vector<Rational> u;
        for (ParamId p : row.params) u.push_back(region_.bounds[p].lower);
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < row.params.size(); ++i) {
            if (gains[i] > Gain(Rational(0), Rational(0))) order.push_back(i);
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gains[a] > gains[b]; });
        std::map<std::size_t, Rational> spent;
        for (std::size_t i : order) {
            ParamId p = row.params[i];
            std::size_t g = groupOf_[p];
            Rational available = budget_[g] - spent[g];
            Rational increase = std::min<Rational>(region_.bounds[p].upper - region_.bounds[p].lower, available);
            u[i] += increase;
            spent[g] += increase;
        }
        return u;
    }

    static Rational entry(AffineRow const& row, std::size_t t, std::vector<Rational> const& u) {
        Rational v = row.constant[t];
        for (std::size_t i = 0; i < u.size(); ++i) v += row.coefficient[t][i] * u[i];
        return v;
    }

    Region const& region_;
    std::vector<std::size_t> groupOf_;
    std::vector<Rational> budget_;
    std::vector<AffineRow> rows_;
};

Value<Rational> optimize(RelaxedPmc const& model, Pmc const& pmc, Specification const& spec, Direction direction) {
    auto optimum = spec.kind == SpecKind::ExpectedReward
                       ? detail::optimizeReward(model, pmc.goal, direction)
                       : detail::optimizeReach(model, pmc.goal, spec.avoidBad ? pmc.bad : StateSet{}, direction);
    return optimum.values[pmc.initial];
}

bool lessValue(Value<Rational> const& a, Value<Rational> const& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
}

AbsenceResult prove(Pmc const& pmc, Specification const& spec, Region const& region, std::size_t depth) {
    auto bounds = regionBounds(pmc, region, spec);
    AbsenceResult result;
    result.regionsChecked = 1;
    result.bound = spec.isLowerBound() ? bounds.upper : bounds.lower;
    result.absent = !satisfies(spec, result.bound);
    if (result.absent || depth == 0) return result;

    std::size_t widest = 0;
    for (std::size_t p = 1; p < region.bounds.size(); ++p) {
        auto width = [&](std::size_t i) { return region.bounds[i].upper - region.bounds[i].lower; };
        if (width(p) > width(widest)) widest = p;
    }
    if (region.bounds.empty() || region.bounds[widest].lower == region.bounds[widest].upper) return result;
    Rational middle = (region.bounds[widest].lower + region.bounds[widest].upper) / 2;
    Region low = region, high = region;
    low.bounds[widest].upper = middle;
    high.bounds[widest].lower = middle;
    AbsenceResult combined;
    combined.absent = true;
    bool first = true;
    for (auto const* part : {&low, &high}) {
        auto sub = prove(pmc, spec, *part, depth - 1);
        combined.regionsChecked += sub.regionsChecked;
        if (!sub.absent) {
            combined.absent = false;
            combined.bound = sub.bound;
            break;
        }
        // Overall bound: the loosest over the excluded parts.
        bool looser = spec.isLowerBound() ? lessValue(combined.bound, sub.bound) : lessValue(sub.bound, combined.bound);
        if (first || looser) combined.bound = sub.bound;
        first = false;
    }
    combined.regionsChecked += result.regionsChecked;
    return combined;
}

}  // namespace

RegionBounds regionBounds(Pmc const& pmc, Region const& region, Specification const& spec) {
    RelaxedPmc model(pmc, region);
    return {optimize(model, pmc, spec, Direction::Minimize), optimize(model, pmc, spec, Direction::Maximize)};
}

AbsenceResult proveAbsence(Pmc const& pmc, Specification const& spec, Region const& region, std::size_t maxDepth) {
    return prove(pmc, spec, region, maxDepth);
}

}  // namespace fscsynth
