#include "fscsynth/analysis/mc_check.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fscsynth {

bool satisfies(Specification const& spec, Value<Rational> const& v) {
    return v.infinite ? spec.satisfiedByInfinity() : spec.satisfiedBy(v.value);
}

bool satisfies(Specification const& spec, Value<double> const& v) {
    return v.infinite ? spec.satisfiedByInfinity() : spec.satisfiedBy(v.value);
}

std::string toString(Value<Rational> const& v) {
    if (v.infinite) return "inf";
    return toString(v.value) + " (" + toDecimalString(v.value, 12) + ")";
}

std::string toString(Value<double> const& v) {
    if (v.infinite) return "inf";
    std::ostringstream out;
    out.precision(12);
    out << v.value;
    return out.str();
}

std::vector<Rational> solveExact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    std::size_t n = b.size();
    // Integer augmented matrix: each row scaled by the lcm of its denominators.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class scale = b[i].get_den();
        for (auto const& v : a[i]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j].get_num() * (scale / a[i][j].get_den());
        m[i][n] = b[i].get_num() * (scale / b[i].get_den());
    }
    mpz_class previous = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular linear system");
        std::swap(m[pivot], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            }
            m[i][k] = 0;
        }
        previous = m[k][k];
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational sum(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[i][j] != 0) sum -= Rational(m[i][j]) * x[j];
        }
        x[i] = sum / Rational(m[i][i]);
        x[i].canonicalize();
    }
    return x;
}

namespace {

QualitativeSets setsFor(Graph const& g, Mc<Rational> const& mc, bool avoidBad) {
    return qualitativeSets(g, mc.goal, avoidBad ? mc.bad : StateSet{});
}

/// Index of each uncertain state in the linear system, or -1.
std::vector<long> uncertainIndex(std::size_t n, QualitativeSets const& sets, std::vector<char> const& fixed) {
    auto zero = toMask(sets.zero, n);
    std::vector<long> index(n, -1);
    long next = 0;
    for (StateId s = 0; s < n; ++s) {
        if (!zero[s] && !fixed[s]) index[s] = next++;
    }
    return index;
}

}  // namespace

std::vector<Rational> reachAvoidAll(Mc<Rational> const& mc, QualitativeSets const& sets) {
    std::size_t n = mc.numStates();
    auto one = toMask(sets.one, n);
    auto index = uncertainIndex(n, sets, one);
    std::size_t size = 0;
    for (long i : index) size += i >= 0;
    std::vector<Rational> result(n, Rational(0));
    for (StateId s : sets.one) result[s] = 1;
    if (size == 0) return result;
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
    std::vector<Rational> b(size);
    for (StateId s = 0; s < n; ++s) {
        if (index[s] < 0) continue;
        auto i = static_cast<std::size_t>(index[s]);
        a[i][i] += 1;
        for (auto const& t : mc.rows[s]) {
            if (one[t.target]) {
                b[i] += t.value;
            } else if (index[t.target] >= 0) {
                a[i][static_cast<std::size_t>(index[t.target])] -= t.value;
            }
        }
    }
    auto x = solveExact(std::move(a), std::move(b));
    for (StateId s = 0; s < n; ++s) {
        if (index[s] >= 0) result[s] = x[static_cast<std::size_t>(index[s])];
    }
    return result;
}

std::vector<Rational> reachAvoidAll(Mc<Rational> const& mc, bool avoidBad) {
    return reachAvoidAll(mc, setsFor(graphOf(mc), mc, avoidBad));
}

std::vector<double> reachAvoidAll(Mc<double> const& mc, QualitativeSets const& sets,
                                  FloatSolverConfig const& config) {
    std::size_t n = mc.numStates();
    auto one = toMask(sets.one, n);
    auto index = uncertainIndex(n, sets, one);
    std::vector<double> x(n, 0.0);
    for (StateId s : sets.one) x[s] = 1.0;
    std::vector<StateId> uncertain;
    for (StateId s = 0; s < n; ++s) {
        if (index[s] >= 0) uncertain.push_back(s);
    }
    for (std::size_t iter = 0; iter < config.maxIterations && !uncertain.empty(); ++iter) {
        double delta = 0;
        for (StateId s : uncertain) {
            double v = 0;
            for (auto const& t : mc.rows[s]) v += t.value * x[t.target];
            delta = std::max(delta, std::abs(v - x[s]));
            x[s] = v;
        }
        if (delta < config.tolerance) break;
    }
    return x;
}

std::vector<double> reachAvoidAll(Mc<double> const& mc, bool avoidBad, FloatSolverConfig const& config) {
    auto sets = qualitativeSets(graphOf(mc), mc.goal, avoidBad ? mc.bad : StateSet{});
    return reachAvoidAll(mc, sets, config);
}

Rational reachAvoidProb(Mc<Rational> const& mc, bool avoidBad) { return reachAvoidAll(mc, avoidBad)[mc.initial]; }

double reachAvoidProb(Mc<double> const& mc, bool avoidBad) { return reachAvoidAll(mc, avoidBad)[mc.initial]; }

std::vector<Value<Rational>> expectedRewardAll(Mc<Rational> const& mc) {
    return expectedRewardAll(mc, qualitativeSets(graphOf(mc), mc.goal, {}));
}

std::vector<Value<Rational>> expectedRewardAll(Mc<Rational> const& mc, QualitativeSets const& sets) {
    std::size_t n = mc.numStates();
    auto one = toMask(sets.one, n);
    auto goal = toMask(mc.goal, n);
    std::vector<Value<Rational>> result(n);
    std::vector<long> index(n, -1);
    std::size_t size = 0;
    for (StateId s = 0; s < n; ++s) {
        if (!one[s]) {
            result[s].infinite = true;
        } else if (!goal[s]) {
            index[s] = static_cast<long>(size++);
        }
    }
    if (size == 0) return result;
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
    std::vector<Rational> b(size);
    for (StateId s = 0; s < n; ++s) {
        if (index[s] < 0) continue;
        auto i = static_cast<std::size_t>(index[s]);
        a[i][i] += 1;
        b[i] = mc.reward(s);
        for (auto const& t : mc.rows[s]) {
            if (index[t.target] >= 0) a[i][static_cast<std::size_t>(index[t.target])] -= t.value;
        }
    }
    auto x = solveExact(std::move(a), std::move(b));
    for (StateId s = 0; s < n; ++s) {
        if (index[s] >= 0) result[s].value = x[static_cast<std::size_t>(index[s])];
    }
    return result;
}

std::vector<Value<double>> expectedRewardAll(Mc<double> const& mc, FloatSolverConfig const& config) {
    return expectedRewardAll(mc, qualitativeSets(graphOf(mc), mc.goal, {}), config);
}

std::vector<Value<double>> expectedRewardAll(Mc<double> const& mc, QualitativeSets const& sets,
                                             FloatSolverConfig const& config) {
    std::size_t n = mc.numStates();
    auto one = toMask(sets.one, n);
    auto goal = toMask(mc.goal, n);
    std::vector<Value<double>> result(n);
    std::vector<StateId> uncertain;
    for (StateId s = 0; s < n; ++s) {
        if (!one[s]) {
            result[s].infinite = true;
        } else if (!goal[s]) {
            uncertain.push_back(s);
        }
    }
    for (std::size_t iter = 0; iter < config.maxIterations && !uncertain.empty(); ++iter) {
        double delta = 0;
        for (StateId s : uncertain) {
            double v = mc.reward(s);
            for (auto const& t : mc.rows[s]) v += t.value * result[t.target].value;
            delta = std::max(delta, std::abs(v - result[s].value) / std::max(1.0, std::abs(v)));
            result[s].value = v;
        }
        if (delta < config.tolerance) break;
    }
    return result;
}

Value<Rational> expectedReward(Mc<Rational> const& mc) { return expectedRewardAll(mc)[mc.initial]; }

Value<double> expectedReward(Mc<double> const& mc) { return expectedRewardAll(mc)[mc.initial]; }

Value<Rational> checkMc(Mc<Rational> const& mc, Specification const& spec) {
    if (spec.kind == SpecKind::ExpectedReward) return expectedReward(mc);
    return {reachAvoidProb(mc, spec.avoidBad), false};
}

Value<double> checkMc(Mc<double> const& mc, Specification const& spec) {
    if (spec.kind == SpecKind::ExpectedReward) return expectedReward(mc);
    return {reachAvoidProb(mc, spec.avoidBad), false};
}

}  // namespace fscsynth
