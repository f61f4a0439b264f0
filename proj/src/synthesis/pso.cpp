#include "fscsynth/synthesis/pso.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "fscsynth/analysis/pmc_checker.h"
#include "fscsynth/models/instantiate.h"

namespace fscsynth {

namespace {

constexpr double kInfinitePenalty = 1e9;
constexpr double kPositionLimit = 20;
constexpr double kVelocityLimit = 4;

double fitness(Value<double> const& v, Direction direction) {
    if (direction == Direction::Maximize) return v.infinite ? kInfinitePenalty : v.value;
    return v.infinite ? -kInfinitePenalty : -v.value;
}

// Runs f(i) for i in [0, n) on up to `threads` workers, in contiguous blocks.
template <typename F>
void parallelFor(std::size_t n, std::size_t threads, F const& f) {
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::jthread> workers;
    std::size_t block = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        std::size_t lo = t * block, hi = std::min(n, lo + block);
        if (lo >= hi) break;
        workers.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
}

}  // namespace

void SearchConfig::validate() const {
    if (swarmSize < 2) throw std::invalid_argument("swarm size must be at least 2");
    if (!(epsilon > 0 && epsilon < 0.5)) throw std::invalid_argument("epsilon must lie in (0, 0.5)");
}

SimplexEncoding::SimplexEncoding(Pmc const& pmc, double epsilon)
    : groups_(pmc.effectiveGroups()), numParams_(pmc.parameters.size()), epsilon_(epsilon) {
    for (auto const& g : groups_) dimension_ += g.size() + 1;
    // A hair above epsilon so rounding never pushes a coordinate below it.
    epsilon_ = epsilon * (1 + 1e-9);
}

std::vector<double> SimplexEncoding::decode(std::vector<double> const& point) const {
    std::vector<double> values(numParams_, 0.0);
    std::size_t offset = 0;
    for (auto const& g : groups_) {
        std::size_t m = g.size() + 1;
        double top = *std::max_element(point.begin() + offset, point.begin() + offset + m);
        double total = 0;
        std::vector<double> w(m);
        for (std::size_t i = 0; i < m; ++i) total += w[i] = std::exp(point[offset + i] - top);
        double scale = 1 - static_cast<double>(m) * epsilon_;
        for (std::size_t i = 0; i + 1 < m; ++i) values[g[i]] = epsilon_ + scale * (w[i] / total);
        offset += m;
    }
    return values;
}

SearchResult psoSearch(Pmc const& pmc, Specification const& spec, SearchConfig const& config) {
    config.validate();
    auto start = std::chrono::steady_clock::now();
    PmcChecker checker(pmc, spec);
    SimplexEncoding encoding(pmc, config.epsilon);
    Direction direction = spec.searchDirection();
    SearchResult result;

    auto finish = [&](std::vector<double> const& values, Value<double> const& value) {
        result.best = Instantiation::fromDouble(values);
        result.value = value;
        result.exactValue = checker.check(result.best);
        result.satisfied = satisfies(spec, result.exactValue);
        if (!checkWellDefined(pmc, result.best, Rational(config.epsilon)).epsPreserving) {
            throw std::logic_error("search emitted an instantiation that is not min-epsilon");
        }
        return result;
    };

    std::size_t dim = encoding.dimension();
    if (dim == 0) {
        std::vector<double> none;
        auto v = checker.check(std::span<double const>(none));
        result.evaluations = 1;
        result.trace.push_back(v.value);
        return finish(none, v);
    }

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t n = config.swarmSize;
    std::vector<std::vector<double>> position(n, std::vector<double>(dim)), velocity = position;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t d = 0; d < dim; ++d) {
            position[i][d] = -3 + 6 * unit(rng);
            velocity[i][d] = -1 + 2 * unit(rng);
        }
    }

    std::vector<Value<double>> value(n);
    std::vector<double> score(n);
    auto evaluate = [&] {
        parallelFor(n, config.threads, [&](std::size_t i) {
            auto u = encoding.decode(position[i]);
            value[i] = checker.check(std::span<double const>(u));
            score[i] = fitness(value[i], direction);
        });
        result.evaluations += n;
    };

    evaluate();
    auto personal = position;
    auto personalScore = score;
    std::size_t leader = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (score[i] > score[leader]) leader = i;
    }
    auto global = position[leader];
    double globalScore = score[leader];
    Value<double> globalValue = value[leader];
    result.trace.push_back(globalValue.value);

    auto satisfiedNow = [&] {
        return globalValue.infinite ? spec.satisfiedByInfinity() : spec.satisfiedBy(globalValue.value);
    };

    for (std::size_t it = 0; it < config.maxIterations; ++it) {
        if (config.stopWhenSatisfied && satisfiedNow()) break;
        if (config.timeBudget && std::chrono::steady_clock::now() - start >= *config.timeBudget) {
            result.budgetExhausted = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < dim; ++d) {
                double r1 = unit(rng), r2 = unit(rng);
                double v = config.inertia * velocity[i][d] + config.cognitive * r1 * (personal[i][d] - position[i][d]) +
                           config.social * r2 * (global[d] - position[i][d]);
                velocity[i][d] = std::clamp(v, -kVelocityLimit, kVelocityLimit);
                position[i][d] = std::clamp(position[i][d] + velocity[i][d], -kPositionLimit, kPositionLimit);
            }
        }
        evaluate();
        for (std::size_t i = 0; i < n; ++i) {
            if (score[i] > personalScore[i]) {
                personalScore[i] = score[i];
                personal[i] = position[i];
            }
            if (score[i] > globalScore) {
                globalScore = score[i];
                global = position[i];
                globalValue = value[i];
            }
        }
        result.iterations = it + 1;
        result.trace.push_back(globalValue.value);
    }

    return finish(encoding.decode(global), globalValue);
}

}  // namespace fscsynth
