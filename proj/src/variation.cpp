#include <codea/variation.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace codea
{

namespace
{

double clip(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

void check_bounds(std::size_t n, Bounds bounds)
{
    if (bounds.lower.size() != n || bounds.upper.size() != n) {
        throw contract_violation("variation: bounds length differs from decision vector length");
    }
}

Bounds bounds_of(const ProblemDef &problem) { return {problem.lower, problem.upper}; }

} // namespace

void VariationConfig::validate() const
{
    if (!(eta_c > 0.0) || !(eta_m > 0.0)) {
        throw std::invalid_argument("variation: distribution indices must be positive");
    }
    if (!(p_c >= 0.0 && p_c <= 1.0)) {
        throw std::invalid_argument("variation: p_c must lie in [0, 1]");
    }
    if (p_m && !(*p_m >= 0.0 && *p_m <= 1.0)) {
        throw std::invalid_argument("variation: p_m must lie in [0, 1]");
    }
}

double VariationConfig::mutation_probability(std::size_t n) const
{
    return p_m ? *p_m : 1.0 / static_cast<double>(n);
}

Individual evaluate(const ProblemDef &problem, DecisionVector x)
{
    Individual ind;
    ind.objectives = problem.evaluate(x);
    if (ind.objectives.size() != problem.m) {
        throw contract_violation("evaluate: " + problem.name + " returned the wrong number of objectives");
    }
    for (double v : ind.objectives) {
        if (!std::isfinite(v)) {
            throw contract_violation("evaluate: " + problem.name + " returned a non-finite objective");
        }
    }
    ind.decision = std::move(x);
    return ind;
}

Population init_population(const ProblemDef &problem, std::size_t n, RngStream &rng)
{
    if (n < 2) {
        throw contract_violation("init_population: population size must be at least 2");
    }
    Population pop;
    pop.capacity = n;
    pop.members.reserve(n);
    std::vector<DecisionVector> xs(n, DecisionVector(problem.n));
    for (auto &x : xs) {
        for (std::size_t i = 0; i < problem.n; ++i) {
            x[i] = rng.uniform(problem.lower[i], problem.upper[i]);
        }
    }
    for (auto &x : xs) {
        pop.members.push_back(evaluate(problem, std::move(x)));
    }
    return pop;
}

std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector &p1, const DecisionVector &p2,
                                                        Bounds bounds, const VariationConfig &cfg, RngStream &rng)
{
    if (p1.size() != p2.size()) {
        throw contract_violation("sbx_crossover: parents differ in length");
    }
    check_bounds(p1.size(), bounds);
    DecisionVector c1 = p1;
    DecisionVector c2 = p2;
    if (!(rng.uniform() < cfg.p_c)) {
        return {std::move(c1), std::move(c2)};
    }
    const double expo = 1.0 / (cfg.eta_c + 1.0);
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const double mu = rng.uniform();
        const bool flip = rng.uniform() < 0.5;
        const bool skip = rng.uniform() < 0.5;
        if (skip) {
            continue;
        }
        double beta = mu <= 0.5 ? std::pow(2.0 * mu, expo) : std::pow(2.0 - 2.0 * mu, -expo);
        if (flip) {
            beta = -beta;
        }
        const double mean = (p1[i] + p2[i]) / 2.0;
        const double half_gap = beta * (p1[i] - p2[i]) / 2.0;
        c1[i] = clip(mean + half_gap, bounds.lower[i], bounds.upper[i]);
        c2[i] = clip(mean - half_gap, bounds.lower[i], bounds.upper[i]);
    }
    return {std::move(c1), std::move(c2)};
}

DecisionVector polynomial_mutation(DecisionVector x, Bounds bounds, const VariationConfig &cfg, RngStream &rng)
{
    check_bounds(x.size(), bounds);
    const double pm = cfg.mutation_probability(x.size());
    const double expo = 1.0 / (cfg.eta_m + 1.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double site = rng.uniform();
        const double mu = rng.uniform();
        if (!(site < pm)) {
            continue;
        }
        const double lo = bounds.lower[i];
        const double hi = bounds.upper[i];
        const double span = hi - lo;
        if (!(span > 0.0)) {
            continue;
        }
        double v = clip(x[i], lo, hi);
        if (mu <= 0.5) {
            const double t = 1.0 - (v - lo) / span;
            v += span * (std::pow(2.0 * mu + (1.0 - 2.0 * mu) * std::pow(t, cfg.eta_m + 1.0), expo) - 1.0);
        } else {
            const double t = 1.0 - (hi - v) / span;
            v += span * (1.0 - std::pow(2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(t, cfg.eta_m + 1.0), expo));
        }
        x[i] = clip(v, lo, hi);
    }
    return x;
}

Population create_offspring_population(const Population &parents, const ProblemDef &problem,
                                       const VariationConfig &cfg, RngStream &rng)
{
    const std::size_t n = parents.size();
    if (n < 2) {
        throw contract_violation("create_offspring_population: need at least 2 parents");
    }
    const Bounds bounds = bounds_of(problem);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);

    std::vector<DecisionVector> children;
    children.reserve(n + 1);
    auto breed = [&](std::size_t a, std::size_t b) {
        auto [c1, c2] = sbx_crossover(parents[a].decision, parents[b].decision, bounds, cfg, rng);
        children.push_back(polynomial_mutation(std::move(c1), bounds, cfg, rng));
        children.push_back(polynomial_mutation(std::move(c2), bounds, cfg, rng));
    };
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        breed(order[i], order[i + 1]);
    }
    if (n % 2 == 1) {
        const std::size_t last = order[n - 1];
        // Mate drawn from the other n-1 parents.
        std::size_t mate = rng.below(n - 1);
        if (mate >= last) {
            ++mate;
        }
        breed(last, mate);
        children.pop_back();
    }

    Population offspring;
    offspring.capacity = n;
    offspring.members.reserve(n);
    for (auto &x : children) {
        offspring.members.push_back(evaluate(problem, std::move(x)));
    }
    return offspring;
}

} // namespace codea
