#ifndef CODEA_VARIATION_HPP
#define CODEA_VARIATION_HPP

#include <codea/core.hpp>
#include <codea/problems.hpp>

#include <optional>
#include <utility>

namespace codea
{

struct VariationConfig {
    double eta_c = 30.0;
    double eta_m = 30.0;
    double p_c = 1.0;
    // Per-variable mutation probability; absent means 1/n.
    std::optional<double> p_m;

    void validate() const;
    [[nodiscard]] double mutation_probability(std::size_t n) const;
};

struct Bounds {
    std::span<const double> lower;
    std::span<const double> upper;
};

Individual evaluate(const ProblemDef &problem, DecisionVector x);

/// N individuals drawn uniformly in the box and evaluated.
Population init_population(const ProblemDef &problem, std::size_t n, RngStream &rng);

/// Simulated binary crossover. Per variable: spread factor from the
/// polynomial density with index eta_c, a random sign, and a 0.5 chance of
/// leaving the variable untouched. The whole pair is recombined with
/// probability p_c. Children are clipped to the box.
///
/// Draw order: one gate draw for the pair, then (mu, sign, skip) per variable.
std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector &p1, const DecisionVector &p2,
                                                        Bounds bounds, const VariationConfig &cfg, RngStream &rng);

/// Bounded polynomial mutation. Per variable: (site, mu) draws, then the
/// perturbation when site < p_m. The result stays inside the box.
DecisionVector polynomial_mutation(DecisionVector x, Bounds bounds, const VariationConfig &cfg, RngStream &rng);

/// N offspring from random pairs of a shuffled copy of the parents; each
/// child is mutated and evaluated. An odd leftover parent is paired with a
/// uniformly drawn mate and only the first child is kept.
Population create_offspring_population(const Population &parents, const ProblemDef &problem,
                                       const VariationConfig &cfg, RngStream &rng);

} // namespace codea

#endif
