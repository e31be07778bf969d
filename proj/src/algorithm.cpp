#include <codea/algorithm.hpp>

#include <codea/metrics.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace codea
{

namespace
{

void validate(const ProblemDef &problem, const AlgoConfig &cfg, const ReferenceSet &refset)
{
    if (cfg.g_max < 1) {
        throw std::invalid_argument("run: g_max must be at least 1");
    }
    if (refset.m != problem.m) {
        throw std::invalid_argument("run: reference set dimension does not match the problem");
    }
    if (cfg.n && *cfg.n != refset.size()) {
        throw std::invalid_argument("run: population size " + std::to_string(*cfg.n)
                                    + " differs from the reference-set size " + std::to_string(refset.size()));
    }
    if (!problem.evaluate || problem.lower.size() != problem.n || problem.upper.size() != problem.n) {
        throw std::invalid_argument("run: problem definition is incomplete");
    }
    cfg.variation.validate();
    if (!(cfg.ranking.pbi.theta > 0.0) || cfg.ranking.pbi.theta_axis < cfg.ranking.pbi.theta) {
        throw std::invalid_argument("run: PBI penalties need theta > 0 and theta_axis >= theta");
    }
}

} // namespace

ReferenceSet reference_set_for(std::size_t m, const AlgoConfig &cfg)
{
    ReferenceSet refset = build_reference_set(m, cfg.divisions);
    if (cfg.k_m_override) {
        refset.k_m = *cfg.k_m_override;
    }
    return refset;
}

RunResult run_codea(const ProblemDef &problem, const AlgoConfig &cfg)
{
    const ReferenceSet refset = reference_set_for(problem.m, cfg);
    validate(problem, cfg, refset);
    const auto started = std::chrono::steady_clock::now();

    // Counting wrapper; a run is single-threaded.
    std::size_t evaluations = 0;
    ProblemDef counted = problem;
    counted.evaluate = [&evaluations, inner = problem.evaluate](std::span<const double> x) {
        ++evaluations;
        return inner(x);
    };

    const std::size_t n = refset.size();
    RngStream rng(cfg.seed);
    Population pop = init_population(counted, n, rng);

    NormalizationState state;
    update_ideal(state, pop.members);
    {
        const Fronts fronts = nondominated_sort(pop);
        state.z_nadir = state.z_star;
        for (std::size_t i : fronts.front()) {
            for (std::size_t j = 0; j < problem.m; ++j) {
                state.z_nadir[j] = std::max(state.z_nadir[j], pop[i].objectives[j]);
            }
        }
    }

    RunResult result;
    const std::size_t every = cfg.history.every ? cfg.history.every : std::max<std::size_t>(1, cfg.g_max / 50);
    HvOptions history_hv = cfg.hv;
    history_hv.samples = cfg.history.mc_samples;
    auto record = [&](std::size_t gen) {
        if (cfg.history.enabled) {
            result.hv_history.push_back({gen, normalized_hv(pop, problem, history_hv)});
        }
    };
    record(0);

    for (std::size_t t = 1; t <= cfg.g_max; ++t) {
        Population offspring = create_offspring_population(pop, counted, cfg.variation, rng);
        Population merged;
        merged.capacity = 2 * n;
        merged.members = std::move(pop.members);
        merged.members.insert(merged.members.end(), std::make_move_iterator(offspring.members.begin()),
                              std::make_move_iterator(offspring.members.end()));
        auto selected = environmental_selection(merged, refset, std::move(state), cfg.ranking, n, rng);
        pop = std::move(selected.population);
        state = std::move(selected.state);
        if (t % every == 0 || t == cfg.g_max) {
            record(t);
        }
    }

    result.final_population = std::move(pop);
    if (cfg.score_final) {
        result.hv = normalized_hv(result.final_population, problem, cfg.hv);
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    result.evaluations = evaluations;
    result.population_size = n;
    result.config = cfg;
    result.seed = cfg.seed;
    result.problem = problem_id(problem);
    result.m = problem.m;
    return result;
}

RunResult run_variant(const ProblemDef &problem, AlgoConfig cfg, RankingVariant variant)
{
    cfg.ranking.variant = variant;
    return run_codea(problem, cfg);
}

} // namespace codea
