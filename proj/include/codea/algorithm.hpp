#ifndef CODEA_ALGORITHM_HPP
#define CODEA_ALGORITHM_HPP

#include <codea/core.hpp>
#include <codea/metrics.hpp>
#include <codea/problems.hpp>
#include <codea/refgeom.hpp>
#include <codea/selection.hpp>
#include <codea/variation.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace codea
{

struct HistoryConfig {
    bool enabled = true;
    // Record every `every` generations; 0 picks max(1, g_max / 50).
    std::size_t every = 0;
    // Monte Carlo samples per history point when m exceeds the exact limit.
    std::size_t mc_samples = 100'000;
};

struct AlgoConfig {
    // Population size. Must equal the reference-set size when given.
    std::optional<std::size_t> n;
    std::size_t g_max = 1;
    VariationConfig variation;
    RankingConfig ranking;
    std::uint64_t seed = 1;
    std::optional<LatticeDivisions> divisions;
    std::optional<double> k_m_override;
    HistoryConfig history;
    // Score the final population with the normalized-HV protocol.
    bool score_final = true;
    HvOptions hv;
};

struct HistoryPoint {
    std::size_t generation;
    double hv;
};

struct RunResult {
    Population final_population;
    std::vector<HistoryPoint> hv_history;
    std::optional<double> hv;
    double elapsed_seconds = 0.0;
    std::size_t evaluations = 0;
    std::size_t population_size = 0;
    AlgoConfig config;
    std::uint64_t seed = 0;
    std::string problem;
    std::size_t m = 0;
};

/// Reference set for a run: build_reference_set plus the k_m override.
ReferenceSet reference_set_for(std::size_t m, const AlgoConfig &cfg);

/// The generational loop: init, then g_max rounds of offspring creation,
/// union and environmental selection. Deterministic given cfg.seed; throws
/// std::invalid_argument on a bad configuration before any evaluation.
RunResult run_codea(const ProblemDef &problem, const AlgoConfig &cfg);

/// run_codea with the ranking variant replaced.
RunResult run_variant(const ProblemDef &problem, AlgoConfig cfg, RankingVariant variant);

} // namespace codea

#endif
