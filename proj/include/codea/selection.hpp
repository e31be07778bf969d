#ifndef CODEA_SELECTION_HPP
#define CODEA_SELECTION_HPP

#include <codea/core.hpp>
#include <codea/refgeom.hpp>
#include <codea/scalarize.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace codea
{

// Niche-ranking variants. Codea ranks boundary niches by g_cod and inner
// niches by the angle to the centre direction; CodeaStar uses g_cod in both;
// Pbi and Nbi substitute their scalarizations (see AblationScope).
enum class RankingVariant { Codea, CodeaStar, Pbi, Nbi };

// Inner niches: Max prefers the member farthest (in angle) from the centre
// direction, Min the closest.
enum class InnerAngleOrder { Min, Max };

// Where Pbi/Nbi apply: every niche, or only inner niches (boundary niches
// keep g_cod).
enum class AblationScope { AllNiches, InnerOnly };

std::string to_string(RankingVariant v);
std::string to_string(InnerAngleOrder o);
std::string to_string(AblationScope s);
RankingVariant parse_variant(const std::string &s);
InnerAngleOrder parse_inner_angle_order(const std::string &s);
AblationScope parse_ablation_scope(const std::string &s);

struct RankingConfig {
    RankingVariant variant = RankingVariant::Codea;
    InnerAngleOrder inner_angle_order = InnerAngleOrder::Max;
    AblationScope scope = AblationScope::AllNiches;
    PbiConfig pbi;
};

struct NormalizationState {
    ObjectiveVector z_star;
    ObjectiveVector z_nadir;
    ObjectiveVector intercepts;
    // False until the ideal point has seen at least one vector.
    bool initialized = false;
};

using Fronts = std::vector<std::vector<std::size_t>>;

struct RankPartition {
    // ranks[i] holds the (i+1)-th best member of every niche that has one,
    // as indices into the candidate set, in reference-point order.
    std::vector<std::vector<std::size_t>> ranks;
};

/// Fast non-dominated sort, O(m N^2). Fronts list indices in input order.
Fronts nondominated_sort(std::span<const ObjectiveVector> objectives);
Fronts nondominated_sort(const Population &pop);

/// Indices of F_0 ∪ ... ∪ F_l with l minimal such that the union holds at
/// least n members.
std::vector<std::size_t> select_candidates(const Fronts &fronts, std::size_t n);

/// Folds every objective vector into the running ideal point.
void update_ideal(NormalizationState &state, std::span<const Individual> members);

/// NSGA-III normalization of `s` against the running ideal point. Writes
/// `normalized` on every member. Members whose `front` is 0 (or all members,
/// when no front annotations exist) define the nadir estimate.
NormalizationState update_normalization(std::span<Individual> s, NormalizationState state);

/// Index of the reference direction with the smallest perpendicular distance
/// to each member's normalized objectives (lowest index on ties).
std::vector<std::size_t> associate(std::span<Individual> s, const ReferenceSet &refset);

/// Orders `members` (indices into `s`) for niche `point`: primary key by the
/// niche's measure, ties by g_nbi, then by input order.
std::vector<std::size_t> rank_within_niche(std::span<const Individual> s, std::span<const std::size_t> members,
                                           std::size_t point, const ReferenceSet &refset, const RankingConfig &cfg);

/// Groups associated members by niche, orders each niche and deals the i-th
/// places into rank i. Writes `cod_rank` on every member.
RankPartition build_rank_partition(std::span<Individual> s, const ReferenceSet &refset, const RankingConfig &cfg);

struct SelectionResult {
    Population population;
    NormalizationState state;
};

/// Sort, truncate to the candidate set, normalize, associate, rank, then
/// take whole ranks while they fit and a uniform random subset of the first
/// rank that does not.
SelectionResult environmental_selection(const Population &u, const ReferenceSet &refset, NormalizationState state,
                                        const RankingConfig &cfg, std::size_t n, RngStream &rng);

} // namespace codea

#endif
