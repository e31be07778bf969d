#ifndef CODEA_METRICS_HPP
#define CODEA_METRICS_HPP

#include <codea/core.hpp>
#include <codea/problems.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace codea
{

/// Exact dominated hypervolume by dimension sweep. Points that do not
/// strictly dominate `ref` contribute nothing. Intended for m <= 4.
double hypervolume_exact(std::span<const ObjectiveVector> points, std::span<const double> ref);

struct McEstimate {
    double volume = 0.0;
    double stderr_ = 0.0;
};

/// Monte Carlo hypervolume: uniform samples in [min(points), ref], volume
/// of that box times the dominated fraction, with binomial standard error.
McEstimate hypervolume_mc(std::span<const ObjectiveVector> points, std::span<const double> ref, std::size_t samples,
                          RngStream &rng);

// Normalized-HV protocol: objectives mapped by the problem's analytic
// ideal/nadir, reference point 1.1 in every objective, result divided by
// 1.1^m. Monte Carlo above `exact_max_m` objectives with its own fixed seed.
struct HvOptions {
    std::size_t exact_max_m = 4;
    std::size_t samples = 1'000'000;
    std::uint64_t metric_seed = 0x5eedc0deaULL;
};

inline constexpr double hv_reference = 1.1;

double normalized_hv(std::span<const ObjectiveVector> objectives, std::span<const double> ideal,
                     std::span<const double> nadir, const HvOptions &opts = {});
double normalized_hv(std::span<const ObjectiveVector> objectives, const ProblemDef &problem,
                     const HvOptions &opts = {});
double normalized_hv(const Population &pop, const ProblemDef &problem, const HvOptions &opts = {});

enum class Verdict { Better, Worse, Similar };

/// "+", "-" or "≈" (UTF-8).
std::string verdict_symbol(Verdict v);
Verdict parse_verdict(const std::string &s);

struct WilcoxonResult {
    double statistic = 0.0; // rank sum of the first sample
    double z = 0.0;
    double p = 1.0;
    Verdict verdict = Verdict::Similar;
};

/// Two-sided rank-sum test, normal approximation with tie and continuity
/// corrections. Better/Worse follow the sign of median(a) - median(b) when
/// p < alpha. Both samples need at least 5 values.
WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha = 0.05);

/// Linear-interpolation (type 7) quantile of a sample, q in [0, 1].
double quantile(std::span<const double> sample, double q);

struct MedianIqr {
    double median;
    double iqr;
};

MedianIqr median_iqr(std::span<const double> sample);

} // namespace codea

#endif
