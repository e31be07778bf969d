#ifndef CODEA_PROBLEMS_HPP
#define CODEA_PROBLEMS_HPP

#include <codea/core.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace codea
{

enum class Family { Dtlz, ConvexDtlz, Wfg, Custom };

/// A box-constrained minimization problem. `evaluate` must be pure: the
/// harness may call it from several threads and relies on bit-identical
/// results for identical inputs.
struct ProblemDef {
    std::string name;
    Family family = Family::Custom;
    unsigned index = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::function<ObjectiveVector(std::span<const double>)> evaluate;
    ObjectiveVector hv_ideal;
    ObjectiveVector hv_nadir;
};

/// DTLZ1-4. n = m + 4 for DTLZ1 and m + 9 otherwise; DTLZ4 uses a = 100.
ProblemDef dtlz(unsigned k, std::size_t m);

/// DTLZ-k followed by f_j <- f_j^4 (j < m) and f_m <- f_m^2.
ProblemDef convex_dtlz(unsigned k, std::size_t m);

/// WFG1-9 with 2(m-1) position and 20 distance parameters.
ProblemDef wfg(unsigned k, std::size_t m);

/// Resolves ids such as "dtlz2", "cdtlz3" or "wfg7" (case-insensitive).
ProblemDef make_problem(const std::string &id, std::size_t m);

/// (ideal, nadir) of the analytic Pareto front of a named benchmark.
std::pair<ObjectiveVector, ObjectiveVector> known_hv_bounds(const ProblemDef &problem);

/// Lower-case id used by the harness ("dtlz2", "cdtlz1", "wfg4").
std::string problem_id(const ProblemDef &problem);

} // namespace codea

#endif
