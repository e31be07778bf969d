#ifndef CODEA_HARNESS_HPP
#define CODEA_HARNESS_HPP

#include <codea/algorithm.hpp>
#include <codea/metrics.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace codea
{

/// Malformed experiment configuration; carries the offending line and key.
class config_error : public std::runtime_error
{
public:
    config_error(std::size_t line, std::string field, const std::string &message);

    [[nodiscard]] std::size_t line() const noexcept { return m_line; }
    [[nodiscard]] const std::string &field() const noexcept { return m_field; }

private:
    std::size_t m_line;
    std::string m_field;
};

struct ProblemInstance {
    std::string id;
    std::size_t m;
};

struct ExperimentSpec {
    std::vector<ProblemInstance> problems;
    std::vector<RankingVariant> variants;
    // Defaults to 21 seeds starting at 1 when the config leaves it out.
    std::vector<std::uint64_t> seeds;
    // Fixed generation count for every instance; otherwise the default
    // budget table scaled by budget_factor.
    std::optional<std::size_t> gens;
    double budget_factor = 1.0;
    RankingVariant baseline = RankingVariant::Codea;
    InnerAngleOrder inner_angle_order = InnerAngleOrder::Max;
    AblationScope ablation_scope = AblationScope::AllNiches;
    std::size_t workers = 1;
    std::filesystem::path output_dir = "results";
    bool history = false;
    std::size_t hv_samples = HvOptions{}.samples;
};

/// Parses the flat `key = value` experiment format. Lines starting with '#'
/// and blank lines are ignored. Recognized keys:
///   problem, m, variant, seeds, seed_base, gens, budget_factor, baseline,
///   inner_angle_order, ablation_scope, workers, output_dir, history,
///   hv_samples
/// `problem` and `m` are comma-separated lists whose cross product forms the
/// instance set. `seeds` is either a count (seeds seed_base..) or a list.
ExperimentSpec parse_experiment_config(std::istream &in);
ExperimentSpec load_experiment_config(const std::filesystem::path &path);

/// Default generation budget for a benchmark instance (DTLZ/CDTLZ families
/// and WFG at m in {3, 5, 8, 10, 15}).
std::size_t default_generations(const std::string &problem_id, std::size_t m);

/// Budget after scaling by `factor`, never below one generation.
std::size_t scaled_generations(const std::string &problem_id, std::size_t m, double factor);

/// Default output directory: $CODEA_OUTPUT_DIR or "results".
std::filesystem::path default_output_dir();

/// "<problem>_m<m>_<variant>_s<seed>".
std::string run_stem(const std::string &problem, std::size_t m, RankingVariant variant, std::uint64_t seed);

/// Shortest round-trip-safe decimal (17 significant digits).
std::string format_number(double v);

void write_objectives_csv(std::ostream &out, const std::vector<ObjectiveVector> &objectives, std::size_t m);
std::vector<ObjectiveVector> read_objectives_csv(std::istream &in);
std::vector<ObjectiveVector> read_objectives_csv(const std::filesystem::path &path);

struct RunFiles {
    std::filesystem::path json;
    std::filesystem::path csv;
};

/// Writes `<stem>.json` (metadata and config snapshot) and `<stem>.csv`
/// (final objectives, header f_1..f_m) into `dir`.
RunFiles write_run(const RunResult &result, const std::filesystem::path &dir);

struct RunRecord {
    std::string problem;
    std::size_t m = 0;
    std::string variant;
    std::uint64_t seed = 0;
    double hv = 0.0;
    std::filesystem::path csv;
};

RunRecord load_run_record(const std::filesystem::path &json_path);

struct SummaryRow {
    std::string problem;
    std::size_t m = 0;
    std::string variant;
    std::size_t runs = 0;
    std::optional<double> median_hv;
    std::optional<double> iqr;
    // "+", "-", "≈"; "n/a" when either side has fewer than 5 runs; "absent"
    // when the cell has no results.
    std::string verdict;
};

struct CellKey {
    std::string problem;
    std::size_t m = 0;
    RankingVariant variant = RankingVariant::Codea;
};

/// Median/IQR per (problem, m, variant) over every run JSON in `dir`, with
/// rank-sum verdicts against `baseline`. Cells listed in `expected` but
/// without results get an "absent" row.
std::vector<SummaryRow> summarize(const std::filesystem::path &dir, RankingVariant baseline,
                                  const std::vector<CellKey> &expected = {});

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows);
void write_summary_table(std::ostream &out, const std::vector<SummaryRow> &rows);

struct CellFailure {
    std::string stem;
    std::string message;
};

struct ExperimentOutcome {
    std::size_t completed = 0;
    std::vector<CellFailure> failures;
    std::vector<SummaryRow> summary;
};

/// Runs every (instance x variant x seed) cell with up to spec.workers
/// threads, persists each run, records failures per cell, then writes
/// summary.csv and summary.txt into the output directory.
ExperimentOutcome run_experiment(const ExperimentSpec &spec);

/// Scatter CSV (id,x,y[,z]) for m <= 3.
void write_scatter(std::ostream &out, const std::vector<ObjectiveVector> &objectives);
/// Long-format CSV (id,objective,value), 1-based objective index.
void write_parallel_coordinates(std::ostream &out, const std::vector<ObjectiveVector> &objectives);

/// The command-line front end; returns the process exit code.
int cli_run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace codea

#endif
