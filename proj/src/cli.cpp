#include <codea/harness.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <ostream>

namespace codea
{

namespace
{

struct RunOptions {
    std::string problem;
    std::size_t m = 0;
    std::string variant = "codea";
    std::optional<std::size_t> gens;
    double budget_factor = 1.0;
    std::uint64_t seed = 1;
    std::string out;
    std::string inner_angle_order = "max";
    std::string ablation_scope = "all";
    std::optional<std::size_t> n;
    std::optional<std::size_t> h1;
    std::optional<std::size_t> h2;
    std::size_t hv_every = 0;
    bool no_history = false;
    std::size_t hv_samples = HvOptions{}.samples;
};

std::optional<LatticeDivisions> divisions_from(const std::optional<std::size_t> &h1, const std::optional<std::size_t> &h2)
{
    if (!h1) {
        if (h2) {
            throw std::invalid_argument("--h2 needs --h1");
        }
        return std::nullopt;
    }
    return LatticeDivisions{*h1, h2};
}

int do_run(const RunOptions &o, std::ostream &out)
{
    const ProblemDef problem = make_problem(o.problem, o.m);
    AlgoConfig cfg;
    cfg.n = o.n;
    cfg.divisions = divisions_from(o.h1, o.h2);
    cfg.g_max = o.gens ? *o.gens : scaled_generations(problem_id(problem), o.m, o.budget_factor);
    cfg.seed = o.seed;
    cfg.ranking.variant = parse_variant(o.variant);
    cfg.ranking.inner_angle_order = parse_inner_angle_order(o.inner_angle_order);
    cfg.ranking.scope = parse_ablation_scope(o.ablation_scope);
    cfg.history.enabled = !o.no_history;
    cfg.history.every = o.hv_every;
    cfg.hv.samples = o.hv_samples;

    const RunResult result = run_codea(problem, cfg);
    const std::filesystem::path dir = o.out.empty() ? default_output_dir() : std::filesystem::path(o.out);
    const RunFiles files = write_run(result, dir);
    out << "hv " << format_number(result.hv.value_or(0.0)) << "  evaluations " << result.evaluations << "  seconds "
        << result.elapsed_seconds << '\n'
        << files.json.string() << '\n'
        << files.csv.string() << '\n';
    return 0;
}

std::ostream &sink(const std::string &path, std::unique_ptr<std::ofstream> &file, std::ostream &fallback)
{
    if (path.empty()) {
        return fallback;
    }
    file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file) {
        throw std::runtime_error("cannot write " + path);
    }
    return *file;
}

} // namespace

int cli_run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"CoDEA many-objective optimizer and benchmark harness", "codea"};
    app.require_subcommand(1);

    RunOptions run;
    auto *run_cmd = app.add_subcommand("run", "Run one (problem, variant, seed) and write JSON + CSV results");
    run_cmd->add_option("--problem", run.problem, "Problem id, e.g. dtlz2, cdtlz3, wfg7")->required();
    run_cmd->add_option("--m", run.m, "Number of objectives")->required()->check(CLI::Range(2, 100));
    run_cmd->add_option("--variant", run.variant, "codea, codea-star, codea-pbi or codea-nbi");
    run_cmd->add_option("--gens", run.gens, "Generations (default: budget table scaled by --budget-factor)");
    run_cmd->add_option("--budget-factor", run.budget_factor, "Scale applied to the default budget");
    run_cmd->add_option("--seed", run.seed, "Random seed");
    run_cmd->add_option("--out", run.out, "Output directory (default $CODEA_OUTPUT_DIR or ./results)");
    run_cmd->add_option("--inner-angle-order", run.inner_angle_order, "max or min");
    run_cmd->add_option("--ablation-scope", run.ablation_scope, "all or inner");
    run_cmd->add_option("--N", run.n, "Population size; must equal the reference-set size");
    run_cmd->add_option("--h1", run.h1, "Boundary lattice divisions");
    run_cmd->add_option("--h2", run.h2, "Inner lattice divisions");
    run_cmd->add_option("--hv-every", run.hv_every, "History interval in generations (0 = auto)");
    run_cmd->add_flag("--no-history", run.no_history, "Skip the HV history");
    run_cmd->add_option("--hv-samples", run.hv_samples, "Monte Carlo samples for the final HV");

    std::string config_path;
    auto *exp_cmd = app.add_subcommand("experiment", "Run a batch described by a config file");
    exp_cmd->add_option("--config", config_path, "Experiment config file")->required();

    std::string hv_in;
    std::string hv_problem;
    std::optional<std::size_t> hv_m;
    std::size_t hv_samples = HvOptions{}.samples;
    auto *hv_cmd = app.add_subcommand("hv", "Normalized hypervolume of an objectives CSV");
    hv_cmd->add_option("--in", hv_in, "Objectives CSV (header f_1..f_m)")->required();
    hv_cmd->add_option("--problem", hv_problem, "Problem id supplying the ideal/nadir")->required();
    hv_cmd->add_option("--m", hv_m, "Number of objectives (default: CSV width)");
    hv_cmd->add_option("--samples", hv_samples, "Monte Carlo samples when m > 4");

    std::size_t ref_m = 0;
    std::optional<std::size_t> ref_h1;
    std::optional<std::size_t> ref_h2;
    std::string ref_out;
    auto *ref_cmd = app.add_subcommand("refpoints", "Dump a reference set as CSV (w_1..w_m,layer,r)");
    ref_cmd->add_option("--m", ref_m, "Number of objectives")->required()->check(CLI::Range(2, 100));
    ref_cmd->add_option("--h1", ref_h1, "Boundary lattice divisions");
    ref_cmd->add_option("--h2", ref_h2, "Inner lattice divisions");
    ref_cmd->add_option("--out", ref_out, "Output file (default stdout)");

    std::string plot_in;
    std::optional<std::size_t> plot_m;
    std::string plot_out;
    auto *plot_cmd = app.add_subcommand("plotdata", "Scatter (m <= 3) or long-format (m > 3) CSV from a population");
    plot_cmd->add_option("--in", plot_in, "Objectives CSV")->required();
    plot_cmd->add_option("--m", plot_m, "Number of objectives (checked against the CSV)");
    plot_cmd->add_option("--out", plot_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        if (*run_cmd) {
            return do_run(run, out);
        }
        if (*exp_cmd) {
            ExperimentSpec spec;
            try {
                spec = load_experiment_config(config_path);
            } catch (const config_error &e) {
                err << config_path << ": " << e.what() << '\n';
                return 2;
            }
            const ExperimentOutcome outcome = run_experiment(spec);
            write_summary_table(out, outcome.summary);
            out << outcome.completed << " runs completed, " << outcome.failures.size() << " failed; results in "
                << spec.output_dir.string() << '\n';
            for (const auto &f : outcome.failures) {
                err << "failed " << f.stem << ": " << f.message << '\n';
            }
            return outcome.failures.empty() ? 0 : 3;
        }
        if (*hv_cmd) {
            const auto objs = read_objectives_csv(std::filesystem::path(hv_in));
            const std::size_t width = objs.empty() ? 0 : objs.front().size();
            const std::size_t m = hv_m.value_or(width);
            if (!objs.empty() && width != m) {
                throw std::invalid_argument("--m " + std::to_string(m) + " but the CSV has " + std::to_string(width)
                                            + " columns");
            }
            HvOptions opts;
            opts.samples = hv_samples;
            out << format_number(normalized_hv(objs, make_problem(hv_problem, m), opts)) << '\n';
            return 0;
        }
        if (*ref_cmd) {
            const ReferenceSet refset = build_reference_set(ref_m, divisions_from(ref_h1, ref_h2));
            std::unique_ptr<std::ofstream> file;
            std::ostream &os = sink(ref_out, file, out);
            for (std::size_t j = 0; j < ref_m; ++j) {
                os << "w_" << (j + 1) << ',';
            }
            os << "layer,r\n";
            for (const auto &p : refset.points) {
                for (double w : p.w) {
                    os << format_number(w) << ',';
                }
                os << to_string(p.layer) << ',' << (p.r ? format_number(*p.r) : std::string()) << '\n';
            }
            return 0;
        }
        if (*plot_cmd) {
            const auto objs = read_objectives_csv(std::filesystem::path(plot_in));
            const std::size_t width = objs.empty() ? plot_m.value_or(0) : objs.front().size();
            if (plot_m && *plot_m != width) {
                throw std::invalid_argument("--m " + std::to_string(*plot_m) + " but the CSV has "
                                            + std::to_string(width) + " columns");
            }
            std::unique_ptr<std::ofstream> file;
            std::ostream &os = sink(plot_out, file, out);
            if (width <= 3) {
                write_scatter(os, objs);
            } else {
                write_parallel_coordinates(os, objs);
            }
            return 0;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace codea
