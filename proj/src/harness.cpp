#include <codea/harness.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace codea
{

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace
{

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

template <class T>
bool parse_integer(const std::string &s, T &out)
{
    const char *b = s.data();
    const char *e = b + s.size();
    auto [ptr, ec] = std::from_chars(b, e, out);
    return ec == std::errc{} && ptr == e;
}

bool parse_double(const std::string &s, double &out)
{
    if (s.empty()) {
        return false;
    }
    char *end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && std::isfinite(out);
}

// Budget table, in generations, indexed by m in {3, 5, 8, 10, 15}.
constexpr std::size_t budget_ms[5] = {3, 5, 8, 10, 15};
constexpr std::size_t dtlz_budget[4][5] = {
    {36800, 127200, 117000, 276000, 204000},
    {23000, 74200, 78000, 207000, 136000},
    {92000, 212000, 156000, 414000, 272000},
    {55200, 212000, 195000, 552000, 408000},
};
constexpr std::size_t wfg_budget[5] = {92000, 265000, 234000, 552000, 405000};

int variant_order(const std::string &v)
{
    try {
        return static_cast<int>(parse_variant(v));
    } catch (const std::exception &) {
        return 100;
    }
}

} // namespace

config_error::config_error(std::size_t line, std::string field, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + message)
    , m_line(line)
    , m_field(std::move(field))
{
}

ExperimentSpec parse_experiment_config(std::istream &in)
{
    ExperimentSpec spec;
    std::map<std::string, std::pair<std::size_t, std::string>> entries;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error(lineno, trim(line), "expected 'key = value'");
        }
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw config_error(lineno, "", "missing key");
        }
        if (entries.count(key)) {
            throw config_error(lineno, key, "duplicate key (first set on line "
                                                + std::to_string(entries[key].first) + ")");
        }
        entries[key] = {lineno, value};
    }

    static const std::set<std::string> known = {
        "problem", "m", "variant", "seeds", "seed_base", "gens", "budget_factor", "baseline",
        "inner_angle_order", "ablation_scope", "workers", "output_dir", "history", "hv_samples",
    };
    for (const auto &[key, entry] : entries) {
        if (!known.count(key)) {
            throw config_error(entry.first, key, "unknown key");
        }
    }

    auto need = [&](const std::string &key) -> const std::pair<std::size_t, std::string> & {
        auto it = entries.find(key);
        if (it == entries.end()) {
            throw config_error(lineno, key, "required key is missing");
        }
        if (it->second.second.empty()) {
            throw config_error(it->second.first, key, "empty value");
        }
        return it->second;
    };
    auto size_value = [](const std::pair<std::size_t, std::string> &e, const std::string &key, std::size_t min) {
        std::size_t v = 0;
        if (!parse_integer(e.second, v) || v < min) {
            throw config_error(e.first, key, "expected an integer >= " + std::to_string(min) + ", got '" + e.second + "'");
        }
        return v;
    };

    // Objective counts first so problem ids can be checked against them.
    const auto &m_entry = need("m");
    std::vector<std::size_t> ms;
    for (const auto &item : split_list(m_entry.second)) {
        ms.push_back(size_value({m_entry.first, item}, "m", 2));
    }

    if (auto it = entries.find("gens"); it != entries.end()) {
        spec.gens = size_value(it->second, "gens", 1);
    }
    if (auto it = entries.find("budget_factor"); it != entries.end()) {
        double f = 0.0;
        if (!parse_double(it->second.second, f) || !(f > 0.0)) {
            throw config_error(it->second.first, "budget_factor", "expected a positive number, got '" + it->second.second + "'");
        }
        spec.budget_factor = f;
    }

    const auto &p_entry = need("problem");
    for (const auto &item : split_list(p_entry.second)) {
        for (std::size_t m : ms) {
            try {
                const ProblemDef def = make_problem(item, m);
                if (!spec.gens) {
                    (void)default_generations(problem_id(def), m);
                }
                spec.problems.push_back({problem_id(def), m});
            } catch (const std::exception &e) {
                throw config_error(p_entry.first, "problem", e.what());
            }
        }
    }
    if (spec.problems.empty()) {
        throw config_error(p_entry.first, "problem", "no problems listed");
    }

    if (auto it = entries.find("variant"); it != entries.end()) {
        for (const auto &item : split_list(it->second.second)) {
            try {
                spec.variants.push_back(parse_variant(item));
            } catch (const std::exception &e) {
                throw config_error(it->second.first, "variant", e.what());
            }
        }
    }
    if (spec.variants.empty()) {
        spec.variants.push_back(RankingVariant::Codea);
    }

    std::uint64_t seed_base = 1;
    if (auto it = entries.find("seed_base"); it != entries.end()) {
        if (!parse_integer(it->second.second, seed_base)) {
            throw config_error(it->second.first, "seed_base", "expected an unsigned integer, got '" + it->second.second + "'");
        }
    }
    if (auto it = entries.find("seeds"); it != entries.end()) {
        const auto &[line, value] = it->second;
        if (value.find(',') == std::string::npos) {
            const std::size_t count = size_value(it->second, "seeds", 1);
            for (std::size_t i = 0; i < count; ++i) {
                spec.seeds.push_back(seed_base + i);
            }
        } else {
            for (const auto &item : split_list(value)) {
                std::uint64_t s = 0;
                if (!parse_integer(item, s)) {
                    throw config_error(line, "seeds", "bad seed '" + item + "'");
                }
                spec.seeds.push_back(s);
            }
        }
        if (spec.seeds.empty()) {
            throw config_error(line, "seeds", "no seeds listed");
        }
    } else {
        for (std::uint64_t i = 0; i < 21; ++i) {
            spec.seeds.push_back(seed_base + i);
        }
    }

    auto parse_enum = [&](const std::string &key, auto parser, auto &target) {
        if (auto it = entries.find(key); it != entries.end()) {
            try {
                target = parser(it->second.second);
            } catch (const std::exception &e) {
                throw config_error(it->second.first, key, e.what());
            }
        }
    };
    parse_enum("baseline", parse_variant, spec.baseline);
    parse_enum("inner_angle_order", parse_inner_angle_order, spec.inner_angle_order);
    parse_enum("ablation_scope", parse_ablation_scope, spec.ablation_scope);

    if (auto it = entries.find("workers"); it != entries.end()) {
        spec.workers = size_value(it->second, "workers", 0);
        if (spec.workers == 0) {
            spec.workers = std::max(1u, std::thread::hardware_concurrency());
        }
    }
    if (auto it = entries.find("output_dir"); it != entries.end()) {
        spec.output_dir = it->second.second;
    } else {
        spec.output_dir = default_output_dir();
    }
    if (auto it = entries.find("history"); it != entries.end()) {
        const std::string v = lower(it->second.second);
        if (v == "true" || v == "yes" || v == "1") {
            spec.history = true;
        } else if (v == "false" || v == "no" || v == "0") {
            spec.history = false;
        } else {
            throw config_error(it->second.first, "history", "expected true or false, got '" + it->second.second + "'");
        }
    }
    if (auto it = entries.find("hv_samples"); it != entries.end()) {
        spec.hv_samples = size_value(it->second, "hv_samples", 1);
    }
    return spec;
}

ExperimentSpec load_experiment_config(const fs::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path.string());
    }
    return parse_experiment_config(in);
}

std::size_t default_generations(const std::string &id, std::size_t m)
{
    const auto col = std::find(std::begin(budget_ms), std::end(budget_ms), m) - std::begin(budget_ms);
    if (col == 5) {
        throw std::invalid_argument("no default budget for m = " + std::to_string(m));
    }
    const ProblemDef def = make_problem(id, m);
    switch (def.family) {
    case Family::Dtlz:
    case Family::ConvexDtlz:
        if (def.index >= 1 && def.index <= 4) {
            return dtlz_budget[def.index - 1][col];
        }
        break;
    case Family::Wfg:
        return wfg_budget[col];
    case Family::Custom:
        break;
    }
    throw std::invalid_argument("no default budget for problem '" + id + "'");
}

std::size_t scaled_generations(const std::string &id, std::size_t m, double factor)
{
    if (!(factor > 0.0)) {
        throw std::invalid_argument("budget factor must be positive");
    }
    const double g = std::round(static_cast<double>(default_generations(id, m)) * factor);
    return std::max<std::size_t>(1, static_cast<std::size_t>(g));
}

fs::path default_output_dir()
{
    if (const char *env = std::getenv("CODEA_OUTPUT_DIR"); env && *env) {
        return env;
    }
    return "results";
}

std::string run_stem(const std::string &problem, std::size_t m, RankingVariant variant, std::uint64_t seed)
{
    return problem + "_m" + std::to_string(m) + "_" + to_string(variant) + "_s" + std::to_string(seed);
}

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_objectives_csv(std::ostream &out, const std::vector<ObjectiveVector> &objectives, std::size_t m)
{
    for (std::size_t j = 0; j < m; ++j) {
        out << (j ? "," : "") << "f_" << (j + 1);
    }
    out << '\n';
    for (const auto &f : objectives) {
        if (f.size() != m) {
            throw contract_violation("write_objectives_csv: row length differs from m");
        }
        for (std::size_t j = 0; j < m; ++j) {
            out << (j ? "," : "") << format_number(f[j]);
        }
        out << '\n';
    }
}

std::vector<ObjectiveVector> read_objectives_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("objectives CSV: empty input");
    }
    const auto header = split_list(trim(line));
    if (header.empty()) {
        throw std::runtime_error("objectives CSV: empty header");
    }
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] != "f_" + std::to_string(j + 1)) {
            throw std::runtime_error("objectives CSV: header column " + std::to_string(j + 1) + " is '" + header[j]
                                     + "', expected 'f_" + std::to_string(j + 1) + "'");
        }
    }
    const std::size_t m = header.size();
    std::vector<ObjectiveVector> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(trim(cell));
        }
        if (cells.size() != m) {
            throw std::runtime_error("objectives CSV line " + std::to_string(lineno) + ": expected "
                                     + std::to_string(m) + " values, got " + std::to_string(cells.size()));
        }
        ObjectiveVector f(m);
        for (std::size_t j = 0; j < m; ++j) {
            if (!parse_double(cells[j], f[j])) {
                throw std::runtime_error("objectives CSV line " + std::to_string(lineno) + ": bad number '"
                                         + cells[j] + "'");
            }
        }
        rows.push_back(std::move(f));
    }
    return rows;
}

std::vector<ObjectiveVector> read_objectives_csv(const fs::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_objectives_csv(in);
}

RunFiles write_run(const RunResult &result, const fs::path &dir)
{
    fs::create_directories(dir);
    const AlgoConfig &cfg = result.config;
    const std::string stem = run_stem(result.problem, result.m, cfg.ranking.variant, result.seed);
    RunFiles files{dir / (stem + ".json"), dir / (stem + ".csv")};

    {
        std::ofstream csv(files.csv, std::ios::binary);
        write_objectives_csv(csv, objectives_of(result.final_population), result.m);
        if (!csv) {
            throw std::runtime_error("failed writing " + files.csv.string());
        }
    }

    const ReferenceSet refset = reference_set_for(result.m, cfg);
    json j;
    j["problem"] = result.problem;
    j["m"] = result.m;
    j["variant"] = to_string(cfg.ranking.variant);
    j["seed"] = result.seed;
    j["population_size"] = result.population_size;
    j["generations"] = cfg.g_max;
    j["evaluations"] = result.evaluations;
    j["elapsed_seconds"] = result.elapsed_seconds;
    j["inner_angle_order"] = to_string(cfg.ranking.inner_angle_order);
    j["hv"] = result.hv ? json(*result.hv) : json(nullptr);
    j["objectives_csv"] = files.csv.filename().string();

    json c;
    c["variant"] = to_string(cfg.ranking.variant);
    c["inner_angle_order"] = to_string(cfg.ranking.inner_angle_order);
    c["ablation_scope"] = to_string(cfg.ranking.scope);
    c["pbi_theta"] = cfg.ranking.pbi.theta;
    c["pbi_theta_axis"] = cfg.ranking.pbi.theta_axis;
    c["eta_c"] = cfg.variation.eta_c;
    c["eta_m"] = cfg.variation.eta_m;
    c["p_c"] = cfg.variation.p_c;
    c["p_m"] = cfg.variation.p_m ? json(*cfg.variation.p_m) : json("1/n");
    c["g_max"] = cfg.g_max;
    c["seed"] = cfg.seed;
    c["k_m"] = refset.k_m;
    c["k_m_override"] = cfg.k_m_override.has_value();
    const LatticeDivisions div = cfg.divisions ? *cfg.divisions : default_divisions(result.m);
    c["divisions"] = div.h2 ? json::array({div.h1, *div.h2}) : json::array({div.h1});
    c["hv_exact_max_m"] = cfg.hv.exact_max_m;
    c["hv_samples"] = cfg.hv.samples;
    c["hv_metric_seed"] = cfg.hv.metric_seed;
    c["history"] = cfg.history.enabled;
    c["history_every"] = cfg.history.every;
    c["history_samples"] = cfg.history.mc_samples;
    j["config"] = c;

    json hist = json::array();
    for (const auto &h : result.hv_history) {
        hist.push_back({{"generation", h.generation}, {"hv", h.hv}});
    }
    j["hv_history"] = hist;

    std::ofstream out(files.json, std::ios::binary);
    out << j.dump(2) << '\n';
    if (!out) {
        throw std::runtime_error("failed writing " + files.json.string());
    }
    return files;
}

RunRecord load_run_record(const fs::path &json_path)
{
    std::ifstream in(json_path);
    if (!in) {
        throw std::runtime_error("cannot open " + json_path.string());
    }
    json j;
    try {
        in >> j;
        RunRecord r;
        r.problem = j.at("problem").get<std::string>();
        r.m = j.at("m").get<std::size_t>();
        r.variant = j.at("variant").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        if (j.at("hv").is_null()) {
            throw std::runtime_error("run was not scored");
        }
        r.hv = j.at("hv").get<double>();
        r.csv = json_path.parent_path() / j.at("objectives_csv").get<std::string>();
        return r;
    } catch (const std::exception &e) {
        throw std::runtime_error(json_path.string() + ": " + e.what());
    }
}

std::vector<SummaryRow> summarize(const fs::path &dir, RankingVariant baseline, const std::vector<CellKey> &expected)
{
    using Key = std::tuple<std::string, std::size_t, int, std::string>;
    std::map<Key, std::vector<double>> cells;
    std::map<std::pair<std::string, std::size_t>, std::vector<double>> baseline_hv;

    std::vector<fs::path> files;
    if (fs::exists(dir)) {
        for (const auto &entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".json") {
                files.push_back(entry.path());
            }
        }
    }
    std::sort(files.begin(), files.end());

    std::map<std::pair<Key, std::uint64_t>, double> by_seed;
    for (const auto &path : files) {
        const RunRecord r = load_run_record(path);
        by_seed[{Key{r.problem, r.m, variant_order(r.variant), r.variant}, r.seed}] = r.hv;
    }
    for (const auto &[ks, hv] : by_seed) {
        cells[ks.first].push_back(hv);
        if (std::get<3>(ks.first) == to_string(baseline)) {
            baseline_hv[{std::get<0>(ks.first), std::get<1>(ks.first)}].push_back(hv);
        }
    }
    for (const auto &e : expected) {
        const std::string v = to_string(e.variant);
        cells.try_emplace(Key{e.problem, e.m, variant_order(v), v});
    }

    std::vector<SummaryRow> rows;
    for (const auto &[key, hvs] : cells) {
        SummaryRow row;
        row.problem = std::get<0>(key);
        row.m = std::get<1>(key);
        row.variant = std::get<3>(key);
        row.runs = hvs.size();
        if (hvs.empty()) {
            row.verdict = "absent";
            rows.push_back(std::move(row));
            continue;
        }
        const MedianIqr mi = median_iqr(hvs);
        row.median_hv = mi.median;
        row.iqr = mi.iqr;
        const auto &base = baseline_hv[{row.problem, row.m}];
        if (hvs.size() < 5 || base.size() < 5) {
            row.verdict = "n/a";
        } else {
            row.verdict = verdict_symbol(wilcoxon_rank_sum(hvs, base).verdict);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows)
{
    out << "problem,m,variant,median_hv,iqr,verdict\n";
    for (const auto &r : rows) {
        out << r.problem << ',' << r.m << ',' << r.variant << ','
            << (r.median_hv ? format_number(*r.median_hv) : std::string("absent")) << ','
            << (r.iqr ? format_number(*r.iqr) : std::string("absent")) << ',' << r.verdict << '\n';
    }
}

void write_summary_table(std::ostream &out, const std::vector<SummaryRow> &rows)
{
    std::vector<std::array<std::string, 7>> table;
    table.push_back({"problem", "m", "variant", "runs", "median_hv", "iqr", "verdict"});
    for (const auto &r : rows) {
        char med[32] = "absent";
        char iqr[32] = "absent";
        if (r.median_hv) {
            std::snprintf(med, sizeof med, "%.4e", *r.median_hv);
        }
        if (r.iqr) {
            std::snprintf(iqr, sizeof iqr, "%.2e", *r.iqr);
        }
        table.push_back({r.problem, std::to_string(r.m), r.variant, std::to_string(r.runs), med, iqr, r.verdict});
    }
    // "≈" is three bytes but one column wide.
    auto width = [](const std::string &s) {
        std::size_t w = 0;
        for (unsigned char c : s) {
            w += (c & 0xC0) != 0x80;
        }
        return w;
    };
    std::array<std::size_t, 7> widths{};
    for (const auto &row : table) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], width(row[c]));
        }
    }
    for (const auto &row : table) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) {
                out << std::string(widths[c] - width(row[c]) + 2, ' ');
            }
        }
        out << '\n';
    }
}

ExperimentOutcome run_experiment(const ExperimentSpec &spec)
{
    if (spec.seeds.empty() || spec.problems.empty() || spec.variants.empty()) {
        throw std::invalid_argument("experiment: problems, variants and seeds must be nonempty");
    }
    fs::create_directories(spec.output_dir);

    struct Cell {
        ProblemInstance instance;
        RankingVariant variant;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    std::vector<CellKey> expected;
    for (const auto &inst : spec.problems) {
        for (RankingVariant v : spec.variants) {
            expected.push_back({inst.id, inst.m, v});
            for (std::uint64_t s : spec.seeds) {
                cells.push_back({inst, v, s});
            }
        }
    }

    ExperimentOutcome outcome;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const Cell &cell = cells[i];
            const std::string stem = run_stem(cell.instance.id, cell.instance.m, cell.variant, cell.seed);
            try {
                const ProblemDef problem = make_problem(cell.instance.id, cell.instance.m);
                AlgoConfig cfg;
                cfg.g_max = spec.gens ? *spec.gens
                                      : scaled_generations(cell.instance.id, cell.instance.m, spec.budget_factor);
                cfg.seed = cell.seed;
                cfg.ranking.variant = cell.variant;
                cfg.ranking.inner_angle_order = spec.inner_angle_order;
                cfg.ranking.scope = spec.ablation_scope;
                cfg.history.enabled = spec.history;
                cfg.hv.samples = spec.hv_samples;
                write_run(run_codea(problem, cfg), spec.output_dir);
                std::lock_guard lock(mu);
                ++outcome.completed;
            } catch (const std::exception &e) {
                std::lock_guard lock(mu);
                outcome.failures.push_back({stem, e.what()});
            }
        }
    };
    const std::size_t n_workers = std::clamp<std::size_t>(spec.workers, 1, cells.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < n_workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }

    std::sort(outcome.failures.begin(), outcome.failures.end(),
              [](const CellFailure &a, const CellFailure &b) { return a.stem < b.stem; });
    if (!outcome.failures.empty()) {
        std::ofstream f(spec.output_dir / "failures.txt");
        for (const auto &fail : outcome.failures) {
            f << fail.stem << ": " << fail.message << '\n';
        }
    }

    outcome.summary = summarize(spec.output_dir, spec.baseline, expected);
    {
        std::ofstream csv(spec.output_dir / "summary.csv", std::ios::binary);
        write_summary_csv(csv, outcome.summary);
    }
    {
        std::ofstream txt(spec.output_dir / "summary.txt", std::ios::binary);
        write_summary_table(txt, outcome.summary);
    }
    return outcome;
}

void write_scatter(std::ostream &out, const std::vector<ObjectiveVector> &objectives)
{
    const std::size_t m = objectives.empty() ? 3 : objectives.front().size();
    if (m < 2 || m > 3) {
        throw std::invalid_argument("scatter output needs 2 or 3 objectives");
    }
    out << (m == 2 ? "id,x,y\n" : "id,x,y,z\n");
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        if (objectives[i].size() != m) {
            throw contract_violation("write_scatter: ragged rows");
        }
        out << i;
        for (double v : objectives[i]) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

void write_parallel_coordinates(std::ostream &out, const std::vector<ObjectiveVector> &objectives)
{
    out << "id,objective,value\n";
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        for (std::size_t j = 0; j < objectives[i].size(); ++j) {
            out << i << ',' << (j + 1) << ',' << format_number(objectives[i][j]) << '\n';
        }
    }
}

} // namespace codea
