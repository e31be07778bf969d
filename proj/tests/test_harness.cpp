#include <codea/harness.hpp>

#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unistd.h>
#include <sstream>

using namespace codea;
namespace fs = std::filesystem;

namespace
{

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string &name)
        : path(fs::temp_directory_path() / ("codea_test_" + name + "_" + std::to_string(::getpid())))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentSpec parse(const std::string &text)
{
    std::istringstream in(text);
    return parse_experiment_config(in);
}

void fake_run(const fs::path &dir, const std::string &problem, std::size_t m, const std::string &variant,
              std::uint64_t seed, double hv)
{
    nlohmann::json j;
    j["problem"] = problem;
    j["m"] = m;
    j["variant"] = variant;
    j["seed"] = seed;
    j["hv"] = hv;
    j["objectives_csv"] = "unused.csv";
    std::ofstream(dir / (problem + "_m" + std::to_string(m) + "_" + variant + "_s" + std::to_string(seed) + ".json"))
        << j.dump();
}

int cli(std::vector<std::string> args, std::string *out_text = nullptr, std::string *err_text = nullptr)
{
    args.insert(args.begin(), "codea");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) {
        *out_text = out.str();
    }
    if (err_text) {
        *err_text = err.str();
    }
    return code;
}

} // namespace

TEST_CASE("config parsing")
{
    const auto spec = parse("# desk run\n"
                            "problem = dtlz2, WFG4\n"
                            "m = 3, 5\n"
                            "variant = codea, codea-pbi\n"
                            "seeds = 5\n"
                            "seed_base = 100\n"
                            "budget_factor = 0.01\n"
                            "baseline = codea-pbi\n"
                            "inner_angle_order = min\n"
                            "workers = 3\n"
                            "output_dir = out/x   # trailing comment\n");
    REQUIRE(spec.problems.size() == 4);
    CHECK(spec.problems[1].id == "dtlz2");
    CHECK(spec.problems[1].m == 5);
    CHECK(spec.problems[2].id == "wfg4");
    CHECK(spec.variants == std::vector<RankingVariant>{RankingVariant::Codea, RankingVariant::Pbi});
    CHECK(spec.seeds == std::vector<std::uint64_t>{100, 101, 102, 103, 104});
    CHECK(spec.budget_factor == 0.01);
    CHECK(spec.baseline == RankingVariant::Pbi);
    CHECK(spec.inner_angle_order == InnerAngleOrder::Min);
    CHECK(spec.workers == 3);
    CHECK(spec.output_dir == fs::path("out/x"));
    CHECK_FALSE(spec.gens);

    const auto d = parse("problem = dtlz1\nm = 3\n");
    CHECK(d.seeds.size() == 21);
    CHECK(d.seeds.front() == 1);
    CHECK(d.variants == std::vector<RankingVariant>{RankingVariant::Codea});

    CHECK(parse("problem=dtlz1\nm=3\nseeds = 7, 9,11\ngens=10\n").seeds == std::vector<std::uint64_t>{7, 9, 11});
}

TEST_CASE("config errors name the line and field")
{
    auto fails = [](const std::string &text, std::size_t line, const std::string &field) {
        try {
            parse(text);
        } catch (const config_error &e) {
            CHECK(e.line() == line);
            CHECK(e.field() == field);
            CHECK(std::string(e.what()).find("line " + std::to_string(line)) != std::string::npos);
            return;
        }
        FAIL("no config_error for: " << text);
    };
    fails("problem = dtlz2\nm = 3\ncolour = red\n", 3, "colour");
    fails("problem = dtlz2\nm = three\n", 2, "m");
    fails("\nproblem = dtlz7\nm = 3\n", 2, "problem");
    fails("problem = dtlz2\nm = 3\nvariant = codea, moead\n", 3, "variant");
    fails("problem = dtlz2\nm = 3\nm = 5\n", 3, "m");
    fails("problem = dtlz2\nm = 3\nbudget_factor = -1\n", 3, "budget_factor");
    fails("problem = dtlz2\nm = 4\n", 1, "problem");
    fails("problem = dtlz2\njust words\n", 2, "just words");
    fails("problem = dtlz2\n", 1, "m");
}

TEST_CASE("generation budgets")
{
    CHECK(default_generations("dtlz2", 3) == 23000);
    CHECK(default_generations("cdtlz4", 10) == 552000);
    CHECK(default_generations("wfg9", 15) == 405000);
    CHECK(default_generations("dtlz1", 8) == 117000);
    CHECK(scaled_generations("dtlz2", 3, 0.01) == 230);
    CHECK(scaled_generations("dtlz2", 3, 1e-9) == 1);
    CHECK_THROWS(default_generations("dtlz2", 4));
}

TEST_CASE("objective CSV round trip is exact")
{
    RngStream rng(1);
    std::vector<ObjectiveVector> objs(50, ObjectiveVector(4));
    for (auto &f : objs) {
        for (auto &x : f) {
            x = rng.uniform() * std::pow(10.0, static_cast<double>(rng.below(20)) - 10.0);
        }
    }
    std::stringstream ss;
    write_objectives_csv(ss, objs, 4);
    CHECK(ss.str().rfind("f_1,f_2,f_3,f_4\n", 0) == 0);
    CHECK(read_objectives_csv(ss) == objs);

    std::istringstream bad_header("x,y\n1,2\n");
    CHECK_THROWS(read_objectives_csv(bad_header));
    std::istringstream ragged("f_1,f_2\n1,2\n3\n");
    CHECK_THROWS(read_objectives_csv(ragged));
    std::istringstream junk("f_1\nabc\n");
    CHECK_THROWS(read_objectives_csv(junk));
    CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("persisted runs re-score to the stored hv")
{
    TempDir tmp("persist");
    AlgoConfig cfg;
    cfg.g_max = 20;
    cfg.seed = 7;
    cfg.history.every = 10;
    for (const auto &p : {dtlz(2, 3), dtlz(2, 5)}) {
        HvOptions hv;
        hv.samples = 20000;
        cfg.hv = hv;
        const RunResult res = run_codea(p, cfg);
        const RunFiles files = write_run(res, tmp.path);
        CHECK(files.json.filename() == run_stem(problem_id(p), p.m, RankingVariant::Codea, 7) + ".json");
        const RunRecord rec = load_run_record(files.json);
        CHECK(rec.hv == *res.hv);
        CHECK(rec.seed == 7);
        CHECK(rec.csv == files.csv);
        const auto objs = read_objectives_csv(rec.csv);
        CHECK(objs == objectives_of(res.final_population));
        CHECK(normalized_hv(objs, make_problem(rec.problem, rec.m), hv) == rec.hv);

        nlohmann::json j;
        std::ifstream(files.json) >> j;
        CHECK(j["inner_angle_order"] == "max");
        CHECK(j["evaluations"] == res.evaluations);
        CHECK(j["config"]["seed"] == 7);
        CHECK(j["config"]["g_max"] == 20);
        CHECK(j["hv_history"].size() == 3);
    }
}

TEST_CASE("summaries")
{
    TempDir tmp("summary");
    for (std::uint64_t s = 1; s <= 21; ++s) {
        fake_run(tmp.path, "dtlz2", 3, "codea", s, 0.5);
        fake_run(tmp.path, "dtlz2", 3, "codea-pbi", s, 0.1 + 0.001 * static_cast<double>(s));
        fake_run(tmp.path, "dtlz2", 3, "codea-nbi", s, 0.9 + 0.001 * static_cast<double>(s));
    }
    fake_run(tmp.path, "wfg4", 3, "codea", 1, 0.42);
    const std::vector<CellKey> expected{{"dtlz2", 3, RankingVariant::CodeaStar}, {"wfg4", 3, RankingVariant::Pbi}};
    const auto rows = summarize(tmp.path, RankingVariant::Codea, expected);
    REQUIRE(rows.size() == 6);

    CHECK(rows[0].variant == "codea");
    CHECK(rows[0].runs == 21);
    CHECK(*rows[0].median_hv == 0.5);
    CHECK(*rows[0].iqr == 0.0);
    CHECK(rows[0].verdict == "≈");
    CHECK(rows[1].variant == "codea-star");
    CHECK(rows[1].verdict == "absent");
    CHECK(rows[2].variant == "codea-pbi");
    CHECK(rows[2].verdict == "-");
    CHECK(rows[3].variant == "codea-nbi");
    CHECK(rows[3].verdict == "+");
    CHECK(rows[4].problem == "wfg4");
    CHECK(*rows[4].median_hv == 0.42);
    CHECK(*rows[4].iqr == 0.0);
    CHECK(rows[4].verdict == "n/a");
    CHECK(rows[5].verdict == "absent");

    std::ostringstream csv;
    write_summary_csv(csv, rows);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "problem,m,variant,median_hv,iqr,verdict");
    std::getline(lines, line);
    CHECK(line == "dtlz2,3,codea,0.5,0,≈");
    std::getline(lines, line);
    CHECK(line == "dtlz2,3,codea-star,absent,absent,absent");

    std::ostringstream table;
    write_summary_table(table, rows);
    CHECK(table.str().find("codea-pbi") != std::string::npos);
}

TEST_CASE("experiments write every cell and reproduce their summary")
{
    TempDir a("exp_a");
    TempDir b("exp_b");
    const std::string body = "problem = dtlz2, dtlz1\nm = 3\nvariant = codea, codea-pbi\nseeds = 5\ngens = 15\nworkers = 4\n";
    auto spec_a = parse(body + "output_dir = " + a.path.string() + "\n");
    auto spec_b = parse(body + "output_dir = " + b.path.string() + "\n");
    spec_b.workers = 1;
    const auto out_a = run_experiment(spec_a);
    const auto out_b = run_experiment(spec_b);
    CHECK(out_a.completed == 20);
    CHECK(out_a.failures.empty());
    std::size_t json = 0, csv = 0;
    for (const auto &e : fs::directory_iterator(a.path)) {
        json += e.path().extension() == ".json";
        csv += e.path().extension() == ".csv" && e.path().filename() != "summary.csv";
    }
    CHECK(json == 20);
    CHECK(csv == 20);
    CHECK(fs::exists(a.path / "summary.csv"));
    CHECK(fs::exists(a.path / "summary.txt"));
    CHECK(out_a.summary.size() == 4);
    CHECK(slurp(a.path / "summary.csv") == slurp(b.path / "summary.csv"));
    CHECK(slurp(a.path / "dtlz1_m3_codea-pbi_s3.csv") == slurp(b.path / "dtlz1_m3_codea-pbi_s3.csv"));
}

TEST_CASE("failed cells are recorded and the rest continue")
{
    TempDir tmp("fail");
    ExperimentSpec spec;
    spec.problems = {{"dtlz2", 3}, {"dtlz2", 4}};
    spec.variants = {RankingVariant::Codea};
    spec.seeds = {1, 2};
    spec.gens = 3;
    spec.output_dir = tmp.path;
    const auto out = run_experiment(spec);
    CHECK(out.completed == 2);
    REQUIRE(out.failures.size() == 2);
    CHECK(out.failures[0].stem == "dtlz2_m4_codea_s1");
    CHECK(fs::exists(tmp.path / "failures.txt"));
    bool absent = false;
    for (const auto &r : out.summary) {
        absent = absent || (r.m == 4 && r.verdict == "absent");
    }
    CHECK(absent);
}

TEST_CASE("plot data")
{
    const std::vector<ObjectiveVector> three{{0.1, 0.2, 0.3}, {1, 2, 3}};
    std::ostringstream s;
    write_scatter(s, three);
    CHECK(s.str() == "id,x,y,z\n0,0.10000000000000001,0.20000000000000001,0.29999999999999999\n1,1,2,3\n");

    std::vector<ObjectiveVector> ten(4, ObjectiveVector(10, 0.5));
    std::ostringstream l;
    write_parallel_coordinates(l, ten);
    std::istringstream in(l.str());
    std::string line;
    std::size_t rows = 0;
    std::getline(in, line);
    CHECK(line == "id,objective,value");
    while (std::getline(in, line)) {
        ++rows;
    }
    CHECK(rows == 40);
    CHECK(l.str().find("\n3,10,0.5\n") != std::string::npos);
}

TEST_CASE("command line")
{
    TempDir tmp("cli");
    const std::string dir = tmp.path.string();
    std::string out, err;

    REQUIRE(cli({"run", "--problem", "dtlz2", "--m", "3", "--variant", "codea", "--gens", "25", "--seed", "7", "--out",
                 dir},
                &out, &err)
            == 0);
    const fs::path csv = tmp.path / "dtlz2_m3_codea_s7.csv";
    CHECK(fs::exists(tmp.path / "dtlz2_m3_codea_s7.json"));
    CHECK(fs::exists(csv));
    const std::string first = slurp(csv);
    REQUIRE(cli({"run", "--problem", "dtlz2", "--m", "3", "--gens", "25", "--seed", "7", "--out", dir}) == 0);
    CHECK(slurp(csv) == first);

    REQUIRE(cli({"hv", "--in", csv.string(), "--problem", "dtlz2"}, &out) == 0);
    CHECK(std::stod(out) == load_run_record(tmp.path / "dtlz2_m3_codea_s7.json").hv);

    REQUIRE(cli({"refpoints", "--m", "3"}, &out) == 0);
    CHECK(std::count(out.begin(), out.end(), '\n') == 92);
    CHECK(out.rfind("w_1,w_2,w_3,layer,r\n1,0,0,boundary,0.5\n", 0) == 0);
    REQUIRE(cli({"refpoints", "--m", "8"}, &out) == 0);
    CHECK(std::count(out.begin(), out.end(), '\n') == 157);
    CHECK(out.find(",inner,\n") != std::string::npos);

    REQUIRE(cli({"plotdata", "--in", csv.string()}, &out) == 0);
    CHECK(out.rfind("id,x,y,z\n", 0) == 0);
    {
        std::ofstream f(tmp.path / "pop10.csv");
        write_objectives_csv(f, std::vector<ObjectiveVector>(3, ObjectiveVector(10, 0.25)), 10);
    }
    REQUIRE(cli({"plotdata", "--in", (tmp.path / "pop10.csv").string(), "--m", "10"}, &out) == 0);
    CHECK(out.rfind("id,objective,value\n0,1,0.25\n", 0) == 0);
    CHECK(cli({"plotdata", "--in", (tmp.path / "pop10.csv").string(), "--m", "8"}, &out, &err) != 0);

    CHECK(cli({"run", "--problem", "dtlz2", "--m", "3", "--N", "100", "--gens", "2", "--out", dir}, &out, &err) != 0);
    CHECK(err.find("reference-set size") != std::string::npos);

    {
        std::ofstream f(tmp.path / "bad.cfg");
        f << "problem = dtlz2\nm = 3\nseeds = many\n";
    }
    CHECK(cli({"experiment", "--config", (tmp.path / "bad.cfg").string()}, &out, &err) == 2);
    CHECK(err.find("line 3") != std::string::npos);
    CHECK(err.find("seeds") != std::string::npos);

    CHECK(cli({"frobnicate"}, &out, &err) != 0);
    CHECK(cli({}, &out, &err) != 0);
}
