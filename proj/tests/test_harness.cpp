#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "kaep/harness.hpp"

using namespace kaep;

namespace {

ExperimentConfig tiny_config() {
    ExperimentConfig cfg;
    cfg.problem = "SynLinearDrift";
    cfg.strategy = "RESTART";
    cfg.population_size = 20;
    cfg.severity = 10;
    cfg.frequency = 5;
    cfg.warmup = 10;
    cfg.changes = 4;
    cfg.refset_size = 200;
    cfg.runs = 2;
    cfg.base_seed = 7;
    return cfg;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::string csv_of(const ExperimentResult& result) {
    std::ostringstream os;
    write_csv(result, os);
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("config validation rejects out-of-range settings", "[harness][config]") {
    ExperimentConfig cfg;  // defaults
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.max_generations() == 300);

    auto expect_reject = [](auto mutate) {
        ExperimentConfig bad;
        mutate(bad);
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    };
    expect_reject([](ExperimentConfig& c) { c.population_size = 0; });
    expect_reject([](ExperimentConfig& c) { c.population_size = 101; });
    expect_reject([](ExperimentConfig& c) { c.severity = 0; });
    expect_reject([](ExperimentConfig& c) { c.frequency = 0; });
    expect_reject([](ExperimentConfig& c) { c.warmup = -1; });
    expect_reject([](ExperimentConfig& c) { c.changes = 0; });
    expect_reject([](ExperimentConfig& c) { c.kernel_degree = 0; });
    expect_reject([](ExperimentConfig& c) { c.refset_size = 0; });
    expect_reject([](ExperimentConfig& c) { c.runs = 0; });
    expect_reject([](ExperimentConfig& c) { c.problem = "DF99"; });
    expect_reject([](ExperimentConfig& c) { c.strategy = "MAGIC"; });

    ExperimentConfig alt;
    alt.warmup = 50;
    alt.changes = 10;
    alt.frequency = 25;
    CHECK(alt.max_generations() == 300);
}

TEST_CASE("a run records one score per completed environment", "[harness][loop]") {
    ExperimentConfig cfg = tiny_config();
    RunResult run = run_dmoea(cfg, 42);

    const auto& recs = run.summary.per_change;
    REQUIRE(recs.size() == 4);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].change_index == static_cast<int>(i) + 1);
        CHECK(recs[i].t == Catch::Approx(0.1 * static_cast<double>(i)).margin(1e-15));
        CHECK(std::isfinite(recs[i].igd));
        CHECK(recs[i].igd >= 0.0);
        CHECK(recs[i].hv >= 0.0);
        CHECK(recs[i].gd >= 0.0);
        CHECK(recs[i].sp >= 0.0);
    }

    double migd = 0.0;
    for (const auto& r : recs) migd += r.igd;
    CHECK(run.summary.migd == Catch::Approx(migd / 4.0).margin(1e-15));
    CHECK(run.summary.seed == 42);
    CHECK(run.wall_seconds >= 0.0);

    // init + per generation: detectors re-checked, then one population of
    // evaluations whether the generation evolved or responded to a change
    const long long n = 20, det = 2, gens = 30;
    CHECK(run.evaluations == n + gens * (det + n));
}

TEST_CASE("every strategy consumes the identical evaluation budget",
          "[harness][budget]") {
    ExperimentConfig cfg = tiny_config();
    cfg.runs = 1;
    long long expect = -1;
    for (const std::string name :
         {"KAEP", "CP", "KAE", "AEa", "AEB", "DNSGA2_A", "DNSGA2_B", "RESTART"}) {
        cfg.strategy = name;
        RunResult run = run_dmoea(cfg, 11);
        INFO("strategy " << name);
        if (expect < 0) expect = run.evaluations;
        CHECK(run.evaluations == expect);
        CHECK(run.summary.per_change.size() == 4);
    }
}

TEST_CASE("identical seeds reproduce a run exactly", "[harness][determinism]") {
    ExperimentConfig cfg = tiny_config();
    cfg.strategy = "KAEP";
    RunResult a = run_dmoea(cfg, 3);
    RunResult b = run_dmoea(cfg, 3);
    REQUIRE(a.summary.per_change.size() == b.summary.per_change.size());
    for (std::size_t i = 0; i < a.summary.per_change.size(); ++i) {
        CHECK(a.summary.per_change[i].igd == b.summary.per_change[i].igd);
        CHECK(a.summary.per_change[i].hv == b.summary.per_change[i].hv);
        CHECK(a.summary.per_change[i].gd == b.summary.per_change[i].gd);
        CHECK(a.summary.per_change[i].sp == b.summary.per_change[i].sp);
        CHECK(a.summary.per_change[i].fallbacks == b.summary.per_change[i].fallbacks);
    }
    CHECK(a.summary.migd == b.summary.migd);
    CHECK(a.evaluations == b.evaluations);

    RunResult c = run_dmoea(cfg, 4);
    bool differs = false;
    for (std::size_t i = 0; i < a.summary.per_change.size(); ++i)
        differs = differs || a.summary.per_change[i].igd != c.summary.per_change[i].igd;
    CHECK(differs);
}

TEST_CASE("experiment aggregates match a direct recomputation", "[harness][aggregate]") {
    ExperimentConfig cfg = tiny_config();
    cfg.strategy = "CP";
    cfg.runs = 3;
    ExperimentResult result = run_experiment(cfg);
    REQUIRE(result.per_run.size() == 3);
    CHECK(result.failures.empty());
    for (int i = 0; i < 3; ++i) {
        CHECK(result.per_run[i].run_id == i);
        CHECK(result.per_run[i].summary.seed == cfg.base_seed + static_cast<std::uint64_t>(i));
    }

    auto mean_std = [&](auto pick) {
        double mean = 0.0;
        for (const auto& r : result.per_run) mean += pick(r);
        mean /= 3.0;
        double var = 0.0;
        for (const auto& r : result.per_run) var += (pick(r) - mean) * (pick(r) - mean);
        return std::pair<double, double>(mean, std::sqrt(var / 2.0));
    };
    auto [migd_m, migd_s] = mean_std([](const RunResult& r) { return r.summary.migd; });
    auto [mhv_m, mhv_s] = mean_std([](const RunResult& r) { return r.summary.mhv; });
    auto [mgd_m, mgd_s] = mean_std([](const RunResult& r) { return r.summary.mgd; });
    auto [msp_m, msp_s] = mean_std([](const RunResult& r) { return r.summary.msp; });
    CHECK(result.aggregate.migd_mean == Catch::Approx(migd_m).margin(1e-12));
    CHECK(result.aggregate.migd_std == Catch::Approx(migd_s).margin(1e-12));
    CHECK(result.aggregate.mhv_mean == Catch::Approx(mhv_m).margin(1e-12));
    CHECK(result.aggregate.mhv_std == Catch::Approx(mhv_s).margin(1e-12));
    CHECK(result.aggregate.mgd_mean == Catch::Approx(mgd_m).margin(1e-12));
    CHECK(result.aggregate.mgd_std == Catch::Approx(mgd_s).margin(1e-12));
    CHECK(result.aggregate.msp_mean == Catch::Approx(msp_m).margin(1e-12));
    CHECK(result.aggregate.msp_std == Catch::Approx(msp_s).margin(1e-12));

    ExperimentConfig one = cfg;
    one.runs = 1;
    ExperimentResult single = run_experiment(one);
    CHECK(single.aggregate.migd_std == 0.0);
    CHECK(single.aggregate.migd_mean == Catch::Approx(single.per_run[0].summary.migd));
}

TEST_CASE("per-change table has one row per run and change", "[harness][csv]") {
    ExperimentConfig cfg = tiny_config();
    ExperimentResult result = run_experiment(cfg);
    auto lines = split_lines(csv_of(result));
    REQUIRE(lines.size() == 1 + 2 * 4);
    CHECK(lines[0] == "run_id,change_index,t,igd,hv,gd,sp,fallbacks");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t commas = 0;
        for (char ch : lines[i]) commas += (ch == ',');
        CHECK(commas == 7);
    }
    // rows are grouped by run in seed order
    CHECK(lines[1].substr(0, 4) == "0,1,");
    CHECK(lines[4].substr(0, 4) == "0,4,");
    CHECK(lines[5].substr(0, 4) == "1,1,");
    CHECK(lines[8].substr(0, 4) == "1,4,");
}

TEST_CASE("json report parses and mirrors the in-memory result", "[harness][json]") {
    ExperimentConfig cfg = tiny_config();
    cfg.strategy = "AEB";
    ExperimentResult result = run_experiment(cfg);
    nlohmann::json j = nlohmann::json::parse(json_text(result));

    CHECK(j["config"]["problem"] == "SynLinearDrift");
    CHECK(j["config"]["strategy"] == "AEB");
    CHECK(j["config"]["population_size"] == 20);
    CHECK(j["config"]["severity"] == 10);
    CHECK(j["config"]["frequency"] == 5);
    CHECK(j["config"]["warmup"] == 10);
    CHECK(j["config"]["changes"] == 4);
    CHECK(j["config"]["kernel_degree"] == 2);
    CHECK(j["config"]["ridge"] == Catch::Approx(-1.0));
    CHECK(j["config"]["refset_size"] == 200);
    CHECK(j["config"]["runs"] == 2);
    CHECK(j["config"]["base_seed"] == 7);

    REQUIRE(j["per_run"].size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& run = j["per_run"][i];
        const RunResult& want = result.per_run[i];
        CHECK(run["run_id"] == want.run_id);
        CHECK(run["seed"] == want.summary.seed);
        CHECK(run["migd"].get<double>() == want.summary.migd);
        CHECK(run["mhv"].get<double>() == want.summary.mhv);
        CHECK(run["mgd"].get<double>() == want.summary.mgd);
        CHECK(run["msp"].get<double>() == want.summary.msp);
        CHECK(run["evaluations"] == want.evaluations);
    }
    CHECK(j["aggregate"]["migd_mean"].get<double>() == result.aggregate.migd_mean);
    CHECK(j["aggregate"]["msp_std"].get<double>() == result.aggregate.msp_std);
    CHECK(j["failures"].is_array());
    CHECK(j["failures"].empty());
}

TEST_CASE("result files are byte-identical across repeated runs",
          "[harness][determinism]") {
    ExperimentConfig cfg = tiny_config();
    cfg.strategy = "KAEP";
    cfg.runs = 1;
    ExperimentResult r1 = run_experiment(cfg);
    ExperimentResult r2 = run_experiment(cfg);
    write_results(r1, "harness_test_a");
    write_results(r2, "harness_test_b");
    CHECK(slurp("harness_test_a.csv") == slurp("harness_test_b.csv"));
    CHECK(slurp("harness_test_a.json") == slurp("harness_test_b.json"));

    ExperimentConfig other = cfg;
    other.base_seed = 1234;
    write_results(run_experiment(other), "harness_test_c");
    CHECK(slurp("harness_test_a.csv") != slurp("harness_test_c.csv"));

    for (const char* p : {"harness_test_a", "harness_test_b", "harness_test_c"}) {
        std::remove((std::string(p) + ".csv").c_str());
        std::remove((std::string(p) + ".json").c_str());
    }
}

TEST_CASE("comparison table lines up strategies with a shared budget",
          "[harness][compare]") {
    ExperimentConfig cfg = tiny_config();
    cfg.runs = 1;
    auto results = run_comparison(cfg, ablation_strategies());
    REQUIRE(results.size() == 5);

    std::ostringstream os;
    write_comparison_csv(results, os);
    auto lines = split_lines(os.str());
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] ==
          "strategy,problem,runs,migd_mean,migd_std,mhv_mean,mhv_std,mgd_mean,mgd_std,"
          "msp_mean,msp_std,evaluations");
    CHECK(lines[1].substr(0, 5) == "KAEP,");
    CHECK(lines[2].substr(0, 3) == "CP,");
    CHECK(lines[5].substr(0, 4) == "AEB,");

    const long long budget = results[0].per_run[0].evaluations;
    for (const auto& r : results) {
        REQUIRE(r.per_run.size() == 1);
        CHECK(r.per_run[0].evaluations == budget);
    }

    CHECK_THROWS_AS(run_comparison(cfg, {}), std::invalid_argument);
    CHECK_THROWS_AS(run_comparison(cfg, {"bogus"}), std::invalid_argument);
}
