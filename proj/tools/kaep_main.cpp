// Command-line front end for the experiment harness.
//
//   kaep run      one experiment (one problem, one strategy, seeded runs)
//   kaep compare  several strategies on the same configuration
//   kaep ablate   the fixed prediction-variant set on one problem
//
// Settings resolve as flag > config file > built-in default. Exit codes:
// 0 success, 1 configuration error, 2 runtime failure.
#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "kaep/harness.hpp"

namespace {

kaep::ExperimentConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");

    kaep::ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "problem") cfg.problem = value.get<std::string>();
        else if (key == "strategy") cfg.strategy = value.get<std::string>();
        else if (key == "population_size") cfg.population_size = value.get<std::size_t>();
        else if (key == "severity") cfg.severity = value.get<int>();
        else if (key == "frequency") cfg.frequency = value.get<int>();
        else if (key == "warmup") cfg.warmup = value.get<int>();
        else if (key == "changes") cfg.changes = value.get<int>();
        else if (key == "kernel_degree") cfg.kernel_degree = value.get<int>();
        else if (key == "ridge") cfg.ridge = value.get<double>();
        else if (key == "refset_size") cfg.refset_size = value.get<std::size_t>();
        else if (key == "runs") cfg.runs = value.get<int>();
        else if (key == "base_seed") cfg.base_seed = value.get<std::uint64_t>();
        else throw std::invalid_argument("unknown config key: " + key);
    }
    return cfg;
}

struct Flags {
    std::string problem;
    std::string strategy;
    std::string config_path;
    std::string out_prefix;
    int taut = 0;
    int nt = 0;
    int runs = 0;
    int kernel_degree = 0;
    std::uint64_t seed = 0;
    std::size_t refset = 0;
    std::vector<std::string> strategies;
};

void add_common_options(CLI::App* cmd, Flags& f) {
    cmd->add_option("--problem", f.problem, "benchmark name (DF1..DF14, SynLinearDrift, SynSineDrift)");
    cmd->add_option("--taut", f.taut, "generations per environment (tau_t)");
    cmd->add_option("--nt", f.nt, "change severity (n_t)");
    cmd->add_option("--runs", f.runs, "independent seeded runs");
    cmd->add_option("--seed", f.seed, "base seed (run i uses base_seed + i)");
    cmd->add_option("--out", f.out_prefix, "output prefix; writes PREFIX.csv and PREFIX.json");
    cmd->add_option("--kernel-degree", f.kernel_degree, "polynomial kernel degree");
    cmd->add_option("--refset", f.refset, "true-front reference set size");
    cmd->add_option("--config", f.config_path, "JSON config file (flags override it)");
}

kaep::ExperimentConfig resolve_config(const CLI::App* cmd, const Flags& f) {
    kaep::ExperimentConfig cfg;
    if (!f.config_path.empty()) cfg = config_from_file(f.config_path);
    if (cmd->count("--problem")) cfg.problem = f.problem;
    if (cmd->count("--taut")) cfg.frequency = f.taut;
    if (cmd->count("--nt")) cfg.severity = f.nt;
    if (cmd->count("--runs")) cfg.runs = f.runs;
    if (cmd->count("--seed")) cfg.base_seed = f.seed;
    if (cmd->count("--kernel-degree")) cfg.kernel_degree = f.kernel_degree;
    if (cmd->count("--refset")) cfg.refset_size = f.refset;
    const CLI::Option* strat = cmd->get_option_no_throw("--strategy");
    if (strat && strat->count()) cfg.strategy = f.strategy;
    cfg.validate();
    return cfg;
}

void print_aggregate(const kaep::ExperimentResult& r) {
    const auto& a = r.aggregate;
    std::cout << r.config.strategy << " on " << r.config.problem << ": " << r.per_run.size()
              << "/" << r.config.runs << " runs\n"
              << "  MIGD " << a.migd_mean << " (std " << a.migd_std << ")\n"
              << "  MHV  " << a.mhv_mean << " (std " << a.mhv_std << ")\n"
              << "  MGD  " << a.mgd_mean << " (std " << a.mgd_std << ")\n"
              << "  MSP  " << a.msp_mean << " (std " << a.msp_std << ")\n";
}

int report_failures(const kaep::ExperimentResult& r) {
    for (const auto& msg : r.failures) std::cerr << "warning: " << msg << "\n";
    if (r.per_run.empty()) {
        std::cerr << "error: no run completed\n";
        return 2;
    }
    return 0;
}

void write_comparison_files(const std::vector<kaep::ExperimentResult>& results,
                            const std::string& prefix) {
    {
        std::ofstream csv(prefix + ".csv");
        if (!csv) throw std::runtime_error("cannot open " + prefix + ".csv for writing");
        kaep::write_comparison_csv(results, csv);
    }
    std::ofstream js(prefix + ".json");
    if (!js) throw std::runtime_error("cannot open " + prefix + ".json for writing");
    js << "{\n\"results\": [\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) js << ",\n";
        js << kaep::json_text(results[i]);
    }
    js << "]\n}\n";
}

int run_many(const kaep::ExperimentConfig& base, const std::vector<std::string>& strategies,
             const std::string& out_prefix) {
    auto results = kaep::run_comparison(base, strategies);
    kaep::write_comparison_csv(results, std::cout);
    int rc = 0;
    for (const auto& r : results) rc = std::max(rc, report_failures(r));
    if (!out_prefix.empty()) {
        write_comparison_files(results, out_prefix);
        std::cout << "wrote " << out_prefix << ".csv and " << out_prefix << ".json\n";
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic multi-objective optimization with prediction-based change response"};
    app.require_subcommand(1);

    Flags run_flags, cmp_flags, abl_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "run one experiment");
    add_common_options(run_cmd, run_flags);
    run_cmd->add_option("--strategy", run_flags.strategy,
                        "KAEP, CP, KAE, AEa, AEB, DNSGA2_A, DNSGA2_B or RESTART");

    CLI::App* cmp_cmd = app.add_subcommand("compare", "run several strategies side by side");
    add_common_options(cmp_cmd, cmp_flags);
    cmp_cmd->add_option("--strategies", cmp_flags.strategies, "comma-separated strategy list")
        ->delimiter(',')
        ->required();

    CLI::App* abl_cmd =
        app.add_subcommand("ablate", "run the fixed prediction-variant set on one problem");
    add_common_options(abl_cmd, abl_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    kaep::ExperimentConfig cfg;
    const Flags* flags = nullptr;
    try {
        if (run_cmd->parsed()) {
            flags = &run_flags;
            cfg = resolve_config(run_cmd, run_flags);
        } else if (cmp_cmd->parsed()) {
            flags = &cmp_flags;
            cfg = resolve_config(cmp_cmd, cmp_flags);
            for (const auto& s : cmp_flags.strategies) kaep::parse_strategy(s);
        } else {
            flags = &abl_flags;
            cfg = resolve_config(abl_cmd, abl_flags);
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (run_cmd->parsed()) {
            kaep::ExperimentResult result = kaep::run_experiment(cfg);
            print_aggregate(result);
            const int rc = report_failures(result);
            if (!flags->out_prefix.empty()) {
                kaep::write_results(result, flags->out_prefix);
                std::cout << "wrote " << flags->out_prefix << ".csv and "
                          << flags->out_prefix << ".json\n";
            }
            return rc;
        }
        if (cmp_cmd->parsed()) return run_many(cfg, cmp_flags.strategies, cmp_flags.out_prefix);
        return run_many(cfg, kaep::ablation_strategies(), abl_flags.out_prefix);
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 2;
    }
}
