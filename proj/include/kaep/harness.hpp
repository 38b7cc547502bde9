// Experiment harness: runs the dynamic optimizer against a benchmark under
// the discrete environment schedule, scores every completed environment
// against the true front, and serializes per-change and aggregate results.
//
// The per-generation budget is identical for every response strategy: the
// detector fraction is re-evaluated at the top of each generation, and a
// change consumes exactly one population's worth of evaluations (the new
// members), the same as the offspring of an undisturbed generation.
#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kaep/benchmarks.hpp"
#include "kaep/core.hpp"
#include "kaep/dynamics.hpp"
#include "kaep/metrics.hpp"
#include "kaep/nsga2.hpp"
#include "kaep/prediction.hpp"

namespace kaep {

struct ExperimentConfig {
    std::string problem = "DF1";
    std::string strategy = "KAEP";
    std::size_t population_size = 100;
    int severity = 10;   // n_t
    int frequency = 10;  // tau_t, generations per environment
    int warmup = 100;
    int changes = 20;
    int kernel_degree = 2;
    double ridge = -1.0;  // <0 selects the scale-aware default
    std::size_t refset_size = 1000;
    int runs = 20;
    std::uint64_t base_seed = 1;

    int max_generations() const { return warmup + changes * frequency; }

    void validate() const {
        if (population_size == 0 || population_size % 2 != 0)
            throw std::invalid_argument("config: population_size must be positive and even");
        if (severity < 1) throw std::invalid_argument("config: severity must be >= 1");
        if (frequency < 1) throw std::invalid_argument("config: frequency must be >= 1");
        if (warmup < 0) throw std::invalid_argument("config: warmup must be >= 0");
        if (changes < 1) throw std::invalid_argument("config: changes must be >= 1");
        if (kernel_degree < 1)
            throw std::invalid_argument("config: kernel_degree must be >= 1");
        if (refset_size == 0) throw std::invalid_argument("config: refset_size must be > 0");
        if (runs < 1) throw std::invalid_argument("config: runs must be >= 1");
        problem_by_name(problem);
        parse_strategy(strategy);
    }
};

struct RunResult {
    int run_id = 0;
    RunSummary summary;
    double wall_seconds = 0.0;
    long long evaluations = 0;
};

struct AggregateStats {
    double migd_mean = 0.0, migd_std = 0.0;
    double mhv_mean = 0.0, mhv_std = 0.0;
    double mgd_mean = 0.0, mgd_std = 0.0;
    double msp_mean = 0.0, msp_std = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<RunResult> per_run;
    AggregateStats aggregate;
    std::vector<std::string> failures;
};

// One full optimization run. Seeds are the only source of randomness, so a
// repeated call with the same config and seed reproduces every byte.
inline RunResult run_dmoea(const ExperimentConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    const DynamicProblem prob = problem_by_name(cfg.problem);
    const TimeController clock{cfg.severity, cfg.frequency, cfg.warmup};
    const VariationParams variation = VariationParams::defaults_for(prob.n);

    ResponseStrategy strategy;
    strategy.kind = parse_strategy(cfg.strategy);
    strategy.kernel.degree = cfg.kernel_degree;
    strategy.lambda = cfg.ridge;
    strategy.variation = variation;

    Rng rng(seed);
    long long evaluations = 0;
    auto eval_at = [&](const DecisionVector& x, double t) {
        ++evaluations;
        return prob.evaluate(x, t);
    };

    struct RefCache {
        std::vector<ObjectiveVector> pof;
        ObjectiveVector refpoint;
    };
    std::map<double, RefCache> refsets;
    auto ref_for = [&](double t) -> const RefCache& {
        auto it = refsets.find(t);
        if (it == refsets.end()) {
            RefCache rc;
            rc.pof = prob.sample_true_pof(t, cfg.refset_size);
            rc.refpoint = reference_point(rc.pof);
            it = refsets.emplace(t, std::move(rc)).first;
        }
        return it->second;
    };

    const auto t_start = std::chrono::steady_clock::now();

    const std::size_t n = cfg.population_size;
    Population pop;
    pop.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Individual ind;
        ind.x.resize(prob.n);
        for (std::size_t j = 0; j < prob.n; ++j)
            ind.x[j] = rng.uniform(prob.bounds.lower[j], prob.bounds.upper[j]);
        ind.f = eval_at(ind.x, 0.0);
        pop.push_back(std::move(ind));
    }

    const std::size_t detector_count = std::max<std::size_t>(1, n / 10);
    DetectorSet detectors = archive_detectors(pop, detector_count, 0.0, rng);

    // Scores the population that just finished the environment at time env_t.
    auto capture = [&](double env_t, int index) {
        Population copy = pop;
        auto fronts = fast_nondominated_sort(copy);
        std::vector<ObjectiveVector> front;
        front.reserve(fronts[0].size());
        for (std::size_t i : fronts[0]) front.push_back(copy[i].f);
        const RefCache& rc = ref_for(env_t);
        ChangeRecord rec;
        rec.change_index = index;
        rec.t = env_t;
        rec.igd = igd(rc.pof, front);
        rec.gd = gd(rc.pof, front);
        rec.hv = hv(front, rc.refpoint);
        rec.sp = front.size() < 2 ? 0.0 : sp(front);
        return rec;
    };

    std::vector<ChangeRecord> events;
    Population prev_env_final;
    int changes_seen = 0;
    int last_change_gen = -1;
    const int max_gen = cfg.max_generations();

    for (int gen = 1; gen <= max_gen; ++gen) {
        const double t_now = clock.time_at(gen);
        const bool changed = detect_change(
            detectors, [&](const DecisionVector& x) { return eval_at(x, t_now); });

        if (changed) {
            ++changes_seen;
            last_change_gen = gen;
            ChangeRecord rec = capture(detectors.t, changes_seen);

            Population ended = pop;
            if (changes_seen == 1) {
                for (auto& ind : pop) ind.f = eval_at(ind.x, t_now);
            } else {
                ResponseResult rr = respond(strategy, prev_env_final, ended, n, prob.bounds, rng);
                rec.fallbacks = rr.fallbacks;
                pop = std::move(rr.members);
                for (auto& ind : pop) ind.f = eval_at(ind.x, t_now);
            }
            prev_env_final = std::move(ended);
            events.push_back(rec);
        } else {
            pop = generation_step(
                std::move(pop), [&](const DecisionVector& x) { return eval_at(x, t_now); },
                prob.bounds, variation, rng);
        }
        detectors = archive_detectors(pop, detector_count, t_now, rng);
    }

    // The closing environment only gets its own record when the run did not
    // end on a change generation (with the stock schedule the final change
    // lands exactly on the last generation).
    if (last_change_gen != max_gen)
        events.push_back(capture(clock.time_at(max_gen), changes_seen + 1));

    RunResult out;
    out.summary = summarize(std::move(events));
    out.summary.seed = seed;
    out.evaluations = evaluations;
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

inline AggregateStats aggregate_stats(const std::vector<RunResult>& runs) {
    AggregateStats agg;
    if (runs.empty()) return agg;
    const double n = static_cast<double>(runs.size());
    for (const auto& r : runs) {
        agg.migd_mean += r.summary.migd;
        agg.mhv_mean += r.summary.mhv;
        agg.mgd_mean += r.summary.mgd;
        agg.msp_mean += r.summary.msp;
    }
    agg.migd_mean /= n;
    agg.mhv_mean /= n;
    agg.mgd_mean /= n;
    agg.msp_mean /= n;
    if (runs.size() > 1) {
        for (const auto& r : runs) {
            agg.migd_std += (r.summary.migd - agg.migd_mean) * (r.summary.migd - agg.migd_mean);
            agg.mhv_std += (r.summary.mhv - agg.mhv_mean) * (r.summary.mhv - agg.mhv_mean);
            agg.mgd_std += (r.summary.mgd - agg.mgd_mean) * (r.summary.mgd - agg.mgd_mean);
            agg.msp_std += (r.summary.msp - agg.msp_mean) * (r.summary.msp - agg.msp_mean);
        }
        agg.migd_std = std::sqrt(agg.migd_std / (n - 1.0));
        agg.mhv_std = std::sqrt(agg.mhv_std / (n - 1.0));
        agg.mgd_std = std::sqrt(agg.mgd_std / (n - 1.0));
        agg.msp_std = std::sqrt(agg.msp_std / (n - 1.0));
    }
    return agg;
}

// Sequential independent runs seeded base_seed, base_seed + 1, ... A run
// that throws is recorded under `failures` and excluded from the aggregate.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentResult result;
    result.config = cfg;
    for (int i = 0; i < cfg.runs; ++i) {
        const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(i);
        try {
            RunResult run = run_dmoea(cfg, seed);
            run.run_id = i;
            result.per_run.push_back(std::move(run));
        } catch (const std::exception& e) {
            result.failures.push_back("run " + std::to_string(i) + " (seed " +
                                      std::to_string(seed) + "): " + e.what());
        }
    }
    result.aggregate = aggregate_stats(result.per_run);
    return result;
}

// ---- serialization ---------------------------------------------------------

namespace harness_detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

}  // namespace harness_detail

inline void write_csv(const ExperimentResult& result, std::ostream& os) {
    os << "run_id,change_index,t,igd,hv,gd,sp,fallbacks\n";
    for (const auto& run : result.per_run)
        for (const auto& rec : run.summary.per_change)
            os << run.run_id << ',' << rec.change_index << ',' << harness_detail::fmt(rec.t)
               << ',' << harness_detail::fmt(rec.igd) << ',' << harness_detail::fmt(rec.hv)
               << ',' << harness_detail::fmt(rec.gd) << ',' << harness_detail::fmt(rec.sp)
               << ',' << rec.fallbacks << '\n';
}

// Wall-clock time is deliberately absent from the report: replaying a seeded
// run must reproduce the output files byte for byte.
inline std::string json_text(const ExperimentResult& result) {
    using harness_detail::fmt;
    using harness_detail::json_escape;
    const ExperimentConfig& c = result.config;
    std::string j;
    j += "{\n  \"config\": {";
    j += "\"problem\": \"" + json_escape(c.problem) + "\", ";
    j += "\"strategy\": \"" + json_escape(c.strategy) + "\", ";
    j += "\"population_size\": " + std::to_string(c.population_size) + ", ";
    j += "\"severity\": " + std::to_string(c.severity) + ", ";
    j += "\"frequency\": " + std::to_string(c.frequency) + ", ";
    j += "\"warmup\": " + std::to_string(c.warmup) + ", ";
    j += "\"changes\": " + std::to_string(c.changes) + ", ";
    j += "\"kernel_degree\": " + std::to_string(c.kernel_degree) + ", ";
    j += "\"ridge\": " + fmt(c.ridge) + ", ";
    j += "\"refset_size\": " + std::to_string(c.refset_size) + ", ";
    j += "\"runs\": " + std::to_string(c.runs) + ", ";
    j += "\"base_seed\": " + std::to_string(c.base_seed) + "},\n";
    j += "  \"per_run\": [";
    for (std::size_t i = 0; i < result.per_run.size(); ++i) {
        const RunResult& r = result.per_run[i];
        if (i) j += ", ";
        j += "\n    {\"run_id\": " + std::to_string(r.run_id);
        j += ", \"seed\": " + std::to_string(r.summary.seed);
        j += ", \"migd\": " + fmt(r.summary.migd);
        j += ", \"mhv\": " + fmt(r.summary.mhv);
        j += ", \"mgd\": " + fmt(r.summary.mgd);
        j += ", \"msp\": " + fmt(r.summary.msp);
        j += ", \"evaluations\": " + std::to_string(r.evaluations) + "}";
    }
    j += "\n  ],\n";
    const AggregateStats& a = result.aggregate;
    j += "  \"aggregate\": {";
    j += "\"migd_mean\": " + fmt(a.migd_mean) + ", \"migd_std\": " + fmt(a.migd_std) + ", ";
    j += "\"mhv_mean\": " + fmt(a.mhv_mean) + ", \"mhv_std\": " + fmt(a.mhv_std) + ", ";
    j += "\"mgd_mean\": " + fmt(a.mgd_mean) + ", \"mgd_std\": " + fmt(a.mgd_std) + ", ";
    j += "\"msp_mean\": " + fmt(a.msp_mean) + ", \"msp_std\": " + fmt(a.msp_std) + "},\n";
    j += "  \"failures\": [";
    for (std::size_t i = 0; i < result.failures.size(); ++i) {
        if (i) j += ", ";
        j += "\"" + json_escape(result.failures[i]) + "\"";
    }
    j += "]\n}\n";
    return j;
}

inline void write_json(const ExperimentResult& result, std::ostream& os) {
    os << json_text(result);
}

// Writes PREFIX.csv (per-change rows) and PREFIX.json (summary + aggregate).
inline void write_results(const ExperimentResult& result, const std::string& prefix) {
    {
        std::ofstream csv(prefix + ".csv");
        if (!csv) throw std::runtime_error("cannot open " + prefix + ".csv for writing");
        write_csv(result, csv);
    }
    std::ofstream js(prefix + ".json");
    if (!js) throw std::runtime_error("cannot open " + prefix + ".json for writing");
    write_json(result, js);
}

// Side-by-side aggregate table for strategy comparisons and ablations. The
// evaluations column makes budget parity auditable at a glance.
inline void write_comparison_csv(const std::vector<ExperimentResult>& results,
                                 std::ostream& os) {
    using harness_detail::fmt;
    os << "strategy,problem,runs,migd_mean,migd_std,mhv_mean,mhv_std,mgd_mean,mgd_std,"
          "msp_mean,msp_std,evaluations\n";
    for (const auto& r : results) {
        const long long evals = r.per_run.empty() ? 0 : r.per_run.front().evaluations;
        os << r.config.strategy << ',' << r.config.problem << ',' << r.per_run.size() << ','
           << fmt(r.aggregate.migd_mean) << ',' << fmt(r.aggregate.migd_std) << ','
           << fmt(r.aggregate.mhv_mean) << ',' << fmt(r.aggregate.mhv_std) << ','
           << fmt(r.aggregate.mgd_mean) << ',' << fmt(r.aggregate.mgd_std) << ','
           << fmt(r.aggregate.msp_mean) << ',' << fmt(r.aggregate.msp_std) << ','
           << evals << '\n';
    }
}

// Runs the same experiment under each strategy in turn.
inline std::vector<ExperimentResult> run_comparison(ExperimentConfig base,
                                                    const std::vector<std::string>& strategies) {
    if (strategies.empty())
        throw std::invalid_argument("run_comparison: no strategies given");
    std::vector<ExperimentResult> results;
    results.reserve(strategies.size());
    for (const auto& name : strategies) {
        base.strategy = strategy_name(parse_strategy(name));
        results.push_back(run_experiment(base));
    }
    return results;
}

inline const std::vector<std::string>& ablation_strategies() {
    static const std::vector<std::string> names = {"KAEP", "CP", "KAE", "AEa", "AEB"};
    return names;
}

}  // namespace kaep
