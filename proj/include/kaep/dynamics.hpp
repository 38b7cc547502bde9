// Discrete environment schedule and population-based change detection.
// Time advances as t = (1/severity) * floor((gen - warmup) / frequency) once
// the warm-up budget is spent; a fixed fraction of the population is archived
// as detectors each generation and re-evaluated at the next one.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kaep/core.hpp"

namespace kaep {

struct TimeController {
    int severity = 10;   // n_t: reciprocal step size of t
    int frequency = 10;  // tau_t: generations per environment
    int warmup = 100;    // generations at t = 0 before the first change

    double time_at(long generation) const {
        if (severity < 1 || frequency < 1 || warmup < 0)
            throw std::invalid_argument("TimeController: bad schedule parameters");
        if (generation < 0)
            throw std::invalid_argument("TimeController: negative generation");
        if (generation <= warmup) return 0.0;
        const long steps = (generation - warmup) / frequency;
        return static_cast<double>(steps) / static_cast<double>(severity);
    }
};

struct DetectorSet {
    std::vector<DecisionVector> xs;
    std::vector<ObjectiveVector> fs;
    double t = 0.0;  // environment the archive was evaluated in
};

// Archives `count` members chosen uniformly without replacement, keeping
// their cached objective values as the reference for change detection.
inline DetectorSet archive_detectors(const Population& pop, std::size_t count, double t,
                                     Rng& rng) {
    if (count == 0 || count > pop.size())
        throw std::invalid_argument("archive_detectors: count out of range");
    DetectorSet d;
    d.t = t;
    auto picks = rng.sample_without_replacement(pop.size(), count);
    d.xs.reserve(count);
    d.fs.reserve(count);
    for (std::size_t i : picks) {
        if (!pop[i].evaluated())
            throw std::invalid_argument("archive_detectors: unevaluated member");
        d.xs.push_back(pop[i].x);
        d.fs.push_back(pop[i].f);
    }
    return d;
}

// Re-evaluates every archived detector position through `evaluate_now` and
// flags a change when any objective moved by more than 1e-12. All detectors
// are always evaluated so the per-generation budget is a constant.
template <class EvalFn>
bool detect_change(const DetectorSet& detectors, EvalFn&& evaluate_now) {
    if (detectors.xs.empty())
        throw std::invalid_argument("detect_change: empty detector set");
    constexpr double eps = 1e-12;
    bool changed = false;
    for (std::size_t i = 0; i < detectors.xs.size(); ++i) {
        ObjectiveVector f = evaluate_now(detectors.xs[i]);
        if (f.size() != detectors.fs[i].size())
            throw std::invalid_argument("detect_change: objective arity changed");
        for (std::size_t k = 0; k < f.size(); ++k)
            if (std::fabs(f[k] - detectors.fs[i][k]) > eps) changed = true;
    }
    return changed;
}

}  // namespace kaep
