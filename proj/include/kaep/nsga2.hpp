// NSGA-II machinery: fast nondominated sorting, crowding distance,
// mu+lambda environmental selection, SBX crossover, polynomial mutation,
// and one full generation step. Follows Deb's reference formulation; all
// randomness flows through the caller's Rng so runs replay exactly.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kaep/core.hpp"

namespace kaep {

struct VariationParams {
    double crossover_prob = 0.9;
    double crossover_eta = 20.0;
    double mutation_prob = 0.1;
    double mutation_eta = 20.0;

    static VariationParams defaults_for(std::size_t n_vars) {
        VariationParams p;
        p.mutation_prob = 1.0 / static_cast<double>(n_vars);
        return p;
    }
};

// Deb's fast nondominated sort. Writes 0-based ranks into the population and
// returns the fronts as index lists (ascending within each front).
inline std::vector<std::vector<std::size_t>> fast_nondominated_sort(Population& pop) {
    if (pop.empty()) throw std::invalid_argument("fast_nondominated_sort: empty population");
    const std::size_t n = pop.size();
    const std::size_t m = pop.front().f.size();
    for (const auto& ind : pop)
        if (ind.f.size() != m || m == 0)
            throw std::invalid_argument("fast_nondominated_sort: unevaluated member");

    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dom_count(n, 0);
    std::vector<std::vector<std::size_t>> fronts(1);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (p == q) continue;
            if (dominates(pop[p].f, pop[q].f)) dominated[p].push_back(q);
            else if (dominates(pop[q].f, pop[p].f)) ++dom_count[p];
        }
        if (dom_count[p] == 0) {
            pop[p].rank = 0;
            fronts[0].push_back(p);
        }
    }
    std::size_t i = 0;
    while (!fronts[i].empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : fronts[i]) {
            for (std::size_t q : dominated[p]) {
                if (--dom_count[q] == 0) {
                    pop[q].rank = static_cast<int>(i) + 1;
                    next.push_back(q);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(next));
        ++i;
    }
    fronts.pop_back();
    return fronts;
}

// Crowding distance of one front, aligned with `front` order. Boundary points
// get +inf; an objective with zero spread contributes nothing. Ties in an
// objective are ordered by member index, which fixes who counts as boundary.
inline std::vector<double> crowding_distance(const Population& pop,
                                             const std::vector<std::size_t>& front) {
    const std::size_t n = front.size();
    if (n == 0) return {};
    const std::size_t m = pop[front[0]].f.size();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        return dist;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double fa = pop[front[a]].f[k], fb = pop[front[b]].f[k];
            if (fa != fb) return fa < fb;
            return front[a] < front[b];
        });
        const double fmin = pop[front[order.front()]].f[k];
        const double fmax = pop[front[order.back()]].f[k];
        dist[order.front()] = std::numeric_limits<double>::infinity();
        dist[order.back()] = std::numeric_limits<double>::infinity();
        if (fmax == fmin) continue;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (std::isinf(dist[order[i]])) continue;
            dist[order[i]] += (pop[front[order[i + 1]]].f[k] - pop[front[order[i - 1]]].f[k]) /
                              (fmax - fmin);
        }
    }
    return dist;
}

// Sorts and annotates rank + crowding on every member.
inline void annotate_ranks_and_crowding(Population& pop) {
    auto fronts = fast_nondominated_sort(pop);
    for (const auto& front : fronts) {
        auto cd = crowding_distance(pop, front);
        for (std::size_t i = 0; i < front.size(); ++i) pop[front[i]].crowding = cd[i];
    }
}

// Keeps the k best members by (rank, crowding); a split front is truncated by
// descending crowding with ties broken toward the lower index.
inline Population environmental_selection(Population pop, std::size_t k) {
    if (k == 0 || k > pop.size())
        throw std::invalid_argument("environmental_selection: k out of range");
    auto fronts = fast_nondominated_sort(pop);
    Population out;
    out.reserve(k);
    for (const auto& front : fronts) {
        auto cd = crowding_distance(pop, front);
        for (std::size_t i = 0; i < front.size(); ++i) pop[front[i]].crowding = cd[i];
        if (out.size() + front.size() <= k) {
            for (std::size_t idx : front) out.push_back(pop[idx]);
            if (out.size() == k) break;
        } else {
            std::vector<std::size_t> order(front.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (cd[a] != cd[b]) return cd[a] > cd[b];
                return front[a] < front[b];
            });
            for (std::size_t i = 0; out.size() < k; ++i) out.push_back(pop[front[order[i]]]);
            break;
        }
    }
    return out;
}

// Binary tournament on (rank asc, crowding desc), coin flip on a full tie.
inline std::size_t tournament_select(const Population& pop, Rng& rng) {
    const std::size_t i = rng.uniform_index(pop.size());
    const std::size_t j = rng.uniform_index(pop.size());
    if (pop[i].rank != pop[j].rank) return pop[i].rank < pop[j].rank ? i : j;
    if (pop[i].crowding != pop[j].crowding) return pop[i].crowding > pop[j].crowding ? i : j;
    return rng.bernoulli(0.5) ? i : j;
}

// Simulated binary crossover (Deb & Agrawal). Each variable crosses with
// probability 0.5 inside a mated pair and the two children swap sides with
// probability 0.5; children are clamped to the box.
inline std::pair<DecisionVector, DecisionVector> sbx_crossover(
    const DecisionVector& p1, const DecisionVector& p2, const VariationParams& params,
    const BoxBounds& bounds, Rng& rng) {
    if (p1.size() != p2.size() || p1.size() != bounds.size())
        throw std::invalid_argument("sbx_crossover: dimension mismatch");
    DecisionVector c1 = p1, c2 = p2;
    if (!rng.bernoulli(params.crossover_prob)) return {c1, c2};
    const double eta = params.crossover_eta;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (!rng.bernoulli(0.5)) continue;
        if (std::fabs(p1[i] - p2[i]) <= 1e-14) continue;
        const double y1 = std::min(p1[i], p2[i]);
        const double y2 = std::max(p1[i], p2[i]);
        const double yl = bounds.lower[i], yu = bounds.upper[i];
        const double u = rng.uniform01();
        auto spread = [&](double beta_bound) {
            const double alpha = 2.0 - std::pow(beta_bound, -(eta + 1.0));
            if (u <= 1.0 / alpha) return std::pow(u * alpha, 1.0 / (eta + 1.0));
            return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
        };
        const double dy = y2 - y1;
        const double betaq1 = spread(1.0 + 2.0 * (y1 - yl) / dy);
        const double betaq2 = spread(1.0 + 2.0 * (yu - y2) / dy);
        double lo = 0.5 * ((y1 + y2) - betaq1 * dy);
        double hi = 0.5 * ((y1 + y2) + betaq2 * dy);
        lo = std::clamp(lo, yl, yu);
        hi = std::clamp(hi, yl, yu);
        if (rng.bernoulli(0.5)) {
            c1[i] = hi;
            c2[i] = lo;
        } else {
            c1[i] = lo;
            c2[i] = hi;
        }
    }
    return {c1, c2};
}

// Polynomial mutation (Deb), boundary-aware form.
inline DecisionVector polynomial_mutation(DecisionVector x, const VariationParams& params,
                                          const BoxBounds& bounds, Rng& rng) {
    if (x.size() != bounds.size())
        throw std::invalid_argument("polynomial_mutation: dimension mismatch");
    const double eta = params.mutation_eta;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!rng.bernoulli(params.mutation_prob)) continue;
        const double yl = bounds.lower[i], yu = bounds.upper[i];
        const double span = yu - yl;
        const double u = rng.uniform01();
        const double mut_pow = 1.0 / (eta + 1.0);
        double deltaq;
        if (u <= 0.5) {
            const double xy = 1.0 - (x[i] - yl) / span;
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double xy = 1.0 - (yu - x[i]) / span;
            const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        x[i] = std::clamp(x[i] + deltaq * span, yl, yu);
    }
    return x;
}

// One mu+lambda NSGA-II generation against a fixed evaluator.
template <class EvalFn>
Population generation_step(Population pop, EvalFn&& evaluate, const BoxBounds& bounds,
                           const VariationParams& params, Rng& rng) {
    if (pop.empty()) throw std::invalid_argument("generation_step: empty population");
    const std::size_t n = pop.size();
    annotate_ranks_and_crowding(pop);
    Population offspring;
    offspring.reserve(n);
    while (offspring.size() < n) {
        const Individual& pa = pop[tournament_select(pop, rng)];
        const Individual& pb = pop[tournament_select(pop, rng)];
        auto [x1, x2] = sbx_crossover(pa.x, pb.x, params, bounds, rng);
        x1 = polynomial_mutation(std::move(x1), params, bounds, rng);
        x2 = polynomial_mutation(std::move(x2), params, bounds, rng);
        Individual o1;
        o1.x = std::move(x1);
        o1.f = evaluate(o1.x);
        offspring.push_back(std::move(o1));
        if (offspring.size() < n) {
            Individual o2;
            o2.x = std::move(x2);
            o2.f = evaluate(o2.x);
            offspring.push_back(std::move(o2));
        }
    }
    Population combined = std::move(pop);
    combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                    std::make_move_iterator(offspring.end()));
    return environmental_selection(std::move(combined), n);
}

}  // namespace kaep
