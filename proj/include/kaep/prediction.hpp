// Change-response machinery: centroid translation, linear and kernelized
// autoencoder mappings between consecutive elite sets, and the composite
// responder that seeds the population after an environment change.
//
// The kernel mapping fits W = T K^T (K K^T + lambda I)^{-1} over a polynomial
// kernel k(x,y) = (x.y + offset)^degree, where S and T column-stack the elite
// decision vectors of the two most recent environments. With an invertible K
// and lambda = 0 the map interpolates its training pairs exactly, which is
// the property the tests pin down. Elite sets are paired by sorting each
// front lexicographically by objectives before fitting.
#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kaep/core.hpp"
#include "kaep/linalg.hpp"
#include "kaep/nsga2.hpp"

namespace kaep {

struct KernelSpec {
    int degree = 2;
    double offset = 0.1;
};

// K[i][j] = (a_i . b_j + offset)^degree
inline Matrix kernel_matrix(const std::vector<DecisionVector>& a,
                            const std::vector<DecisionVector>& b, const KernelSpec& spec) {
    if (spec.degree < 1) throw std::invalid_argument("kernel_matrix: degree must be >= 1");
    if (a.empty() || b.empty()) throw std::invalid_argument("kernel_matrix: empty input");
    const std::size_t d = a.front().size();
    for (const auto& v : a)
        if (v.size() != d) throw std::invalid_argument("kernel_matrix: ragged input");
    for (const auto& v : b)
        if (v.size() != d) throw std::invalid_argument("kernel_matrix: ragged input");
    Matrix k(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            double dot = spec.offset;
            for (std::size_t q = 0; q < d; ++q) dot += a[i][q] * b[j][q];
            double pw = dot;
            for (int e = 1; e < spec.degree; ++e) pw *= dot;
            k.at(i, j) = pw;
        }
    return k;
}

// Linear autoencoder transition: M = (T S^T)(S S^T + lambda I)^{-1}.
// A negative lambda selects the scale-aware default.
inline Matrix fit_linear_ae(const Matrix& sources, const Matrix& targets, double lambda) {
    if (sources.rows != targets.rows || sources.cols != targets.cols)
        throw std::invalid_argument("fit_linear_ae: source/target shape mismatch");
    if (sources.cols == 0) throw std::invalid_argument("fit_linear_ae: empty sample set");
    const Matrix st = transpose(sources);
    const Matrix gram = matmul(sources, st);
    if (lambda < 0.0) lambda = default_ridge_lambda(gram);
    return ridge_solve_right(matmul(targets, st), gram, lambda);
}

struct KernelMapping {
    Matrix weights;                       // d x Ne
    std::vector<DecisionVector> anchors;  // fitted source set
    KernelSpec spec;
    double lambda = 0.0;  // regularizer actually used
    int retries = 0;      // ladder steps taken before the fit succeeded
};

// Kernelized autoencoder fit. Pass lambda < 0 for the scale-aware default.
// On a singular system the regularizer is escalated (x10, three retries)
// before the error propagates.
inline KernelMapping fit_kernel_ae(const std::vector<DecisionVector>& sources,
                                   const std::vector<DecisionVector>& targets,
                                   const KernelSpec& spec, double lambda) {
    if (sources.size() != targets.size())
        throw std::invalid_argument("fit_kernel_ae: source/target count mismatch");
    const Matrix k = kernel_matrix(sources, sources, spec);
    const Matrix kkt = matmul(k, transpose(k));
    const Matrix tkt = matmul(Matrix::from_columns(targets), transpose(k));
    double lam = (lambda < 0.0) ? default_ridge_lambda(kkt) : lambda;
    KernelMapping map;
    map.anchors = sources;
    map.spec = spec;
    for (int attempt = 0;; ++attempt) {
        try {
            map.weights = ridge_solve_right(tkt, kkt, lam);
            map.lambda = lam;
            map.retries = attempt;
            return map;
        } catch (const SingularMatrixError&) {
            if (attempt == 3) throw;
            lam = (lam > 0.0) ? 10.0 * lam : 10.0 * default_ridge_lambda(kkt);
            if (lam == 0.0) lam = 1e-12;
        }
    }
}

// Applies the fitted map to query points: column j of the result is
// W * [k(anchor_i, q_j)]_i. Unclamped form.
inline std::vector<DecisionVector> kae_predict(const KernelMapping& map,
                                               const std::vector<DecisionVector>& queries) {
    const Matrix kq = kernel_matrix(map.anchors, queries, map.spec);
    const Matrix out = matmul(map.weights, kq);
    std::vector<DecisionVector> pred(queries.size());
    for (std::size_t j = 0; j < queries.size(); ++j) pred[j] = out.column(j);
    return pred;
}

inline std::vector<DecisionVector> kae_predict(const KernelMapping& map,
                                               const std::vector<DecisionVector>& queries,
                                               const BoxBounds& bounds) {
    auto pred = kae_predict(map, queries);
    for (auto& x : pred) x = clamp_to_bounds(std::move(x), bounds);
    return pred;
}

// ---- centroid translation ------------------------------------------------

inline DecisionVector centroid(const Population& members) {
    if (members.empty()) throw std::invalid_argument("centroid: empty set");
    DecisionVector c(members.front().x.size(), 0.0);
    for (const auto& ind : members) {
        if (ind.x.size() != c.size()) throw std::invalid_argument("centroid: ragged set");
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += ind.x[i];
    }
    for (auto& v : c) v /= static_cast<double>(members.size());
    return c;
}

// Centroid of the nondominated members only.
inline DecisionVector rank0_centroid(const Population& pop) {
    Population copy = pop;
    auto fronts = fast_nondominated_sort(copy);
    Population front;
    for (std::size_t i : fronts[0]) front.push_back(copy[i]);
    return centroid(front);
}

inline DecisionVector move_direction(const DecisionVector& centroid_now,
                                     const DecisionVector& centroid_prev) {
    if (centroid_now.size() != centroid_prev.size())
        throw std::invalid_argument("move_direction: dimension mismatch");
    DecisionVector d(centroid_now.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = centroid_now[i] - centroid_prev[i];
    return d;
}

// Translates every member along `dir` and clamps; objectives are cleared.
inline Population centroid_predict(const Population& members, const DecisionVector& dir,
                                   const BoxBounds& bounds) {
    Population out;
    out.reserve(members.size());
    for (const auto& ind : members) {
        if (ind.x.size() != dir.size())
            throw std::invalid_argument("centroid_predict: dimension mismatch");
        Individual next;
        next.x = ind.x;
        for (std::size_t i = 0; i < dir.size(); ++i) next.x[i] += dir[i];
        next.x = clamp_to_bounds(std::move(next.x), bounds);
        out.push_back(std::move(next));
    }
    return out;
}

// Canonical pairing order: objectives lexicographically, ties by decision
// vector, so two equally sized elite sets pair positionally for the fits.
inline void sort_by_objectives(Population& pop) {
    std::stable_sort(pop.begin(), pop.end(), [](const Individual& a, const Individual& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.x < b.x;
    });
}

// ---- response strategies ---------------------------------------------------

enum class StrategyKind {
    Kaep,             // half centroid translation, half kernel prediction
    CentroidShift,    // CP: full population translated by the centroid move
    KernelAe,         // KAE: full population through the kernel map
    LinearAe,         // AEa: full population through the linear map
    LinearAeCentroid, // AEB: half linear map, half centroid translation
    RandomReplace,    // DNSGA2_A: fraction replaced by fresh random members
    MutateReplace,    // DNSGA2_B: fraction replaced by mutated copies
    Restart
};

struct ResponseStrategy {
    StrategyKind kind = StrategyKind::Kaep;
    KernelSpec kernel;
    double lambda = -1.0;            // <0 selects the scale-aware default
    double replace_fraction = 0.10;  // DNSGA2_A / DNSGA2_B
    VariationParams variation;       // DNSGA2_B mutation parameters
};

inline std::string strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Kaep: return "KAEP";
        case StrategyKind::CentroidShift: return "CP";
        case StrategyKind::KernelAe: return "KAE";
        case StrategyKind::LinearAe: return "AEa";
        case StrategyKind::LinearAeCentroid: return "AEB";
        case StrategyKind::RandomReplace: return "DNSGA2_A";
        case StrategyKind::MutateReplace: return "DNSGA2_B";
        case StrategyKind::Restart: return "RESTART";
    }
    throw std::logic_error("strategy_name: unhandled kind");
}

inline StrategyKind parse_strategy(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (name == "KAEP") return StrategyKind::Kaep;
    if (name == "CP") return StrategyKind::CentroidShift;
    if (name == "KAE") return StrategyKind::KernelAe;
    if (name == "AEA") return StrategyKind::LinearAe;
    if (name == "AEB") return StrategyKind::LinearAeCentroid;
    if (name == "DNSGA2_A") return StrategyKind::RandomReplace;
    if (name == "DNSGA2_B") return StrategyKind::MutateReplace;
    if (name == "RESTART") return StrategyKind::Restart;
    throw std::invalid_argument(
        "unknown strategy '" + name +
        "' (known: KAEP, CP, KAE, AEa, AEB, DNSGA2_A, DNSGA2_B, RESTART)");
}

struct ResponseResult {
    Population members;  // exactly N, unevaluated, inside the box
    int fallbacks = 0;   // regularizer escalations plus full centroid fallbacks
};

namespace predict_detail {

inline std::vector<DecisionVector> decision_vectors(const Population& pop) {
    std::vector<DecisionVector> xs;
    xs.reserve(pop.size());
    for (const auto& ind : pop) xs.push_back(ind.x);
    return xs;
}

inline Population from_decision_vectors(std::vector<DecisionVector> xs) {
    Population pop(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) pop[i].x = std::move(xs[i]);
    return pop;
}

// Kernel fit + prediction with the centroid translation as the last resort.
inline Population kae_or_centroid(const Population& sources, const Population& targets,
                                  const Population& queries, const DecisionVector& dir,
                                  const KernelSpec& spec, double lambda,
                                  const BoxBounds& bounds, int& fallbacks) {
    try {
        KernelMapping map =
            fit_kernel_ae(decision_vectors(sources), decision_vectors(targets), spec, lambda);
        fallbacks += map.retries;
        return from_decision_vectors(kae_predict(map, decision_vectors(queries), bounds));
    } catch (const SingularMatrixError&) {
        ++fallbacks;
        return centroid_predict(queries, dir, bounds);
    }
}

inline Population linear_or_centroid(const Population& sources, const Population& targets,
                                     const Population& queries, const DecisionVector& dir,
                                     double lambda, const BoxBounds& bounds, int& fallbacks) {
    const Matrix s = Matrix::from_columns(decision_vectors(sources));
    const Matrix t = Matrix::from_columns(decision_vectors(targets));
    double lam = lambda;
    for (int attempt = 0;; ++attempt) {
        try {
            const Matrix m = fit_linear_ae(s, t, lam);
            Population out;
            out.reserve(queries.size());
            for (const auto& q : queries) {
                Matrix qcol = Matrix::from_columns({q.x});
                Individual next;
                next.x = clamp_to_bounds(matmul(m, qcol).column(0), bounds);
                out.push_back(std::move(next));
            }
            fallbacks += attempt;
            return out;
        } catch (const SingularMatrixError&) {
            if (attempt == 3) {
                fallbacks += attempt + 1;
                return centroid_predict(queries, dir, bounds);
            }
            const Matrix gram = matmul(s, transpose(s));
            lam = (lam > 0.0) ? 10.0 * lam : 10.0 * default_ridge_lambda(gram);
            if (lam == 0.0) lam = 1e-12;
        }
    }
}

}  // namespace predict_detail

// KAEP response: half the new population is the current elite set translated
// by the centroid move, the other half is the kernel autoencoder's prediction
// queried at the current elites. Returned members are unevaluated.
inline ResponseResult kaep_respond(const Population& pop_prev, const Population& pop_curr,
                                   std::size_t n, const KernelSpec& spec, double lambda,
                                   const BoxBounds& bounds) {
    if (n == 0 || n % 2 != 0)
        throw std::invalid_argument("kaep_respond: population size must be even");
    if (pop_prev.size() < n / 2 || pop_curr.size() < n / 2)
        throw std::invalid_argument("kaep_respond: parent populations too small");

    const DecisionVector dir =
        move_direction(rank0_centroid(pop_curr), rank0_centroid(pop_prev));

    Population elites_prev = environmental_selection(pop_prev, n / 2);
    Population elites_curr = environmental_selection(pop_curr, n / 2);
    sort_by_objectives(elites_prev);
    sort_by_objectives(elites_curr);

    ResponseResult result;
    result.members = centroid_predict(elites_curr, dir, bounds);
    Population predicted =
        predict_detail::kae_or_centroid(elites_prev, elites_curr, elites_curr, dir, spec,
                                        lambda, bounds, result.fallbacks);
    for (auto& ind : predicted) result.members.push_back(std::move(ind));
    return result;
}

// Dispatches one of the change-response strategies. Every strategy returns
// exactly `n` unevaluated members inside the box and consumes no objective
// evaluations itself.
inline ResponseResult respond(const ResponseStrategy& strategy, const Population& pop_prev,
                              const Population& pop_curr, std::size_t n,
                              const BoxBounds& bounds, Rng& rng) {
    using predict_detail::kae_or_centroid;
    using predict_detail::linear_or_centroid;
    if (n == 0) throw std::invalid_argument("respond: population size must be positive");

    auto require_full = [&](const Population& pop) {
        if (pop.size() != n)
            throw std::invalid_argument("respond: strategy needs full-size populations");
    };
    auto fresh_member = [&] {
        Individual ind;
        ind.x.resize(bounds.size());
        for (std::size_t i = 0; i < bounds.size(); ++i)
            ind.x[i] = rng.uniform(bounds.lower[i], bounds.upper[i]);
        return ind;
    };
    auto strip = [](Population pop) {
        for (auto& ind : pop) {
            ind.f.clear();
            ind.rank = -1;
            ind.crowding = 0.0;
        }
        return pop;
    };

    ResponseResult result;
    switch (strategy.kind) {
        case StrategyKind::Kaep:
            return kaep_respond(pop_prev, pop_curr, n, strategy.kernel, strategy.lambda,
                                bounds);

        case StrategyKind::CentroidShift: {
            require_full(pop_curr);
            const DecisionVector dir =
                move_direction(rank0_centroid(pop_curr), rank0_centroid(pop_prev));
            result.members = centroid_predict(pop_curr, dir, bounds);
            return result;
        }

        case StrategyKind::KernelAe: {
            require_full(pop_curr);
            require_full(pop_prev);
            Population src = pop_prev, tgt = pop_curr;
            sort_by_objectives(src);
            sort_by_objectives(tgt);
            const DecisionVector dir =
                move_direction(rank0_centroid(pop_curr), rank0_centroid(pop_prev));
            result.members = kae_or_centroid(src, tgt, tgt, dir, strategy.kernel,
                                             strategy.lambda, bounds, result.fallbacks);
            return result;
        }

        case StrategyKind::LinearAe: {
            require_full(pop_curr);
            require_full(pop_prev);
            Population src = pop_prev, tgt = pop_curr;
            sort_by_objectives(src);
            sort_by_objectives(tgt);
            const DecisionVector dir =
                move_direction(rank0_centroid(pop_curr), rank0_centroid(pop_prev));
            result.members = linear_or_centroid(src, tgt, tgt, dir, strategy.lambda, bounds,
                                                result.fallbacks);
            return result;
        }

        case StrategyKind::LinearAeCentroid: {
            if (n % 2 != 0)
                throw std::invalid_argument("respond: population size must be even");
            if (pop_prev.size() < n / 2 || pop_curr.size() < n / 2)
                throw std::invalid_argument("respond: parent populations too small");
            const DecisionVector dir =
                move_direction(rank0_centroid(pop_curr), rank0_centroid(pop_prev));
            Population elites_prev = environmental_selection(pop_prev, n / 2);
            Population elites_curr = environmental_selection(pop_curr, n / 2);
            sort_by_objectives(elites_prev);
            sort_by_objectives(elites_curr);
            result.members = centroid_predict(elites_curr, dir, bounds);
            Population predicted = linear_or_centroid(elites_prev, elites_curr, elites_curr,
                                                      dir, strategy.lambda, bounds,
                                                      result.fallbacks);
            for (auto& ind : predicted) result.members.push_back(std::move(ind));
            return result;
        }

        case StrategyKind::RandomReplace: {
            require_full(pop_curr);
            result.members = strip(pop_curr);
            const std::size_t k = static_cast<std::size_t>(
                std::ceil(strategy.replace_fraction * static_cast<double>(n)));
            for (std::size_t idx : rng.sample_without_replacement(n, k))
                result.members[idx].x = fresh_member().x;
            return result;
        }

        case StrategyKind::MutateReplace: {
            require_full(pop_curr);
            result.members = strip(pop_curr);
            const std::size_t k = static_cast<std::size_t>(
                std::ceil(strategy.replace_fraction * static_cast<double>(n)));
            for (std::size_t idx : rng.sample_without_replacement(n, k)) {
                const std::size_t src = rng.uniform_index(n);
                result.members[idx].x =
                    polynomial_mutation(pop_curr[src].x, strategy.variation, bounds, rng);
            }
            return result;
        }

        case StrategyKind::Restart: {
            result.members.reserve(n);
            for (std::size_t i = 0; i < n; ++i) result.members.push_back(fresh_member());
            return result;
        }
    }
    throw std::logic_error("respond: unhandled strategy");
}

}  // namespace kaep
