// Basic value types, Pareto dominance, and deterministic random sampling.
#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace kaep {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

struct BoxBounds {
    std::vector<double> lower;
    std::vector<double> upper;

    BoxBounds() = default;
    BoxBounds(std::vector<double> lo, std::vector<double> up)
        : lower(std::move(lo)), upper(std::move(up)) {
        if (lower.size() != upper.size())
            throw std::invalid_argument("BoxBounds: lower/upper size mismatch");
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (!(lower[i] < upper[i]))
                throw std::invalid_argument("BoxBounds: lower[" + std::to_string(i) +
                                            "] must be < upper[" + std::to_string(i) + "]");
    }

    std::size_t size() const { return lower.size(); }
};

struct Individual {
    DecisionVector x;
    ObjectiveVector f;
    int rank = -1;
    double crowding = 0.0;

    bool evaluated() const { return !f.empty(); }
};

using Population = std::vector<Individual>;

// a dominates b: no worse in every objective, strictly better in at least one.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("dominates: objective size mismatch");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

inline DecisionVector clamp_to_bounds(DecisionVector x, const BoxBounds& b) {
    if (x.size() != b.size())
        throw std::invalid_argument("clamp_to_bounds: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < b.lower[i]) x[i] = b.lower[i];
        else if (x[i] > b.upper[i]) x[i] = b.upper[i];
    }
    return x;
}

// Deterministic RNG. All draws go through hand-written transforms of the raw
// mt19937_64 stream so that identical seeds give identical sequences on every
// platform; the std::uniform_* distributions make no such guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform index in [0, n), unbiased via rejection.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
        const std::uint64_t m = static_cast<std::uint64_t>(n);
        const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t rej = ((max64 % m) + 1) % m;
        const std::uint64_t cutoff = max64 - rej;
        std::uint64_t v = engine_();
        while (v > cutoff) v = engine_();
        return static_cast<std::size_t>(v % m);
    }

    // k distinct indices from [0, n), partial Fisher-Yates order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + uniform_index(n - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace kaep
