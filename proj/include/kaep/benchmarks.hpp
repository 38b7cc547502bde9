// Dynamic biobjective and triobjective test problems: the DF suite (DF1-DF14)
// plus two small synthetic drift problems with closed-form fronts. Every
// problem exposes a time-parameterized evaluator, a sampler for the true
// front at time t, and (where the optimal manifold has a simple closed form)
// a sampler for the true decision-space optimum.
//
// Fronts with disconnected or partially dominated closed forms (DF9, DF12,
// DF13, DF14) are sampled on a growing grid and filtered to the nondominated
// subset; the rest are sampled directly from their closed forms.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kaep/core.hpp"

namespace kaep {

struct DynamicProblem {
    std::string name;
    std::size_t n = 0;
    std::size_t m = 0;
    BoxBounds bounds;
    std::function<ObjectiveVector(const DecisionVector&, double)> objective;
    std::function<std::vector<ObjectiveVector>(double, std::size_t)> pof;
    std::function<std::vector<DecisionVector>(double, std::size_t)> pos;

    ObjectiveVector evaluate(const DecisionVector& x, double t) const {
        if (x.size() != n)
            throw std::domain_error(name + ": expected " + std::to_string(n) + " variables");
        if (!(t >= 0.0) || !std::isfinite(t))
            throw std::domain_error(name + ": time must be finite and nonnegative");
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] < bounds.lower[i] || x[i] > bounds.upper[i] || !std::isfinite(x[i]))
                throw std::domain_error(name + ": variable " + std::to_string(i) +
                                        " outside its box");
        ObjectiveVector f = objective(x, t);
        for (double v : f)
            if (!std::isfinite(v)) throw std::domain_error(name + ": non-finite objective");
        return f;
    }

    std::vector<ObjectiveVector> sample_true_pof(double t, std::size_t count) const {
        if (!(t >= 0.0) || !std::isfinite(t))
            throw std::domain_error(name + ": time must be finite and nonnegative");
        if (count == 0) throw std::invalid_argument(name + ": count must be positive");
        return pof(t, count);
    }

    bool has_pos_sampler() const { return static_cast<bool>(pos); }

    std::vector<DecisionVector> sample_true_pos(double t, std::size_t count) const {
        if (!has_pos_sampler())
            throw std::logic_error(name + ": optimal decision manifold is not closed-form");
        if (count == 0) throw std::invalid_argument(name + ": count must be positive");
        return pos(t, count);
    }
};

namespace bench_detail {

inline std::vector<double> linspace(double a, double b, std::size_t count) {
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = a;
        return v;
    }
    for (std::size_t i = 0; i < count; ++i)
        v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    return v;
}

inline double pospart(double v) { return v < 0.0 ? 0.0 : v; }

// Nondominated subset of a biobjective cloud (exact duplicates dropped),
// sorted by the first objective.
inline std::vector<ObjectiveVector> nd_filter_2d(std::vector<ObjectiveVector> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<ObjectiveVector> keep;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
        if (p[1] < best) {
            keep.push_back(p);
            best = p[1];
        }
    }
    return keep;
}

// Nondominated subset of a triobjective cloud via lexicographic sweep over a
// 2D staircase, O(P log P); exact duplicates dropped.
inline std::vector<ObjectiveVector> nd_filter_3d(std::vector<ObjectiveVector> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<ObjectiveVector> keep;
    std::map<double, double> stair;  // f2 -> f3, strictly decreasing in f3
    for (const auto& p : pts) {
        auto it = stair.upper_bound(p[1]);
        bool dominated = false;
        if (it != stair.begin()) {
            --it;
            if (it->second <= p[2]) dominated = true;
        }
        if (dominated) continue;
        keep.push_back(p);
        auto ins = stair.insert_or_assign(p[1], p[2]).first;
        auto nxt = std::next(ins);
        while (nxt != stair.end() && nxt->second >= p[2]) nxt = stair.erase(nxt);
    }
    return keep;
}

inline std::vector<ObjectiveVector> take_evenly(std::vector<ObjectiveVector> pts,
                                                std::size_t count) {
    if (pts.size() <= count) return pts;
    std::vector<ObjectiveVector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t idx = (count == 1) ? 0 : i * (pts.size() - 1) / (count - 1);
        out.push_back(pts[idx]);
    }
    return out;
}

// Grows the sampling resolution until the filtered front carries at least
// `count` points (or the resolution cap is hit), then thins evenly.
template <class GenFn, class FilterFn>
std::vector<ObjectiveVector> sample_filtered_front(std::size_t count, GenFn&& generate,
                                                   FilterFn&& filter) {
    std::size_t resolution = 2 * count;
    std::vector<ObjectiveVector> front;
    for (int attempt = 0; attempt < 6; ++attempt) {
        front = filter(generate(resolution));
        if (front.size() >= count) break;
        resolution *= 2;
    }
    return take_evenly(std::move(front), count);
}

inline BoxBounds box(std::size_t n, double lo, double hi) {
    return BoxBounds(std::vector<double>(n, lo), std::vector<double>(n, hi));
}

// First variable in [lo1, hi1], the rest in [lo, hi].
inline BoxBounds box_split(std::size_t n, double lo1, double hi1, double lo, double hi,
                           std::size_t head = 1) {
    std::vector<double> l(n, lo), u(n, hi);
    for (std::size_t i = 0; i < head; ++i) {
        l[i] = lo1;
        u[i] = hi1;
    }
    return BoxBounds(std::move(l), std::move(u));
}

}  // namespace bench_detail

// ---- synthetic drift problems ------------------------------------------

// Convex time-invariant front f2 = 1 - sqrt(f1); the optimal manifold drifts
// with G(t) in every distance variable. `drift` supplies G.
inline DynamicProblem make_synthetic_drift(std::string name, std::size_t n,
                                           std::function<double(double)> drift) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = std::move(name);
    p.n = n;
    p.m = 2;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 2.0);
    p.objective = [n, drift](const DecisionVector& x, double t) {
        const double G = drift(t);
        double g = 1.0;
        for (std::size_t i = 1; i < n; ++i) g += (x[i] - G) * (x[i] - G);
        const double f1 = x[0];
        return ObjectiveVector{f1, g * (1.0 - std::sqrt(f1 / g))};
    };
    // parameterized by u = sqrt(f1), uniform along f2
    p.pof = [](double, std::size_t count) {
        std::vector<ObjectiveVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) out.push_back({u * u, 1.0 - u});
        return out;
    };
    p.pos = [n, drift](double t, std::size_t count) {
        const double G = drift(t);
        std::vector<DecisionVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            DecisionVector x(n, G);
            x[0] = u * u;
            out.push_back(std::move(x));
        }
        return out;
    };
    return p;
}

// ---- DF suite -----------------------------------------------------------

inline DynamicProblem make_df1(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF1";
    p.n = n;
    p.m = 2;
    p.bounds = box(n, 0.0, 1.0);
    p.objective = [n](const DecisionVector& x, double t) {
        const double G = std::fabs(std::sin(0.5 * M_PI * t));
        const double H = 0.75 * std::sin(0.5 * M_PI * t) + 1.25;
        double g = 1.0;
        for (std::size_t i = 1; i < n; ++i) g += (x[i] - G) * (x[i] - G);
        return ObjectiveVector{x[0], g * (1.0 - std::pow(x[0] / g, H))};
    };
    p.pof = [](double t, std::size_t count) {
        const double H = 0.75 * std::sin(0.5 * M_PI * t) + 1.25;
        std::vector<ObjectiveVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) out.push_back({u, 1.0 - std::pow(u, H)});
        return out;
    };
    p.pos = [n](double t, std::size_t count) {
        const double G = std::fabs(std::sin(0.5 * M_PI * t));
        std::vector<DecisionVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            DecisionVector x(n, G);
            x[0] = u;
            out.push_back(std::move(x));
        }
        return out;
    };
    return p;
}

inline DynamicProblem make_df2(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF2";
    p.n = n;
    p.m = 2;
    p.bounds = box(n, 0.0, 1.0);
    auto moving_index = [n](double t) {
        const double G = std::fabs(std::sin(0.5 * M_PI * t));
        std::size_t r = static_cast<std::size_t>(std::floor((n - 1) * G));
        return std::min(r, n - 1);
    };
    p.objective = [n, moving_index](const DecisionVector& x, double t) {
        const double G = std::fabs(std::sin(0.5 * M_PI * t));
        const std::size_t r = moving_index(t);
        double g = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            if (i != r) g += (x[i] - G) * (x[i] - G);
        return ObjectiveVector{x[r], g * (1.0 - std::pow(x[r] / g, 0.5))};
    };
    p.pof = [](double, std::size_t count) {
        std::vector<ObjectiveVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) out.push_back({u, 1.0 - std::sqrt(u)});
        return out;
    };
    p.pos = [n, moving_index](double t, std::size_t count) {
        const double G = std::fabs(std::sin(0.5 * M_PI * t));
        const std::size_t r = moving_index(t);
        std::vector<DecisionVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            DecisionVector x(n, G);
            x[r] = u;
            out.push_back(std::move(x));
        }
        return out;
    };
    return p;
}

inline DynamicProblem make_df3(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF3";
    p.n = n;
    p.m = 2;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 2.0);
    p.objective = [n](const DecisionVector& x, double t) {
        const double G = std::sin(0.5 * M_PI * t);
        const double H = G + 1.5;
        const double shift = G + std::pow(x[0], H);
        double g = 1.0;
        for (std::size_t i = 1; i < n; ++i) g += (x[i] - shift) * (x[i] - shift);
        return ObjectiveVector{x[0], g * (1.0 - std::pow(x[0] / g, H))};
    };
    p.pof = [](double t, std::size_t count) {
        const double H = std::sin(0.5 * M_PI * t) + 1.5;
        std::vector<ObjectiveVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) out.push_back({u, 1.0 - std::pow(u, H)});
        return out;
    };
    p.pos = [n](double t, std::size_t count) {
        const double G = std::sin(0.5 * M_PI * t);
        const double H = G + 1.5;
        std::vector<DecisionVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            DecisionVector x(n, G + std::pow(u, H));
            x[0] = u;
            out.push_back(std::move(x));
        }
        return out;
    };
    return p;
}

inline DynamicProblem make_df4(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF4";
    p.n = n;
    p.m = 2;
    p.bounds = box(n, -2.0, 2.0);
    p.objective = [n](const DecisionVector& x, double t) {
        const double a = std::sin(0.5 * M_PI * t);
        const double b = 1.0 + std::fabs(std::cos(0.5 * M_PI * t));
        const double H = 1.5 + a;
        double g = 1.0;
        for (std::size_t i = 1; i < n; ++i) {
            const double c = a * x[0] * x[0] / static_cast<double>(i + 1);
            g += (x[i] - c) * (x[i] - c);
        }
        return ObjectiveVector{g * std::pow(std::fabs(x[0] - a), H),
                               g * std::pow(std::fabs(x[0] - a - b), H)};
    };
    p.pof = [](double t, std::size_t count) {
        const double a = std::sin(0.5 * M_PI * t);
        const double b = 1.0 + std::fabs(std::cos(0.5 * M_PI * t));
        const double H = 1.5 + a;
        std::vector<ObjectiveVector> out;
        out.reserve(count);
        for (double s : linspace(a, a + b, count))
            out.push_back({std::pow(std::fabs(s - a), H), std::pow(std::fabs(s - a - b), H)});
        return out;
    };
    return p;
}

inline DynamicProblem make_df5(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF5";
    p.n = n;
    p.m = 2;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 1.0);
    p.objective = [n](const DecisionVector& x, double t) {
        const double G = std::sin(0.5 * M_PI * t);
        const double w = std::floor(10.0 * G);
        double g = 1.0;
        for (std::size_t i = 1; i < n; ++i) g += (x[i] - G) * (x[i] - G);
        const double ripple = 0.02 * std::sin(w * M_PI * x[0]);
        return ObjectiveVector{g * (x[0] + ripple), g * (1.0 - x[0] + ripple)};
    };
    p.pof = [](double t, std::size_t count) {
        const double w = std::floor(10.0 * std::sin(0.5 * M_PI * t));
        std::vector<ObjectiveVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            const double ripple = 0.02 * std::sin(w * M_PI * u);
            out.push_back({u + ripple, 1.0 - u + ripple});
        }
        return out;
    };
    p.pos = [n](double t, std::size_t count) {
        const double G = std::sin(0.5 * M_PI * t);
        std::vector<DecisionVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            DecisionVector x(n, G);
            x[0] = u;
            out.push_back(std::move(x));
        }
        return out;
    };
    return p;
}

inline DynamicProblem make_df6(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF6";
    p.n = n;
    p.m = 2;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 1.0);
    p.objective = [n](const DecisionVector& x, double t) {
        const double G = std::sin(0.5 * M_PI * t);
        const double a = 0.2 + 2.8 * std::fabs(G);
        double g = 1.0;
        for (std::size_t i = 1; i < n; ++i) {
            const double y = x[i] - G;
            g += std::fabs(G) * y * y - 10.0 * std::cos(2.0 * M_PI * y) + 10.0;
        }
        const double u = pospart(x[0] + 0.1 * std::sin(3.0 * M_PI * x[0]));
        const double v = pospart(1.0 - x[0] + 0.1 * std::sin(3.0 * M_PI * x[0]));
        return ObjectiveVector{g * std::pow(u, a), g * std::pow(v, a)};
    };
    p.pof = [](double t, std::size_t count) {
        const double a = 0.2 + 2.8 * std::fabs(std::sin(0.5 * M_PI * t));
        std::vector<ObjectiveVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            const double ripple = 0.1 * std::sin(3.0 * M_PI * u);
            out.push_back({std::pow(pospart(u + ripple), a),
                           std::pow(pospart(1.0 - u + ripple), a)});
        }
        return out;
    };
    p.pos = [n](double t, std::size_t count) {
        const double G = std::sin(0.5 * M_PI * t);
        std::vector<DecisionVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            DecisionVector x(n, G);
            x[0] = u;
            out.push_back(std::move(x));
        }
        return out;
    };
    return p;
}

inline DynamicProblem make_df7(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF7";
    p.n = n;
    p.m = 2;
    p.bounds = box_split(n, 1.0, 4.0, 0.0, 1.0);
    auto sigmoid = [](double a, double x1) { return 1.0 / (1.0 + std::exp(a * (x1 - 2.5))); };
    p.objective = [n, sigmoid](const DecisionVector& x, double t) {
        const double a = 5.0 * std::cos(0.5 * M_PI * t);
        const double target = sigmoid(a, x[0]);
        double g = 1.0;
        for (std::size_t i = 1; i < n; ++i) g += (x[i] - target) * (x[i] - target);
        return ObjectiveVector{g * (1.0 + t) / x[0], g * x[0] / (1.0 + t)};
    };
    p.pof = [](double t, std::size_t count) {
        std::vector<ObjectiveVector> out;
        out.reserve(count);
        for (double s : linspace(1.0, 4.0, count))
            out.push_back({(1.0 + t) / s, s / (1.0 + t)});
        return out;
    };
    p.pos = [n, sigmoid](double t, std::size_t count) {
        const double a = 5.0 * std::cos(0.5 * M_PI * t);
        std::vector<DecisionVector> out;
        out.reserve(count);
        for (double s : linspace(1.0, 4.0, count)) {
            DecisionVector x(n, sigmoid(a, s));
            x[0] = s;
            out.push_back(std::move(x));
        }
        return out;
    };
    return p;
}

inline DynamicProblem make_df8(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF8";
    p.n = n;
    p.m = 2;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 1.0);
    auto shift = [](double G, double b, double x1) {
        return G * std::sin(4.0 * M_PI * std::pow(x1, b)) / (1.0 + std::fabs(G));
    };
    p.objective = [n, shift](const DecisionVector& x, double t) {
        const double G = std::sin(0.5 * M_PI * t);
        const double a = 2.25 + 2.0 * std::cos(2.0 * M_PI * t);
        const double b = 100.0 * G * G;
        const double target = shift(G, b, x[0]);
        double g = 1.0;
        for (std::size_t i = 1; i < n; ++i) g += (x[i] - target) * (x[i] - target);
        const double ripple = 0.1 * std::sin(3.0 * M_PI * x[0]);
        return ObjectiveVector{g * (x[0] + ripple),
                               g * std::pow(pospart(1.0 - x[0] + ripple), a)};
    };
    p.pof = [](double t, std::size_t count) {
        const double a = 2.25 + 2.0 * std::cos(2.0 * M_PI * t);
        std::vector<ObjectiveVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            const double ripple = 0.1 * std::sin(3.0 * M_PI * u);
            out.push_back({u + ripple, std::pow(pospart(1.0 - u + ripple), a)});
        }
        return out;
    };
    p.pos = [n, shift](double t, std::size_t count) {
        const double G = std::sin(0.5 * M_PI * t);
        const double b = 100.0 * G * G;
        std::vector<DecisionVector> out;
        out.reserve(count);
        for (double u : linspace(0.0, 1.0, count)) {
            DecisionVector x(n, shift(G, b, u));
            x[0] = u;
            out.push_back(std::move(x));
        }
        return out;
    };
    return p;
}

inline DynamicProblem make_df9(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF9";
    p.n = n;
    p.m = 2;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 1.0);
    p.objective = [n](const DecisionVector& x, double t) {
        const double nt = 1.0 + std::floor(10.0 * std::fabs(std::sin(0.5 * M_PI * t)));
        double g = 1.0;
        for (std::size_t i = 1; i < n; ++i) {
            const double target = std::cos(4.0 * t + x[0] + x[i - 1]);
            g += (x[i] - target) * (x[i] - target);
        }
        const double lift =
            pospart((0.1 + 0.5 / nt) * std::sin(2.0 * nt * M_PI * x[0]));
        return ObjectiveVector{g * (x[0] + lift), g * (1.0 - x[0] + lift)};
    };
    p.pof = [](double t, std::size_t count) {
        const double nt = 1.0 + std::floor(10.0 * std::fabs(std::sin(0.5 * M_PI * t)));
        auto generate = [&](std::size_t resolution) {
            std::vector<ObjectiveVector> pts;
            pts.reserve(resolution);
            for (double u : linspace(0.0, 1.0, resolution)) {
                const double lift =
                    pospart((0.1 + 0.5 / nt) * std::sin(2.0 * nt * M_PI * u));
                pts.push_back({u + lift, 1.0 - u + lift});
            }
            return pts;
        };
        return sample_filtered_front(count, generate, nd_filter_2d);
    };
    return p;
}

inline DynamicProblem make_df10(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF10";
    p.n = n;
    p.m = 3;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 1.0, 2);
    p.objective = [n](const DecisionVector& x, double t) {
        const double G = std::sin(0.5 * M_PI * t);
        const double H = 2.25 + 2.0 * std::cos(0.5 * M_PI * t);
        const double target = std::sin(4.0 * M_PI * (x[0] + x[1])) * G / (1.0 + std::fabs(G));
        double g = 1.0;
        for (std::size_t i = 2; i < n; ++i) g += (x[i] - target) * (x[i] - target);
        const double s1 = std::sin(0.5 * M_PI * x[0]), c1 = std::cos(0.5 * M_PI * x[0]);
        const double s2 = std::sin(0.5 * M_PI * x[1]), c2 = std::cos(0.5 * M_PI * x[1]);
        return ObjectiveVector{g * std::pow(s1, H), g * std::pow(s2 * c1, H),
                               g * std::pow(c2 * c1, H)};
    };
    p.pof = [](double t, std::size_t count) {
        const double H = 2.25 + 2.0 * std::cos(0.5 * M_PI * t);
        auto generate = [&](std::size_t resolution) {
            const std::size_t r = static_cast<std::size_t>(
                std::ceil(std::sqrt(static_cast<double>(resolution))));
            std::vector<ObjectiveVector> pts;
            pts.reserve(r * r);
            for (double u1 : linspace(0.0, 1.0, r))
                for (double u2 : linspace(0.0, 1.0, r)) {
                    const double s1 = std::sin(0.5 * M_PI * u1), c1 = std::cos(0.5 * M_PI * u1);
                    const double s2 = std::sin(0.5 * M_PI * u2), c2 = std::cos(0.5 * M_PI * u2);
                    pts.push_back({std::pow(s1, H), std::pow(s2 * c1, H), std::pow(c2 * c1, H)});
                }
            return pts;
        };
        auto no_filter = [](std::vector<ObjectiveVector> pts) {
            std::sort(pts.begin(), pts.end());
            return pts;
        };
        return sample_filtered_front(count, generate, no_filter);
    };
    return p;
}

inline DynamicProblem make_df11(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF11";
    p.n = n;
    p.m = 3;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 1.0, 2);
    auto angle = [](double G, double u) {
        return M_PI * G / 6.0 + (M_PI / 2.0 - M_PI * G / 3.0) * u;
    };
    p.objective = [n, angle](const DecisionVector& x, double t) {
        const double G = std::fabs(std::sin(0.5 * M_PI * t));
        double g = 1.0 + G;
        for (std::size_t i = 2; i < n; ++i) {
            const double d = x[i] - 0.5 * G * x[0];
            g += d * d;
        }
        const double y1 = angle(G, x[0]), y2 = angle(G, x[1]);
        return ObjectiveVector{g * std::sin(y1), g * std::sin(y2) * std::cos(y1),
                               g * std::cos(y2) * std::cos(y1)};
    };
    p.pof = [angle](double t, std::size_t count) {
        const double G = std::fabs(std::sin(0.5 * M_PI * t));
        auto generate = [&](std::size_t resolution) {
            const std::size_t r = static_cast<std::size_t>(
                std::ceil(std::sqrt(static_cast<double>(resolution))));
            std::vector<ObjectiveVector> pts;
            pts.reserve(r * r);
            for (double u1 : linspace(0.0, 1.0, r))
                for (double u2 : linspace(0.0, 1.0, r)) {
                    const double y1 = angle(G, u1), y2 = angle(G, u2);
                    const double radius = 1.0 + G;
                    pts.push_back({radius * std::sin(y1), radius * std::sin(y2) * std::cos(y1),
                                   radius * std::cos(y2) * std::cos(y1)});
                }
            return pts;
        };
        auto no_filter = [](std::vector<ObjectiveVector> pts) {
            std::sort(pts.begin(), pts.end());
            return pts;
        };
        return sample_filtered_front(count, generate, no_filter);
    };
    return p;
}

inline DynamicProblem make_df12(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF12";
    p.n = n;
    p.m = 3;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 1.0, 2);
    // sin(floor(v) * pi/2) over integers, computed exactly
    auto half_pi_sin = [](double v) {
        const long long k = static_cast<long long>(std::floor(v));
        const long long r = ((k % 4) + 4) % 4;
        if (r == 0 || r == 2) return 0.0;
        return r == 1 ? 1.0 : -1.0;
    };
    auto comb_penalty = [half_pi_sin](double t, double u1, double u2) {
        const double k = 10.0 * std::sin(M_PI * t);
        return std::fabs(half_pi_sin(k * (2.0 * u1 - 1.0)) * half_pi_sin(k * (2.0 * u2 - 1.0)));
    };
    p.objective = [n, comb_penalty](const DecisionVector& x, double t) {
        double g = 1.0 + comb_penalty(t, x[0], x[1]);
        for (std::size_t i = 2; i < n; ++i) {
            const double d = x[i] - std::sin(t * x[0]);
            g += d * d;
        }
        const double c1 = std::cos(0.5 * M_PI * x[0]), s1 = std::sin(0.5 * M_PI * x[0]);
        const double c2 = std::cos(0.5 * M_PI * x[1]), s2 = std::sin(0.5 * M_PI * x[1]);
        return ObjectiveVector{g * c2 * c1, g * s2 * c1, g * s1};
    };
    p.pof = [comb_penalty](double t, std::size_t count) {
        auto generate = [&](std::size_t resolution) {
            const std::size_t r = static_cast<std::size_t>(
                std::ceil(std::sqrt(static_cast<double>(resolution))));
            std::vector<ObjectiveVector> pts;
            pts.reserve(r * r);
            for (double u1 : linspace(0.0, 1.0, r))
                for (double u2 : linspace(0.0, 1.0, r)) {
                    const double g = 1.0 + comb_penalty(t, u1, u2);
                    const double c1 = std::cos(0.5 * M_PI * u1), s1 = std::sin(0.5 * M_PI * u1);
                    const double c2 = std::cos(0.5 * M_PI * u2), s2 = std::sin(0.5 * M_PI * u2);
                    pts.push_back({g * c2 * c1, g * s2 * c1, g * s1});
                }
            return pts;
        };
        return sample_filtered_front(count, generate, nd_filter_3d);
    };
    return p;
}

inline DynamicProblem make_df13(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF13";
    p.n = n;
    p.m = 3;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 1.0, 2);
    auto third = [](double pfreq, double u1, double u2) {
        const double s1 = std::sin(0.5 * M_PI * u1), s2 = std::sin(0.5 * M_PI * u2);
        const double w1 = std::cos(pfreq * M_PI * u1), w2 = std::cos(pfreq * M_PI * u2);
        return s1 * s1 + s1 * w1 * w1 + s2 * s2 + s2 * w2 * w2;
    };
    p.objective = [n, third](const DecisionVector& x, double t) {
        const double G = std::sin(0.5 * M_PI * t);
        const double pfreq = std::floor(6.0 * G);
        double g = 1.0;
        for (std::size_t i = 2; i < n; ++i) g += (x[i] - G) * (x[i] - G);
        const double c1 = std::cos(0.5 * M_PI * x[0]), c2 = std::cos(0.5 * M_PI * x[1]);
        return ObjectiveVector{g * c1 * c1, g * c2 * c2, g * third(pfreq, x[0], x[1])};
    };
    p.pof = [third](double t, std::size_t count) {
        const double pfreq = std::floor(6.0 * std::sin(0.5 * M_PI * t));
        auto generate = [&](std::size_t resolution) {
            const std::size_t r = static_cast<std::size_t>(
                std::ceil(std::sqrt(static_cast<double>(resolution))));
            std::vector<ObjectiveVector> pts;
            pts.reserve(r * r);
            for (double u1 : linspace(0.0, 1.0, r))
                for (double u2 : linspace(0.0, 1.0, r)) {
                    const double c1 = std::cos(0.5 * M_PI * u1), c2 = std::cos(0.5 * M_PI * u2);
                    pts.push_back({c1 * c1, c2 * c2, third(pfreq, u1, u2)});
                }
            return pts;
        };
        return sample_filtered_front(count, generate, nd_filter_3d);
    };
    return p;
}

inline DynamicProblem make_df14(std::size_t n) {
    using namespace bench_detail;
    DynamicProblem p;
    p.name = "DF14";
    p.n = n;
    p.m = 3;
    p.bounds = box_split(n, 0.0, 1.0, -1.0, 1.0, 2);
    auto wave = [](double v) { return v + 0.05 * std::sin(6.0 * M_PI * v); };
    auto cowave = [](double v) { return 1.0 - v + 0.05 * std::sin(6.0 * M_PI * v); };
    p.objective = [n, wave, cowave](const DecisionVector& x, double t) {
        const double G = std::sin(0.5 * M_PI * t);
        double g = 1.0;
        for (std::size_t i = 2; i < n; ++i) g += (x[i] - G) * (x[i] - G);
        const double y = 0.5 + G * (x[0] - 0.5);
        return ObjectiveVector{g * cowave(y), g * cowave(x[1]) * wave(y),
                               g * wave(x[1]) * wave(y)};
    };
    p.pof = [wave, cowave](double t, std::size_t count) {
        const double G = std::sin(0.5 * M_PI * t);
        auto generate = [&](std::size_t resolution) {
            const std::size_t r = static_cast<std::size_t>(
                std::ceil(std::sqrt(static_cast<double>(resolution))));
            const double ylo = 0.5 - 0.5 * std::fabs(G), yhi = 0.5 + 0.5 * std::fabs(G);
            // the front collapses to a curve when G vanishes
            std::vector<double> ys =
                (yhi - ylo < 1e-12) ? std::vector<double>{0.5} : linspace(ylo, yhi, r);
            const std::size_t r2 = (resolution + ys.size() - 1) / ys.size();
            std::vector<ObjectiveVector> pts;
            pts.reserve(ys.size() * r2);
            for (double y : ys)
                for (double u2 : linspace(0.0, 1.0, r2))
                    pts.push_back({cowave(y), cowave(u2) * wave(y), wave(u2) * wave(y)});
            return pts;
        };
        return sample_filtered_front(count, generate, nd_filter_3d);
    };
    return p;
}

// ---- registry -----------------------------------------------------------

inline const std::vector<DynamicProblem>& all_problems() {
    static const std::vector<DynamicProblem> problems = [] {
        const std::size_t n = 10;
        std::vector<DynamicProblem> v;
        v.push_back(make_df1(n));
        v.push_back(make_df2(n));
        v.push_back(make_df3(n));
        v.push_back(make_df4(n));
        v.push_back(make_df5(n));
        v.push_back(make_df6(n));
        v.push_back(make_df7(n));
        v.push_back(make_df8(n));
        v.push_back(make_df9(n));
        v.push_back(make_df10(n));
        v.push_back(make_df11(n));
        v.push_back(make_df12(n));
        v.push_back(make_df13(n));
        v.push_back(make_df14(n));
        v.push_back(make_synthetic_drift("SynLinearDrift", n,
                                         [](double t) { return 0.5 * t; }));
        v.push_back(make_synthetic_drift("SynSineDrift", n,
                                         [](double t) { return std::sin(0.5 * M_PI * t); }));
        return v;
    }();
    return problems;
}

inline std::vector<std::string> problem_names() {
    std::vector<std::string> names;
    for (const auto& p : all_problems()) names.push_back(p.name);
    return names;
}

inline const DynamicProblem& problem_by_name(const std::string& name) {
    for (const auto& p : all_problems())
        if (p.name == name) return p;
    std::string known;
    for (const auto& p : all_problems()) known += (known.empty() ? "" : ", ") + p.name;
    throw std::invalid_argument("unknown problem '" + name + "' (known: " + known + ")");
}

}  // namespace kaep
