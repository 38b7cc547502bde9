#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cmath>

#include "kaep/benchmarks.hpp"
#include "kaep/core.hpp"

using namespace kaep;

namespace {

const std::vector<double> kTimeGrid{0.0, 0.3, 0.7, 1.0, 1.7, 2.0};

DecisionVector random_point(const DynamicProblem& p, Rng& rng) {
    DecisionVector x(p.n);
    for (std::size_t i = 0; i < p.n; ++i)
        x[i] = rng.uniform(p.bounds.lower[i], p.bounds.upper[i]);
    return x;
}

// true when a beats b by a clear margin in every objective
bool dominates_by_margin(const ObjectiveVector& a, const ObjectiveVector& b, double margin) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] >= b[k] - margin) return false;
    return true;
}

}  // namespace

TEST_CASE("registry lists the full suite in order", "[benchmarks]") {
    auto names = problem_names();
    REQUIRE(names.size() == 16);
    for (int i = 1; i <= 14; ++i) REQUIRE(names[i - 1] == "DF" + std::to_string(i));
    REQUIRE(names[14] == "SynLinearDrift");
    REQUIRE(names[15] == "SynSineDrift");
    REQUIRE(problem_by_name("DF7").name == "DF7");
    REQUIRE_THROWS_AS(problem_by_name("DF15"), std::invalid_argument);
    for (const auto& p : all_problems()) {
        REQUIRE(p.n == 10);
        REQUIRE(p.bounds.size() == 10);
        bool tri = p.name == "DF10" || p.name == "DF11" || p.name == "DF12" ||
                   p.name == "DF13" || p.name == "DF14";
        REQUIRE(p.m == (tri ? 3u : 2u));
    }
}

TEST_CASE("evaluators are pure, finite, and correctly shaped", "[benchmarks]") {
    Rng rng(201);
    for (const auto& p : all_problems()) {
        for (double t : kTimeGrid) {
            for (int it = 0; it < 10; ++it) {
                DecisionVector x = random_point(p, rng);
                ObjectiveVector f1 = p.evaluate(x, t);
                ObjectiveVector f2 = p.evaluate(x, t);
                REQUIRE(f1.size() == p.m);
                REQUIRE(f1 == f2);
                for (double v : f1) REQUIRE(std::isfinite(v));
            }
        }
    }
}

TEST_CASE("evaluator rejects malformed queries", "[benchmarks]") {
    const auto& df1 = problem_by_name("DF1");
    DecisionVector ok(10, 0.5);
    REQUIRE_NOTHROW(df1.evaluate(ok, 0.0));
    DecisionVector outside = ok;
    outside[3] = 1.5;
    REQUIRE_THROWS_AS(df1.evaluate(outside, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(df1.evaluate(DecisionVector(9, 0.5), 0.0), std::domain_error);
    REQUIRE_THROWS_AS(df1.evaluate(ok, -0.1), std::domain_error);
    REQUIRE_THROWS_AS(df1.evaluate(ok, std::nan("")), std::domain_error);
    REQUIRE_THROWS_AS(df1.sample_true_pof(0.0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(df1.sample_true_pof(-1.0, 10), std::domain_error);
    REQUIRE_FALSE(problem_by_name("DF9").has_pos_sampler());
    REQUIRE_THROWS_AS(problem_by_name("DF9").sample_true_pos(0.0, 5), std::logic_error);
}

TEST_CASE("sampled fronts are the right size, finite, mutually nondominated", "[benchmarks]") {
    for (const auto& p : all_problems()) {
        for (double t : kTimeGrid) {
            auto front = p.sample_true_pof(t, 150);
            REQUIRE(front.size() == 150);
            for (const auto& pt : front) {
                REQUIRE(pt.size() == p.m);
                for (double v : pt) REQUIRE(std::isfinite(v));
            }
            int violations = 0;
            for (const auto& a : front)
                for (const auto& b : front)
                    if (&a != &b && dominates(a, b)) ++violations;
            INFO(p.name << " at t=" << t);
            REQUIRE(violations == 0);
            REQUIRE(p.sample_true_pof(t, 150) == front);
        }
    }
}

TEST_CASE("optimal-manifold samples land on the sampled front", "[benchmarks]") {
    for (const auto& p : all_problems()) {
        if (!p.has_pos_sampler()) continue;
        for (double t : kTimeGrid) {
            auto xs = p.sample_true_pos(t, 50);
            auto front = p.sample_true_pof(t, 50);
            REQUIRE(xs.size() == 50);
            for (std::size_t j = 0; j < xs.size(); ++j) {
                ObjectiveVector f = p.evaluate(xs[j], t);
                INFO(p.name << " at t=" << t << " sample " << j);
                for (std::size_t k = 0; k < p.m; ++k)
                    REQUIRE(f[k] == Catch::Approx(front[j][k]).margin(1e-9));
            }
        }
    }
}

TEST_CASE("random in-bounds points never beat an exact front", "[benchmarks]") {
    // Problems whose sampled front is the exact closed form (no grid filter).
    const std::vector<std::string> exact{"DF1", "DF2",  "DF3",  "DF4",
                                         "DF5", "DF6",  "DF7",  "DF8",
                                         "DF10", "DF11", "SynLinearDrift", "SynSineDrift"};
    Rng rng(202);
    for (const auto& name : exact) {
        const auto& p = problem_by_name(name);
        for (double t : kTimeGrid) {
            auto front = p.sample_true_pof(t, 120);
            for (int it = 0; it < 60; ++it) {
                ObjectiveVector f = p.evaluate(random_point(p, rng), t);
                for (const auto& pt : front) {
                    INFO(name << " at t=" << t);
                    REQUIRE_FALSE(dominates_by_margin(f, pt, 1e-9));
                }
            }
        }
    }
}

TEST_CASE("synthetic drift problems match their worked examples", "[benchmarks]") {
    for (const auto& name : {"SynLinearDrift", "SynSineDrift"}) {
        const auto& p = problem_by_name(name);
        for (double t : {0.0, 0.4, 1.3}) {
            const double G = (p.name == "SynLinearDrift")
                                 ? 0.5 * t
                                 : std::sin(0.5 * M_PI * t);
            DecisionVector x(10, G);
            x[0] = 0.25;
            ObjectiveVector f = p.evaluate(x, t);
            REQUIRE(f[0] == Catch::Approx(0.25).margin(1e-12));
            REQUIRE(f[1] == Catch::Approx(0.5).margin(1e-12));
        }
        auto front = p.sample_true_pof(1.7, 3);
        REQUIRE(front.size() == 3);
        REQUIRE(front[0][0] == Catch::Approx(0.0).margin(1e-15));
        REQUIRE(front[0][1] == Catch::Approx(1.0).margin(1e-15));
        REQUIRE(front[1][0] == Catch::Approx(0.25).margin(1e-15));
        REQUIRE(front[1][1] == Catch::Approx(0.5).margin(1e-15));
        REQUIRE(front[2][0] == Catch::Approx(1.0).margin(1e-15));
        REQUIRE(front[2][1] == Catch::Approx(0.0).margin(1e-15));
        // the front does not move over time
        REQUIRE(p.sample_true_pof(0.0, 40) == p.sample_true_pof(1.9, 40));
    }
}

TEST_CASE("dynamic fronts actually move or reshape over time", "[benchmarks]") {
    const auto& df1 = problem_by_name("DF1");
    REQUIRE(df1.sample_true_pof(0.0, 50) != df1.sample_true_pof(1.0, 50));
    const auto& df4 = problem_by_name("DF4");
    REQUIRE(df4.sample_true_pof(0.0, 50) != df4.sample_true_pof(0.7, 50));
    const auto& df13 = problem_by_name("DF13");
    REQUIRE(df13.sample_true_pof(0.0, 50) != df13.sample_true_pof(1.0, 50));
}

TEST_CASE("front sampling at reference-set scale is fast", "[benchmarks]") {
    for (const auto& name : {"DF1", "DF9", "DF13"}) {
        const auto& p = problem_by_name(name);
        auto start = std::chrono::steady_clock::now();
        auto front = p.sample_true_pof(1.0, 15000);
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        REQUIRE(front.size() == 15000);
        INFO(name);
        REQUIRE(elapsed.count() < 1.0);
    }
}
