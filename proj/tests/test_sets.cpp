#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "svf/sets.hpp"

using namespace svf;

TEST_CASE("compact set construction merges and sorts") {
    CompactSet s{{2.0, 3.0}, {0.0, 1.0}, {0.5, 1.5}};
    REQUIRE(s.size() == 2);
    CHECK(s.intervals()[0] == Interval{0.0, 1.5});
    CHECK(s.intervals()[1] == Interval{2.0, 3.0});

    CompactSet touching{{0.0, 1.0}, {1.0 + 1e-10, 2.0}};
    CHECK(touching.size() == 1);
    CompactSet apart{{0.0, 1.0}, {1.0 + 1e-8, 2.0}};
    CHECK(apart.size() == 2);

    CHECK_THROWS_AS(CompactSet({{1.0, 0.0}}), DomainError);
    CompactSet point{{0.5, 0.5}};
    CHECK(point.size() == 1);
    CHECK(point.contains(0.5));
}

TEST_CASE("gaps and endpoints") {
    CompactSet s{{0.0, 1.0}, {2.0, 3.0}, {5.0, 5.0}};
    const auto gaps = s.gaps();
    REQUIRE(gaps.size() == 2);
    CHECK(gaps[0] == Interval{1.0, 2.0});
    CHECK(gaps[1] == Interval{3.0, 5.0});
    CHECK(s.endpoints() == std::vector<double>{0.0, 1.0, 2.0, 3.0, 5.0});
    CHECK(s.contains(2.5));
    CHECK_FALSE(s.contains(1.5));
}

TEST_CASE("hausdorff small cases") {
    CHECK(hausdorff(CompactSet{{0, 1}}, CompactSet{{0, 1}}) == 0.0);
    CHECK(hausdorff(CompactSet{{0, 1}}, CompactSet{{0, 2}}) == doctest::Approx(1.0));
    // the gap midpoint of [0,1] U [3,4] is 1 away from both pieces
    CHECK(hausdorff(CompactSet{{0, 4}}, CompactSet{{0, 1}, {3, 4}}) == doctest::Approx(1.0));
    CHECK(hausdorff(CompactSet{{0, 0}}, CompactSet{{3, 3}}) == doctest::Approx(3.0));
}

TEST_CASE("hausdorff matches grid brute force") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const CompactSet a = oracle::random_set(rng, 4);
        const CompactSet b = oracle::random_set(rng, 4);
        const double exact = hausdorff(a, b);
        const double grid = oracle::hausdorff_grid(a, b, 1e-4);
        CHECK(exact >= grid - 1e-12);
        CHECK(exact <= grid + 1e-4);
        CHECK(hausdorff(b, a) == doctest::Approx(exact).epsilon(1e-14));
    }
}

TEST_CASE("union lemma") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const CompactSet a1 = oracle::random_set(rng, 3);
        const CompactSet a2 = oracle::random_set(rng, 3);
        const CompactSet b1 = oracle::random_set(rng, 3);
        const CompactSet b2 = oracle::random_set(rng, 3);
        const double lhs = hausdorff(a1.unite(a2), b1.unite(b2));
        CHECK(lhs <= std::max(hausdorff(a1, b1), hausdorff(a2, b2)) + 1e-12);
    }
}

TEST_CASE("metric pairs") {
    DiscretePointSet v{0.0, 3.0};
    DiscretePointSet w{0.0, 1.0, 2.0, 3.0};
    const auto pairs = metric_pairs(v, w);
    // 0->0, 3->3 from V; 1->0 and 2->3 from W
    const std::vector<MetricPair> expected{{0.0, 0.0}, {0.0, 1.0}, {3.0, 2.0}, {3.0, 3.0}};
    CHECK(pairs == expected);

    // a tie keeps both neighbours
    const auto tie = metric_pairs(DiscretePointSet{1.0}, DiscretePointSet{0.0, 2.0});
    CHECK(tie.size() == 2);
}

TEST_CASE("metric pairs match the predicate on random sets") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<int> lattice(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> vs;
        std::vector<double> ws;
        // lattice values make ties common
        for (int i = count(rng); i > 0; --i) vs.push_back(lattice(rng) * 0.25);
        for (int i = count(rng); i > 0; --i) ws.push_back(lattice(rng) * 0.25);
        const DiscretePointSet V(vs);
        const DiscretePointSet W(ws);
        std::vector<MetricPair> expected;
        for (double v : V.points()) {
            for (double w : W.points()) {
                if (oracle::is_metric_pair(v, w, V.points(), W.points())) expected.push_back({v, w});
            }
        }
        CHECK(metric_pairs(V, W) == expected);
    }
}

TEST_CASE("metric linear combination") {
    const std::vector<DiscretePointSet> sets{DiscretePointSet{0.0, 3.0}, DiscretePointSet{0.0, 1.0, 2.0, 3.0}};
    const std::vector<double> weights{0.5, 0.5};
    const auto combo = metric_linear_combination(sets, weights);
    CHECK(combo == DiscretePointSet{0.0, 0.5, 2.5, 3.0});

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<DiscretePointSet> layers;
        std::vector<std::vector<double>> raw;
        for (int l = 0; l < 3; ++l) {
            std::vector<double> pts;
            for (int i = count(rng); i > 0; --i) pts.push_back(u(rng));
            layers.emplace_back(pts);
            raw.push_back(layers.back().points());
        }
        const std::vector<double> w{0.2, 0.3, 0.5};
        std::vector<double> expected;
        for (const auto& chain : oracle::metric_chains(raw)) expected.push_back(w[0] * chain[0] + w[1] * chain[1] + w[2] * chain[2]);
        const DiscretePointSet want(expected);
        const DiscretePointSet got = metric_linear_combination(layers, w);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-14));
    }
}

TEST_CASE("empty sets are rejected") {
    CHECK_THROWS_AS((void)hausdorff(CompactSet{}, CompactSet{{0, 1}}), DomainError);
    CHECK_THROWS_AS((void)CompactSet{}.min(), DomainError);
}
