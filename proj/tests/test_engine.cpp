#include <doctest.h>

#include <random>

#include "symf/engine.hpp"

using namespace symf;

namespace {
const TPoly kOne(Int(1));
const TPoly kOneMinusT(std::vector<Int>{1, -1});
}  // namespace

TEST_CASE("tail sums") {
    CHECK(tail_sums({2, 2, 1}) == std::vector<long long>{5, 3, 1});
    CHECK(tail_sums({5, -1, 1}) == std::vector<long long>{5, 0, 1});
    CHECK(tail_sums({1, -2}) == std::vector<long long>{-1, -2});
}

TEST_CASE("apply_translation") {
    CHECK(apply_translation({2, 2, 1}, 1, 2) == IndexVector{3, 1, 1});
    CHECK(apply_translation({2, 2, 1, 1}, 1, 4) == IndexVector{3, 2, 1, 0});
    CHECK(apply_translation({0, 0}, 1, 2) == IndexVector{1, -1});
    CHECK_THROWS_AS(apply_translation({1, 2}, 2, 2), std::invalid_argument);
}

TEST_CASE("plain series on (2,2)") {
    FormalSum base{{{2, 2}, kOne}};
    FormalSum got = evaluate_series_product(base, {{1, 2, SeriesKind::Plain}});
    FormalSum expected{{{2, 2}, kOne}, {{3, 1}, kOne}, {{4, 0}, kOne}};
    CHECK(got == expected);  // (5,-1) pruned by its tail sum
}

TEST_CASE("t-deformed series on (2,1)") {
    FormalSum base{{{2, 1}, kOne}};
    FormalSum got = evaluate_series_product(base, {{1, 2, SeriesKind::TDeformed}});
    FormalSum expected{{{2, 1}, kOne}, {{3, 0}, kOneMinusT}};
    CHECK(got == expected);
}

TEST_CASE("empty series list is the identity") {
    FormalSum base{{{2, 1, 1}, kOneMinusT}};
    CHECK(evaluate_series_product(base, {}) == base);
}

TEST_CASE("weight is conserved") {
    FormalSum base{{{3, 2, 2, 1}, kOne}};
    std::vector<TranslationSeries> series{
        {1, 3, SeriesKind::Plain}, {2, 4, SeriesKind::TDeformed}, {1, 2, SeriesKind::Plain}};
    for (const auto& [v, c] : evaluate_series_product(base, series)) {
        long long w = 0;
        for (int e : v) w += e;
        CHECK(w == 8);
    }
}

TEST_CASE("every translation lowers the tail sums it touches") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int len = std::uniform_int_distribution<int>(2, 6)(rng);
        IndexVector v(static_cast<size_t>(len));
        for (int& e : v) e = std::uniform_int_distribution<int>(-4, 6)(rng);
        for (int s = 1; s < len; ++s) {
            for (int d = s + 1; d <= len; ++d) {
                auto before = tail_sums(v), after = tail_sums(apply_translation(v, s, d));
                for (size_t p = 0; p < v.size(); ++p) {
                    CHECK(after[p] <= before[p]);
                    bool touched = s < static_cast<int>(p) + 1 && static_cast<int>(p) + 1 <= d;
                    CHECK(after[p] == before[p] - (touched ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("pieri plan layout") {
    OperatorPlan plan = make_pieri_plan(Partition({2, 1}), 2, SeriesKind::Plain);
    CHECK(plan.base == IndexVector{2, 2, 1});
    REQUIRE(plan.series.size() == 2);
    CHECK(plan.series[0].source == 1);
    CHECK(plan.series[0].target == 2);
    CHECK(plan.series[1].source == 2);
    CHECK(plan.series[1].target == 3);

    OperatorPlan empty = make_pieri_plan(Partition(), 3, SeriesKind::Plain);
    CHECK(empty.base == IndexVector{3});
    CHECK(empty.series.empty());
}

TEST_CASE("product plan layout") {
    OperatorPlan plan = make_product_plan(Partition({2, 1}), Partition({2, 1}), SeriesKind::Plain);
    CHECK(plan.base == IndexVector{2, 2, 1, 1});
    // nu slots are 2 and 4; series R_12, R_23, R_14, R_34
    REQUIRE(plan.series.size() == 4);
    auto has = [&](int s, int d) {
        for (const auto& ts : plan.series)
            if (ts.source == s && ts.target == d) return true;
        return false;
    };
    CHECK(has(1, 2));
    CHECK(has(2, 3));
    CHECK(has(1, 4));
    CHECK(has(3, 4));
}
