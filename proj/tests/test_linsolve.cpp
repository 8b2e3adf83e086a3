#include <doctest.h>

#include <random>

#include "symf/linsolve.hpp"

using namespace symf;

namespace {

QtPoly qc(std::vector<long long> c) {
    std::vector<Rational> r;
    for (long long x : c) r.emplace_back(x);
    return QtPoly(std::move(r));
}

}  // namespace

TEST_CASE("identity system") {
    std::vector<std::vector<QtPoly>> cols{{qc({1}), qc({0}), qc({0})},
                                          {qc({0}), qc({1}), qc({0})},
                                          {qc({0}), qc({0}), qc({1})}};
    auto sol = solve_exact_linear_system(cols, {qc({0}), qc({1}), qc({0})});
    CHECK(sol[0].is_zero());
    CHECK(sol[1] == TPoly(Int(1)));
    CHECK(sol[2].is_zero());
}

TEST_CASE("dependent columns are rejected") {
    // (1) and (t) span the same line over Q(t): rank 1 < 2 columns
    std::vector<std::vector<QtPoly>> cols{{qc({1})}, {qc({0, 1})}};
    CHECK_THROWS_AS(solve_exact_linear_system(cols, {qc({1, 1})}), Inconsistent);
}

TEST_CASE("inconsistent target is detected") {
    std::vector<std::vector<QtPoly>> cols{{qc({1}), qc({1})}};
    CHECK_THROWS_AS(solve_exact_linear_system(cols, {qc({1}), qc({2})}), Inconsistent);
}

TEST_CASE("non-integer solutions are flagged") {
    std::vector<std::vector<QtPoly>> cols{{qc({2})}};
    CHECK_THROWS_AS(solve_exact_linear_system(cols, {qc({1})}), NotPolynomial);
    // rational-function solution: (t) * x = (1)
    std::vector<std::vector<QtPoly>> colt{{qc({0, 1})}};
    CHECK_THROWS_AS(solve_exact_linear_system(colt, {qc({1})}), NotPolynomial);
}

TEST_CASE("solve composed with forward combination is the identity") {
    std::mt19937 rng(23);
    auto rand_tpoly = [&] {
        std::vector<Int> c(static_cast<size_t>(std::uniform_int_distribution<int>(0, 2)(rng)) + 1);
        for (auto& v : c) v = std::uniform_int_distribution<int>(-3, 3)(rng);
        return TPoly(std::move(c));
    };
    for (int trial = 0; trial < 30; ++trial) {
        const size_t n = static_cast<size_t>(std::uniform_int_distribution<int>(1, 4)(rng));
        const size_t m = n + static_cast<size_t>(std::uniform_int_distribution<int>(0, 2)(rng));
        std::vector<std::vector<QtPoly>> cols(n, std::vector<QtPoly>(m));
        for (auto& col : cols)
            for (auto& e : col) e = to_qtpoly(rand_tpoly());
        std::vector<TPoly> want(n);
        for (auto& w : want) w = rand_tpoly();
        std::vector<QtPoly> target(m);
        for (size_t r = 0; r < m; ++r) {
            QtPoly acc;
            for (size_t c = 0; c < n; ++c) acc += cols[c][r] * to_qtpoly(want[c]);
            target[r] = acc;
        }
        try {
            auto got = solve_exact_linear_system(cols, target);
            CHECK(got == want);
        } catch (const Inconsistent&) {
            // random columns may be dependent; any other failure is a bug
        }
    }
}
