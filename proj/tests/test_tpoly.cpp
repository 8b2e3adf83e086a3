#include <doctest.h>

#include <random>

#include "symf/tpoly.hpp"

using namespace symf;

namespace {
TPoly tp(std::vector<Int> c) { return TPoly(std::move(c)); }
}  // namespace

TEST_CASE("tpoly_mul basics") {
    // (1-t)(1+t) = 1-t^2
    CHECK(tpoly_mul(tp({1, -1}), tp({1, 1})) == tp({1, 0, -1}));
    CHECK(tpoly_mul(TPoly(), tp({3, 1, 4})) == TPoly());
    // (t^2-1)*t = t^3-t
    CHECK(tpoly_mul(tp({-1, 0, 1}), TPoly::t()) == tp({0, -1, 0, 1}));
}

TEST_CASE("tpoly_divexact") {
    CHECK(tpoly_divexact(tp({1, 0, -1}), tp({1, -1})) == tp({1, 1}));
    TPoly p = tp({2, -3, 0, 5});
    CHECK(tpoly_divexact(p, p) == TPoly(Int(1)));
    CHECK_THROWS_AS(tpoly_divexact(tp({1, 0, -1}), tp({1, 0, 1})), NonzeroRemainder);
    CHECK_THROWS_AS(tpoly_divexact(tp({1}), TPoly()), NonzeroRemainder);
    // stepwise-divisible but with nonzero final remainder
    CHECK_THROWS_AS(tpoly_divexact(tp({1, 1, 1}), tp({0, 1})), NonzeroRemainder);
}

TEST_CASE("ring axioms on random small polynomials") {
    std::mt19937 rng(7);
    auto random_poly = [&] {
        std::vector<Int> c(static_cast<size_t>(std::uniform_int_distribution<int>(0, 5)(rng)));
        for (auto& x : c) x = std::uniform_int_distribution<int>(-4, 4)(rng);
        return TPoly(std::move(c));
    };
    for (int i = 0; i < 200; ++i) {
        TPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a + (b + c) == (a + b) + c);
        if (!c.is_zero()) CHECK(divexact(a * c, c) == a);
    }
}

TEST_CASE("canonical form strips trailing zeros") {
    CHECK(tp({0, 0, 0}) == TPoly());
    CHECK(tp({1, 2, 0}) == tp({1, 2}));
    CHECK(tp({1, 2}).degree() == 1);
    CHECK(TPoly().degree() == -1);
}

TEST_CASE("string rendering") {
    CHECK(to_string(tp({1, 0, -1})) == "1 - t^2");
    CHECK(to_string(TPoly()) == "0");
    CHECK(to_string(tp({0, 1})) == "t");
    CHECK(to_string(tp({2, -1, -2, 1})) == "2 - t - 2*t^2 + t^3");
    CHECK(to_string(tp({-1, 0, 1})) == "-1 + t^2");
}

TEST_CASE("qtpoly conversion guards") {
    QtPoly half(std::vector<Rational>{Rational(1, 2)});
    CHECK_THROWS_AS(to_tpoly(half), NotPolynomial);
    CHECK(to_tpoly(to_qtpoly(tp({3, 0, -2}))) == tp({3, 0, -2}));
}
