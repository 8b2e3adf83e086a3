#include <doctest.h>

#include <random>

#include "symf/xypoly.hpp"

using namespace symf;

namespace {

XYPolynomial x(int n) { return XYPolynomial::x_var(n); }

QtPoly q_rat(long long num, long long den) {
    return QtPoly(Rational(num, den));
}

}  // namespace

TEST_CASE("xpoly_mul basics") {
    XYPolynomial x1sq = xpoly_mul(x(1), x(1), kNoWeightLimit);
    Monomial m;
    m.ex = {2};
    XYPolynomial expected;
    expected.add_term(m, q_rat(1, 1));
    CHECK(x1sq == expected);

    XYPolynomial p = x(2) + x(1);
    CHECK(xpoly_mul(XYPolynomial::one(), p, kNoWeightLimit) == p);
}

TEST_CASE("truncation drops heavy terms") {
    // x2 + 1/2 x1^2 is h_2; truncating the product with 1 to weight <= 1 gives 0
    XYPolynomial h2 = h_poly(2, 2);
    CHECK(xpoly_mul(h2, XYPolynomial::one(), 1).is_zero());
    CHECK(xpoly_mul(h2, XYPolynomial::one(), 2) == h2);
}

TEST_CASE("h_poly small values") {
    CHECK(h_poly(0, 1) == XYPolynomial::one());
    CHECK(h_poly(-3, 1).is_zero());

    XYPolynomial expected = x(2);
    Monomial m;
    m.ex = {2};
    expected.add_term(m, q_rat(1, 2));
    CHECK(h_poly(2, 2) == expected);
}

TEST_CASE("h_poly is weight homogeneous") {
    for (int n = 0; n <= 12; ++n) CHECK(h_poly(n, n).is_homogeneous(n));
}

TEST_CASE("grading is additive under multiplication") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int wa = std::uniform_int_distribution<int>(0, 5)(rng);
        int wb = std::uniform_int_distribution<int>(0, 5)(rng);
        XYPolynomial a = h_poly(wa, wa), b = h_poly(wb, wb);
        XYPolynomial ab = xpoly_mul(a, b, kNoWeightLimit);
        CHECK(ab.is_homogeneous(wa + wb));
    }
}

TEST_CASE("y variables carry negative weight") {
    Monomial m;
    m.ey = {0, 1};  // y_2
    CHECK(m.weight() == -2);
    XYPolynomial p = XYPolynomial::y_var(2);
    CHECK(xpoly_mul(p, x(2), kNoWeightLimit).is_homogeneous(0));
}

TEST_CASE("determinant expansion") {
    // det [[x1, 1], [1, x1]] = x1^2 - 1
    std::vector<std::vector<XYPolynomial>> m{{x(1), XYPolynomial::one()},
                                             {XYPolynomial::one(), x(1)}};
    XYPolynomial expected = xpoly_mul(x(1), x(1), kNoWeightLimit) - XYPolynomial::one();
    CHECK(xpoly_det(m) == expected);
    CHECK(xpoly_det({}) == XYPolynomial::one());
}
