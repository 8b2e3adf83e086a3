#include <doctest.h>

#include "symf/universal_characters.hpp"

using namespace symf;

namespace {

UCSum sum_of(
    std::initializer_list<std::pair<std::pair<std::vector<int>, std::vector<int>>, long long>>
        terms) {
    UCSum s;
    for (const auto& [key, c] : terms)
        s.emplace(UCIndex{Partition(key.first), Partition(key.second)}, Int(c));
    return s;
}

}  // namespace

TEST_CASE("uc_degree") {
    CHECK(uc_degree({Partition({2, 1}), Partition({3, 1})}) == -1);
    CHECK(uc_degree({Partition(), Partition()}) == 0);
    CHECK(uc_degree({Partition({1}), Partition()}) == 1);
}

TEST_CASE("uc_to_xy small cases") {
    CHECK(uc_to_xy({Partition(), Partition()}, 2) == XYPolynomial::one());
    CHECK(uc_to_xy({Partition({1}), Partition()}, 1) == XYPolynomial::x_var(1));
    // [(1),(1)]: h1(y)h1(x) - h0 h0 = x1 y1 - 1
    XYPolynomial expected =
        xpoly_mul(XYPolynomial::x_var(1), XYPolynomial::y_var(1), kNoWeightLimit) -
        XYPolynomial::one();
    CHECK(uc_to_xy({Partition({1}), Partition({1})}, 2) == expected);
}

TEST_CASE("uc_to_xy is homogeneous of the index degree") {
    for (int a = 0; a <= 3; ++a)
        for (const Partition& la : partitions_of(a))
            for (int b = 0; a + b <= 4; ++b)
                for (const Partition& mu : partitions_of(b)) {
                    UCIndex key{la, mu};
                    CHECK(uc_to_xy(key, a + b).is_homogeneous(uc_degree(key)));
                }
}

TEST_CASE("worked product example") {
    UCSum got = mul_uc({Partition({2, 1}), Partition({3, 1})}, {Partition({1}), Partition({1})});
    UCSum expected = sum_of({{{{3, 1}, {4, 1}}, 1},    {{{3, 1}, {3, 2}}, 1},
                             {{{3, 1}, {3, 1, 1}}, 1}, {{{3}, {3, 1}}, 1},
                             {{{2, 2}, {4, 1}}, 1},    {{{2, 2}, {3, 2}}, 1},
                             {{{2, 2}, {3, 1, 1}}, 1}, {{{2, 1, 1}, {4, 1}}, 1},
                             {{{2, 1, 1}, {3, 2}}, 1}, {{{2, 1, 1}, {3, 1, 1}}, 1},
                             {{{2, 1}, {4}}, 1},       {{{2, 1}, {3, 1}}, 4},
                             {{{2, 1}, {2, 2}}, 1},    {{{2, 1}, {2, 1, 1}}, 1},
                             {{{2}, {3}}, 1},          {{{2}, {2, 1}}, 1},
                             {{{1, 1, 1}, {3, 1}}, 1}, {{{1, 1}, {3}}, 1},
                             {{{1, 1}, {2, 1}}, 1}});
    CHECK(got == expected);
    CHECK(got.at({Partition({2, 1}), Partition({3, 1})}) == 4);
}

TEST_CASE("pure x-side products reduce to LR products") {
    for (int a = 0; a <= 3; ++a)
        for (const Partition& la : partitions_of(a))
            for (int b = 0; a + b <= 5; ++b)
                for (const Partition& tau : partitions_of(b)) {
                    UCSum uc = mul_uc({la, Partition()}, {tau, Partition()});
                    SchurSum lr = mul_schur(la, tau);
                    CHECK(uc.size() == lr.size());
                    for (const auto& [key, c] : uc) {
                        CHECK(key.mu.empty());
                        CHECK(lr.at(key.la) == c);
                    }
                }
}

TEST_CASE("identity element") {
    UCSum got = mul_uc({Partition({1}), Partition({1})}, {Partition(), Partition()});
    CHECK(got == sum_of({{{{1}, {1}}, 1}}));
}

TEST_CASE("koike coefficient examples") {
    CHECK(koike_coefficient(Partition({2, 1}), Partition({3, 1}), Partition({1}), Partition({1}),
                            Partition({2, 1}), Partition({3, 1})) == 4);
    // eta = nu = empty reduces to the LR coefficient
    CHECK(koike_coefficient(Partition({2, 1}), Partition(), Partition({1}), Partition(),
                            Partition({2, 2}), Partition()) == 1);
    CHECK(koike_coefficient(Partition({2, 1}), Partition(), Partition({1}), Partition(),
                            Partition({2, 2}), Partition({1})) == 0);
    CHECK(koike_coefficient(Partition({1}), Partition({1}), Partition({1}), Partition({1}),
                            Partition(), Partition()) == 1);
}

TEST_CASE("degree additivity and commutativity") {
    for (int a = 0; a <= 2; ++a)
        for (const Partition& xi : partitions_of(a))
            for (int b = 0; a + b <= 3; ++b)
                for (const Partition& eta : partitions_of(b))
                    for (int c = 0; a + b + c <= 4; ++c)
                        for (const Partition& tau : partitions_of(c))
                            for (int d = 0; a + b + c + d <= 4; ++d)
                                for (const Partition& nu : partitions_of(d)) {
                                    UCIndex p{xi, eta}, q{tau, nu};
                                    UCSum prod = mul_uc(p, q);
                                    CHECK(prod == mul_uc(q, p));
                                    for (const auto& [key, coeff] : prod)
                                        CHECK(uc_degree(key) ==
                                              uc_degree(p) + uc_degree(q));
                                }
}

TEST_CASE("strict-vanish diagnostic policy differs where straightening cancels") {
    // [(1,1),()] x [(),(2)]: the xi-side decrement (1,1) -> (-1,1) straightens
    // to -S_(), cancelling the (0,0) outcome; discarding it leaves a spurious
    // [(),()] term.
    UCIndex a{Partition({1, 1}), Partition()}, b{Partition(), Partition({2})};
    UCSum straightened = mul_uc(a, b, DecrementPolicy::Straighten);
    UCSum strict = mul_uc(a, b, DecrementPolicy::StrictVanish);
    UCIndex empty_key{Partition(), Partition()};
    CHECK(straightened.find(empty_key) == straightened.end());
    CHECK(strict.at(empty_key) == 1);
    CHECK(straightened == koike_expand(a.la, a.mu, b.la, b.mu));
    CHECK(straightened == sum_of({{{{1, 1}, {2}}, 1}, {{{1}, {1}}, 1}}));
}
