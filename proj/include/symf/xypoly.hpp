#pragma once

#include <map>
#include <vector>

#include "symf/tpoly.hpp"

namespace symf {

// Monomial in two coordinate families x_1..x_N, y_1..y_M. Exponent vectors
// are stored without trailing zeros so the representation is independent of
// any particular N, M. Grading: weight = sum n*ex[n] - sum n*ey[n].
struct Monomial {
    std::vector<int> ex;
    std::vector<int> ey;

    long long weight() const;
    void normalize();

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ex == b.ex && a.ey == b.ey;
    }
    // x-exponents first, then y-exponents, lexicographic.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.ex != b.ex) return a.ex < b.ex;
        return a.ey < b.ey;
    }
};

constexpr long long kNoWeightLimit = -1;

// Sparse multivariate polynomial over Q[t] in the x/y coordinates.
// Invariant: stored coefficients are nonzero.
class XYPolynomial {
  public:
    XYPolynomial() = default;
    static XYPolynomial constant(QtPoly c);
    static XYPolynomial one() { return constant(QtPoly(Rational(1))); }
    // x_n (1-based)
    static XYPolynomial x_var(int n);
    static XYPolynomial y_var(int n);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, QtPoly>& terms() const { return terms_; }
    void add_term(const Monomial& m, const QtPoly& c);

    friend XYPolynomial operator+(const XYPolynomial& a, const XYPolynomial& b);
    friend XYPolynomial operator-(const XYPolynomial& a, const XYPolynomial& b);
    friend bool operator==(const XYPolynomial& a, const XYPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const XYPolynomial& a, const XYPolynomial& b) { return !(a == b); }

    XYPolynomial scaled(const QtPoly& c) const;
    // True if every term has the given weight (vacuously true for zero).
    bool is_homogeneous(long long w) const;

  private:
    std::map<Monomial, QtPoly> terms_;
};

// Exact product; terms with |weight| > max_weight_magnitude are dropped
// (pass kNoWeightLimit to keep everything).
XYPolynomial xpoly_mul(const XYPolynomial& a, const XYPolynomial& b,
                       long long max_weight_magnitude);

// Coefficient of z^n in exp(sum_m x_m z^m), restricted to x_1..x_num_vars:
// sum over multiplicity vectors k with sum m*k_m = n of prod x_m^{k_m}/k_m!.
// Zero for n < 0, one for n = 0.
XYPolynomial h_poly(int n, int num_vars);

// Same in the y family.
XYPolynomial h_poly_y(int n, int num_vars);

// Determinant by minor expansion with memoization on column subsets.
XYPolynomial xpoly_det(const std::vector<std::vector<XYPolynomial>>& m);

}  // namespace symf
