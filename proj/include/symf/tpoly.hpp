#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "symf/errors.hpp"

namespace symf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Univariate polynomial in t over an exact coefficient ring.
// Canonical form: no trailing zero coefficients; zero is the empty vector.
template <class Coeff>
class Poly {
  public:
    Poly() = default;
    explicit Poly(Coeff constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<Coeff> ascending) : coeffs_(std::move(ascending)) { normalize(); }

    static Poly t() { return Poly(std::vector<Coeff>{Coeff(0), Coeff(1)}); }
    static Poly t_power(int k) {
        std::vector<Coeff> c(static_cast<size_t>(k) + 1, Coeff(0));
        c.back() = Coeff(1);
        return Poly(std::move(c));
    }
    // 1 - t^k
    static Poly one_minus_t_power(int k) {
        std::vector<Coeff> c(static_cast<size_t>(k) + 1, Coeff(0));
        c.front() = Coeff(1);
        c.back() -= Coeff(1);
        return Poly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    Coeff coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
    Coeff constant_term() const { return coeff(0); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Coeff> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Coeff> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return Poly(std::move(c));
    }
    Poly operator-() const {
        std::vector<Coeff> c(coeffs_);
        for (auto& x : c) x = -x;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Coeff> c(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(c));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) { return a.coeffs_ < b.coeffs_; }

    Coeff eval(const Coeff& x) const {
        Coeff acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Coeff> coeffs_;
};

using TPoly = Poly<Int>;
// Q[t]; enters only through the factorial denominators of the x-expansions.
using QtPoly = Poly<Rational>;

// Exact division; throws NonzeroRemainder if b does not divide a.
template <class Coeff>
Poly<Coeff> divexact(const Poly<Coeff>& a, const Poly<Coeff>& b) {
    if (b.is_zero()) throw NonzeroRemainder("divexact: division by zero polynomial");
    if (a.is_zero()) return Poly<Coeff>();
    std::vector<Coeff> rem(a.coeffs());
    const auto& d = b.coeffs();
    int qdeg = a.degree() - b.degree();
    if (qdeg < 0) throw NonzeroRemainder("divexact: remainder is nonzero");
    std::vector<Coeff> q(static_cast<size_t>(qdeg) + 1, Coeff(0));
    for (int k = qdeg; k >= 0; --k) {
        Coeff lead = rem[static_cast<size_t>(k) + d.size() - 1];
        if (lead == 0) continue;
        Coeff step;
        if constexpr (std::is_same_v<Coeff, Int>) {
            Coeff r = lead % d.back();
            if (r != 0) throw NonzeroRemainder("divexact: remainder is nonzero");
            step = lead / d.back();
        } else {
            step = lead / d.back();
        }
        q[static_cast<size_t>(k)] = step;
        for (size_t j = 0; j < d.size(); ++j) rem[static_cast<size_t>(k) + j] -= step * d[j];
    }
    for (const Coeff& c : rem)
        if (c != 0) throw NonzeroRemainder("divexact: remainder is nonzero");
    return Poly<Coeff>(std::move(q));
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b);
TPoly tpoly_divexact(const TPoly& a, const TPoly& b);

// "1 - t^2" style rendering used by the CLI text output.
std::string to_string(const TPoly& p);

QtPoly to_qtpoly(const TPoly& p);
// Throws NotPolynomial unless every coefficient is an integer.
TPoly to_tpoly(const QtPoly& p);

}  // namespace symf
