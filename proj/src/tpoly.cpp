#include "symf/tpoly.hpp"

#include <sstream>

namespace symf {

TPoly tpoly_mul(const TPoly& a, const TPoly& b) { return a * b; }

TPoly tpoly_divexact(const TPoly& a, const TPoly& b) { return divexact(a, b); }

std::string to_string(const TPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.coeffs().size(); ++k) {
        const Int& c = p.coeffs()[k];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

QtPoly to_qtpoly(const TPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const Int& x : p.coeffs()) c.emplace_back(x);
    return QtPoly(std::move(c));
}

TPoly to_tpoly(const QtPoly& p) {
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (const Rational& x : p.coeffs()) {
        if (denominator(x) != 1)
            throw NotPolynomial("coefficient " + x.str() + " of t^" + std::to_string(c.size()) +
                                " is not an integer");
        c.push_back(numerator(x));
    }
    return TPoly(std::move(c));
}

}  // namespace symf
