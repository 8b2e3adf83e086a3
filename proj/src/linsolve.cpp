#include "symf/linsolve.hpp"

#include <stdexcept>

namespace symf {

namespace {

// remainder of a / b over the field Q
QtPoly poly_mod(QtPoly a, const QtPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational f = a.coeffs().back() / b.coeffs().back();
        int shift = a.degree() - b.degree();
        std::vector<Rational> sub(static_cast<size_t>(a.degree()) + 1, Rational(0));
        for (int j = 0; j <= b.degree(); ++j)
            sub[static_cast<size_t>(j + shift)] = f * b.coeffs()[static_cast<size_t>(j)];
        a = a - QtPoly(std::move(sub));
    }
    return a;
}

QtPoly make_monic(const QtPoly& p) {
    if (p.is_zero()) return p;
    Rational inv = Rational(1) / p.coeffs().back();
    std::vector<Rational> c = p.coeffs();
    for (auto& x : c) x *= inv;
    return QtPoly(std::move(c));
}

QtPoly poly_gcd(QtPoly a, QtPoly b) {
    while (!b.is_zero()) {
        QtPoly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return QtPoly(Rational(1));
    return make_monic(a);
}

// element of Q(t), kept reduced with monic denominator
struct RatFunc {
    QtPoly num;
    QtPoly den{Rational(1)};

    static RatFunc from(const QtPoly& p) { return RatFunc{p, QtPoly(Rational(1))}; }

    void reduce() {
        if (num.is_zero()) {
            den = QtPoly(Rational(1));
            return;
        }
        QtPoly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = divexact(num, g);
            den = divexact(den, g);
        }
        Rational lead = den.coeffs().back();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            std::vector<Rational> nc = num.coeffs(), dc = den.coeffs();
            for (auto& x : nc) x *= inv;
            for (auto& x : dc) x *= inv;
            num = QtPoly(std::move(nc));
            den = QtPoly(std::move(dc));
        }
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        RatFunc r{a.num * b.den + b.num * a.den, a.den * b.den};
        r.reduce();
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        RatFunc r{a.num * b.den - b.num * a.den, a.den * b.den};
        r.reduce();
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        RatFunc r{a.num * b.num, a.den * b.den};
        r.reduce();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.num.is_zero()) throw Inconsistent("division by zero pivot");
        RatFunc r{a.num * b.den, a.den * b.num};
        r.reduce();
        return r;
    }
};

}  // namespace

ExactSolver::ExactSolver(const std::vector<std::vector<QtPoly>>& columns) {
    cols_ = columns.size();
    rows_ = cols_ == 0 ? 0 : columns[0].size();
    for (const auto& c : columns)
        if (c.size() != rows_) throw Inconsistent("columns of unequal length");
    if (rows_ < cols_) throw Inconsistent("fewer rows than columns: dimensions mismatch");

    reduced_.assign(rows_, std::vector<QtPoly>(cols_));
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) reduced_[r][c] = columns[c][r];
    row_order_.resize(rows_);
    for (size_t r = 0; r < rows_; ++r) row_order_[r] = r;

    multipliers_.assign(cols_, {});
    pivots_.assign(cols_, QtPoly());
    QtPoly prev(Rational(1));
    for (size_t k = 0; k < cols_; ++k) {
        size_t pivot_row = k;
        while (pivot_row < rows_ && reduced_[pivot_row][k].is_zero()) ++pivot_row;
        if (pivot_row == rows_)
            throw Inconsistent("columns not linearly independent (rank deficiency at column " +
                               std::to_string(k) + ")");
        std::swap(reduced_[k], reduced_[pivot_row]);
        std::swap(row_order_[k], row_order_[pivot_row]);

        pivots_[k] = reduced_[k][k];
        multipliers_[k].assign(rows_, QtPoly());
        for (size_t i = k + 1; i < rows_; ++i) {
            multipliers_[k][i] = reduced_[i][k];
            // Bareiss step: exact division by the previous pivot
            for (size_t j = k + 1; j < cols_; ++j)
                reduced_[i][j] =
                    divexact(pivots_[k] * reduced_[i][j] - multipliers_[k][i] * reduced_[k][j],
                             prev);
            reduced_[i][k] = QtPoly();
        }
        prev = pivots_[k];
    }
}

std::vector<TPoly> ExactSolver::solve(const std::vector<QtPoly>& target) const {
    if (target.size() != rows_) throw Inconsistent("target length mismatch: dimensions mismatch");
    std::vector<QtPoly> b(rows_);
    for (size_t r = 0; r < rows_; ++r) b[r] = target[row_order_[r]];

    QtPoly prev(Rational(1));
    for (size_t k = 0; k < cols_; ++k) {
        for (size_t i = k + 1; i < rows_; ++i)
            b[i] = divexact(pivots_[k] * b[i] - multipliers_[k][i] * b[k], prev);
        prev = pivots_[k];
    }
    for (size_t i = cols_; i < rows_; ++i)
        if (!b[i].is_zero()) throw Inconsistent("target outside the column span");

    std::vector<RatFunc> x(cols_);
    for (size_t k = cols_; k-- > 0;) {
        RatFunc acc = RatFunc::from(b[k]);
        for (size_t j = k + 1; j < cols_; ++j)
            acc = acc - RatFunc::from(reduced_[k][j]) * x[j];
        x[k] = acc / RatFunc::from(pivots_[k]);
    }

    std::vector<TPoly> result(cols_);
    for (size_t k = 0; k < cols_; ++k) {
        if (x[k].den.degree() != 0)
            throw NotPolynomial("solution coordinate " + std::to_string(k) +
                                " is a nontrivial rational function of t");
        Rational d = x[k].den.constant_term();
        std::vector<Rational> c = x[k].num.coeffs();
        for (auto& v : c) v /= d;
        result[k] = to_tpoly(QtPoly(std::move(c)));
    }
    return result;
}

std::vector<TPoly> solve_exact_linear_system(const std::vector<std::vector<QtPoly>>& columns,
                                             const std::vector<QtPoly>& target) {
    return ExactSolver(columns).solve(target);
}

}  // namespace symf
