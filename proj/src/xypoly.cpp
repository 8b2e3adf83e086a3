#include "symf/xypoly.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace symf {

long long Monomial::weight() const {
    long long w = 0;
    for (size_t i = 0; i < ex.size(); ++i) w += static_cast<long long>(i + 1) * ex[i];
    for (size_t i = 0; i < ey.size(); ++i) w -= static_cast<long long>(i + 1) * ey[i];
    return w;
}

void Monomial::normalize() {
    while (!ex.empty() && ex.back() == 0) ex.pop_back();
    while (!ey.empty() && ey.back() == 0) ey.pop_back();
}

XYPolynomial XYPolynomial::constant(QtPoly c) {
    XYPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

XYPolynomial XYPolynomial::x_var(int n) {
    XYPolynomial p;
    Monomial m;
    m.ex.assign(static_cast<size_t>(n), 0);
    m.ex.back() = 1;
    p.terms_.emplace(std::move(m), QtPoly(Rational(1)));
    return p;
}

XYPolynomial XYPolynomial::y_var(int n) {
    XYPolynomial p;
    Monomial m;
    m.ey.assign(static_cast<size_t>(n), 0);
    m.ey.back() = 1;
    p.terms_.emplace(std::move(m), QtPoly(Rational(1)));
    return p;
}

void XYPolynomial::add_term(const Monomial& m, const QtPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XYPolynomial operator+(const XYPolynomial& a, const XYPolynomial& b) {
    XYPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

XYPolynomial operator-(const XYPolynomial& a, const XYPolynomial& b) {
    XYPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

XYPolynomial XYPolynomial::scaled(const QtPoly& c) const {
    XYPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

bool XYPolynomial::is_homogeneous(long long w) const {
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return false;
    return true;
}

XYPolynomial xpoly_mul(const XYPolynomial& a, const XYPolynomial& b,
                       long long max_weight_magnitude) {
    XYPolynomial r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m;
            m.ex.assign(std::max(ma.ex.size(), mb.ex.size()), 0);
            m.ey.assign(std::max(ma.ey.size(), mb.ey.size()), 0);
            for (size_t i = 0; i < ma.ex.size(); ++i) m.ex[i] += ma.ex[i];
            for (size_t i = 0; i < mb.ex.size(); ++i) m.ex[i] += mb.ex[i];
            for (size_t i = 0; i < ma.ey.size(); ++i) m.ey[i] += ma.ey[i];
            for (size_t i = 0; i < mb.ey.size(); ++i) m.ey[i] += mb.ey[i];
            m.normalize();
            if (max_weight_magnitude != kNoWeightLimit &&
                std::llabs(m.weight()) > max_weight_magnitude)
                continue;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

namespace {

// multiplicity vectors k_1..k_max with sum m*k_m = n
void enumerate_multiplicities(int n, int max_part, std::vector<int>& mult,
                              const std::function<void(const std::vector<int>&)>& emit) {
    if (n == 0) {
        emit(mult);
        return;
    }
    if (max_part == 0) return;
    for (int k = 0; k * max_part <= n; ++k) {
        mult[static_cast<size_t>(max_part) - 1] = k;
        enumerate_multiplicities(n - k * max_part, max_part - 1, mult, emit);
    }
    mult[static_cast<size_t>(max_part) - 1] = 0;
}

XYPolynomial h_poly_impl(int n, int num_vars, bool in_y) {
    if (n < 0) return XYPolynomial();
    if (n == 0) return XYPolynomial::one();
    XYPolynomial r;
    std::vector<int> mult(static_cast<size_t>(std::min(n, num_vars)), 0);
    enumerate_multiplicities(n, std::min(n, num_vars), mult, [&](const std::vector<int>& k) {
        Monomial m;
        if (in_y)
            m.ey = k;
        else
            m.ex = k;
        m.normalize();
        Int den = 1;
        for (int km : k)
            for (int j = 2; j <= km; ++j) den *= j;
        r.add_term(m, QtPoly(Rational(Int(1), den)));
    });
    return r;
}

}  // namespace

XYPolynomial h_poly(int n, int num_vars) { return h_poly_impl(n, num_vars, false); }

XYPolynomial h_poly_y(int n, int num_vars) { return h_poly_impl(n, num_vars, true); }

namespace {

XYPolynomial det_minor(const std::vector<std::vector<XYPolynomial>>& m, size_t row,
                       unsigned cols_used, std::unordered_map<unsigned, XYPolynomial>& memo) {
    const size_t n = m.size();
    if (row == n) return XYPolynomial::one();
    auto it = memo.find(cols_used);
    if (it != memo.end()) return it->second;
    XYPolynomial acc;
    int parity = 0;
    for (size_t c = 0; c < n; ++c) {
        if (cols_used & (1u << c)) continue;
        if (!m[row][c].is_zero()) {
            XYPolynomial sub = det_minor(m, row + 1, cols_used | (1u << c), memo);
            XYPolynomial prod = xpoly_mul(m[row][c], sub, kNoWeightLimit);
            acc = (parity % 2 == 0) ? acc + prod : acc - prod;
        }
        ++parity;
    }
    memo.emplace(cols_used, acc);
    return acc;
}

}  // namespace

XYPolynomial xpoly_det(const std::vector<std::vector<XYPolynomial>>& m) {
    if (m.empty()) return XYPolynomial::one();
    if (m.size() >= 32) throw std::invalid_argument("xpoly_det: matrix too large");
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("xpoly_det: matrix not square");
    std::unordered_map<unsigned, XYPolynomial> memo;
    return det_minor(m, 0, 0, memo);
}

}  // namespace symf
