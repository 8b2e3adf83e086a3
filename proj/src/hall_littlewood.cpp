#include "symf/hall_littlewood.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symf {

namespace {

const TPoly kOne(Int(1));
const TPoly kT = TPoly::t();
const TPoly kTSqMinus1(std::vector<Int>{-1, 0, 1});
const TPoly kTMinus1(std::vector<Int>{-1, 1});

void add_scaled(HLSum& out, const HLSum& s, const TPoly& c) {
    if (c.is_zero()) return;
    for (const auto& [key, v] : s) {
        auto [it, inserted] = out.emplace(key, v * c);
        if (!inserted) {
            it->second += v * c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
}

struct Straightener {
    StraighteningCache& cache;
    RewriteStrategy strategy;
    long long fuel;

    HLSum run(const IndexVector& v) {
        if (const HLSum* hit = cache.find(v)) return *hit;

        int ascent = -1;
        if (strategy == RewriteStrategy::LeftmostAscent) {
            for (size_t i = 0; i + 1 < v.size(); ++i)
                if (v[i] < v[i + 1]) {
                    ascent = static_cast<int>(i);
                    break;
                }
        } else {
            for (size_t i = v.size(); i-- > 1;)
                if (v[i - 1] < v[i]) {
                    ascent = static_cast<int>(i) - 1;
                    break;
                }
        }

        HLSum result;
        if (ascent < 0) {
            // weakly decreasing: vanishes when the last entry is negative
            if (v.empty() || v.back() >= 0) {
                std::vector<int> parts(v);
                result.emplace(Partition(std::move(parts)), kOne);
            }
        } else {
            if (--fuel < 0) throw FuelExhausted("straighten_hl: rewrite budget exhausted");
            const size_t i = static_cast<size_t>(ascent);
            const int a = v[i], b = v[i + 1];
            IndexVector w = v;
            auto recurse = [&](int p, int q, const TPoly& c) {
                w[i] = p;
                w[i + 1] = q;
                add_scaled(result, run(w), c);
            };
            recurse(b, a, kT);
            if ((b - a) % 2 != 0) {  // odd gap: b - a = 2m+1
                const int m = (b - a - 1) / 2;
                for (int p = 1; p <= m; ++p)
                    recurse(b - p, a + p, TPoly::t_power(p - 1) * kTSqMinus1);
            } else {  // even gap: b - a = 2m+2, with the equal middle pair
                const int m = (b - a - 2) / 2;
                for (int p = 1; p <= m; ++p)
                    recurse(b - p, a + p, TPoly::t_power(p - 1) * kTSqMinus1);
                recurse((a + b) / 2, (a + b) / 2, TPoly::t_power(m) * kTMinus1);
            }
        }
        cache.insert(v, result);
        return result;
    }
};

}  // namespace

HLSum straighten_hl(const IndexVector& v, StraighteningCache& cache, RewriteStrategy strategy,
                    long long fuel) {
    Straightener s{cache, strategy, fuel};
    return s.run(v);
}

HLSum straighten_hl(const IndexVector& v) {
    StraighteningCache cache;
    return straighten_hl(v, cache);
}

XYPolynomial q_poly(int n, int num_vars) {
    if (n < 0) return XYPolynomial();
    if (n == 0) return XYPolynomial::one();
    // reuse h_poly's monomial enumeration: each monomial prod x_m^{k_m}/k_m!
    // picks up the extra factor prod (1-t^m)^{k_m}
    XYPolynomial h = h_poly(n, num_vars);
    XYPolynomial r;
    for (const auto& [m, c] : h.terms()) {
        QtPoly factor = c;
        for (size_t i = 0; i < m.ex.size(); ++i)
            for (int rep = 0; rep < m.ex[i]; ++rep)
                factor *= to_qtpoly(TPoly::one_minus_t_power(static_cast<int>(i) + 1));
        r.add_term(m, factor);
    }
    return r;
}

namespace {

HLSum straighten_formal_sum(const FormalSum& sum) {
    StraighteningCache cache;
    HLSum out;
    for (const auto& [vec, coeff] : sum) add_scaled(out, straighten_hl(vec, cache), coeff);
    return out;
}

}  // namespace

HLSum pieri_hl(const Partition& mu, int r) {
    OperatorPlan plan = make_pieri_plan(mu, r, SeriesKind::TDeformed);
    FormalSum base{{plan.base, kOne}};
    return straighten_formal_sum(evaluate_series_product(base, plan.series));
}

HLSum mul_hl(const Partition& mu, const Partition& nu) {
    OperatorPlan plan = make_product_plan(mu, nu, SeriesKind::TDeformed);
    FormalSum base{{plan.base, kOne}};
    return straighten_formal_sum(evaluate_series_product(base, plan.series));
}

TPoly psi_coefficient(const Partition& la, const Partition& mu) {
    if (!la.contains(mu)) return TPoly();
    // horizontal strip: at most one cell per column, i.e. la_{i+1} <= mu_i
    for (size_t i = 1; i < la.length(); ++i)
        if (la.parts()[i] > mu.part(i)) return TPoly();

    const int la1 = la.empty() ? 0 : la.parts()[0];
    auto column_cells = [&](int j) {  // theta'_j
        int n = 0;
        for (size_t i = 0; i < la.length(); ++i)
            n += (mu.part(i + 1) < j && j <= la.parts()[i]);
        return n;
    };
    TPoly psi = kOne;
    int prev = column_cells(1);
    for (int j = 1; j <= la1; ++j) {
        int next = j < la1 ? column_cells(j + 1) : 0;
        if (prev < next) psi *= TPoly::one_minus_t_power(mu.multiplicity(j));
        prev = next;
    }
    return psi;
}

XYPolynomial hl_to_x(const Partition& la, int num_vars) {
    const int l = static_cast<int>(la.length());
    if (l == 0) return XYPolynomial::one();

    // Pairs ordered by descending source so that once a series has lowered
    // its target below zero, no later series can raise that slot again and
    // the branch is identically zero (q of a negative index vanishes).
    std::vector<std::pair<int, int>> pairs;
    for (int i = l - 1; i >= 1; --i)
        for (int j = i + 1; j <= l; ++j) pairs.emplace_back(i, j);

    std::map<IndexVector, QtPoly> exponents;  // final q-index vector -> coefficient
    IndexVector alpha(la.parts());
    std::function<void(size_t, const QtPoly&)> dfs = [&](size_t pi, const QtPoly& coeff) {
        if (pi == pairs.size()) {
            auto [it, inserted] = exponents.emplace(alpha, coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second.is_zero()) exponents.erase(it);
            }
            return;
        }
        dfs(pi + 1, coeff);
        const auto [i, j] = pairs[pi];
        const QtPoly tm1 = to_qtpoly(kTMinus1);
        const QtPoly t = to_qtpoly(kT);
        QtPoly c = coeff * tm1;  // (t-1) t^{k-1} at power k
        int k = 0;
        while (alpha[static_cast<size_t>(j) - 1] > 0) {
            ++alpha[static_cast<size_t>(i) - 1];
            --alpha[static_cast<size_t>(j) - 1];
            if (k > 0) c *= t;
            ++k;
            dfs(pi + 1, c);
        }
        alpha[static_cast<size_t>(i) - 1] -= k;
        alpha[static_cast<size_t>(j) - 1] += k;
    };
    dfs(0, QtPoly(Rational(1)));

    std::map<int, XYPolynomial> qcache;
    auto q_of = [&](int n) -> const XYPolynomial& {
        auto it = qcache.find(n);
        if (it == qcache.end()) it = qcache.emplace(n, q_poly(n, num_vars)).first;
        return it->second;
    };
    XYPolynomial result;
    for (const auto& [vec, coeff] : exponents) {
        XYPolynomial prod = XYPolynomial::one();
        for (int n : vec) prod = xpoly_mul(prod, q_of(n), kNoWeightLimit);
        result = result + prod.scaled(coeff);
    }
    return result;
}

TPoly b_lambda(const Partition& la) {
    TPoly b = kOne;
    int prev = 0;
    for (size_t i = 0; i < la.length(); ++i) {
        int v = la.parts()[i];
        if (v == prev) continue;
        prev = v;
        for (int j = 1; j <= la.multiplicity(v); ++j) b *= TPoly::one_minus_t_power(j);
    }
    return b;
}

TPoly p_structure_constant(const Partition& mu, const Partition& nu, const Partition& la) {
    HLSum prod = mul_hl(mu, nu);
    auto it = prod.find(la);
    if (it == prod.end()) return TPoly();
    return tpoly_divexact(it->second * b_lambda(la), b_lambda(mu) * b_lambda(nu));
}

const XYPolynomial& HlBasisOracle::basis_element(const Partition& la) {
    auto it = elements_.find(la);
    if (it == elements_.end())
        it = elements_.emplace(la, hl_to_x(la, static_cast<int>(la.weight()))).first;
    return it->second;
}

HlBasisOracle::WeightData& HlBasisOracle::weight_data(int weight) {
    auto it = by_weight_.find(weight);
    if (it != by_weight_.end()) return it->second;

    WeightData wd;
    wd.basis = partitions_of(weight);
    // rows: all monomials of weight `weight` in x_1..x_weight, i.e. the
    // multiplicity vectors of partitions of `weight`
    for (const Partition& p : wd.basis) {
        Monomial m;
        m.ex.assign(static_cast<size_t>(weight == 0 ? 0 : p.parts()[0]), 0);
        for (int part : p.parts()) ++m.ex[static_cast<size_t>(part) - 1];
        m.normalize();
        size_t next = wd.row_of.size();
        wd.row_of.emplace(m, next);
    }
    std::vector<std::vector<QtPoly>> columns;
    columns.reserve(wd.basis.size());
    for (const Partition& la : wd.basis) {
        const XYPolynomial& q = basis_element(la);
        std::vector<QtPoly> col(wd.row_of.size());
        for (const auto& [m, c] : q.terms()) {
            auto rit = wd.row_of.find(m);
            if (rit == wd.row_of.end())
                throw Inconsistent("basis expansion contains an unexpected monomial");
            col[rit->second] = c;
        }
        columns.push_back(std::move(col));
    }
    wd.solver = std::make_unique<ExactSolver>(columns);
    return by_weight_.emplace(weight, std::move(wd)).first->second;
}

HLSum HlBasisOracle::expand(const XYPolynomial& p, int weight) {
    if (!p.is_homogeneous(weight))
        throw Inconsistent("expand_in_hl_basis: polynomial is not homogeneous of weight " +
                           std::to_string(weight));
    WeightData& wd = weight_data(weight);
    std::vector<QtPoly> target(wd.row_of.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = wd.row_of.find(m);
        if (it == wd.row_of.end()) throw Inconsistent("target monomial outside the basis span");
        target[it->second] = c;
    }
    std::vector<TPoly> sol = wd.solver->solve(target);
    HLSum out;
    for (size_t k = 0; k < sol.size(); ++k)
        if (!sol[k].is_zero()) out.emplace(wd.basis[k], sol[k]);
    return out;
}

HLSum expand_in_hl_basis(const XYPolynomial& p, int weight) {
    HlBasisOracle oracle;
    return oracle.expand(p, weight);
}

}  // namespace symf
