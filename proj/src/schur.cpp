#include "symf/schur.hpp"

#include <algorithm>
#include <numeric>

namespace symf {

std::optional<SignedPartition> straighten_schur(const IndexVector& v) {
    const int L = static_cast<int>(v.size());
    std::vector<int> beta(v.size());
    for (int p = 0; p < L; ++p) {
        beta[static_cast<size_t>(p)] = v[static_cast<size_t>(p)] + (L - 1 - p);
        if (beta[static_cast<size_t>(p)] < 0) return std::nullopt;
    }
    // sort beta descending, counting inversions for the permutation sign
    int sign = 1;
    for (size_t i = 1; i < beta.size(); ++i) {
        for (size_t j = i; j > 0 && beta[j] > beta[j - 1]; --j) {
            std::swap(beta[j], beta[j - 1]);
            sign = -sign;
        }
    }
    for (size_t i = 1; i < beta.size(); ++i)
        if (beta[i] == beta[i - 1]) return std::nullopt;
    std::vector<int> parts(v.size());
    for (int p = 0; p < L; ++p) parts[static_cast<size_t>(p)] = beta[static_cast<size_t>(p)] - (L - 1 - p);
    return SignedPartition{sign, Partition(std::move(parts))};
}

std::optional<SignedPartition> straighten_schur_by_swaps(const IndexVector& v) {
    IndexVector w = v;
    int sign = 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] >= w[i + 1]) continue;
            if (w[i + 1] == w[i] + 1) return std::nullopt;
            int a = w[i], b = w[i + 1];
            w[i] = b - 1;
            w[i + 1] = a + 1;
            sign = -sign;
            moved = true;
        }
    }
    if (!w.empty() && w.back() < 0) return std::nullopt;
    return SignedPartition{sign, Partition(std::move(w))};
}

namespace {

void accumulate_straightened(const FormalSum& sum, SchurSum& out) {
    for (const auto& [vec, coeff] : sum) {
        auto sp = straighten_schur(vec);
        if (!sp) continue;
        if (!coeff.is_constant())
            throw std::logic_error("schur pipeline produced a t-dependent coefficient");
        Int c = coeff.constant_term() * sp->sign;
        auto [it, inserted] = out.emplace(sp->partition, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
}

}  // namespace

SchurSum pieri_schur(const Partition& mu, int r) {
    OperatorPlan plan = make_pieri_plan(mu, r, SeriesKind::Plain);
    FormalSum base{{plan.base, TPoly(Int(1))}};
    SchurSum out;
    accumulate_straightened(evaluate_series_product(base, plan.series), out);
    return out;
}

SchurSum mul_schur(const Partition& mu, const Partition& nu) {
    OperatorPlan plan = make_product_plan(mu, nu, SeriesKind::Plain);
    FormalSum base{{plan.base, TPoly(Int(1))}};
    SchurSum out;
    accumulate_straightened(evaluate_series_product(base, plan.series), out);
    return out;
}

namespace {

// Fills the skew shape la/mu in reverse reading order (rows top to bottom,
// right to left within a row), maintaining semistandardness, the content
// bound, and the lattice-word prefix condition.
struct TableauCounter {
    const std::vector<int>& la;
    const std::vector<int>& mu;    // padded to la's length
    std::vector<std::vector<int>> cell;  // filled entries, 0 = empty
    std::vector<int> remaining;    // per value, how many we may still place
    std::vector<int> placed;       // per value, how many are placed so far
    Int count = 0;

    void fill(size_t row, int col) {
        if (row == la.size()) {
            ++count;
            return;
        }
        if (col < mu[row]) {
            fill(row + 1, row + 1 < la.size() ? la[row + 1] - 1 : 0);
            return;
        }
        const int above = row > 0 && col < la[row - 1] ? cell[row - 1][static_cast<size_t>(col)] : 0;
        const int right =
            col + 1 < la[row] ? cell[row][static_cast<size_t>(col) + 1] : 0;
        const int max_e = right == 0 ? static_cast<int>(remaining.size()) : right;
        for (int e = above + 1; e <= max_e; ++e) {
            if (remaining[static_cast<size_t>(e) - 1] == 0) continue;
            // lattice condition: after placement, #e must not exceed #(e-1)
            if (e > 1 && placed[static_cast<size_t>(e) - 1] + 1 > placed[static_cast<size_t>(e) - 2]) continue;
            cell[row][static_cast<size_t>(col)] = e;
            --remaining[static_cast<size_t>(e) - 1];
            ++placed[static_cast<size_t>(e) - 1];
            fill(col == mu[row] ? row + 1 : row,
                 col == mu[row] ? (row + 1 < la.size() ? la[row + 1] - 1 : 0) : col - 1);
            ++remaining[static_cast<size_t>(e) - 1];
            --placed[static_cast<size_t>(e) - 1];
            cell[row][static_cast<size_t>(col)] = 0;
        }
    }
};

}  // namespace

Int lr_tableaux_oracle(const Partition& mu, const Partition& nu, const Partition& la) {
    if (la.weight() != mu.weight() + nu.weight()) return 0;
    if (!la.contains(mu)) return 0;
    if (nu.empty()) return 1;  // unique empty filling of the empty shape

    std::vector<int> lap(la.parts());
    std::vector<int> mup(la.length(), 0);
    for (size_t i = 0; i < mu.length(); ++i) mup[i] = mu.parts()[i];

    TableauCounter tc{lap, mup, {}, {}, {}};
    tc.cell.resize(la.length());
    for (size_t r = 0; r < la.length(); ++r) tc.cell[r].assign(static_cast<size_t>(lap[r]), 0);
    tc.remaining = nu.parts();
    tc.placed.assign(nu.length(), 0);
    tc.fill(0, lap.empty() ? 0 : lap[0] - 1);
    return tc.count;
}

XYPolynomial schur_to_x(const Partition& la, int num_vars) {
    const size_t l = la.length();
    if (l == 0) return XYPolynomial::one();
    std::vector<std::vector<XYPolynomial>> m(l, std::vector<XYPolynomial>(l));
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j)
            m[i][j] = h_poly(la.parts()[i] - static_cast<int>(i) + static_cast<int>(j), num_vars);
    return xpoly_det(m);
}

}  // namespace symf
