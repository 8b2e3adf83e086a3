#include "symf/universal_characters.hpp"

#include <functional>
#include <numeric>

namespace symf {

long long uc_degree(const UCIndex& a) { return a.la.weight() - a.mu.weight(); }

XYPolynomial uc_to_xy(const UCIndex& a, int num_vars) {
    const int l = static_cast<int>(a.la.length());
    const int lp = static_cast<int>(a.mu.length());
    const int n = l + lp;
    if (n == 0) return XYPolynomial::one();
    std::vector<std::vector<XYPolynomial>> m(static_cast<size_t>(n),
                                             std::vector<XYPolynomial>(static_cast<size_t>(n)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            XYPolynomial e;
            if (i <= lp)
                e = h_poly_y(a.mu.part(static_cast<size_t>(lp - i + 1)) + i - j, num_vars);
            else
                e = h_poly(a.la.part(static_cast<size_t>(i - lp)) - i + j, num_vars);
            m[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = std::move(e);
        }
    }
    return xpoly_det(m);
}

namespace {

struct SignedSidePair {
    int sign;
    Partition first;
    Partition second;
};

// All outcomes of the decrement series over the (left_i, right_j) pairs:
// each matrix of exponents lowers left_i by its row sum and right_j by its
// column sum, each matrix counting once. Branches whose straightening is
// forced to vanish are pruned: entry p (0-based) of a length-L vector is
// dead once it drops below -(L-1-p), and a side with negative total weight
// cannot straighten to a partition.
void enumerate_decrements(const Partition& left, const Partition& right, DecrementPolicy policy,
                          std::vector<SignedSidePair>& out) {
    IndexVector lv(left.parts()), rv(right.parts());
    const int nl = static_cast<int>(lv.size()), nr = static_cast<int>(rv.size());
    long long lsum = left.weight(), rsum = right.weight();

    std::function<void(int)> dfs = [&](int q) {
        if (q == nl * nr) {
            auto sl = straighten_schur(lv);
            if (!sl) return;
            auto sr = straighten_schur(rv);
            if (!sr) return;
            out.push_back({sl->sign * sr->sign, sl->partition, sr->partition});
            return;
        }
        const size_t i = static_cast<size_t>(q / nr), j = static_cast<size_t>(q % nr);
        const int lfloor = policy == DecrementPolicy::StrictVanish
                               ? 0
                               : -(nl - 1 - static_cast<int>(i));
        const int rfloor = policy == DecrementPolicy::StrictVanish
                               ? 0
                               : -(nr - 1 - static_cast<int>(j));
        int k = 0;
        dfs(q + 1);
        while (lv[i] - 1 >= lfloor && rv[j] - 1 >= rfloor && lsum - 1 >= 0 && rsum - 1 >= 0) {
            --lv[i];
            --rv[j];
            --lsum;
            --rsum;
            ++k;
            dfs(q + 1);
        }
        lv[i] += k;
        rv[j] += k;
        lsum += k;
        rsum += k;
    };
    if (nl == 0 || nr == 0) {
        out.push_back({1, left, right});
        return;
    }
    dfs(0);
}

void add_uc(UCSum& out, const UCIndex& key, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = out.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

}  // namespace

UCSum mul_uc(const UCIndex& a, const UCIndex& b, DecrementPolicy policy) {
    std::vector<SignedSidePair> xi_nu, tau_eta;
    enumerate_decrements(a.la, b.mu, policy, xi_nu);   // pairs (xi_i, nu_j)
    enumerate_decrements(b.la, a.mu, policy, tau_eta); // pairs (tau_m, eta_n)

    // LR products are shared across matrix outcomes
    std::map<std::pair<Partition, Partition>, SchurSum> lr_cache;
    auto lr = [&](const Partition& p, const Partition& q) -> const SchurSum& {
        auto key = q.parts() < p.parts() ? std::make_pair(q, p) : std::make_pair(p, q);
        auto it = lr_cache.find(key);
        if (it == lr_cache.end()) it = lr_cache.emplace(key, mul_schur(key.first, key.second)).first;
        return it->second;
    };

    UCSum out;
    for (const auto& xn : xi_nu) {
        for (const auto& te : tau_eta) {
            const int sign = xn.sign * te.sign;
            const SchurSum& la_side = lr(xn.first, te.first);   // xi'' . tau''
            const SchurSum& mu_side = lr(te.second, xn.second); // eta'' . nu''
            for (const auto& [la, c1] : la_side)
                for (const auto& [mu, c2] : mu_side) add_uc(out, {la, mu}, sign * c1 * c2);
        }
    }
    return out;
}

namespace {

using PartitionPair = std::pair<Partition, Partition>;

struct LrOracleCache {
    std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, Int> memo;
    Int get(const Partition& mu, const Partition& nu, const Partition& la) {
        auto key = std::make_tuple(mu.parts(), nu.parts(), la.parts());
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(std::move(key), lr_tableaux_oracle(mu, nu, la)).first;
        return it->second;
    }
};

// sum over kappa of C^{outer1}_{kappa,alpha} C^{outer2}_{kappa,beta},
// keyed by (alpha, beta)
std::map<PartitionPair, Int> paired_peel(const Partition& outer1, const Partition& outer2,
                                         LrOracleCache& lr) {
    std::map<PartitionPair, Int> acc;
    const int kmax = static_cast<int>(std::min(outer1.weight(), outer2.weight()));
    for (int k = 0; k <= kmax; ++k) {
        for (const Partition& kappa : partitions_of(k)) {
            for (const Partition& alpha : partitions_of(static_cast<int>(outer1.weight()) - k)) {
                Int c1 = lr.get(kappa, alpha, outer1);
                if (c1 == 0) continue;
                for (const Partition& beta : partitions_of(static_cast<int>(outer2.weight()) - k)) {
                    Int c2 = lr.get(kappa, beta, outer2);
                    if (c2 == 0) continue;
                    acc[{alpha, beta}] += c1 * c2;
                }
            }
        }
    }
    return acc;
}

}  // namespace

UCSum koike_expand(const Partition& xi, const Partition& eta, const Partition& tau,
                   const Partition& nu) {
    LrOracleCache lr;
    auto ab = paired_peel(xi, nu, lr);   // (alpha, beta)
    auto td = paired_peel(eta, tau, lr); // (theta, delta)

    UCSum out;
    for (const auto& [albe, c_ab] : ab) {
        const auto& [alpha, beta] = albe;
        for (const auto& [thde, c_td] : td) {
            const auto& [theta, delta] = thde;
            const Int w = c_ab * c_td;
            for (const Partition& la :
                 partitions_of(static_cast<int>(alpha.weight() + delta.weight()))) {
                Int c1 = lr.get(alpha, delta, la);
                if (c1 == 0) continue;
                for (const Partition& mu :
                     partitions_of(static_cast<int>(beta.weight() + theta.weight()))) {
                    Int c2 = lr.get(beta, theta, mu);
                    if (c2 == 0) continue;
                    add_uc(out, {la, mu}, w * c1 * c2);
                }
            }
        }
    }
    return out;
}

Int koike_coefficient(const Partition& xi, const Partition& eta, const Partition& tau,
                      const Partition& nu, const Partition& la, const Partition& mu) {
    UCSum m = koike_expand(xi, eta, tau, nu);
    auto it = m.find({la, mu});
    return it == m.end() ? Int(0) : it->second;
}

}  // namespace symf
