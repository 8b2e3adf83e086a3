#include "symf/engine.hpp"

#include <stdexcept>

namespace symf {

std::vector<long long> tail_sums(const IndexVector& v) {
    std::vector<long long> t(v.size());
    long long acc = 0;
    for (size_t p = v.size(); p-- > 0;) {
        acc += v[p];
        t[p] = acc;
    }
    return t;
}

IndexVector apply_translation(const IndexVector& v, int s, int d) {
    if (!(1 <= s && s < d && static_cast<size_t>(d) <= v.size()))
        throw std::invalid_argument("apply_translation: need 1 <= s < d <= length");
    IndexVector w = v;
    ++w[static_cast<size_t>(s) - 1];
    --w[static_cast<size_t>(d) - 1];
    return w;
}

namespace {

long long potential(const IndexVector& v) {
    long long phi = 0;
    for (size_t p = 0; p < v.size(); ++p) phi += static_cast<long long>(p + 1) * v[p];
    return phi;
}

bool any_tail_negative(const IndexVector& v) {
    long long acc = 0;
    for (size_t p = v.size(); p-- > 0;) {
        acc += v[p];
        if (acc < 0) return true;
    }
    return false;
}

struct Dfs {
    const std::vector<TranslationSeries>& series;
    const TPoly one_minus_t = TPoly(std::vector<Int>{1, -1});
    long long budget = 0;
    FormalSum* out = nullptr;

    void run(size_t si, IndexVector& v, const TPoly& coeff, long long apps) {
        if (si == series.size()) {
            auto [it, inserted] = out->emplace(v, coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second.is_zero()) out->erase(it);
            }
            return;
        }
        run(si + 1, v, coeff, apps);  // exponent 0
        const TranslationSeries& s = series[si];
        IndexVector w = v;
        TPoly stepped;  // coefficient once the series contributes at least one power
        switch (s.kind) {
            case SeriesKind::Plain: stepped = coeff; break;
            case SeriesKind::TDeformed: stepped = coeff * one_minus_t; break;
        }
        long long used = apps;
        while (true) {
            ++w[static_cast<size_t>(s.source) - 1];
            --w[static_cast<size_t>(s.target) - 1];
            if (any_tail_negative(w)) break;  // later powers only sink lower
            ++used;
            if (used > budget)
                throw BudgetExceeded("operator engine exceeded the potential bound " +
                                     std::to_string(budget));
            run(si + 1, w, stepped, used);
        }
    }
};

}  // namespace

FormalSum evaluate_series_product(const FormalSum& base,
                                  const std::vector<TranslationSeries>& series) {
    size_t len = base.empty() ? 0 : base.begin()->first.size();
    for (const auto& [v, c] : base)
        if (v.size() != len) throw std::invalid_argument("base keys of unequal length");
    for (const TranslationSeries& s : series)
        if (!(1 <= s.source && s.source < s.target && static_cast<size_t>(s.target) <= len))
            throw std::invalid_argument("series positions must satisfy 1 <= s < d <= length");

    FormalSum out;
    for (const auto& [v, c] : base) {
        Dfs dfs{series};
        dfs.budget = potential(v);
        dfs.out = &out;
        IndexVector work = v;
        dfs.run(0, work, c, 0);
    }
    return out;
}

namespace {

// number of parts of mu that are >= r; equivalently the i with
// mu_i >= r > mu_{i+1} (mu_0 = +inf, mu_{l+1} = 0)
int insertion_index(const Partition& mu, int r) {
    int i = 0;
    for (int p : mu.parts())
        if (p >= r) ++i;
    return i;
}

}  // namespace

OperatorPlan make_pieri_plan(const Partition& mu, int r, SeriesKind kind) {
    if (r < 1) throw std::invalid_argument("pieri: r must be >= 1");
    const int l = static_cast<int>(mu.length());
    const int i = insertion_index(mu, r);
    OperatorPlan plan;
    plan.base.reserve(static_cast<size_t>(l) + 1);
    for (int p = 1; p <= i; ++p) plan.base.push_back(mu.part(static_cast<size_t>(p)));
    plan.base.push_back(r);
    for (int p = i + 1; p <= l; ++p) plan.base.push_back(mu.part(static_cast<size_t>(p)));
    for (int j = 1; j <= i; ++j) plan.series.push_back({j, i + 1, kind});
    for (int k = i + 2; k <= l + 1; ++k) plan.series.push_back({i + 1, k, kind});
    return plan;
}

OperatorPlan make_product_plan(const Partition& mu, const Partition& nu, SeriesKind kind) {
    const int l = static_cast<int>(mu.length());
    const int lp = static_cast<int>(nu.length());
    std::vector<int> pos(static_cast<size_t>(lp));  // slot of nu_k, 1-based
    std::vector<bool> is_nu_slot(static_cast<size_t>(l + lp) + 1, false);
    for (int k = 1; k <= lp; ++k) {
        int ik = insertion_index(mu, nu.part(static_cast<size_t>(k)));
        pos[static_cast<size_t>(k) - 1] = ik + k;
        is_nu_slot[static_cast<size_t>(ik + k)] = true;
    }

    OperatorPlan plan;
    plan.base.assign(static_cast<size_t>(l + lp), 0);
    for (int k = 1; k <= lp; ++k)
        plan.base[static_cast<size_t>(pos[static_cast<size_t>(k) - 1]) - 1] =
            nu.part(static_cast<size_t>(k));
    {
        size_t mi = 1;
        for (int p = 1; p <= l + lp; ++p)
            if (!is_nu_slot[static_cast<size_t>(p)]) plan.base[static_cast<size_t>(p) - 1] = mu.part(mi++);
    }
    for (int k = 1; k <= lp; ++k) {
        const int c = pos[static_cast<size_t>(k) - 1];
        for (int j = 1; j < c; ++j)
            if (!is_nu_slot[static_cast<size_t>(j)]) plan.series.push_back({j, c, kind});
        for (int j = c + 1; j <= l + lp; ++j)
            if (!is_nu_slot[static_cast<size_t>(j)]) plan.series.push_back({c, j, kind});
    }
    return plan;
}

}  // namespace symf
