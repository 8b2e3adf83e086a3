#include "symf/sweep.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>

#include "symf/hall_littlewood.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symf {

namespace {

// Runs body(i) for every case index, serially or under OpenMP, collecting
// nonempty messages in case order.
SweepReport run_cases(size_t n, bool parallel, const std::function<std::string(size_t)>& body) {
    SweepReport report;
    report.cases = n;
    std::vector<std::string> messages(n);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            messages[static_cast<size_t>(i)] = body(static_cast<size_t>(i));
    } else
#else
    (void)parallel;
#endif
    {
        for (size_t i = 0; i < n; ++i) messages[i] = body(i);
    }
    for (std::string& m : messages)
        if (!m.empty()) report.mismatches.push_back(std::move(m));
    return report;
}

std::string tpoly_brackets(const TPoly& p) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ",";
        os << p.coeffs()[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

std::vector<std::pair<Partition, Partition>> partition_pairs(int weight_bound, int max_len) {
    std::vector<std::pair<Partition, Partition>> pairs;
    for (int a = 0; a <= weight_bound; ++a)
        for (const Partition& mu : partitions_of(a, max_len))
            for (int b = 0; a + b <= weight_bound; ++b)
                for (const Partition& nu : partitions_of(b, max_len)) pairs.emplace_back(mu, nu);
    return pairs;
}

std::vector<std::array<Partition, 4>> partition_quadruples(int total_weight_bound) {
    std::vector<std::array<Partition, 4>> quads;
    for (int a = 0; a <= total_weight_bound; ++a)
        for (const Partition& xi : partitions_of(a))
            for (int b = 0; a + b <= total_weight_bound; ++b)
                for (const Partition& eta : partitions_of(b))
                    for (int c = 0; a + b + c <= total_weight_bound; ++c)
                        for (const Partition& tau : partitions_of(c))
                            for (int d = 0; a + b + c + d <= total_weight_bound; ++d)
                                for (const Partition& nu : partitions_of(d))
                                    quads.push_back({xi, eta, tau, nu});
    return quads;
}

SweepReport sweep_schur_vs_lr(int weight_bound, int max_len, bool parallel) {
    auto pairs = partition_pairs(weight_bound, max_len);
    return run_cases(pairs.size(), parallel, [&](size_t i) -> std::string {
        const auto& [mu, nu] = pairs[i];
        SchurSum prod = mul_schur(mu, nu);
        for (const Partition& la : partitions_of(static_cast<int>(mu.weight() + nu.weight()))) {
            auto it = prod.find(la);
            Int got = it == prod.end() ? Int(0) : it->second;
            Int want = lr_tableaux_oracle(mu, nu, la);
            if (got != want) {
                std::ostringstream os;
                os << "mul_schur" << mu.to_string() << "x" << nu.to_string() << " at "
                   << la.to_string() << ": got " << got << ", tableaux oracle " << want;
                return os.str();
            }
        }
        return {};
    });
}

SweepReport sweep_hl_vs_expansion(int weight_bound, bool parallel) {
    auto pairs = partition_pairs(weight_bound);
    // Basis expansions and eliminations are built once per weight up front;
    // afterwards the oracle is read-only and safe to share across threads.
    HlBasisOracle oracle;
    for (int w = 0; w <= weight_bound; ++w)
        for (const Partition& la : partitions_of(w)) (void)oracle.basis_element(la);
    std::vector<HLSum> expected(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& [mu, nu] = pairs[i];
        const int w = static_cast<int>(mu.weight() + nu.weight());
        XYPolynomial prod = xpoly_mul(oracle.basis_element(mu), oracle.basis_element(nu), w);
        expected[i] = oracle.expand(prod, w);
    }
    return run_cases(pairs.size(), parallel, [&](size_t i) -> std::string {
        const auto& [mu, nu] = pairs[i];
        HLSum got = mul_hl(mu, nu);
        if (got == expected[i]) return {};
        std::ostringstream os;
        os << "mul_hl" << mu.to_string() << "x" << nu.to_string()
           << " disagrees with the x-expansion oracle";
        return os.str();
    });
}

SweepReport sweep_hl_pieri_vs_psi(int mu_weight_bound, int r_bound, bool parallel) {
    std::vector<std::pair<Partition, int>> cases;
    for (int a = 0; a <= mu_weight_bound; ++a)
        for (const Partition& mu : partitions_of(a))
            for (int r = 1; r <= r_bound; ++r) cases.emplace_back(mu, r);
    return run_cases(cases.size(), parallel, [&](size_t i) -> std::string {
        const auto& [mu, r] = cases[i];
        HLSum got = pieri_hl(mu, r);
        for (const Partition& la : partitions_of(static_cast<int>(mu.weight()) + r)) {
            TPoly want = psi_coefficient(la, mu);
            auto it = got.find(la);
            TPoly have = it == got.end() ? TPoly() : it->second;
            if (have != want) {
                std::ostringstream os;
                os << "pieri_hl(" << mu.to_string() << ", r=" << r << ") at " << la.to_string()
                   << ": got " << tpoly_brackets(have) << ", psi " << tpoly_brackets(want);
                return os.str();
            }
        }
        return {};
    });
}

SweepReport sweep_hl_t0_vs_schur(int weight_bound, bool parallel) {
    auto pairs = partition_pairs(weight_bound);
    return run_cases(pairs.size(), parallel, [&](size_t i) -> std::string {
        const auto& [mu, nu] = pairs[i];
        HLSum hl = mul_hl(mu, nu);
        SchurSum schur = mul_schur(mu, nu);
        SchurSum at0;
        for (const auto& [la, c] : hl) {
            Int v = c.eval(Int(0));
            if (v != 0) at0.emplace(la, v);
        }
        if (at0 == schur) return {};
        std::ostringstream os;
        os << "mul_hl" << mu.to_string() << "x" << nu.to_string() << " at t=0 != mul_schur";
        return os.str();
    });
}

SweepReport sweep_uc_vs_koike(int total_weight_bound, bool parallel, DecrementPolicy policy) {
    auto quads = partition_quadruples(total_weight_bound);
    return run_cases(quads.size(), parallel, [&](size_t i) -> std::string {
        const auto& [xi, eta, tau, nu] = quads[i];
        UCSum got = mul_uc({xi, eta}, {tau, nu}, policy);
        UCSum want = koike_expand(xi, eta, tau, nu);
        if (got == want) return {};
        std::ostringstream os;
        os << "mul_uc [" << xi.to_string() << "," << eta.to_string() << "]x[" << tau.to_string()
           << "," << nu.to_string() << "] disagrees with the Koike oracle";
        for (const auto& [key, c] : want) {
            auto it = got.find(key);
            Int have = it == got.end() ? Int(0) : it->second;
            if (have != c) {
                os << "; first diff at " << key.to_string() << ": got " << have << ", oracle "
                   << c;
                break;
            }
        }
        return os.str();
    });
}

SweepReport sweep_uc_vs_xy(int total_weight_bound, bool parallel) {
    auto quads = partition_quadruples(total_weight_bound);
    return run_cases(quads.size(), parallel, [&](size_t i) -> std::string {
        const auto& [xi, eta, tau, nu] = quads[i];
        const int n = static_cast<int>(xi.weight() + eta.weight() + tau.weight() + nu.weight());
        UCIndex a{xi, eta}, b{tau, nu};
        XYPolynomial lhs = xpoly_mul(uc_to_xy(a, n), uc_to_xy(b, n), kNoWeightLimit);
        XYPolynomial rhs;
        for (const auto& [key, c] : mul_uc(a, b))
            rhs = rhs + uc_to_xy(key, n).scaled(QtPoly(Rational(c)));
        if (lhs == rhs) return {};
        std::ostringstream os;
        os << "mul_uc [" << xi.to_string() << "," << eta.to_string() << "]x[" << tau.to_string()
           << "," << nu.to_string() << "] disagrees with the xy-polynomial oracle";
        return os.str();
    });
}

namespace {

// all vectors of length 1..max_len with entries in [lo, hi]
std::vector<IndexVector> small_vectors(int max_len, int lo, int hi) {
    std::vector<IndexVector> out;
    std::vector<IndexVector> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<IndexVector> next;
        for (const IndexVector& v : frontier) {
            for (int e = lo; e <= hi; ++e) {
                IndexVector w = v;
                w.push_back(e);
                next.push_back(std::move(w));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::string vec_str(const IndexVector& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

void add_signed(SchurSum& acc, const std::optional<SignedPartition>& sp, int extra_sign) {
    if (!sp) return;
    Int c = sp->sign * extra_sign;
    auto [it, inserted] = acc.emplace(sp->partition, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

void add_hl_scaled(HLSum& acc, const HLSum& s, const TPoly& c) {
    for (const auto& [key, v] : s) {
        auto [it, inserted] = acc.emplace(key, v * c);
        if (!inserted) {
            it->second += v * c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

}  // namespace

SweepReport check_schur_two_row(int lo, int hi) {
    SweepReport report;
    for (int i = lo; i <= hi; ++i) {
        for (int j = lo; j <= hi; ++j) {
            ++report.cases;
            SchurSum acc;
            add_signed(acc, straighten_schur({i, j}), 1);
            add_signed(acc, straighten_schur({j - 1, i + 1}), 1);
            if (!acc.empty())
                report.mismatches.push_back("two-row relation fails at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
        }
    }
    return report;
}

SweepReport check_deformed_fermionic(int lo, int hi) {
    SweepReport report;
    const TPoly t = TPoly::t();
    for (int n = lo; n <= hi; ++n) {
        for (int m = lo; m <= hi; ++m) {
            ++report.cases;
            StraighteningCache cache;
            HLSum acc;
            add_hl_scaled(acc, straighten_hl({n - 1, m}, cache), TPoly(Int(1)));
            add_hl_scaled(acc, straighten_hl({m - 1, n}, cache), TPoly(Int(1)));
            add_hl_scaled(acc, straighten_hl({n, m - 1}, cache), -t);
            add_hl_scaled(acc, straighten_hl({m, n - 1}, cache), -t);
            if (!acc.empty())
                report.mismatches.push_back("deformed fermionic relation fails at (" +
                                            std::to_string(n) + "," + std::to_string(m) + ")");
        }
    }
    return report;
}

SweepReport check_ordering_independence(size_t instances, unsigned seed, bool parallel) {
    struct Instance {
        FormalSum base;
        std::vector<TranslationSeries> series;
        std::vector<TranslationSeries> shuffled;
    };
    std::mt19937 rng(seed);
    std::vector<Instance> cases(instances);
    for (Instance& inst : cases) {
        const int len = std::uniform_int_distribution<int>(2, 5)(rng);
        IndexVector v(static_cast<size_t>(len));
        for (int& e : v) e = std::uniform_int_distribution<int>(0, 5)(rng);
        inst.base.emplace(std::move(v), TPoly(Int(1)));
        const int m = std::uniform_int_distribution<int>(1, 6)(rng);
        for (int k = 0; k < m; ++k) {
            int s = std::uniform_int_distribution<int>(1, len - 1)(rng);
            int d = std::uniform_int_distribution<int>(s + 1, len)(rng);
            SeriesKind kind = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                                  ? SeriesKind::Plain
                                  : SeriesKind::TDeformed;
            inst.series.push_back({s, d, kind});
        }
        inst.shuffled = inst.series;
        std::shuffle(inst.shuffled.begin(), inst.shuffled.end(), rng);
    }
    return run_cases(cases.size(), parallel, [&](size_t i) -> std::string {
        const Instance& inst = cases[i];
        try {
            FormalSum a = evaluate_series_product(inst.base, inst.series);
            FormalSum b = evaluate_series_product(inst.base, inst.shuffled);
            if (a != b)
                return "ordering dependence on base " + vec_str(inst.base.begin()->first) +
                       " with " + std::to_string(inst.series.size()) + " series";
        } catch (const BudgetExceeded& e) {
            return std::string("termination budget fired: ") + e.what();
        }
        return {};
    });
}

SweepReport check_pruning_soundness(int max_len, int lo, int hi, bool parallel) {
    auto vecs = small_vectors(max_len, lo, hi);
    std::vector<IndexVector> negative;
    for (IndexVector& v : vecs) {
        auto t = tail_sums(v);
        if (std::any_of(t.begin(), t.end(), [](long long x) { return x < 0; }))
            negative.push_back(std::move(v));
    }
    return run_cases(negative.size(), parallel, [&](size_t i) -> std::string {
        const IndexVector& v = negative[i];
        if (straighten_schur(v))
            return "negative tail sum but nonzero Schur straightening at " + vec_str(v);
        if (!straighten_hl(v).empty())
            return "negative tail sum but nonzero Q straightening at " + vec_str(v);
        return {};
    });
}

SweepReport check_hl_confluence(int max_len, int lo, int hi, bool parallel) {
    auto vecs = small_vectors(max_len, lo, hi);
    return run_cases(vecs.size(), parallel, [&](size_t i) -> std::string {
        StraighteningCache left, right;
        if (straighten_hl(vecs[i], left, RewriteStrategy::LeftmostAscent) !=
            straighten_hl(vecs[i], right, RewriteStrategy::RightmostAscent))
            return "leftmost/rightmost rewriting disagree at " + vec_str(vecs[i]);
        return {};
    });
}

SweepReport check_hl_t0_matches_schur(int max_len, int lo, int hi, bool parallel) {
    auto vecs = small_vectors(max_len, lo, hi);
    return run_cases(vecs.size(), parallel, [&](size_t i) -> std::string {
        const IndexVector& v = vecs[i];
        SchurSum at0;
        for (const auto& [key, c] : straighten_hl(v)) {
            Int x = c.eval(Int(0));
            if (x != 0) at0.emplace(key, x);
        }
        SchurSum expected;
        add_signed(expected, straighten_schur(v), 1);
        if (at0 != expected) return "t=0 straightening mismatch at " + vec_str(v);
        return {};
    });
}

SweepReport sweep_p_constants(int weight_bound, bool parallel) {
    auto pairs = partition_pairs(weight_bound);
    return run_cases(pairs.size(), parallel, [&](size_t i) -> std::string {
        const auto& [mu, nu] = pairs[i];
        try {
            for (const auto& [la, c] : mul_hl(mu, nu)) (void)p_structure_constant(mu, nu, la);
        } catch (const NonzeroRemainder& e) {
            std::ostringstream os;
            os << "p_structure_constant failed for " << mu.to_string() << "x" << nu.to_string()
               << ": " << e.what();
            return os.str();
        }
        return {};
    });
}

}  // namespace symf
