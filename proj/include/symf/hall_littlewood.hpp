#pragma once

#include <map>
#include <memory>

#include "symf/engine.hpp"
#include "symf/linsolve.hpp"
#include "symf/partition.hpp"
#include "symf/xypoly.hpp"

namespace symf {

// Z[t]-combination of Hall-Littlewood Q-basis elements.
using HLSum = std::map<Partition, TPoly, PartitionLexGreater>;

enum class RewriteStrategy {
    LeftmostAscent,  // default
    RightmostAscent, // used by the confluence checks
};

// Memo for straighten_hl. A cached value always equals a fresh recomputation,
// so a cache may be shared across the terms of one product evaluation; do not
// share one instance between threads.
class StraighteningCache {
  public:
    const HLSum* find(const IndexVector& v) const {
        auto it = memo_.find(v);
        return it == memo_.end() ? nullptr : &it->second;
    }
    void insert(const IndexVector& v, HLSum sum) { memo_.emplace(v, std::move(sum)); }
    size_t size() const { return memo_.size(); }

  private:
    std::map<IndexVector, HLSum> memo_;
};

inline constexpr long long kDefaultStraightenFuel = 1'000'000;

// Rewrites the symbol with index v into a Z[t]-combination of partition
// symbols using the odd/even exchange rules on the chosen ascent, with the
// two base cases: a weakly decreasing v is itself (coefficient 1) when its
// last entry is >= 0 and vanishes otherwise. Throws FuelExhausted if more
// than `fuel` rule applications are spent.
HLSum straighten_hl(const IndexVector& v, StraighteningCache& cache,
                    RewriteStrategy strategy = RewriteStrategy::LeftmostAscent,
                    long long fuel = kDefaultStraightenFuel);
HLSum straighten_hl(const IndexVector& v);

// Coefficient of z^n in exp(sum_m (1-t^m) x_m z^m), x_1..x_num_vars.
XYPolynomial q_poly(int n, int num_vars);

// mu * q_r in the Q basis: psi_{la/mu}(t) over horizontal r-strips.
HLSum pieri_hl(const Partition& mu, int r);

// The Pieri coefficient psi_{la/mu}(t): zero unless la/mu is a horizontal
// strip, otherwise prod over columns j with theta'_j < theta'_{j+1} of
// (1 - t^{m_j(mu)}).
TPoly psi_coefficient(const Partition& la, const Partition& mu);

// mu * nu in the Q basis.
HLSum mul_hl(const Partition& mu, const Partition& nu);

// Q_la as a polynomial in x_1..x_num_vars: the series prod_{i<j}
// (1-R_ij)/(1-tR_ij) applied to the exponent vector of q_la; each series is
// finite because q of a negative index vanishes identically.
XYPolynomial hl_to_x(const Partition& la, int num_vars);

// b_la(t) = prod over part values of (1-t)(1-t^2)...(1-t^{multiplicity}).
TPoly b_lambda(const Partition& la);

// Structure constant in the P basis: coeff_Q(la) * b_la / (b_mu b_nu).
// Throws NonzeroRemainder if the division is not exact.
TPoly p_structure_constant(const Partition& mu, const Partition& nu, const Partition& la);

// Expands a homogeneous polynomial of the given weight in the Q basis by
// exact linear algebra against {hl_to_x(la) : |la| = weight}.
HLSum expand_in_hl_basis(const XYPolynomial& p, int weight);

// Caches the per-weight basis expansions and solver factorizations so that
// many products of one weight are expanded against a single elimination.
class HlBasisOracle {
  public:
    // Expansion of Q_la in x_1..x_{|la|} variables, memoized.
    const XYPolynomial& basis_element(const Partition& la);
    HLSum expand(const XYPolynomial& p, int weight);

  private:
    struct WeightData {
        std::vector<Partition> basis;
        std::map<Monomial, size_t> row_of;
        std::unique_ptr<ExactSolver> solver;
    };
    WeightData& weight_data(int weight);
    std::map<int, WeightData> by_weight_;
    std::map<Partition, XYPolynomial, PartitionLexGreater> elements_;
};

}  // namespace symf
