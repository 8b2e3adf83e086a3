#pragma once

#include <map>
#include <vector>

#include "symf/partition.hpp"
#include "symf/tpoly.hpp"

namespace symf {

// Fixed-length integer vector indexing a not-yet-normalized basis symbol.
using IndexVector = std::vector<int>;

// Finite formal sum of index vectors with Z[t] coefficients. All keys of one
// sum share a length; zero coefficients are never stored.
using FormalSum = std::map<IndexVector, TPoly>;

// T_p = v_p + v_{p+1} + ... + v_L. Nonnegativity of every tail sum is the
// necessary condition for a straightened symbol to be nonzero, and is what
// the engine prunes on.
std::vector<long long> tail_sums(const IndexVector& v);

// +1 at position s, -1 at position d (1-based, s < d). Weight is preserved;
// the potential sum_p p*v_p drops by exactly d - s.
IndexVector apply_translation(const IndexVector& v, int s, int d);

enum class SeriesKind {
    Plain,      // 1/(1-R): every power has coefficient 1
    TDeformed,  // (1-tR)/(1-R): 1 + (1-t) R + (1-t) R^2 + ...
};

// One geometric series in the unit-transfer operator R_{s,d}.
struct TranslationSeries {
    int source;
    int target;
    SeriesKind kind;
};

// Expands prod_i series_i applied to base, keeping exactly the exponent
// tuples whose every intermediate vector has all tail sums >= 0. Since each
// application only lowers tail sums, that set equals the tuples whose final
// vector has nonnegative tail sums, so the result does not depend on the
// order of the series list. Like terms are merged; the sum is finite because
// the potential sum_p p*v_p decreases on every application and equals the
// (nonnegative) total of the tail sums.
//
// Throws BudgetExceeded if a branch ever spends more applications than the
// base potential allows; that would contradict the termination argument.
FormalSum evaluate_series_product(const FormalSum& base,
                                  const std::vector<TranslationSeries>& series);

// Base vector and series list realizing a product formula.
struct OperatorPlan {
    IndexVector base;
    std::vector<TranslationSeries> series;
};

// Plan for mu * h_r (Plain) or mu * q_r (TDeformed): r is inserted after the
// parts of mu that are >= r, and one series connects the insertion slot with
// every other position.
OperatorPlan make_pieri_plan(const Partition& mu, int r, SeriesKind kind);

// Plan for mu * nu: parts of nu are interleaved into mu at their descending-
// order slots I = {i_k + k}, and each nu slot gets one series against every
// position outside I.
OperatorPlan make_product_plan(const Partition& mu, const Partition& nu, SeriesKind kind);

}  // namespace symf
