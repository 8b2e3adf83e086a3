#pragma once

#include <map>
#include <optional>

#include "symf/engine.hpp"
#include "symf/partition.hpp"
#include "symf/xypoly.hpp"

namespace symf {

// Integer combination of Schur basis elements.
using SchurSum = std::map<Partition, Int, PartitionLexGreater>;

struct SignedPartition {
    int sign;  // +1 or -1
    Partition partition;
};

// Normalizes the basis symbol with index v into +-one partition symbol, or
// nothing when it vanishes. Closed form: beta_p = v_p + (L-p) must be
// distinct and nonnegative; sorting beta descending gives the partition and
// the permutation sign.
std::optional<SignedPartition> straighten_schur(const IndexVector& v);

// Same result via iterated adjacent exchanges (v_i, v_{i+1}) ->
// -(v_{i+1}-1, v_i+1); kept as a redundant checker for the closed form.
std::optional<SignedPartition> straighten_schur_by_swaps(const IndexVector& v);

// mu * h_r as a sum of Schur elements (horizontal r-strips, coefficient 1).
SchurSum pieri_schur(const Partition& mu, int r);

// mu * nu expanded in the Schur basis; coefficients are the LR multiplicities.
SchurSum mul_schur(const Partition& mu, const Partition& nu);

// Counts semistandard skew tableaux of shape la/mu and content nu whose
// reverse reading word is a lattice word. Direct enumeration; this is the
// independent oracle for mul_schur.
Int lr_tableaux_oracle(const Partition& mu, const Partition& nu, const Partition& la);

// Jacobi-Trudi determinant det(h_{la_i - i + j}) in x_1..x_num_vars.
XYPolynomial schur_to_x(const Partition& la, int num_vars);

}  // namespace symf
