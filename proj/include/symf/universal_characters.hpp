#pragma once

#include <map>

#include "symf/partition.hpp"
#include "symf/schur.hpp"
#include "symf/xypoly.hpp"

namespace symf {

// Index of a universal character: a pair of partitions, graded by
// |la| - |mu|.
struct UCIndex {
    Partition la;
    Partition mu;

    friend bool operator==(const UCIndex& a, const UCIndex& b) {
        return a.la == b.la && a.mu == b.mu;
    }
    std::string to_string() const { return "[" + la.to_string() + "," + mu.to_string() + "]"; }
};

struct UCIndexLexGreater {
    bool operator()(const UCIndex& a, const UCIndex& b) const {
        if (a.la != b.la) return b.la.parts() < a.la.parts();
        return b.mu.parts() < a.mu.parts();
    }
};

using UCSum = std::map<UCIndex, Int, UCIndexLexGreater>;

long long uc_degree(const UCIndex& a);

// Twisted Jacobi-Trudi determinant: an (l+l')x(l+l') determinant whose first
// l' rows hold h_{mu_{l'-i+1}+i-j}(y) and remaining rows h_{la_{i-l'}-i+j}(x).
// Homogeneous of degree |la| - |mu| under deg x_n = n, deg y_n = -n.
XYPolynomial uc_to_xy(const UCIndex& a, int num_vars);

// How a decrement that drives a side vector negative is treated.
enum class DecrementPolicy {
    Straighten,    // hand the vector to straighten_schur (default; matches the oracle)
    StrictVanish,  // diagnostic: discard once any entry goes negative
};

// Product of two universal characters: enumerate decrement matrices over the
// (xi_i, nu_j) and (tau_m, eta_n) pairs, straighten each side vector, and
// LR-multiply the surviving sides.
UCSum mul_uc(const UCIndex& a, const UCIndex& b,
             DecrementPolicy policy = DecrementPolicy::Straighten);

// The full product expansion computed from LR coefficients alone (tableaux
// enumeration); the independent oracle for mul_uc.
UCSum koike_expand(const Partition& xi, const Partition& eta, const Partition& tau,
                   const Partition& nu);

// Single coefficient M_{[xi,eta],[tau,nu]}^{[la,mu]} of the expansion above.
Int koike_coefficient(const Partition& xi, const Partition& eta, const Partition& tau,
                      const Partition& nu, const Partition& la, const Partition& mu);

}  // namespace symf
