#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "symf/universal_characters.hpp"

namespace symf {

// Outcome of one exhaustive comparison sweep. Mismatch messages are ordered
// by case index, so serial and parallel runs of the same sweep agree exactly.
struct SweepReport {
    size_t cases = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Every sweep exists in two forms selected by `parallel`: an OpenMP
// parallel-for over the case list, and the plain serial loop that serves as
// the reference implementation in tests and as the baseline in the
// benchmark. Cases are independent and pure, so the two must agree.

// mul_schur vs the LR tableaux oracle, all pairs |mu|+|nu| <= weight_bound
// with lengths <= max_len, checked against every candidate partition.
SweepReport sweep_schur_vs_lr(int weight_bound, int max_len, bool parallel);

// mul_hl vs expansion of hl_to_x(mu)*hl_to_x(nu) in the Q basis,
// all pairs |mu|+|nu| <= weight_bound.
SweepReport sweep_hl_vs_expansion(int weight_bound, bool parallel);

// pieri_hl vs psi_coefficient for |mu| <= mu_weight_bound, 1 <= r <= r_bound.
SweepReport sweep_hl_pieri_vs_psi(int mu_weight_bound, int r_bound, bool parallel);

// mul_hl evaluated at t = 0 vs mul_schur, all pairs |mu|+|nu| <= weight_bound.
SweepReport sweep_hl_t0_vs_schur(int weight_bound, bool parallel);

// mul_uc vs the Koike-formula oracle, all quadruples with
// |xi|+|eta|+|tau|+|nu| <= total_weight_bound.
SweepReport sweep_uc_vs_koike(int total_weight_bound, bool parallel,
                              DecrementPolicy policy = DecrementPolicy::Straighten);

// uc_to_xy(a)*uc_to_xy(b) vs the M-weighted sum of uc_to_xy over the
// expansion, same quadruple range.
SweepReport sweep_uc_vs_xy(int total_weight_bound, bool parallel);

// p_structure_constant over every (mu, nu, la) with |mu|+|nu| <= weight_bound:
// the b_la-rescaled division must be exact.
SweepReport sweep_p_constants(int weight_bound, bool parallel);

// Case lists used by the sweeps (exposed for the benchmark).
std::vector<std::pair<Partition, Partition>> partition_pairs(int weight_bound, int max_len = -1);
std::vector<std::array<Partition, 4>> partition_quadruples(int total_weight_bound);

// Identity suites. Each returns a report whose mismatches name the failing
// instance; all run serially in well under a second except the randomized
// ordering check, which honors `parallel`.

// straighten_schur((i,j)) + straighten_schur((j-1,i+1)) = 0 for i,j in
// [lo, hi], as signed sums.
SweepReport check_schur_two_row(int lo, int hi);

// Q_{(n-1,m)} + Q_{(m-1,n)} - t Q_{(n,m-1)} - t Q_{(m,n-1)} = 0 for n,m in
// [lo, hi], after straightening.
SweepReport check_deformed_fermionic(int lo, int hi);

// Shuffling the series list never changes evaluate_series_product, over
// `instances` seeded random engine instances; also confirms the potential
// budget assertion never fires.
SweepReport check_ordering_independence(size_t instances, unsigned seed, bool parallel);

// Every vector of length <= max_len with entries in [lo, hi] and a negative
// tail sum straightens to zero in both the Schur and the Q basis.
SweepReport check_pruning_soundness(int max_len, int lo, int hi, bool parallel);

// Leftmost-ascent and rightmost-ascent rewriting agree (confluence), same
// vector range as above.
SweepReport check_hl_confluence(int max_len, int lo, int hi, bool parallel);

// straighten_hl at t=0 equals the signed singleton straighten_schur.
SweepReport check_hl_t0_matches_schur(int max_len, int lo, int hi, bool parallel);

}  // namespace symf
