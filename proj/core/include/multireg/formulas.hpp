#pragma once

#include <cstdint>
#include <vector>

#include "multireg/ring.hpp"

namespace multireg {

/// Closed-form quantities for s points in generic position and for fat
/// point multiplicity profiles: the per-factor thresholds d_i, the exact
/// regularity of the reduced case, and the regularity-index/regularity
/// upper bounds for the fat case.
struct BoundReport {
  std::vector<int> d;            // d_i per factor, in the shape's given order
  int D = 0;                     // max(d_i) + 1
  int reduced_reg = 0;           // max{d_i + 1}
  long long pair_piece = 0;      // m_1 + m_2 - 1
  std::vector<long long> floor_pieces;  // [(sum m + n_j - 2)/n_j] per factor
  long long ri_bound = 0;        // max{pair_piece, floor pieces}
  long long reg_bound = 0;       // ri_bound + k
};

/// Least d >= 0 with C(d+n, d) >= s.
int d_value(int n, int s);

/// Exact regularity of the ideal of s generic reduced points:
/// max{d_1+1, ..., d_k+1}.
int reduced_regularity_formula(const SpaceShape& shape, int s);

/// Upper bound for ri(R/I_Z): max{m_1+m_2-1, [(sum m_i + n_min - 2)/n_min]}.
/// Multiplicities are sorted non-increasing internally; requires s >= 2.
long long ri_bound(const SpaceShape& shape, std::vector<int> mults);

/// The same bound evaluated with factor j's dimension; the maximum over j
/// equals the n_min term.
long long ri_bound_factor_term(int n_j, long long mult_sum);

/// Upper bound for reg(I_Z): ri_bound + k.
long long fat_bound(const SpaceShape& shape, std::vector<int> mults);

/// ri(R/p^a) = a - k for a single point; returned signed, callers clamp.
int single_point_ri(int a, int k);

/// C(a+b+n, a+b) <= C(a+n, a) * C(b+n, b), evaluated exactly.
bool binomial_inequality_check(int n, int a, int b);

/// All closed forms for one (shape, mults) cell; requires s >= 2.
BoundReport bound_report(const SpaceShape& shape, std::vector<int> mults);

}  // namespace multireg
