#pragma once

#include <span>
#include <vector>

#include "smaa/model.hpp"

namespace smaa {

/// 2-additive Choquet integral of `g` in the Shapley/interaction representation:
///   sum_{I_js>0} min(g_j,g_s) I_js + sum_{I_js<0} max(g_j,g_s) |I_js|
///   + sum_j g_j (I_j - 1/2 sum_s |I_js|)
/// Throws std::invalid_argument on dimension mismatch.
double choquet_value(std::span<const double> g, const InteractionVector& capacity);

/// Same integral computed through the Mobius transform and the full capacity
/// on 2^n coalitions, using the sorted-permutation form. Independent route kept
/// for verification; exponential in n.
/// Throws std::domain_error if the derived capacity is not monotone.
double choquet_value_oracle(std::span<const double> g, const InteractionVector& capacity);

/// Capacity mu(A) for every coalition bitmask A, built from the Mobius masses
/// m({j}) = I_j - 1/2 sum_s I_js and m({j,s}) = I_js.
std::vector<double> capacity_from_interactions(const InteractionVector& capacity);

/// Threshold sorting: returns the smallest h in 1..k with ci >= profile_cis[h]
/// (0-based profile_cis holds k+1 non-increasing values). Category K_h covers
/// [CI(r_{h+1}), CI(r_h)), and K_1 also includes its upper bound.
/// Throws std::domain_error if ci falls outside [worst, best].
int sort_alternative(double ci, std::span<const double> profile_cis);

/// Classify every row of `evaluations` against the realized `profiles` (best first).
Scenario classify_all(const RowMatrix& evaluations, const RowMatrix& profiles,
                      const InteractionVector& capacity);

}  // namespace smaa
