#pragma once

#include "hibi/grading.hpp"
#include "hibi/polynomial.hpp"

namespace hibi {

/// Multigraded Hilbert series of k[P] under the chain grading deg_C, as a
/// canonical rational series in l+1 variables. Computed by the closed-form
/// sum over linear extensions; relabels internally when P is not
/// naturally labeled.
SeriesRational hilbert_series(const Poset& P, const Chain& C);

/// Hilbert series under the deg_{f_C} grading, in m+1 variables.
SeriesRational hilbert_series_fc(const Poset& P, const ChainGradingSpec& spec);

/// Brute-force Hilbert function value: counts order-reversing maps
/// sigma : P -> [0, s(a)] with sigma(c_j) = a_l + ... + a_j.
Int hilbert_function_oracle_sigma(const Poset& P, const Chain& C,
                                  const std::vector<int>& a);

/// Brute-force Hilbert function value: counts multichains
/// alpha_1 ⊆ ... ⊆ alpha_{s(a)} in L(P) whose degree multiset matches a.
Int hilbert_function_oracle_multichain(const DistLattice& L, const Multigrading& g,
                                       const std::vector<int>& a);

/// Numerator of the Hilbert series over the full denominator
/// prod_x (1 - t^{deg(x)}), one factor per lattice variable.
IntPolynomial k_polynomial(const Poset& P, const ChainGradingSpec& spec);

/// Eulerian polynomial A_r(t) via the convolution recurrence
/// A_n = A_{n-1} + sum_k binom(n-1,k-1) A_{k-1} A_{n-k} t, with A_0 = 1.
IntPolynomial eulerian_polynomial(int r);

/// Closed form of the two-variable Hilbert series of the n-element
/// antichain graded by the chain {n}.
SeriesRational antichain_series_closed_form(int n);

} // namespace hibi
