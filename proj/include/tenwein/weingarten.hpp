#pragma once

#include <utility>

#include "tenwein/laurent_series.hpp"
#include "tenwein/numeric.hpp"
#include "tenwein/permutation.hpp"

namespace tenwein {

// m(nu;l,k): ordered k-tuples of non-identity permutations with product nu
// and total length l. Memoized by (cycle type, l, k).
Int m_count(const Permutation& nu, long l, int k);

// p(nu;l) = |P(nu;l)|: monotone factorizations nu = mu_1...mu_l into
// transpositions (p_i q_i), p_i < q_i, with weakly monotone maxima
// q_1 <= ... <= q_l. Also equals |sum_k (-1)^k m(nu;l,k)|.
Int p_coeff(const Permutation& nu, long l);

// W^(N)(nu) = N^{-n} sum_l (-1)^l p(nu;l) N^{-l}, truncated at N^{-(n+order)}.
// The leading exponent of the result is n + ||nu||.
LaurentSeries weingarten_series(const Permutation& nu, long order);

// Exact Weingarten value from the convolution identity
//   sum_nu W(nu) N^{#(nu^{-1} sigma)} = [sigma == id],
// solved as a linear system over class functions. Requires N >= n, where the
// system is uniquely solvable.
Rat weingarten_exact(const Permutation& nu, const Int& N);
Rat weingarten_exact(const CycleType& t, const Int& N);

// Leading asymptotics W^(N)(nu) = M(nu) N^{-n-||nu||} (1 + O(N^-2)):
// returns (M(nu), n + ||nu||).
std::pair<Int, long> weingarten_asymptotic(const Permutation& nu);

}  // namespace tenwein
