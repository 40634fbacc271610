#pragma once

#include <optional>
#include <vector>

#include "tenwein/cumulant_weingarten.hpp"
#include "tenwein/numeric.hpp"
#include "tenwein/permutation.hpp"

namespace tenwein {

/// Ramification data: per color a pair (alpha_c, beta_c) of partitions of the
/// same n, plus either a genus or a transposition count.
struct HurwitzQuery {
  std::vector<CycleType> alphas;
  std::vector<CycleType> betas;

  int colors() const { return static_cast<int>(alphas.size()); }
  int n() const { return alphas.front().n(); }
  void validate() const;
};

// Riemann-Hurwitz conversions for double numbers: l = #(a)+#(b)+2h-2.
long double_hurwitz_l(const CycleType& alpha, const CycleType& beta, long h);
// and for single numbers: l = #(a)+n+2h-2.
long single_hurwitz_l(const CycleType& alpha, long h);

// Monotone single Hurwitz number of genus h:
//   H_h(alpha) = |C_alpha| p_C[nu,id;l] = |C_alpha| |gamma_l(nu)|,
// for any representative nu of C_alpha.
Int single_hurwitz(const CycleType& alpha, long h);

// Genus-0 closed form
//   H_0(alpha) = n!/prod_p d_p! * (2n+#(alpha)-3)!/(2n)! * prod_p binom(2p,p)^{d_p}.
Int single_hurwitz_genus0_closed(const CycleType& alpha);

// Monotone double Hurwitz number of genus h:
//   H_h(alpha,beta) = sum_{sigma in C_alpha, tau in C_beta} p_C[sigma,tau;l].
// Exploits simultaneous conjugation invariance: sigma is fixed to the class
// representative and the result scaled by |C_alpha|.
Int double_hurwitz(const CycleType& alpha, const CycleType& beta, long h);

// Same number assembled from single Hurwitz numbers (the quadruple sum over
// pairs, excess, partitions and genus distributions).
Int double_from_single(const CycleType& alpha, const CycleType& beta, long h);

// Higher-order generalization: sum of p_C[sigma,tau;l] over all class
// representatives, one (alpha_c,beta_c) pair per color.
Int higher_order_hurwitz(const HurwitzQuery& q, long l);

// Generalized Bousquet-Melou--Schaeffer numbers: same class sums of m_C.
Int bms_number(const HurwitzQuery& q, long l, long k);

}  // namespace tenwein
