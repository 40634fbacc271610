#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tenwein/constellation.hpp"
#include "tenwein/cumulant_weingarten.hpp"
#include "tenwein/hurwitz.hpp"
#include "tenwein/numeric.hpp"

namespace tenwein {

/// D constellations on a common ground set, with the white vertices of equal
/// label identified across colors (one node per element). A color may carry
/// the empty constellation; its orbit partition is then the finest one.
class NodalConstellation {
 public:
  NodalConstellation(int n, std::vector<Constellation> per_color);

  int degree() const { return n_; }
  int colors() const { return static_cast<int>(per_color_.size()); }
  const Constellation& color(int c) const { return per_color_[static_cast<size_t>(c)]; }

  // |Pi(everything)|: orbits of all permutations of all colors
  int num_components() const;

  // sum_c (g(eta^c) - |Pi(eta^c)|) + n(D-1) + |Pi(everything)|
  int arithmetic_genus() const;

 private:
  int n_;
  std::vector<Constellation> per_color_;
};

// The nodal constellation S(sigma,tau) built from the D bipartite maps
// (sigma_c, tau_c^{-1}).
NodalConstellation nodal_from_pair(const PermTuple& sigma, const PermTuple& tau);

// G(sigma,tau): arithmetic genus of S(sigma,tau).
int arithmetic_genus(const PermTuple& sigma, const PermTuple& tau);

// G(sigma,tau,eta-hat) for a factorization tuple eta (eta^c multiplies to
// sigma_c tau_c^{-1}): arithmetic genus of the surface obtained by pairing the
// faces of S(sigma,tau) with the faces of the eta constellations.
int arithmetic_genus_joint(const PermTuple& sigma, const PermTuple& tau,
                           const std::vector<Constellation>& etas);

// Enumerate the tuples counted by m_C(sigma,tau;l,k): D proper constellations
// with per-color product sigma_c tau_c^{-1}, total length l (summed over all
// colors), jointly transitive together with sigma,tau. k unrestricted unless
// given.
void for_each_joint_factorization(const PermTuple& sigma, const PermTuple& tau, long l,
                                  std::optional<long> k,
                                  const std::function<void(const std::vector<Constellation>&)>& fn);

// Weighted count of connected branched coverings of a bouquet of D spheres
// with profiles (alpha_c,beta_c), k extra branch points and l as in the nodal
// Riemann-Hurwitz relation; equals BS^l_k / n!, or H^l / n! when restricted
// to monotone simple ramifications. Profiles must be non-trivial and (l, k)
// consistent with a non-negative integer arithmetic genus.
Rat covering_count(const HurwitzQuery& q, long k, long l, bool restricted_monotone);

// Arithmetic genus determined by l through
//   l = sum_c [#(alpha_c)+#(beta_c)] + 2H - 2 - 2n(D-1).
long covering_arithmetic_genus(const HurwitzQuery& q, long l);

// Total number of singular points: nk - l + sum_c [#(alpha_c)+#(beta_c)].
Int singular_point_count(const HurwitzQuery& q, long k, long l);

// p_C[sigma,tau;l] summed over connected foldings of S(sigma,tau) by
// arithmetic genus, colored nodes weighted by monotone single Hurwitz
// numbers H_g / |C|.
Int folding_decomposition(const PermTuple& sigma, const PermTuple& tau, long l);

// DOT renderings for documentation.
std::string incidence_graph_dot(const SetPartition& Pi, const std::vector<SetPartition>& pis,
                                const std::vector<SetPartition>& Pics);
std::string nodal_schematic_dot(const PermTuple& sigma, const PermTuple& tau,
                                const std::vector<SetPartition>* folding = nullptr);

}  // namespace tenwein
