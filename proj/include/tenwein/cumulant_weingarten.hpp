#pragma once

#include <utility>
#include <vector>

#include "tenwein/laurent_series.hpp"
#include "tenwein/numeric.hpp"
#include "tenwein/permutation.hpp"
#include "tenwein/set_partition.hpp"

namespace tenwein {

/// Ordered D-tuple of permutations of common degree (one per color).
class PermTuple {
 public:
  explicit PermTuple(std::vector<Permutation> perms);

  int degree() const { return perms_.front().degree(); }
  int colors() const { return static_cast<int>(perms_.size()); }
  const Permutation& color(int c) const { return perms_[static_cast<size_t>(c)]; }
  const std::vector<Permutation>& perms() const { return perms_; }

  PermTuple inverse() const;
  // componentwise g . p_c . g^{-1}, the same g for every color
  PermTuple conjugated_by(const Permutation& g) const;

  bool operator==(const PermTuple&) const = default;
  auto operator<=>(const PermTuple&) const = default;

 private:
  std::vector<Permutation> perms_;
};

// nu = sigma tau^{-1} componentwise.
PermTuple product_with_inverse(const PermTuple& sigma, const PermTuple& tau);

// Pi(sigma,tau): orbits of the group generated by all sigma_c and tau_c.
SetPartition joint_orbits(const PermTuple& sigma, const PermTuple& tau);

// The smallest l with p_C != 0:
//   ell(sigma,tau) = sum_c ||sigma_c tau_c^{-1}|| + 2(|Pi(sigma,tau)| - 1).
long ell(const PermTuple& sigma, const PermTuple& tau);

/// Abstract bipartite graph G[Pi, {pi_c}; {Pic_c}]: white vertices are blocks
/// of Pi, c-colored vertices are blocks of pi_c, and each block of Pic_c
/// contributes a c-colored edge joining the white and colored blocks
/// containing it.
struct IncidenceGraph {
  int white_vertices = 0;
  int colored_vertices = 0;
  // (color, white block index, colored block index offset within color run)
  struct Edge {
    int color;
    int white;
    int colored;  // global colored-vertex index
  };
  std::vector<Edge> edges;

  int num_vertices() const { return white_vertices + colored_vertices; }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_components() const;
  // first-homology rank: E - V + C
  long excess() const { return num_edges() - num_vertices() + num_components(); }
};

// Requires Pi >= Pic_c and pi_c >= Pic_c for every color.
IncidenceGraph incidence_graph(const SetPartition& Pi, const std::vector<SetPartition>& pis,
                               const std::vector<SetPartition>& Pics);

// m_C(sigma,tau;l,k): number of D-tuples of proper constellations
// (rho^c_1..rho^c_{k_c}) with rho^c_1...rho^c_{k_c} = sigma_c tau_c^{-1},
// sum k_c = k, sum of all lengths = l, and {sigma_c,tau_c,rho^c_i} jointly
// transitive.
Int m_C(const PermTuple& sigma, const PermTuple& tau, long l, long k);

// The three routes to p_C[sigma,tau;l] (a fourth, via foldings of nodal
// surfaces, lives in nodal.hpp). All return the non-negative coefficient; the
// (-1)^l sign only enters series assembly.
Int p_C_alternating(const PermTuple& sigma, const PermTuple& tau, long l);
Int p_C_monotone(const PermTuple& sigma, const PermTuple& tau, long l);
Int p_C_partition_formula(const PermTuple& sigma, const PermTuple& tau, long l);

// Leading coefficient: ((-1)^ell p_C[sigma,tau;ell], ell) via the
// tree-constrained partition sum with closed-form block weights gamma(nu|B).
std::pair<Int, long> leading_p_C(const PermTuple& sigma, const PermTuple& tau);

enum class WCRoute {
  FromPC,      // N^{-nD} sum_l (-1)^l p_C[sigma,tau;l] N^{-l}
  MoebiusSum,  // sum_pi lambda_pi W_pi with block-factored Weingarten series
};

// Cumulant Weingarten function as a truncated series in 1/N; truncation at
// absolute order nD + order.
LaurentSeries wc_series(const PermTuple& sigma, const PermTuple& tau, long order,
                        WCRoute route = WCRoute::FromPC);

// Exact W_C at a given N >= n, from the Moebius sum over exact Weingarten
// values.
Rat wc_exact(const PermTuple& sigma, const PermTuple& tau, const Int& N);

}  // namespace tenwein

template <>
struct std::hash<tenwein::PermTuple> {
  size_t operator()(const tenwein::PermTuple& t) const noexcept {
    size_t h = 0xc2b2ae3d27d4eb4full;
    for (const auto& p : t.perms())
      h = h * 0x100000001b3ull + std::hash<tenwein::Permutation>{}(p);
    return h;
  }
};
