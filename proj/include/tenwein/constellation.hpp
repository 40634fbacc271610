#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tenwein/numeric.hpp"
#include "tenwein/permutation.hpp"
#include "tenwein/set_partition.hpp"

namespace tenwein {

/// Ordered tuple (rho_1,...,rho_k) of permutations of common degree n, viewed
/// as a k-constellation: faces are the cycles of rho_1...rho_k, connected
/// components are the orbits of the generated group.
class Constellation {
 public:
  Constellation(int n, std::vector<Permutation> perms);

  int degree() const { return n_; }
  int flavors() const { return static_cast<int>(perms_.size()); }
  const std::vector<Permutation>& perms() const { return perms_; }

  Permutation product() const;
  SetPartition orbit_partition() const;  // Pi(rho-hat); singletons when empty
  int total_length() const;              // sum of ||rho_i||
  bool is_connected() const;
  bool is_proper() const;  // no factor equals the identity

  // Non-negative genus g from
  //   sum_i #(rho_i) - n(k-1) + #(rho_1...rho_k) = 2|Pi| - 2g.
  int genus() const;

  bool operator==(const Constellation&) const = default;

 private:
  int n_;
  std::vector<Permutation> perms_;
};

struct FactorizationFilter {
  bool proper = false;
  std::optional<long> total_length;
  bool transitive = false;
};

// All ordered (rho_1,...,rho_k) with rho_1...rho_k == nu satisfying the
// filter. Depth-first over rho_1..rho_{k-1} with rho_k forced.
void for_each_factorization(const Permutation& nu, int k, const FactorizationFilter& filter,
                            const std::function<void(const Constellation&)>& fn);

// gamma-tilde(nu;k): connected planar k-constellations with product nu,
//   k [(k-1)n-1]! / [(k-1)n-#(nu)+2]! * prod_p [p binom(kp-1,p)]^{d_p},
// with boundaries gamma-tilde(nu;0)=[nu==id], gamma-tilde(nu;1)=[#(nu)==1].
Int planar_count(const CycleType& t, int k);
Int planar_count(const Permutation& nu, int k);

// gamma(nu;k): proper connected planar count, by inclusion-exclusion
//   sum_j binom(k,j) gamma-tilde(nu;j) (-1)^{k+j}.
Int planar_proper_count(const CycleType& t, int k);
Int planar_proper_count(const Permutation& nu, int k);

// gamma(nu) = sum_k (-1)^k gamma(nu;k)
//           = (-1)^{||nu||} (3n-||nu||-3)!/(2n)! prod_p [(2p)!/(p!(p-1)!)]^{d_p}.
Int gamma_alternating(const CycleType& t);
Int gamma_alternating(const Permutation& nu);

// Biane-Speicher Moebius function on non-crossing partitions,
//   M(nu) = prod_p [(-1)^{p-1} Catalan(p-1)]^{d_p(nu)}.
Int moebius_nc(const CycleType& t);
Int moebius_nc(const Permutation& nu);

// gamma_l(nu;k) (proper=true) and gamma-tilde_l(nu;k) (proper=false):
// connected k-constellations with product nu and total length l, counted by
// exhaustive search, memoized by (cycle type, l, k, proper).
Int connected_factorization_count(const Permutation& nu, long l, int k, bool proper);

// gamma_l(nu) = sum_{k>=0} (-1)^k gamma_l(nu;k); the sum is finite since
// gamma_l(nu;k) == 0 for k > l. Signed.
Int gamma_l(const Permutation& nu, long l);

}  // namespace tenwein
