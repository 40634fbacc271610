#include "tenwein/hurwitz.hpp"

#include <algorithm>
#include <functional>

#include "tenwein/constellation.hpp"

namespace tenwein {

void HurwitzQuery::validate() const {
  require(!alphas.empty() && alphas.size() == betas.size(),
          "one (alpha,beta) pair per color required");
  const int nn = alphas.front().n();
  require(nn >= 1, "profiles must partition n >= 1");
  for (const auto& a : alphas) require(a.n() == nn, "profiles must partition the same n");
  for (const auto& b : betas) require(b.n() == nn, "profiles must partition the same n");
}

long double_hurwitz_l(const CycleType& alpha, const CycleType& beta, long h) {
  require(h >= 0, "genus must be >= 0");
  return alpha.num_parts() + beta.num_parts() + 2 * h - 2;
}

long single_hurwitz_l(const CycleType& alpha, long h) {
  require(h >= 0, "genus must be >= 0");
  return alpha.num_parts() + alpha.n() + 2 * h - 2;
}

Int single_hurwitz(const CycleType& alpha, long h) {
  const long l = single_hurwitz_l(alpha, h);
  if (l < 0) return 0;
  Int g = gamma_l(alpha.representative(), l);
  return alpha.class_size() * abs(g);
}

Int single_hurwitz_genus0_closed(const CycleType& alpha) {
  const int n = alpha.n();
  Rat r = Rat(factorial(n));
  for (auto [p, dp] : alpha.multiplicities()) r /= Rat(factorial(dp));
  r *= Rat(factorial(2L * n + alpha.num_parts() - 3)) / Rat(factorial(2L * n));
  for (auto [p, dp] : alpha.multiplicities())
    r *= rat_pow(Rat(binomial(2L * p, p)), dp);
  check_invariant(r.get_den() == 1, "closed-form single Hurwitz number must be integral");
  return r.get_num();
}

Int double_hurwitz(const CycleType& alpha, const CycleType& beta, long h) {
  require(alpha.n() == beta.n(), "alpha and beta must partition the same n");
  const long l = double_hurwitz_l(alpha, beta, h);
  if (l < 0) return 0;
  // fix sigma by simultaneous conjugation invariance
  PermTuple sigma({alpha.representative()});
  Int total = 0;
  for_each_in_class(beta, [&](const Permutation& tau) {
    total += p_C_partition_formula(sigma, PermTuple({tau}), l);
  });
  return alpha.class_size() * total;
}

Int double_from_single(const CycleType& alpha, const CycleType& beta, long h) {
  require(alpha.n() == beta.n(), "alpha and beta must partition the same n");
  require(h >= 0, "genus must be >= 0");
  const Permutation sigma = alpha.representative();
  const SetPartition Pisigma = cycle_partition(sigma);

  Rat total(0);
  for_each_in_class(beta, [&](const Permutation& tau) {
    const Permutation nu = sigma * tau.inverse();
    const SetPartition Pinu = cycle_partition(nu);
    const SetPartition Pist = transitivity_partition({sigma, tau});
    const int bipartite_genus = Constellation(sigma.degree(), {sigma, tau.inverse()}).genus();
    const long hmax = h - bipartite_genus;
    if (hmax < 0) return;

    for (const auto& pi : coarser_partitions(Pinu)) {
      if (Pist.join(pi).num_blocks() != 1) continue;
      const long L = Pinu.num_blocks() - pi.num_blocks() - Pist.num_blocks() + 1;
      if (L < 0 || L > hmax) continue;
      const long gtot = hmax - L;
      // distribute total genus gtot over the blocks, weight per block
      // H_{g}(type of nu|B) / |C_{type}|
      std::vector<std::vector<Rat>> weights;
      for (const auto& B : pi.blocks()) {
        const CycleType t = nu.restricted_to(B).cycle_type();
        const Rat cls(t.class_size());
        std::vector<Rat> w;
        for (long g = 0; g <= gtot; ++g) w.emplace_back(Rat(single_hurwitz(t, g)) / cls);
        weights.push_back(std::move(w));
      }
      std::vector<Rat> acc(static_cast<size_t>(gtot + 1), Rat(0));
      acc[0] = 1;
      for (const auto& w : weights) {
        std::vector<Rat> next(static_cast<size_t>(gtot + 1), Rat(0));
        for (long a = 0; a <= gtot; ++a) {
          if (acc[static_cast<size_t>(a)] == 0) continue;
          for (long b = 0; a + b <= gtot; ++b)
            next[static_cast<size_t>(a + b)] += acc[static_cast<size_t>(a)] * w[static_cast<size_t>(b)];
        }
        acc = std::move(next);
      }
      total += acc[static_cast<size_t>(gtot)];
    }
  });
  total *= Rat(alpha.class_size());
  check_invariant(total.get_den() == 1, "double Hurwitz number must be integral");
  return total.get_num();
}

namespace {

// class-product sums with the first sigma fixed to its representative
Int class_sum(const HurwitzQuery& q, const std::function<Int(const PermTuple&, const PermTuple&)>& fn) {
  q.validate();
  const int D = q.colors();
  std::vector<Permutation> sigmas(static_cast<size_t>(D), Permutation::identity(q.n()));
  std::vector<Permutation> taus(static_cast<size_t>(D), Permutation::identity(q.n()));
  Int total = 0;
  std::function<void(int, bool)> rec = [&](int idx, bool picking_sigma) {
    if (idx == D && picking_sigma) {
      rec(0, false);
      return;
    }
    if (idx == D) {
      total += fn(PermTuple(sigmas), PermTuple(taus));
      return;
    }
    if (picking_sigma) {
      if (idx == 0) {
        // simultaneous conjugation invariance: first class contributes a factor
        sigmas[0] = q.alphas[0].representative();
        rec(1, true);
      } else {
        for_each_in_class(q.alphas[static_cast<size_t>(idx)], [&](const Permutation& s) {
          sigmas[static_cast<size_t>(idx)] = s;
          rec(idx + 1, true);
        });
      }
    } else {
      for_each_in_class(q.betas[static_cast<size_t>(idx)], [&](const Permutation& t) {
        taus[static_cast<size_t>(idx)] = t;
        rec(idx + 1, false);
      });
    }
  };
  rec(0, true);
  return q.alphas[0].class_size() * total;
}

}  // namespace

Int higher_order_hurwitz(const HurwitzQuery& q, long l) {
  require(l >= 0, "l must be >= 0");
  return class_sum(q, [&](const PermTuple& s, const PermTuple& t) {
    return p_C_partition_formula(s, t, l);
  });
}

Int bms_number(const HurwitzQuery& q, long l, long k) {
  require(l >= 0 && k >= 0, "l and k must be >= 0");
  return class_sum(q, [&](const PermTuple& s, const PermTuple& t) { return m_C(s, t, l, k); });
}

}  // namespace tenwein
