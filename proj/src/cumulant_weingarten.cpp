#include "tenwein/cumulant_weingarten.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "tenwein/constellation.hpp"
#include "tenwein/weingarten.hpp"

namespace tenwein {

PermTuple::PermTuple(std::vector<Permutation> perms) : perms_(std::move(perms)) {
  require(!perms_.empty(), "a tuple needs at least one color");
  for (const auto& p : perms_)
    require(p.degree() == perms_.front().degree(), "degree mismatch across colors");
}

PermTuple PermTuple::inverse() const {
  std::vector<Permutation> out;
  out.reserve(perms_.size());
  for (const auto& p : perms_) out.push_back(p.inverse());
  return PermTuple(std::move(out));
}

PermTuple PermTuple::conjugated_by(const Permutation& g) const {
  std::vector<Permutation> out;
  out.reserve(perms_.size());
  for (const auto& p : perms_) out.push_back(p.conjugated_by(g));
  return PermTuple(std::move(out));
}

PermTuple product_with_inverse(const PermTuple& sigma, const PermTuple& tau) {
  require(sigma.colors() == tau.colors(), "color count mismatch");
  require(sigma.degree() == tau.degree(), "degree mismatch");
  std::vector<Permutation> out;
  for (int c = 0; c < sigma.colors(); ++c)
    out.push_back(sigma.color(c) * tau.color(c).inverse());
  return PermTuple(std::move(out));
}

SetPartition joint_orbits(const PermTuple& sigma, const PermTuple& tau) {
  require(sigma.colors() == tau.colors(), "color count mismatch");
  std::vector<Permutation> all = sigma.perms();
  all.insert(all.end(), tau.perms().begin(), tau.perms().end());
  return transitivity_partition(all, sigma.degree());
}

long ell(const PermTuple& sigma, const PermTuple& tau) {
  PermTuple nu = product_with_inverse(sigma, tau);
  long total = 0;
  for (int c = 0; c < nu.colors(); ++c) total += nu.color(c).length();
  return total + 2 * (joint_orbits(sigma, tau).num_blocks() - 1);
}

int IncidenceGraph::num_components() const {
  const int v = num_vertices();
  if (v == 0) return 0;
  std::vector<int> parent(static_cast<size_t>(v));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (const auto& e : edges) {
    int a = find(e.white);
    int b = find(white_vertices + e.colored);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  }
  int comps = 0;
  for (int i = 0; i < v; ++i)
    if (find(i) == i) ++comps;
  return comps;
}

IncidenceGraph incidence_graph(const SetPartition& Pi, const std::vector<SetPartition>& pis,
                               const std::vector<SetPartition>& Pics) {
  require(pis.size() == Pics.size(), "one edge partition per color required");
  IncidenceGraph g;
  g.white_vertices = Pi.num_blocks();
  std::vector<int> colored_offset;
  for (const auto& pi : pis) {
    colored_offset.push_back(g.colored_vertices);
    g.colored_vertices += pi.num_blocks();
  }
  for (size_t c = 0; c < Pics.size(); ++c) {
    require(Pics[c].refines(Pi), "Pi must be coarser than every edge partition");
    require(Pics[c].refines(pis[c]), "pi_c must be coarser than its edge partition");
    for (const auto& b : Pics[c].blocks()) {
      IncidenceGraph::Edge e;
      e.color = static_cast<int>(c);
      e.white = Pi.block_index_of(b.front());
      e.colored = colored_offset[c] + pis[c].block_index_of(b.front());
      g.edges.push_back(e);
    }
  }
  return g;
}

namespace {

// ---------------------------------------------------------------------------
// Per-color tables, refined by the orbit partition of the factors. For a
// fixed degree n they tabulate, for every target g in S_n,
//
//   factor table  : count of proper tuples (rho_1..rho_k), product g,
//                   total length l, orbit partition Pi(rho-hat) = pi
//   monotone table: count of weakly monotone transposition tuples of length
//                   l, product g, orbit partition pi
//
// Joint transitivity across colors then only needs the join of the per-color
// orbit partitions with Pi(sigma,tau).
// ---------------------------------------------------------------------------

struct ColorTables {
  int n = 0;
  long L = 0;
  std::vector<Permutation> perms;
  std::vector<SetPartition> partitions;
  std::unordered_map<Permutation, int> perm_idx;
  std::unordered_map<SetPartition, int> part_idx;
  int finest = 0;

  std::vector<Int> factor;      // [((k*G + g)*P + pi)*(L+1) + l]
  std::vector<Int> mono;        // [(l*G + g)*P + pi]
  std::vector<int> join_table;  // [pi*P + pj]

  Int factor_at(long k, int g, int pi, long l) const {
    return factor[static_cast<size_t>(((k * static_cast<long>(perms.size()) + g) *
                                           static_cast<long>(partitions.size()) +
                                       pi) *
                                          (L + 1) +
                                      l)];
  }
  Int mono_at(long l, int g, int pi) const {
    return mono[static_cast<size_t>((l * static_cast<long>(perms.size()) + g) *
                                        static_cast<long>(partitions.size()) +
                                    pi)];
  }
  int join(int a, int b) const {
    return join_table[static_cast<size_t>(a) * partitions.size() + static_cast<size_t>(b)];
  }
};

using ColorTablesPtr = std::shared_ptr<const ColorTables>;

ColorTablesPtr build_color_tables(int n, long L) {
  auto out = std::make_shared<ColorTables>();
  ColorTables& t = *out;
  t.n = n;
  t.L = L;
  t.perms = all_permutations(n);
  t.partitions = all_partitions(n);
  for (size_t i = 0; i < t.perms.size(); ++i) t.perm_idx[t.perms[i]] = static_cast<int>(i);
  for (size_t i = 0; i < t.partitions.size(); ++i)
    t.part_idx[t.partitions[i]] = static_cast<int>(i);
  t.finest = t.part_idx.at(SetPartition::finest(n));
  const int G = static_cast<int>(t.perms.size());
  const int P = static_cast<int>(t.partitions.size());

  // multiplication and join lookups
  std::vector<int> mul(static_cast<size_t>(G) * static_cast<size_t>(G));
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b)
      mul[static_cast<size_t>(a) * static_cast<size_t>(G) + static_cast<size_t>(b)] =
          t.perm_idx.at(t.perms[static_cast<size_t>(a)] * t.perms[static_cast<size_t>(b)]);
  std::vector<int> join_orbit(static_cast<size_t>(P) * static_cast<size_t>(G));
  for (int pi = 0; pi < P; ++pi)
    for (int g = 0; g < G; ++g)
      join_orbit[static_cast<size_t>(pi) * static_cast<size_t>(G) + static_cast<size_t>(g)] =
          t.part_idx.at(t.partitions[static_cast<size_t>(pi)].join(
              cycle_partition(t.perms[static_cast<size_t>(g)])));
  t.join_table.assign(static_cast<size_t>(P) * static_cast<size_t>(P), 0);
  for (int a = 0; a < P; ++a)
    for (int b = a; b < P; ++b) {
      int j = t.part_idx.at(
          t.partitions[static_cast<size_t>(a)].join(t.partitions[static_cast<size_t>(b)]));
      t.join_table[static_cast<size_t>(a) * static_cast<size_t>(P) + static_cast<size_t>(b)] = j;
      t.join_table[static_cast<size_t>(b) * static_cast<size_t>(P) + static_cast<size_t>(a)] = j;
    }
  std::vector<int> lengths(static_cast<size_t>(G));
  for (int g = 0; g < G; ++g)
    lengths[static_cast<size_t>(g)] = t.perms[static_cast<size_t>(g)].length();
  const int id = t.perm_idx.at(Permutation::identity(n));

  // ---- factor table ---------------------------------------------------------
  auto fidx = [&](long k, int g, int pi, long l) {
    return static_cast<size_t>(((k * G + g) * P + pi) * (L + 1) + l);
  };
  t.factor.assign(static_cast<size_t>((L + 1) * G * P * (L + 1)), Int(0));
  t.factor[fidx(0, id, t.finest, 0)] = 1;
  for (long k = 0; k < L; ++k) {
    for (int g = 0; g < G; ++g)
      for (int pi = 0; pi < P; ++pi)
        for (long l = k; l <= L; ++l) {
          const Int& cur = t.factor[fidx(k, g, pi, l)];
          if (cur == 0) continue;
          for (int r = 0; r < G; ++r) {
            const int len = lengths[static_cast<size_t>(r)];
            if (len < 1 || l + len > L) continue;  // proper factors only
            t.factor[fidx(k + 1,
                          mul[static_cast<size_t>(g) * static_cast<size_t>(G) + static_cast<size_t>(r)],
                          join_orbit[static_cast<size_t>(pi) * static_cast<size_t>(G) + static_cast<size_t>(r)],
                          l + len)] += cur;
          }
        }
  }

  // ---- monotone table --------------------------------------------------------
  // forward dp over (product, current maximum, orbit partition)
  auto midx = [&](long l, int g, int q, int pi) {
    return static_cast<size_t>(((l * G + g) * (n + 1) + q) * P + pi);
  };
  std::vector<Int> dp(static_cast<size_t>((L + 1) * G * (n + 1) * P), Int(0));
  dp[midx(0, id, 0, t.finest)] = 1;
  struct Trans {
    int q;
    int perm;
  };
  std::vector<Trans> trans;
  for (int q = 2; q <= n; ++q)
    for (int p = 1; p < q; ++p) {
      std::vector<int> im(static_cast<size_t>(n));
      for (int v = 1; v <= n; ++v) im[static_cast<size_t>(v) - 1] = v;
      std::swap(im[static_cast<size_t>(p) - 1], im[static_cast<size_t>(q) - 1]);
      trans.push_back({q, t.perm_idx.at(Permutation(im))});
    }
  for (long l = 0; l < L; ++l)
    for (int g = 0; g < G; ++g)
      for (int q = 0; q <= n; ++q)
        for (int pi = 0; pi < P; ++pi) {
          const Int& cur = dp[midx(l, g, q, pi)];
          if (cur == 0) continue;
          for (const auto& tr : trans) {
            if (tr.q < q) continue;  // maxima must be weakly monotone
            dp[midx(l + 1,
                    mul[static_cast<size_t>(g) * static_cast<size_t>(G) + static_cast<size_t>(tr.perm)],
                    tr.q,
                    join_orbit[static_cast<size_t>(pi) * static_cast<size_t>(G) +
                               static_cast<size_t>(tr.perm)])] += cur;
          }
        }
  t.mono.assign(static_cast<size_t>((L + 1) * G * P), Int(0));
  for (long l = 0; l <= L; ++l)
    for (int g = 0; g < G; ++g)
      for (int pi = 0; pi < P; ++pi) {
        Int sum = 0;
        for (int q = 0; q <= n; ++q) sum += dp[midx(l, g, q, pi)];
        t.mono[static_cast<size_t>((l * G + g) * P + pi)] = std::move(sum);
      }
  return out;
}

// Snapshot semantics: extending the tables builds a replacement; readers keep
// their shared_ptr, so concurrent calls stay safe.
ColorTablesPtr color_tables(int n, long need_l) {
  // Tabulated over S_n x P(n); past n = 5 the tables no longer fit in memory.
  // CLI budgets reject such inputs before they reach this point.
  require(n <= 5, "joint factorization tables are limited to n <= 5");
  static std::mutex mu;
  static std::map<int, ColorTablesPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot || slot->L < need_l) slot = build_color_tables(n, need_l);
  return slot;
}

}  // namespace

Int m_C(const PermTuple& sigma, const PermTuple& tau, long l, long k) {
  require(l >= 0 && k >= 0, "l and k must be >= 0");
  const int n = sigma.degree();
  const int D = sigma.colors();
  PermTuple nu = product_with_inverse(sigma, tau);
  auto tabp = color_tables(n, l);
  const ColorTables& tab = *tabp;
  const int top = tab.part_idx.at(SetPartition::one_block(n));
  const int start = tab.part_idx.at(joint_orbits(sigma, tau));
  const int P = static_cast<int>(tab.partitions.size());

  Int total = 0;
  // distribute (l_c, k_c, pi_c) over colors, tracking the accumulated join
  std::function<void(int, long, long, int, Int)> rec = [&](int c, long lrem, long krem,
                                                           int joined, Int acc) {
    if (c == D) {
      if (lrem == 0 && krem == 0 && joined == top) total += acc;
      return;
    }
    const int g = tab.perm_idx.at(nu.color(c));
    for (long lc = 0; lc <= lrem; ++lc)
      for (long kc = 0; kc <= std::min(krem, lc); ++kc)
        for (int pi = 0; pi < P; ++pi) {
          const Int& cnt = tab.factor_at(kc, g, pi, lc);
          if (cnt == 0) continue;
          rec(c + 1, lrem - lc, krem - kc, tab.join(joined, pi), acc * cnt);
        }
  };
  rec(0, l, k, start, Int(1));
  return total;
}

namespace {

// sum over colors of per-color weights with the join condition;
// weight(c, l_c, pi) supplied by the caller.
Int joined_color_sum(const ColorTables& tab, const PermTuple& sigma, const PermTuple& tau,
                     long l, const std::function<Int(int, long, int)>& weight) {
  const int n = sigma.degree();
  const int D = sigma.colors();
  const int top = tab.part_idx.at(SetPartition::one_block(n));
  const int start = tab.part_idx.at(joint_orbits(sigma, tau));
  const int P = static_cast<int>(tab.partitions.size());

  Int total = 0;
  std::function<void(int, long, int, Int)> rec = [&](int c, long lrem, int joined, Int acc) {
    if (c == D) {
      if (lrem == 0 && joined == top) total += acc;
      return;
    }
    for (long lc = 0; lc <= lrem; ++lc)
      for (int pi = 0; pi < P; ++pi) {
        Int w = weight(c, lc, pi);
        if (w == 0) continue;
        rec(c + 1, lrem - lc, tab.join(joined, pi), acc * w);
      }
  };
  rec(0, l, start, Int(1));
  return total;
}

}  // namespace

Int p_C_alternating(const PermTuple& sigma, const PermTuple& tau, long l) {
  require(l >= 0, "l must be >= 0");
  const int n = sigma.degree();
  PermTuple nu = product_with_inverse(sigma, tau);
  auto tabp = color_tables(n, l);
  const ColorTables& tab = *tabp;
  // per color: sum_k (-1)^k (count of proper k-tuples at fixed length, orbit)
  Int signed_sum = joined_color_sum(tab, sigma, tau, l, [&](int c, long lc, int pi) {
    const int g = tab.perm_idx.at(nu.color(c));
    Int s = 0;
    for (long kc = 0; kc <= lc; ++kc) {
      const Int cnt = tab.factor_at(kc, g, pi, lc);
      if (cnt == 0) continue;
      s += (kc % 2 == 0) ? cnt : -cnt;
    }
    return s;
  });
  Int value = (l % 2 == 0) ? signed_sum : -signed_sum;
  check_invariant(value >= 0, "(-1)^l sum_k (-1)^k m_C must be non-negative");
  return value;
}

Int p_C_monotone(const PermTuple& sigma, const PermTuple& tau, long l) {
  require(l >= 0, "l must be >= 0");
  const int n = sigma.degree();
  PermTuple nu = product_with_inverse(sigma, tau);
  auto tabp = color_tables(n, l);
  const ColorTables& tab = *tabp;
  return joined_color_sum(tab, sigma, tau, l, [&](int c, long lc, int pi) {
    const int g = tab.perm_idx.at(nu.color(c));
    return tab.mono_at(lc, g, pi);
  });
}

namespace {

// per-block genus weights w_B[g] = gamma_{|B| + #cycles(nu|B) + 2g - 2}(nu|B),
// convolved across all blocks of all colors
Int genus_convolution(const std::vector<std::vector<Int>>& block_weights, long gtot) {
  std::vector<Int> acc(static_cast<size_t>(gtot + 1), Int(0));
  acc[0] = 1;
  for (const auto& w : block_weights) {
    std::vector<Int> next(static_cast<size_t>(gtot + 1), Int(0));
    for (long a = 0; a <= gtot; ++a) {
      if (acc[static_cast<size_t>(a)] == 0) continue;
      for (long b = 0; a + b <= gtot && b < static_cast<long>(w.size()); ++b) {
        if (w[static_cast<size_t>(b)] == 0) continue;
        next[static_cast<size_t>(a + b)] += acc[static_cast<size_t>(a)] * w[static_cast<size_t>(b)];
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<size_t>(gtot)];
}

}  // namespace

Int p_C_partition_formula(const PermTuple& sigma, const PermTuple& tau, long l) {
  require(l >= 0, "l must be >= 0");
  const int n = sigma.degree();
  const int D = sigma.colors();
  const long lmin = ell(sigma, tau);
  if (l < lmin || (l - lmin) % 2 != 0) return 0;
  const long half = (l - lmin) / 2;

  PermTuple nu = product_with_inverse(sigma, tau);
  SetPartition Pist = joint_orbits(sigma, tau);
  std::vector<SetPartition> Pinu;
  std::vector<std::vector<SetPartition>> coarser;
  for (int c = 0; c < D; ++c) {
    Pinu.push_back(cycle_partition(nu.color(c)));
    coarser.push_back(coarser_partitions(Pinu.back()));
  }

  Int signed_total = 0;
  std::vector<const SetPartition*> chosen(static_cast<size_t>(D), nullptr);

  // excess L of the incidence graph ranges over 0..(l-lmin)/2; the leftover
  // (l-lmin)/2 - L is distributed as genus over the blocks
  for (long L = 0; L <= half; ++L) {
    const long gtot = half - L;
    const int block_deficit = Pist.num_blocks() + static_cast<int>(L) - 1;

    std::function<void(int, const SetPartition&, int)> rec = [&](int c, const SetPartition& joined,
                                                                 int deficit) {
      if (deficit > block_deficit) return;
      if (c == D) {
        if (deficit != block_deficit) return;
        if (joined.num_blocks() != 1) return;
        // genus weights per block, all colors flattened
        std::vector<std::vector<Int>> weights;
        for (int cc = 0; cc < D; ++cc) {
          for (const auto& B : chosen[static_cast<size_t>(cc)]->blocks()) {
            Permutation res = nu.color(cc).restricted_to(B);
            const long base = static_cast<long>(B.size()) + res.num_cycles() - 2;
            std::vector<Int> w;
            for (long g = 0; g <= gtot; ++g) w.push_back(gamma_l(res, base + 2 * g));
            weights.push_back(std::move(w));
          }
        }
        signed_total += genus_convolution(weights, gtot);
        return;
      }
      for (const auto& pi : coarser[static_cast<size_t>(c)]) {
        chosen[static_cast<size_t>(c)] = &pi;
        rec(c + 1, joined.join(pi),
            deficit + (Pinu[static_cast<size_t>(c)].num_blocks() - pi.num_blocks()));
      }
    };
    rec(0, Pist, 0);
  }

  Int value = (l % 2 == 0) ? signed_total : -signed_total;
  check_invariant(value >= 0, "partition formula must produce a non-negative p_C");
  return value;
}

std::pair<Int, long> leading_p_C(const PermTuple& sigma, const PermTuple& tau) {
  const int D = sigma.colors();
  const long lmin = ell(sigma, tau);
  PermTuple nu = product_with_inverse(sigma, tau);
  SetPartition Pist = joint_orbits(sigma, tau);
  std::vector<SetPartition> Pinu;
  std::vector<std::vector<SetPartition>> coarser;
  for (int c = 0; c < D; ++c) {
    Pinu.push_back(cycle_partition(nu.color(c)));
    coarser.push_back(coarser_partitions(Pinu.back()));
  }
  const int block_deficit = Pist.num_blocks() - 1;

  Int total = 0;
  std::vector<const SetPartition*> chosen(static_cast<size_t>(D), nullptr);
  std::function<void(int, const SetPartition&, int)> rec = [&](int c, const SetPartition& joined,
                                                               int deficit) {
    if (deficit > block_deficit) return;
    if (c == D) {
      if (deficit != block_deficit || joined.num_blocks() != 1) return;
      Int prod = 1;
      for (int cc = 0; cc < D; ++cc)
        for (const auto& B : chosen[static_cast<size_t>(cc)]->blocks())
          prod *= gamma_alternating(nu.color(cc).restricted_to(B));
      total += prod;
      return;
    }
    for (const auto& pi : coarser[static_cast<size_t>(c)]) {
      chosen[static_cast<size_t>(c)] = &pi;
      rec(c + 1, joined.join(pi),
          deficit + (Pinu[static_cast<size_t>(c)].num_blocks() - pi.num_blocks()));
    }
  };
  rec(0, Pist, 0);
  return {total, lmin};
}

LaurentSeries wc_series(const PermTuple& sigma, const PermTuple& tau, long order,
                        WCRoute route) {
  require(order >= 0, "order must be >= 0");
  const int n = sigma.degree();
  const int D = sigma.colors();
  const long base = static_cast<long>(n) * D;

  if (route == WCRoute::FromPC) {
    const long lmin = ell(sigma, tau);
    if (order < lmin) return LaurentSeries::zero(base + order);
    std::vector<Rat> coeffs;
    for (long l = lmin; l <= order; ++l) {
      Int p = p_C_partition_formula(sigma, tau, l);
      coeffs.emplace_back((l % 2 == 0) ? p : -p);
    }
    return LaurentSeries(base + lmin, std::move(coeffs), base + order);
  }

  // Moebius route: W_C = sum_pi lambda_pi chi(Pi(sigma,tau) <= pi)
  //                      prod_{B in pi} prod_c W^(N)(restriction)
  SetPartition Pist = joint_orbits(sigma, tau);
  PermTuple nu = product_with_inverse(sigma, tau);
  LaurentSeries total = LaurentSeries::zero(base + order);
  for (const auto& pi : all_partitions(n)) {
    if (!Pist.refines(pi)) continue;
    LaurentSeries prod = LaurentSeries::constant(Rat(1), order + base);
    for (const auto& B : pi.blocks())
      for (int c = 0; c < D; ++c)
        prod = prod * weingarten_series(nu.color(c).restricted_to(B), order);
    total = total + prod.truncated_to(base + order).scaled(Rat(moebius_to_top(pi)));
  }
  return total;
}

Rat wc_exact(const PermTuple& sigma, const PermTuple& tau, const Int& N) {
  const int n = sigma.degree();
  const int D = sigma.colors();
  require(N >= n, "W_C is uniquely defined only for N >= n");
  SetPartition Pist = joint_orbits(sigma, tau);
  PermTuple nu = product_with_inverse(sigma, tau);
  Rat total(0);
  for (const auto& pi : all_partitions(n)) {
    if (!Pist.refines(pi)) continue;
    Rat prod(moebius_to_top(pi));
    for (const auto& B : pi.blocks())
      for (int c = 0; c < D; ++c)
        prod *= weingarten_exact(nu.color(c).restricted_to(B), N);
    total += prod;
  }
  return total;
}

}  // namespace tenwein
