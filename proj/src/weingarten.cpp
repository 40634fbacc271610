#include "tenwein/weingarten.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "tenwein/constellation.hpp"

namespace tenwein {

namespace {

Int m_count_dfs(const Permutation& nu, long l, int k) {
  const int n = nu.degree();
  if (k == 0) return (nu.is_identity() && l == 0) ? 1 : 0;
  const auto& perms = all_permutations(n);
  Int count = 0;
  std::function<void(int, const Permutation&, long)> rec =
      [&](int j, const Permutation& prefix_prod, long used) {
        if (j == k - 1) {
          Permutation last = prefix_prod.inverse() * nu;
          if (!last.is_identity() && used + last.length() == l) ++count;
          return;
        }
        for (const auto& rho : perms) {
          const int len = rho.length();
          if (len < 1) continue;
          if (used + len + static_cast<long>(k - j - 1) > l) continue;
          rec(j + 1, prefix_prod * rho, used + len);
        }
      };
  rec(0, Permutation::identity(n), 0);
  return count;
}

// Index of every element of S_n in all_permutations(n) order.
const std::unordered_map<Permutation, int>& perm_index(int n) {
  static std::mutex mu;
  static std::map<int, std::unordered_map<Permutation, int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto& idx = cache[n];
  auto perms = all_permutations(n);
  for (size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
  return cache[n];
}

// Monotone factorization count via the recurrence that strips the last
// transposition (the one carrying the largest maximum):
//   dp_q[l][g] = dp_{q-1}[l][g] + sum_{p<q} dp_q[l-1][g*(pq)],
// where dp_q counts weakly monotone tuples with maxima <= q. Tables are
// cached per degree and extended on demand; reads copy under the lock.
struct MonotoneTable {
  long max_l = -1;
  std::vector<std::vector<Int>> counts;  // [l][perm index]
};

Int monotone_count(int n, long l, const Permutation& nu) {
  static std::mutex mu;
  static std::map<int, MonotoneTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  MonotoneTable& tab = cache[n];
  if (tab.max_l < l) {
    const auto perms = all_permutations(n);
    const auto& idx = perm_index(n);
    const size_t sz = perms.size();
    const long L = l;

    // right-multiplication tables g -> g*(pq) for every transposition
    std::vector<std::vector<int>> right_mul;  // [transposition][perm index]
    std::vector<int> trans_max;
    for (int q = 2; q <= n; ++q) {
      for (int p = 1; p < q; ++p) {
        std::vector<int> im(static_cast<size_t>(n));
        for (int v = 1; v <= n; ++v) im[static_cast<size_t>(v) - 1] = v;
        std::swap(im[static_cast<size_t>(p) - 1], im[static_cast<size_t>(q) - 1]);
        Permutation t(im);
        std::vector<int> row(sz);
        for (size_t g = 0; g < sz; ++g) row[g] = idx.at(perms[g] * t);
        right_mul.push_back(std::move(row));
        trans_max.push_back(q);
      }
    }

    std::vector<std::vector<Int>> dp(static_cast<size_t>(L + 1), std::vector<Int>(sz, 0));
    dp[0][static_cast<size_t>(idx.at(Permutation::identity(n)))] = 1;
    for (int q = 2; q <= n; ++q) {
      for (long ll = 1; ll <= L; ++ll) {
        for (size_t g = 0; g < sz; ++g) {
          Int add = 0;
          for (size_t ti = 0; ti < right_mul.size(); ++ti) {
            if (trans_max[ti] != q) continue;
            add += dp[static_cast<size_t>(ll - 1)][static_cast<size_t>(right_mul[ti][g])];
          }
          dp[static_cast<size_t>(ll)][g] += add;
        }
      }
    }
    tab.max_l = L;
    tab.counts = std::move(dp);
  }
  return tab.counts[static_cast<size_t>(l)][static_cast<size_t>(perm_index(n).at(nu))];
}

}  // namespace

Int m_count(const Permutation& nu, long l, int k) {
  require(l >= 0 && k >= 0, "l and k must be >= 0");
  using Key = std::tuple<CycleType, long, int>;
  static std::mutex mu;
  static std::map<Key, Int> cache;
  Key key{nu.cycle_type(), l, k};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int result = m_count_dfs(nu, l, k);
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = result;
  return result;
}

Int p_coeff(const Permutation& nu, long l) {
  require(l >= 0, "l must be >= 0");
  const int n = nu.degree();
  if (n == 1) return (l == 0) ? 1 : 0;
  return monotone_count(n, l, nu);
}

LaurentSeries weingarten_series(const Permutation& nu, long order) {
  require(order >= 0, "order must be >= 0");
  const int n = nu.degree();
  const int len = nu.length();
  if (order < len) return LaurentSeries::zero(n + order);
  std::vector<Rat> coeffs;
  for (long l = len; l <= order; ++l) {
    Int p = p_coeff(nu, l);
    coeffs.emplace_back((l % 2 == 0) ? p : -p);
  }
  return LaurentSeries(n + len, std::move(coeffs), n + order);
}

Rat weingarten_exact(const CycleType& t, const Int& N) {
  const int n = t.n();
  require(N >= n, "Weingarten values are uniquely defined only for N >= n");

  using Key = std::pair<int, Int>;
  static std::mutex mu;
  static std::map<Key, std::map<CycleType, Rat>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, N});
    if (it != cache.end()) return it->second.at(t);
  }

  const auto types = all_cycle_types(n);
  const int m = static_cast<int>(types.size());
  // powers of N up to N^n
  std::vector<Int> npow(static_cast<size_t>(n) + 1);
  npow[0] = 1;
  for (int i = 1; i <= n; ++i) npow[static_cast<size_t>(i)] = npow[static_cast<size_t>(i) - 1] * N;

  // A[row sigma-class][col nu-class] = sum_{nu in C_beta} N^{#(nu^-1 sigma)}
  std::vector<std::vector<Rat>> aug(static_cast<size_t>(m),
                                    std::vector<Rat>(static_cast<size_t>(m) + 1, Rat(0)));
  for (int row = 0; row < m; ++row) {
    Permutation sigma = types[static_cast<size_t>(row)].representative();
    for (int col = 0; col < m; ++col) {
      Int sum = 0;
      for_each_in_class(types[static_cast<size_t>(col)], [&](const Permutation& nu) {
        sum += npow[static_cast<size_t>((nu.inverse() * sigma).num_cycles())];
      });
      aug[static_cast<size_t>(row)][static_cast<size_t>(col)] = Rat(sum);
    }
    aug[static_cast<size_t>(row)][static_cast<size_t>(m)] =
        Rat(types[static_cast<size_t>(row)].is_trivial() ? 1 : 0);
  }

  // exact Gaussian elimination
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int r = col; r < m; ++r)
      if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    require(pivot >= 0, "convolution system is singular");
    std::swap(aug[static_cast<size_t>(col)], aug[static_cast<size_t>(pivot)]);
    Rat inv = 1 / aug[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int c = col; c <= m; ++c) aug[static_cast<size_t>(col)][static_cast<size_t>(c)] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      Rat f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c <= m; ++c)
        aug[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * aug[static_cast<size_t>(col)][static_cast<size_t>(c)];
    }
  }

  std::map<CycleType, Rat> values;
  for (int i = 0; i < m; ++i)
    values[types[static_cast<size_t>(i)]] = aug[static_cast<size_t>(i)][static_cast<size_t>(m)];
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(Key{n, N}, std::move(values));
  return it->second.at(t);
}

Rat weingarten_exact(const Permutation& nu, const Int& N) {
  return weingarten_exact(nu.cycle_type(), N);
}

std::pair<Int, long> weingarten_asymptotic(const Permutation& nu) {
  return {moebius_nc(nu), nu.degree() + nu.length()};
}

}  // namespace tenwein
