#include "tenwein/constellation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace tenwein {

Constellation::Constellation(int n, std::vector<Permutation> perms)
    : n_(n), perms_(std::move(perms)) {
  require(n >= 1, "degree must be >= 1");
  for (const auto& p : perms_) require(p.degree() == n, "degree mismatch");
}

Permutation Constellation::product() const {
  Permutation prod = Permutation::identity(n_);
  for (const auto& p : perms_) prod = prod * p;
  return prod;
}

SetPartition Constellation::orbit_partition() const {
  return transitivity_partition(perms_, n_);
}

int Constellation::total_length() const {
  int l = 0;
  for (const auto& p : perms_) l += p.length();
  return l;
}

bool Constellation::is_connected() const { return orbit_partition().num_blocks() == 1; }

bool Constellation::is_proper() const {
  return std::none_of(perms_.begin(), perms_.end(),
                      [](const Permutation& p) { return p.is_identity(); });
}

int Constellation::genus() const {
  int sum_cycles = 0;
  for (const auto& p : perms_) sum_cycles += p.num_cycles();
  int chi = sum_cycles - n_ * (flavors() - 1) + product().num_cycles();
  int twice_g = 2 * orbit_partition().num_blocks() - chi;
  check_invariant(twice_g >= 0 && twice_g % 2 == 0, "Euler defect must be even and >= 0");
  return twice_g / 2;
}

void for_each_factorization(const Permutation& nu, int k, const FactorizationFilter& filter,
                            const std::function<void(const Constellation&)>& fn) {
  const int n = nu.degree();
  require(k >= 0, "k must be >= 0");
  if (k == 0) {
    if (!nu.is_identity()) return;
    Constellation c(n, {});
    if (filter.total_length && *filter.total_length != 0) return;
    if (filter.transitive && n != 1) return;
    fn(c);
    return;
  }
  const auto perms = all_permutations(n);
  const int min_len = filter.proper ? 1 : 0;
  std::vector<Permutation> prefix;
  prefix.reserve(static_cast<size_t>(k));

  std::function<void(const Permutation&, long)> rec = [&](const Permutation& prefix_prod,
                                                          long used) {
    const int j = static_cast<int>(prefix.size());
    if (j == k - 1) {
      Permutation last = prefix_prod.inverse() * nu;
      if (filter.proper && last.is_identity()) return;
      if (filter.total_length && used + last.length() != *filter.total_length) return;
      prefix.push_back(std::move(last));
      Constellation c(n, prefix);
      prefix.pop_back();
      if (filter.transitive && !c.is_connected()) return;
      fn(c);
      return;
    }
    for (const auto& rho : perms) {
      const int len = rho.length();
      if (len < min_len) continue;
      if (filter.total_length &&
          used + len + static_cast<long>(k - j - 1) * min_len > *filter.total_length)
        continue;
      prefix.push_back(rho);
      rec(prefix_prod * rho, used + len);
      prefix.pop_back();
    }
  };
  rec(Permutation::identity(n), 0);
}

namespace {

Int catalan(int m) { return binomial(2 * m, m) / (m + 1); }

Rat planar_count_rat(const CycleType& t, int k) {
  const int n = t.n();
  const int cyc = t.num_parts();
  // k = 0: the empty constellation is connected only on a single element
  if (k == 0) return Rat(cyc == n && n == 1 ? 1 : 0);
  if (k == 1) return Rat(cyc == 1 ? 1 : 0);
  long m = static_cast<long>(k - 1) * n;
  Rat r = Rat(k) * Rat(factorial(m - 1)) / Rat(factorial(m - cyc + 2));
  for (auto [p, dp] : t.multiplicities())
    r *= rat_pow(Rat(Int(p) * binomial(static_cast<long>(k) * p - 1, p)), dp);
  return r;
}

}  // namespace

Int planar_count(const CycleType& t, int k) {
  Rat r = planar_count_rat(t, k);
  check_invariant(r.get_den() == 1, "planar constellation count must be integral");
  return r.get_num();
}

Int planar_count(const Permutation& nu, int k) { return planar_count(nu.cycle_type(), k); }

Int planar_proper_count(const CycleType& t, int k) {
  require(k >= 0, "k must be >= 0");
  Rat total(0);
  for (int j = 0; j <= k; ++j) {
    Rat term = Rat(binomial(k, j)) * planar_count_rat(t, j);
    total += ((k + j) % 2 == 0) ? term : -term;
  }
  check_invariant(total.get_den() == 1, "proper planar count must be integral");
  return total.get_num();
}

Int planar_proper_count(const Permutation& nu, int k) {
  return planar_proper_count(nu.cycle_type(), k);
}

Int gamma_alternating(const CycleType& t) {
  const int n = t.n();
  const int len = t.length();
  long arg = 3L * n - len - 3;
  check_invariant(arg >= 0, "factorial argument 3n-||nu||-3 must be >= 0");
  Rat r = Rat(factorial(arg)) / Rat(factorial(2L * n));
  for (auto [p, dp] : t.multiplicities())
    r *= rat_pow(Rat(factorial(2L * p)) / Rat(factorial(p) * factorial(p - 1)), dp);
  if (len % 2 != 0) r = -r;
  check_invariant(r.get_den() == 1, "gamma(nu) must be integral");
  return r.get_num();
}

Int gamma_alternating(const Permutation& nu) { return gamma_alternating(nu.cycle_type()); }

Int moebius_nc(const CycleType& t) {
  Int m = 1;
  for (auto [p, dp] : t.multiplicities()) {
    Int factor = catalan(p - 1);
    if (p % 2 == 0) factor = -factor;
    m *= pow_int(factor, static_cast<unsigned long>(dp));
  }
  return m;
}

Int moebius_nc(const Permutation& nu) { return moebius_nc(nu.cycle_type()); }

namespace {

// counting DFS behind connected_factorization_count, without materializing
// Constellation values
Int count_connected(const Permutation& nu, long l, int k, bool proper) {
  const int n = nu.degree();
  if (k == 0) return (nu.is_identity() && l == 0 && n == 1) ? 1 : 0;
  const auto& perms = all_permutations(n);
  const int min_len = proper ? 1 : 0;
  Int count = 0;
  std::vector<const Permutation*> factors(static_cast<size_t>(k), nullptr);

  std::function<void(int, const Permutation&, long)> rec =
      [&](int j, const Permutation& prefix_prod, long used) {
        if (j == k - 1) {
          Permutation last = prefix_prod.inverse() * nu;
          if (proper && last.is_identity()) return;
          if (used + last.length() != l) return;
          factors[static_cast<size_t>(j)] = &last;
          std::vector<Permutation> all;
          all.reserve(static_cast<size_t>(k));
          for (auto* f : factors) all.push_back(*f);
          if (transitivity_partition(all, n).num_blocks() == 1) ++count;
          return;
        }
        for (const auto& rho : perms) {
          const int len = rho.length();
          if (len < min_len) continue;
          if (used + len + static_cast<long>(k - j - 1) * min_len > l) continue;
          factors[static_cast<size_t>(j)] = &rho;
          rec(j + 1, prefix_prod * rho, used + len);
        }
      };
  rec(0, Permutation::identity(n), 0);
  return count;
}

}  // namespace

Int connected_factorization_count(const Permutation& nu, long l, int k, bool proper) {
  require(l >= 0 && k >= 0, "l and k must be >= 0");
  // counts are class functions: conjugating every factor by g is a bijection
  using Key = std::tuple<CycleType, long, int, bool>;
  static std::mutex mu;
  static std::map<Key, Int> cache;
  Key key{nu.cycle_type(), l, k, proper};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int result = count_connected(nu, l, k, proper);
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = result;
  return result;
}

Int gamma_l(const Permutation& nu, long l) {
  Int total = 0;
  for (long k = 0; k <= l; ++k) {
    Int c = connected_factorization_count(nu, l, static_cast<int>(k), true);
    total += (k % 2 == 0) ? c : -c;
  }
  return total;
}

}  // namespace tenwein
