#include "tenwein/permutation.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace tenwein {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  require(n >= 1, "permutation degree must be >= 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    require(v >= 1 && v <= n, "one-line entry out of range");
    require(!seen[static_cast<size_t>(v) - 1], "one-line entries must be distinct");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  require(n >= 1, "permutation degree must be >= 1");
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  require(degree() == rhs.degree(), "degree mismatch in composition");
  std::vector<int> im(images_.size());
  for (int s = 1; s <= degree(); ++s) im[static_cast<size_t>(s) - 1] = (*this)(rhs(s));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int s = 1; s <= degree(); ++s) im[static_cast<size_t>((*this)(s)) - 1] = s;
  return Permutation(std::move(im));
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g * (*this) * g.inverse();
}

int Permutation::num_cycles() const {
  int count = 0;
  std::vector<char> seen(images_.size(), 0);
  for (int s = 1; s <= degree(); ++s) {
    if (seen[static_cast<size_t>(s) - 1]) continue;
    ++count;
    for (int t = s; !seen[static_cast<size_t>(t) - 1]; t = (*this)(t))
      seen[static_cast<size_t>(t) - 1] = 1;
  }
  return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int s = 1; s <= degree(); ++s) {
    if (seen[static_cast<size_t>(s) - 1]) continue;
    std::vector<int> cyc;
    for (int t = s; !seen[static_cast<size_t>(t) - 1]; t = (*this)(t)) {
      seen[static_cast<size_t>(t) - 1] = 1;
      cyc.push_back(t);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(parts));
}

Permutation Permutation::restricted_to(const std::vector<int>& block) const {
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  require(!sorted.empty(), "restriction block must be non-empty");
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "restriction block has repeated elements");
  require(sorted.front() >= 1 && sorted.back() <= degree(),
          "restriction block out of range");
  // position of each original label inside the sorted block, 1-based
  std::unordered_map<int, int> pos;
  for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i) + 1;
  std::vector<int> im(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i) {
    int image = (*this)(sorted[i]);
    auto it = pos.find(image);
    require(it != pos.end(), "permutation does not stabilize the block");
    im[i] = it->second;
  }
  return Permutation(std::move(im));
}

Permutation Permutation::lifted_to(const std::vector<int>& block, int n) const {
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  require(static_cast<int>(sorted.size()) == degree(), "block size must match degree");
  require(sorted.empty() || (sorted.front() >= 1 && sorted.back() <= n),
          "lift block out of range");
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  for (size_t i = 0; i < sorted.size(); ++i)
    im[static_cast<size_t>(sorted[i]) - 1] = sorted[static_cast<size_t>((*this)(static_cast<int>(i) + 1)) - 1];
  return Permutation(std::move(im));
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) require(p >= 1, "cycle type parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int CycleType::n() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> CycleType::multiplicities() const {
  std::map<int, int> d;
  for (int p : parts_) ++d[p];
  return d;
}

Int CycleType::class_size() const {
  Int denom = 1;
  for (auto [p, dp] : multiplicities())
    denom *= pow_int(Int(p), static_cast<unsigned long>(dp)) * factorial(dp);
  return factorial(n()) / denom;
}

Permutation CycleType::representative() const {
  const int nn = n();
  require(nn >= 1, "empty cycle type has no representative");
  std::vector<int> im(static_cast<size_t>(nn));
  int start = 1;
  for (int p : parts_) {
    for (int i = 0; i < p; ++i)
      im[static_cast<size_t>(start + i) - 1] = start + (i + 1) % p;
    start += p;
  }
  return Permutation(std::move(im));
}

bool CycleType::is_trivial() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  require(n >= 1, "degree must be >= 1");
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  do {
    fn(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
}

void for_each_in_class(const CycleType& t, const std::function<void(const Permutation&)>& fn) {
  for_each_permutation(t.n(), [&](const Permutation& p) {
    if (p.cycle_type() == t) fn(p);
  });
}

std::vector<Permutation> all_permutations(int n) {
  // S_n for small n is reused everywhere; cache per degree.
  static std::mutex mu;
  static std::unordered_map<int, std::vector<Permutation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  cache[n] = out;
  return out;
}

std::vector<Permutation> conjugacy_class(const CycleType& t) {
  std::vector<Permutation> out;
  for_each_in_class(t, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<CycleType> all_cycle_types(int n) {
  require(n >= 1, "n must be >= 1");
  std::vector<CycleType> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

}  // namespace tenwein
