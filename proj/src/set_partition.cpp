#include "tenwein/set_partition.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace tenwein {

namespace {
// Union-find over 0-based indices.
struct UF {
  std::vector<int> parent;
  explicit UF(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  }
};
}  // namespace

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  require(n >= 1, "ground-set size must be >= 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int covered = 0;
  for (auto& b : blocks_) {
    require(!b.empty(), "blocks must be non-empty");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      require(v >= 1 && v <= n, "block element out of range");
      require(!seen[static_cast<size_t>(v) - 1], "blocks must be disjoint");
      seen[static_cast<size_t>(v) - 1] = 1;
      ++covered;
    }
  }
  require(covered == n, "blocks must cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::finest(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one_block(int n) {
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return SetPartition(n, {all});
}

SetPartition SetPartition::from_block_ids(int n, const std::vector<int>& ids) {
  require(static_cast<int>(ids.size()) == n, "ids size must be n");
  std::unordered_map<int, std::vector<int>> groups;
  for (int i = 1; i <= n; ++i) groups[ids[static_cast<size_t>(i) - 1]].push_back(i);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(groups.size());
  for (auto& [id, b] : groups) blocks.push_back(std::move(b));
  return SetPartition(n, std::move(blocks));
}

int SetPartition::block_index_of(int element) const {
  require(element >= 1 && element <= n_, "element out of range");
  for (int i = 0; i < num_blocks(); ++i)
    if (std::binary_search(blocks_[static_cast<size_t>(i)].begin(),
                           blocks_[static_cast<size_t>(i)].end(), element))
      return i;
  throw InternalError("partition does not cover element");
}

bool SetPartition::refines(const SetPartition& coarser) const {
  require(n_ == coarser.n_, "ground-set size mismatch");
  std::vector<int> owner(static_cast<size_t>(n_));
  for (int i = 0; i < coarser.num_blocks(); ++i)
    for (int v : coarser.block(i)) owner[static_cast<size_t>(v) - 1] = i;
  for (const auto& b : blocks_) {
    int o = owner[static_cast<size_t>(b.front()) - 1];
    for (int v : b)
      if (owner[static_cast<size_t>(v) - 1] != o) return false;
  }
  return true;
}

SetPartition SetPartition::join(const SetPartition& other) const {
  require(n_ == other.n_, "ground-set size mismatch");
  UF uf(n_);
  for (const auto& b : blocks_)
    for (size_t i = 1; i < b.size(); ++i) uf.unite(b[0] - 1, b[i] - 1);
  for (const auto& b : other.blocks_)
    for (size_t i = 1; i < b.size(); ++i) uf.unite(b[0] - 1, b[i] - 1);
  std::vector<int> ids(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) ids[static_cast<size_t>(i)] = uf.find(i);
  return from_block_ids(n_, ids);
}

int SetPartition::blocks_within(const std::vector<int>& elements) const {
  std::vector<char> in(static_cast<size_t>(n_), 0);
  for (int v : elements) {
    require(v >= 1 && v <= n_, "element out of range");
    in[static_cast<size_t>(v) - 1] = 1;
  }
  int count = 0;
  for (const auto& b : blocks_) {
    bool first_in = in[static_cast<size_t>(b.front()) - 1];
    for (int v : b)
      require(in[static_cast<size_t>(v) - 1] == first_in,
              "element set is not a union of blocks");
    if (first_in) ++count;
  }
  return count;
}

Int moebius(const SetPartition& sub, const SetPartition& sup) {
  require(sub.refines(sup), "moebius requires sub <= sup");
  Int result = 1;
  for (const auto& b : sup.blocks()) {
    int k = sub.blocks_within(b);
    Int f = factorial(k - 1);
    result *= (k % 2 == 1) ? f : -f;
  }
  return result;
}

Int moebius_to_top(const SetPartition& pi) {
  int k = pi.num_blocks();
  Int f = factorial(k - 1);
  return (k % 2 == 1) ? f : -f;
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn) {
  require(n >= 1, "n must be >= 1");
  // restricted growth strings: a[0]=0, a[i] <= max(a[0..i-1]) + 1
  std::vector<int> a(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxid) {
    if (i == n) {
      fn(SetPartition::from_block_ids(n, a));
      return;
    }
    for (int id = 0; id <= maxid + 1; ++id) {
      a[static_cast<size_t>(i)] = id;
      rec(i + 1, std::max(maxid, id));
    }
  };
  a[0] = 0;
  rec(1, 0);
}

std::vector<SetPartition> all_partitions(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::vector<SetPartition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  cache[n] = out;
  return out;
}

void for_each_coarser(const SetPartition& base,
                      const std::function<void(const SetPartition&)>& fn) {
  const int k = base.num_blocks();
  // partitions of the block set, flattened back to {1..n}
  for_each_partition(k, [&](const SetPartition& grouping) {
    std::vector<std::vector<int>> blocks;
    for (const auto& group : grouping.blocks()) {
      std::vector<int> merged;
      for (int bi : group) {
        const auto& b = base.block(bi - 1);
        merged.insert(merged.end(), b.begin(), b.end());
      }
      blocks.push_back(std::move(merged));
    }
    fn(SetPartition(base.n(), std::move(blocks)));
  });
}

std::vector<SetPartition> coarser_partitions(const SetPartition& base) {
  std::vector<SetPartition> out;
  for_each_coarser(base, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

SetPartition cycle_partition(const Permutation& nu) {
  return SetPartition(nu.degree(), nu.cycles());
}

SetPartition transitivity_partition(const std::vector<Permutation>& ps) {
  require(!ps.empty(), "transitivity partition of an empty list has undefined n");
  return transitivity_partition(ps, ps.front().degree());
}

SetPartition transitivity_partition(const std::vector<Permutation>& ps, int n) {
  UF uf(n);
  for (const auto& p : ps) {
    require(p.degree() == n, "degree mismatch");
    for (int s = 1; s <= n; ++s) uf.unite(s - 1, p(s) - 1);
  }
  std::vector<int> ids(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = uf.find(i);
  return SetPartition::from_block_ids(n, ids);
}

}  // namespace tenwein
