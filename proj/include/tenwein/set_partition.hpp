#pragma once

#include <functional>
#include <vector>

#include "tenwein/numeric.hpp"
#include "tenwein/permutation.hpp"

namespace tenwein {

/// Partition of {1..n} in canonical form: blocks ordered by smallest element,
/// elements sorted within each block.
class SetPartition {
 public:
  SetPartition() : n_(1), blocks_{{1}} {}
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  static SetPartition finest(int n);
  static SetPartition one_block(int n);
  // ids[i] is an arbitrary block label for element i+1
  static SetPartition from_block_ids(int n, const std::vector<int>& ids);

  int n() const { return n_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_[static_cast<size_t>(i)]; }
  int block_index_of(int element) const;

  // refinement order: every block of *this inside some block of coarser
  bool refines(const SetPartition& coarser) const;
  // finest partition coarser than both
  SetPartition join(const SetPartition& other) const;

  // Number of blocks of *this contained in the given element set (which must
  // be a union of blocks of *this).
  int blocks_within(const std::vector<int>& elements) const;

  auto operator<=>(const SetPartition&) const = default;
  bool operator==(const SetPartition&) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

// Moebius function of the partition lattice,
//   lambda_{sub,sup} = prod_{B in sup} (-1)^{|sub_B|-1} (|sub_B|-1)!
// Throws DomainError unless sub refines sup.
Int moebius(const SetPartition& sub, const SetPartition& sup);

// lambda_{pi,1_n} = (-1)^{|pi|-1} (|pi|-1)!
Int moebius_to_top(const SetPartition& pi);

// All Bell(n) partitions of {1..n}, via restricted growth strings.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn);
std::vector<SetPartition> all_partitions(int n);

// All partitions coarser than base (base <= pi), exactly Bell(|base|) of them,
// obtained by partitioning the block set of base and flattening.
void for_each_coarser(const SetPartition& base,
                      const std::function<void(const SetPartition&)>& fn);
std::vector<SetPartition> coarser_partitions(const SetPartition& base);

// Pi(nu): partition into the cycles of nu.
SetPartition cycle_partition(const Permutation& nu);

// Orbits of the group generated by ps; all degrees must agree. An empty list
// is rejected (the ground set would be undefined).
SetPartition transitivity_partition(const std::vector<Permutation>& ps);
// Same, with explicit ground-set size; empty list gives the finest partition.
SetPartition transitivity_partition(const std::vector<Permutation>& ps, int n);

}  // namespace tenwein

template <>
struct std::hash<tenwein::SetPartition> {
  size_t operator()(const tenwein::SetPartition& sp) const noexcept {
    size_t h = 0xff51afd7ed558ccdull ^ static_cast<size_t>(sp.n());
    for (const auto& b : sp.blocks()) {
      h = h * 1099511628211ull + 0x2545f4914f6cdd1dull;
      for (int v : b) h = h * 1099511628211ull + static_cast<size_t>(v);
    }
    return h;
  }
};
