#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "tenwein/errors.hpp"
#include "tenwein/numeric.hpp"

namespace tenwein {

class CycleType;

/// Element of S_n in one-line notation with 1-based labels.
///
/// The composition convention is (a*b)(s) = a(b(s)), matching the face-walk
/// reading of products of permutations on combinatorial maps.
class Permutation {
 public:
  Permutation() : images_{1} {}
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int s) const { return images_[static_cast<size_t>(s) - 1]; }

  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  // g * this * g^{-1}
  Permutation conjugated_by(const Permutation& g) const;

  int num_cycles() const;
  // Minimal number of transpositions; equals degree() - num_cycles().
  int length() const { return degree() - num_cycles(); }

  // Disjoint cycles; each starts at its smallest element, cycles ordered by
  // smallest element, fixed points included.
  std::vector<std::vector<int>> cycles() const;
  CycleType cycle_type() const;

  // Restriction to a stabilized block, re-indexed to {1..|block|} by
  // increasing original label. Throws DomainError if p(block) != block.
  Permutation restricted_to(const std::vector<int>& block) const;

  // Trivial lift: this acts on {1..|block|}; returns the element of S_n acting
  // on block (ordered increasingly) and fixing its complement.
  Permutation lifted_to(const std::vector<int>& block, int n) const;

  const std::vector<int>& one_line() const { return images_; }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;  // images_[i-1] = p(i), values in 1..n
};

/// Integer partition of n recording cycle lengths; labels a conjugacy class.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);

  int n() const;
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int length() const { return n() - num_parts(); }
  // parts sorted descending
  const std::vector<int>& parts() const { return parts_; }
  // d_p: multiplicity of each part size
  std::map<int, int> multiplicities() const;

  // |C_alpha| = n! / prod_p p^{d_p} d_p!
  Int class_size() const;

  // Canonical representative: (1..p_1)(p_1+1..p_1+p_2)...
  Permutation representative() const;

  // All parts equal to 1 (identity class).
  bool is_trivial() const;

  auto operator<=>(const CycleType&) const = default;
  bool operator==(const CycleType&) const = default;

 private:
  std::vector<int> parts_;
};

// Visit all of S_n in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

// Visit every permutation of cycle type t exactly once.
void for_each_in_class(const CycleType& t, const std::function<void(const Permutation&)>& fn);

std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> conjugacy_class(const CycleType& t);

// All integer partitions of n, lexicographically by descending parts.
std::vector<CycleType> all_cycle_types(int n);

}  // namespace tenwein

template <>
struct std::hash<tenwein::Permutation> {
  size_t operator()(const tenwein::Permutation& p) const noexcept {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : p.one_line()) h = h * 1099511628211ull + static_cast<size_t>(v);
    return h;
  }
};

template <>
struct std::hash<tenwein::CycleType> {
  size_t operator()(const tenwein::CycleType& t) const noexcept {
    size_t h = 0x517cc1b727220a95ull;
    for (int v : t.parts()) h = h * 1099511628211ull + static_cast<size_t>(v);
    return h;
  }
};
