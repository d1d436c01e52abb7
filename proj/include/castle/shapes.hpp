#pragma once

#include <cstddef>
#include <vector>

#include "castle/affine.hpp"
#include "castle/kcode.hpp"

namespace castle {

// Weakly decreasing positive parts; row 1 is the longest (drawn at the
// bottom).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept;
  // Part r (1-based); 0 beyond the last row.
  int part(std::size_t r) const noexcept {
    return r >= 1 && r <= parts_.size() ? parts_[r - 1] : 0;
  }
  Partition transpose() const;
  // Hook length of cell (row r, column c), both 1-based.
  int hook(std::size_t r, int c) const noexcept;
  bool contains(const Partition& inner) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

class BoundedPartition {
 public:
  BoundedPartition(Rank rank, Partition p);
  BoundedPartition(Rank rank, std::vector<int> parts)
      : BoundedPartition(rank, Partition(std::move(parts))) {}

  Rank rank() const noexcept { return rank_; }
  const Partition& partition() const noexcept { return p_; }
  const std::vector<int>& parts() const noexcept { return p_.parts(); }
  int size() const noexcept { return p_.size(); }

  friend bool operator==(const BoundedPartition&,
                         const BoundedPartition&) = default;
  friend auto operator<=>(const BoundedPartition&,
                          const BoundedPartition&) = default;

 private:
  Rank rank_;
  Partition p_;
};

class CorePartition {
 public:
  CorePartition(Rank rank, Partition p);

  Rank rank() const noexcept { return rank_; }
  const Partition& partition() const noexcept { return p_; }
  const std::vector<int>& parts() const noexcept { return p_.parts(); }

  friend bool operator==(const CorePartition&, const CorePartition&) = default;

 private:
  Rank rank_;
  Partition p_;
};

struct SkewShape {
  Partition outer;
  Partition inner;
  // Cells (row, column), 1-based, row by row.
  std::vector<std::pair<int, int>> cells() const;
};

CorePartition to_core(const BoundedPartition& lambda);
BoundedPartition from_core(const CorePartition& mu);

// Cells of mu with hook <= h.
SkewShape k_boundary(const CorePartition& mu, int h);

// Connected pieces of the k-boundary, from the top-left piece (highest rows)
// down to the piece containing row 1, as bounded partitions and as cores.
std::vector<BoundedPartition> split_bounded_components(const CorePartition& mu);
std::vector<CorePartition> split_components(const CorePartition& mu);

BoundedPartition k_conjugate_partition(const BoundedPartition& lambda);

// Partial-sum dominance; sizes must agree.
bool dominates(const Partition& nu, const Partition& lambda);

bool is_horizontal_strip(const Partition& outer, const Partition& inner);
bool is_vertical_strip(const Partition& outer, const Partition& inner);

Word grassmannian_word(const BoundedPartition& lambda, Direction d);
AffinePermutation grassmannian_perm(const BoundedPartition& lambda);

// min part of mu^(k) + min part of nu >= k+1.
bool split_row_column_bound_check(const BoundedPartition& mu_left,
                                  const BoundedPartition& nu_right);

// All k-bounded partitions of n, in decreasing lexicographic order.
std::vector<BoundedPartition> bounded_partitions(Rank rank, int n);

}  // namespace castle
