#include "castle/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace castle {

// Partition ------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(Errc::Parse, "parts must be positive and weakly decreasing", i);
    }
  }
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  std::vector<int> t(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++t[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(t));
}

int Partition::hook(std::size_t r, int c) const noexcept {
  int leg = 0;
  for (std::size_t s = r + 1; s <= parts_.size() && parts_[s - 1] >= c; ++s) ++leg;
  return part(r) - c + leg + 1;
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (std::size_t r = 1; r <= inner.length(); ++r) {
    if (inner.part(r) > part(r)) return false;
  }
  return true;
}

BoundedPartition::BoundedPartition(Rank rank, Partition p)
    : rank_(rank), p_(std::move(p)) {
  if (!p_.empty() && p_.part(1) > rank_.k()) {
    throw Error(Errc::NotBounded, "part " + std::to_string(p_.part(1)) +
                                      " exceeds k = " + std::to_string(rank_.k()));
  }
}

CorePartition::CorePartition(Rank rank, Partition p)
    : rank_(rank), p_(std::move(p)) {
  for (std::size_t r = 1; r <= p_.length(); ++r) {
    for (int c = 1; c <= p_.part(r); ++c) {
      if (p_.hook(r, c) == rank_.size()) {
        throw Error(Errc::NotACore, "cell (" + std::to_string(r) + "," +
                                        std::to_string(c) + ") has hook " +
                                        std::to_string(rank_.size()));
      }
    }
  }
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 1; r <= outer.length(); ++r) {
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) {
      out.emplace_back(static_cast<int>(r), c);
    }
  }
  return out;
}

// Cores ----------------------------------------------------------------------

CorePartition to_core(const BoundedPartition& lambda) {
  const int k = lambda.rank().k();
  const auto& parts = lambda.parts();
  std::vector<int> core(parts.size(), 0);
  // From the last row up to row 1: shift right until the first of the
  // lambda_r cells has hook <= k.
  for (std::size_t r = parts.size(); r-- > 0;) {
    for (int shift = 0;; ++shift) {
      int leg = 0;
      for (std::size_t s = r + 1; s < parts.size() && core[s] > shift; ++s) ++leg;
      if (parts[r] + leg <= k) {
        core[r] = parts[r] + shift;
        break;
      }
    }
  }
  return CorePartition(lambda.rank(), Partition(std::move(core)));
}

BoundedPartition from_core(const CorePartition& mu) {
  const int k = mu.rank().k();
  const Partition& p = mu.partition();
  std::vector<int> rows;
  for (std::size_t r = 1; r <= p.length(); ++r) {
    int count = 0;
    for (int c = 1; c <= p.part(r); ++c) {
      if (p.hook(r, c) <= k) ++count;
    }
    rows.push_back(count);
  }
  return BoundedPartition(mu.rank(), Partition(std::move(rows)));
}

SkewShape k_boundary(const CorePartition& mu, int h) {
  const Partition& p = mu.partition();
  std::vector<int> inner;
  for (std::size_t r = 1; r <= p.length(); ++r) {
    int big = 0;
    for (int c = 1; c <= p.part(r); ++c) {
      if (p.hook(r, c) > h) ++big;
    }
    inner.push_back(big);
  }
  return {p, Partition(std::move(inner))};
}

std::vector<BoundedPartition> split_bounded_components(const CorePartition& mu) {
  const int k = mu.rank().k();
  const SkewShape b = k_boundary(mu, k);
  const std::size_t rows = b.outer.length();
  std::vector<BoundedPartition> out;
  if (rows == 0) return out;
  // Rows r and r+1 of the boundary share an edge iff row r+1 reaches past
  // the inner part of row r.
  std::vector<int> current;
  auto flush = [&] {
    std::reverse(current.begin(), current.end());
    out.emplace_back(mu.rank(), current);
    current.clear();
  };
  for (std::size_t r = rows; r >= 1; --r) {
    if (!current.empty()) {
      if (b.outer.part(r + 1) <= b.inner.part(r)) flush();
    }
    current.push_back(b.outer.part(r) - b.inner.part(r));
  }
  flush();
  return out;
}

std::vector<CorePartition> split_components(const CorePartition& mu) {
  std::vector<CorePartition> out;
  for (const auto& piece : split_bounded_components(mu)) {
    out.push_back(to_core(piece));
  }
  return out;
}

BoundedPartition k_conjugate_partition(const BoundedPartition& lambda) {
  const CorePartition c = to_core(lambda);
  return from_core(CorePartition(lambda.rank(), c.partition().transpose()));
}

bool dominates(const Partition& nu, const Partition& lambda) {
  if (nu.size() != lambda.size()) {
    throw Error(Errc::SizeMismatch, "dominance needs equal sizes");
  }
  int diff = 0;
  const std::size_t len = std::max(nu.length(), lambda.length());
  for (std::size_t i = 1; i <= len; ++i) {
    diff += nu.part(i) - lambda.part(i);
    if (diff < 0) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  // Interlacing: outer_{r+1} <= inner_r.
  for (std::size_t r = 1; r < outer.length(); ++r) {
    if (outer.part(r + 1) > inner.part(r)) return false;
  }
  return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (std::size_t r = 1; r <= outer.length(); ++r) {
    if (outer.part(r) - inner.part(r) > 1) return false;
  }
  return true;
}

// Grassmannian words ---------------------------------------------------------

Word grassmannian_word(const BoundedPartition& lambda, Direction d) {
  const Rank rank = lambda.rank();
  Word w(rank);
  if (d == Direction::Decreasing) {
    // Row r (0-based) is d over [-r, -r + lambda_r - 1]; top row first.
    const auto& parts = lambda.parts();
    for (std::size_t r = parts.size(); r-- > 0;) {
      const int rr = static_cast<int>(r);
      for (int c = parts[r] - 1; c >= 0; --c) w.push_back(rank.residue(c - rr));
    }
  } else {
    // Factor j (0-based, rightmost first) is u over [j + 1 - mu_j, j] with
    // mu the k-conjugate; leftmost factor first.
    const BoundedPartition conj = k_conjugate_partition(lambda);
    const auto& mu = conj.parts();
    for (std::size_t j = mu.size(); j-- > 0;) {
      const int jj = static_cast<int>(j);
      for (int v = jj + 1 - mu[j]; v <= jj; ++v) w.push_back(rank.residue(v));
    }
  }
  return w;
}

AffinePermutation grassmannian_perm(const BoundedPartition& lambda) {
  return AffinePermutation::from_word(
      grassmannian_word(lambda, Direction::Decreasing));
}

bool split_row_column_bound_check(const BoundedPartition& mu_left,
                                  const BoundedPartition& nu_right) {
  if (mu_left.rank() != nu_right.rank()) {
    throw Error(Errc::RankMismatch, "partition ranks differ");
  }
  if (mu_left.partition().empty() || nu_right.partition().empty()) return true;
  const BoundedPartition conj = k_conjugate_partition(mu_left);
  return conj.parts().back() + nu_right.parts().back() >= mu_left.rank().size();
}

std::vector<BoundedPartition> bounded_partitions(Rank rank, int n) {
  std::vector<BoundedPartition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.emplace_back(rank, cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, rank.k());
  return out;
}

}  // namespace castle
