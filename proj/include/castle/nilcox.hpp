#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "castle/affine.hpp"
#include "castle/bigint.hpp"
#include "castle/shapes.hpp"

namespace castle {

// x y in the nil-Coxeter monoid: the group product when lengths add,
// nullopt (zero) otherwise.
std::optional<AffinePermutation> monoid_product(const AffinePermutation& x,
                                                const AffinePermutation& y);

// Finite integer combination of affine permutations; zero coefficients are
// never stored.
class NilCoxSum {
 public:
  using Terms = std::map<AffinePermutation, BigInt>;

  explicit NilCoxSum(Rank rank) : rank_(rank) {}
  static NilCoxSum one(Rank rank);
  static NilCoxSum monomial(const AffinePermutation& x, const BigInt& c = 1);

  Rank rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const AffinePermutation& x, const BigInt& c);
  NilCoxSum& operator+=(const NilCoxSum& other);
  NilCoxSum& operator-=(const NilCoxSum& other);

  friend NilCoxSum operator+(NilCoxSum a, const NilCoxSum& b) { return a += b; }
  friend NilCoxSum operator-(NilCoxSum a, const NilCoxSum& b) { return a -= b; }
  friend NilCoxSum operator*(const NilCoxSum& a, const NilCoxSum& b);
  friend bool operator==(const NilCoxSum&, const NilCoxSum&) = default;

 private:
  void check_rank(Rank other) const;

  Rank rank_;
  Terms terms_;
};

NilCoxSum nil_multiply(const NilCoxSum& f, const NilCoxSum& g);

// Sum of d_A (resp. u_A) over all A with |A| = i.
NilCoxSum h(Rank rank, int i);
NilCoxSum e(Rank rank, int i);
NilCoxSum h_lambda(const BoundedPartition& lambda);
NilCoxSum e_lambda(const BoundedPartition& lambda);

BigInt coefficient(const NilCoxSum& f, const AffinePermutation& x);

// nu / lambda is a horizontal strip and nu^(k) / lambda^(k) a vertical strip.
bool weak_strip(const BoundedPartition& lambda, const BoundedPartition& nu);

// k-bounded nu containing mu with nu / mu a weak strip of `boxes` cells.
std::vector<BoundedPartition> weak_strip_growths(const BoundedPartition& mu,
                                                 int boxes);

// Memoized k-Schur functions.  Not synchronized: build first, then share
// read-only.
class KSchurTable {
 public:
  explicit KSchurTable(Rank rank) : rank_(rank) {}
  Rank rank() const noexcept { return rank_; }
  const NilCoxSum& get(const BoundedPartition& lambda);
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  Rank rank_;
  std::map<BoundedPartition, NilCoxSum> entries_;
};

NilCoxSum k_schur(const BoundedPartition& lambda, KSchurTable& table);

// The unique term x of f with D_R(x) contained in {i}.
AffinePermutation dominant_summand(const NilCoxSum& f, int i);

bool is_left_compatible(const AffinePermutation& x, const AffinePermutation& y);

struct SplitMismatch {
  std::vector<BoundedPartition> grouping;
  AffinePermutation term;
  BigInt lhs;
  BigInt rhs;
};

struct SplitReport {
  enum class Status { Trivial, Equal, Mismatch };
  Status status = Status::Trivial;
  // Components of the k-boundary, top piece first.
  std::vector<BoundedPartition> components;
  std::size_t groupings_checked = 0;
  std::optional<SplitMismatch> mismatch;
};

// Checks s_lambda = prod s_factor for every grouping of consecutive
// boundary components into factors.
SplitReport verify_split_product(const BoundedPartition& lambda,
                                 KSchurTable& table);

}  // namespace castle
