#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "castle/error.hpp"

namespace castle {

// The group is the affine symmetric group with window size k+1; residues
// (node labels of the affine Dynkin diagram) live in {0, ..., k}.
class Rank {
 public:
  static constexpr int kMax = 62;

  explicit Rank(int k);

  int k() const noexcept { return k_; }
  int size() const noexcept { return k_ + 1; }
  int residue(std::int64_t value) const noexcept {
    std::int64_t n = size();
    return static_cast<int>(((value % n) + n) % n);
  }

  friend bool operator==(Rank, Rank) = default;
  friend auto operator<=>(Rank, Rank) = default;

 private:
  int k_;
};

// A subset of Z/(k+1), stored as a bitmask.  Arbitrary subsets (including I
// itself) are representable; `is_proper()` tells them apart.  Operations that
// require a proper subset check it at their own boundary.
class ResidueSet {
 public:
  explicit ResidueSet(Rank rank) : rank_(rank) {}
  ResidueSet(Rank rank, std::initializer_list<int> members);
  ResidueSet(Rank rank, std::span<const int> members);

  static ResidueSet full(Rank rank);

  Rank rank() const noexcept { return rank_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int r) const noexcept {
    return (mask_ >> rank_.residue(r)) & 1U;
  }
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool is_proper() const noexcept { return size() < rank_.size(); }

  ResidueSet with(int r) const;
  ResidueSet without(int r) const;
  // {a + m : a in this}
  ResidueSet shifted(int m) const;
  ResidueSet united(const ResidueSet& other) const;
  ResidueSet intersected(const ResidueSet& other) const;
  bool subset_of(const ResidueSet& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  // Members in increasing numeric order.
  std::vector<int> members() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
  friend auto operator<=>(const ResidueSet&, const ResidueSet&) = default;

 private:
  Rank rank_;
  std::uint64_t mask_ = 0;
};

// A finite sequence of generator indices; [w1, ..., wl] denotes s_{w1}...s_{wl}.
class Word {
 public:
  explicit Word(Rank rank) : rank_(rank) {}
  Word(Rank rank, std::vector<int> letters);
  Word(Rank rank, std::initializer_list<int> letters)
      : Word(rank, std::vector<int>(letters)) {}

  Rank rank() const noexcept { return rank_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  Word reversed() const;
  // Letterwise Dynkin rotation: every letter shifted by m modulo k+1.
  Word shifted(int m) const;
  Word concatenated(const Word& tail) const;
  void push_back(int letter);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  Rank rank_;
  std::vector<int> letters_;
};

class AffinePermutation {
 public:
  static AffinePermutation identity(Rank rank);
  // Validates length, the window sum (k+2)(k+1)/2 and distinct residues.
  static AffinePermutation from_window(Rank rank,
                                       std::span<const std::int64_t> window);
  static AffinePermutation from_window(Rank rank,
                                       std::initializer_list<std::int64_t> w) {
    return from_window(rank, std::span<const std::int64_t>(w.begin(), w.size()));
  }
  // The group product s_{w1}...s_{wl}; always defined, not necessarily reduced.
  static AffinePermutation from_word(const Word& word);

  Rank rank() const noexcept { return rank_; }
  const std::vector<std::int64_t>& window() const noexcept { return window_; }

  // x(i) for any integer i, by x(i + k + 1) = x(i) + k + 1.
  std::int64_t operator()(std::int64_t i) const noexcept;
  std::int64_t value_at(std::int64_t i) const noexcept { return (*this)(i); }
  // x^{-1}(v).
  std::int64_t position_of(std::int64_t value) const noexcept;

  bool is_identity() const noexcept;
  std::size_t length() const noexcept;

  ResidueSet right_descents() const;
  ResidueSet left_descents() const;
  bool has_right_descent(int i) const noexcept;
  bool has_left_descent(int i) const noexcept;

  // x * s_i: exchanges the values in positions i and i+1 (mod k+1).
  AffinePermutation times_right(int i) const;
  // s_i * x: exchanges the values i and i+1 (mod k+1).
  AffinePermutation times_left(int i) const;

  AffinePermutation inverse() const;
  // Psi^m: every letter of a reduced word shifted by m.
  AffinePermutation dynkin_rotate(int m) const;

  // A reduced word, obtained by repeatedly peeling the smallest right descent.
  Word reduced_word() const;

  friend bool operator==(const AffinePermutation&,
                         const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&,
                          const AffinePermutation&) = default;

 private:
  AffinePermutation(Rank rank, std::vector<std::int64_t> window)
      : rank_(rank), window_(std::move(window)) {}

  Rank rank_;
  std::vector<std::int64_t> window_;
};

// Composition (x*y)(i) = x(y(i)).
AffinePermutation group_product(const AffinePermutation& x,
                                const AffinePermutation& y);
inline AffinePermutation operator*(const AffinePermutation& x,
                                   const AffinePermutation& y) {
  return group_product(x, y);
}

bool is_reduced(const Word& word);

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& x) const noexcept;
};

}  // namespace castle
