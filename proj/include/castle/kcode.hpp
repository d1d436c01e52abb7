#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "castle/affine.hpp"
#include "castle/cyclic.hpp"

namespace castle {

// Weak composition (alpha_0, ..., alpha_k) with at least one zero entry.
class KCode {
 public:
  KCode(Rank rank, std::vector<int> entries);
  static KCode zero(Rank rank);

  Rank rank() const noexcept { return rank_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(rank_.residue(i))]; }
  // Number of boxes.
  std::size_t size() const noexcept;
  int height() const noexcept;
  // Smallest column index holding zero boxes.
  int first_zero() const noexcept;

  friend bool operator==(const KCode&, const KCode&) = default;
  friend auto operator<=>(const KCode&, const KCode&) = default;

 private:
  Rank rank_;
  std::vector<int> entries_;
};

enum class Direction { Decreasing, Increasing };
enum class Side { Right, Left };

// Rows A_1, ..., A_n.  Reassembly:
//   decreasing/right  d_{A_n} ... d_{A_1}
//   increasing/right  u_{A_n} ... u_{A_1}
//   decreasing/left   d_{A_1} ... d_{A_n}
//   increasing/left   u_{A_1} ... u_{A_n}
struct CyclicDecomposition {
  Rank rank;
  std::vector<ResidueSet> rows;
  Direction direction = Direction::Decreasing;
  Side side = Side::Right;

  // Factors in left-to-right product order.
  std::vector<ResidueSet> factors_left_to_right() const;
  Word word() const;
  AffinePermutation element() const;
  std::vector<int> shape() const;
};

// Residue carried by cell (column i, row j >= 1) of the filling that belongs
// to the given decomposition type: i - j + 1 for decreasing/right and
// increasing/left, i + j - 1 for the other two.
int filling_residue(Rank rank, Direction d, Side s, int i, int j);

ResidueSet max_right_set(const AffinePermutation& x);
ResidueSet max_left_set(const AffinePermutation& x);

CyclicDecomposition canonical_decomposition(const AffinePermutation& x,
                                            Direction d, Side s);

// True iff the rows satisfy the shifted containment of a maximal
// decomposition of their type.
bool is_maximal(const CyclicDecomposition& dec);

// d_B d_A = d_{B'} d_{A'} with B' + 1 contained in A'; nullopt when the
// product is zero.
std::optional<std::pair<ResidueSet, ResidueSet>> two_row_maximize(
    const ResidueSet& b, const ResidueSet& a);

KCode code_of(const CyclicDecomposition& dec);
// Rows of the filling of a code for the given decomposition type.
CyclicDecomposition decomposition_of(const KCode& code, Direction d, Side s);

KCode rd(const AffinePermutation& x);
KCode ri(const AffinePermutation& x);
KCode ld(const AffinePermutation& x);
KCode li(const AffinePermutation& x);

enum class AffineCodeVariant { CRD, CRI, CLD, CLI };
KCode affine_code(const AffinePermutation& x, AffineCodeVariant v);

// The unique x with rd(x) = code.
AffinePermutation code_to_permutation(const KCode& code);
// Rows top to bottom, each right to left, in the flattening cut at the
// smallest zero column.
Word reading_word(const KCode& code);

ResidueSet code_descents(const KCode& code);

class SkewKCode {
 public:
  SkewKCode(KCode outer, KCode inner);
  const KCode& outer() const noexcept { return outer_; }
  const KCode& inner() const noexcept { return inner_; }

 private:
  KCode outer_;
  KCode inner_;
};

bool is_horizontal_strip(const SkewKCode& s);
bool is_vertical_strip(const SkewKCode& s);

// alpha_i -> alpha_{-i}. Converts RI codes to the row orientation in which a
// Grassmannian element reads as (nu'_1, ..., nu'_k, 0).
KCode reflected(const KCode& alpha);

// The element whose RD code is reflected(ri(x)).
AffinePermutation k_conjugate_perm(const AffinePermutation& x);

}  // namespace castle
