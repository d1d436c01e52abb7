#include "castle/kcode.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace castle {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool minus_convention(Direction d, Side s) {
  return (d == Direction::Decreasing) == (s == Side::Right);
}

void require_same_rank(Rank a, Rank b) {
  if (a != b) throw Error(Errc::RankMismatch, "ranks differ");
}

// #{j < t : x(j) > x(t)}
int count_left_greater(const AffinePermutation& x, std::int64_t t) {
  const std::int64_t n = x.rank().size();
  const std::int64_t xt = x(t);
  std::int64_t total = 0;
  for (std::int64_t j0 = 1; j0 <= n; ++j0) {
    // j = j0 + m n < t  and  x(j0) + m n > x(t)
    std::int64_t hi = floor_div(t - j0 - 1, n);
    std::int64_t lo = floor_div(xt - x(j0), n) + 1;
    if (hi >= lo) total += hi - lo + 1;
  }
  return static_cast<int>(total);
}

// #{j > t : x(j) < x(t)}
int count_right_smaller(const AffinePermutation& x, std::int64_t t) {
  const std::int64_t n = x.rank().size();
  const std::int64_t xt = x(t);
  std::int64_t total = 0;
  for (std::int64_t j0 = 1; j0 <= n; ++j0) {
    std::int64_t lo = floor_div(t - j0, n) + 1;
    std::int64_t hi = floor_div(xt - x(j0) - 1, n);
    if (hi >= lo) total += hi - lo + 1;
  }
  return static_cast<int>(total);
}

}  // namespace

// KCode ----------------------------------------------------------------------

KCode::KCode(Rank rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != rank_.size()) {
    throw Error(Errc::InvalidCode, "a k-code has k+1 = " +
                                       std::to_string(rank_.size()) +
                                       " entries, got " +
                                       std::to_string(entries_.size()));
  }
  bool has_zero = false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) {
      throw Error(Errc::InvalidCode, "negative code entry", i);
    }
    has_zero = has_zero || entries_[i] == 0;
  }
  if (!has_zero) throw Error(Errc::InvalidCode, "a k-code needs a zero entry");
}

KCode KCode::zero(Rank rank) {
  return KCode(rank, std::vector<int>(static_cast<std::size_t>(rank.size()), 0));
}

std::size_t KCode::size() const noexcept {
  return static_cast<std::size_t>(
      std::accumulate(entries_.begin(), entries_.end(), 0));
}

int KCode::height() const noexcept {
  return *std::max_element(entries_.begin(), entries_.end());
}

int KCode::first_zero() const noexcept {
  return static_cast<int>(std::find(entries_.begin(), entries_.end(), 0) -
                          entries_.begin());
}

// CyclicDecomposition --------------------------------------------------------

std::vector<ResidueSet> CyclicDecomposition::factors_left_to_right() const {
  std::vector<ResidueSet> out = rows;
  if (side == Side::Right) std::reverse(out.begin(), out.end());
  return out;
}

Word CyclicDecomposition::word() const {
  Word w(rank);
  for (const ResidueSet& f : factors_left_to_right()) {
    w = w.concatenated(direction == Direction::Decreasing ? d_word(f)
                                                          : u_word(f));
  }
  return w;
}

AffinePermutation CyclicDecomposition::element() const {
  return AffinePermutation::from_word(word());
}

std::vector<int> CyclicDecomposition::shape() const {
  std::vector<int> out;
  for (const ResidueSet& r : rows) out.push_back(r.size());
  return out;
}

int filling_residue(Rank rank, Direction d, Side s, int i, int j) {
  return minus_convention(d, s) ? rank.residue(i - j + 1)
                                : rank.residue(i + j - 1);
}

// Maximal sets -----------------------------------------------------------------

ResidueSet max_right_set(const AffinePermutation& x) {
  if (x.is_identity()) {
    throw Error(Errc::IdentityInput, "the identity has no right factor");
  }
  const Rank rank = x.rank();
  ResidueSet a(rank);
  for (int i : x.right_descents().members()) {
    // Longest run i, i+1, ... peeled off the right; it reads d_{[i,j]}.
    AffinePermutation y = x;
    int j = i;
    int taken = 0;
    while (taken < rank.k() && y.has_right_descent(j)) {
      a = a.with(j);
      y = y.times_right(j);
      j = rank.residue(j + 1);
      ++taken;
    }
  }
  return a;
}

ResidueSet max_left_set(const AffinePermutation& x) {
  if (x.is_identity()) {
    throw Error(Errc::IdentityInput, "the identity has no left factor");
  }
  const Rank rank = x.rank();
  ResidueSet b(rank);
  for (int i : x.left_descents().members()) {
    AffinePermutation y = x;
    int j = i;
    int taken = 0;
    while (taken < rank.k() && y.has_left_descent(j)) {
      b = b.with(j);
      y = y.times_left(j);
      j = rank.residue(j - 1);
      ++taken;
    }
  }
  return b;
}

namespace {

std::vector<ResidueSet> decreasing_right_rows(AffinePermutation x) {
  std::vector<ResidueSet> rows;
  while (!x.is_identity()) {
    ResidueSet a = max_right_set(x);
    const Word w = d_word(a);
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      x = x.times_right(*it);
    }
    rows.push_back(a);
  }
  return rows;
}

std::vector<ResidueSet> decreasing_left_rows(AffinePermutation x) {
  std::vector<ResidueSet> rows;
  while (!x.is_identity()) {
    ResidueSet b = max_left_set(x);
    const Word w = d_word(b);
    for (int letter : w.letters()) x = x.times_left(letter);
    rows.push_back(b);
  }
  return rows;
}

}  // namespace

CyclicDecomposition canonical_decomposition(const AffinePermutation& x,
                                            Direction d, Side s) {
  CyclicDecomposition dec{x.rank(), {}, d, s};
  if (d == Direction::Decreasing) {
    dec.rows = s == Side::Right ? decreasing_right_rows(x)
                                : decreasing_left_rows(x);
  } else {
    // u_{C_n}...u_{C_1} = x  iff  d_{C_1}...d_{C_n} = x^{-1}, and likewise
    // on the left.
    dec.rows = s == Side::Right ? decreasing_left_rows(x.inverse())
                                : decreasing_right_rows(x.inverse());
  }
  return dec;
}

bool is_maximal(const CyclicDecomposition& dec) {
  const int shift = minus_convention(dec.direction, dec.side) ? 1 : -1;
  for (std::size_t j = 0; j < dec.rows.size(); ++j) {
    if (dec.rows[j].empty() || !dec.rows[j].is_proper()) return false;
    if (j + 1 < dec.rows.size() &&
        !dec.rows[j + 1].shifted(shift).subset_of(dec.rows[j])) {
      return false;
    }
  }
  return true;
}

// Two-row moves ----------------------------------------------------------------

std::optional<std::pair<ResidueSet, ResidueSet>> two_row_maximize(
    const ResidueSet& b_in, const ResidueSet& a_in) {
  require_same_rank(b_in.rank(), a_in.rank());
  if (!b_in.is_proper() || !a_in.is_proper()) {
    throw Error(Errc::ImproperSet, "rows must be proper subsets");
  }
  const Rank rank = a_in.rank();
  const int n = rank.size();
  ResidueSet b = b_in;
  ResidueSet a = a_in;
  // Column c pairs residue c-1 of the upper row with residue c of the lower.
  enum State { Empty, Top, Down, Both };
  auto state = [&](int c) {
    const bool up = b.contains(c - 1);
    const bool low = a.contains(c);
    if (up) return low ? Both : Top;
    return low ? Down : Empty;
  };
  // Every move strictly grows the lower row, so at most n rounds.
  for (int round = 0; round <= n + 1; ++round) {
    std::optional<int> first_empty;
    bool any_top = false;
    for (int c = 0; c < n; ++c) {
      State st = state(c);
      any_top = any_top || st == Top;
      if (st == Empty && !first_empty) first_empty = c;
    }
    if (!any_top) return std::make_pair(b, a);
    if (!first_empty) return std::nullopt;

    const int start = *first_empty;
    int empty = start;
    bool seen_down = false;
    bool moved = false;
    for (int step = 1; step <= n && !moved; ++step) {
      const int c = rank.residue(start + step);
      switch (state(c)) {
        case Empty:
          empty = c;
          seen_down = false;
          break;
        case Down:
          seen_down = true;
          break;
        case Both:
          break;
        case Top:
          if (c == rank.residue(empty + 1)) {
            // Commutation: the upper letter slides down.
            b = b.without(empty);
            a = a.with(empty);
          } else if (seen_down) {
            return std::nullopt;
          } else {
            // Chute move.
            b = b.without(c - 1);
            a = a.with(empty);
          }
          moved = true;
          break;
      }
    }
    if (!moved) return std::nullopt;
  }
  return std::nullopt;
}

// Codes ----------------------------------------------------------------------

KCode code_of(const CyclicDecomposition& dec) {
  if (!is_maximal(dec)) {
    throw Error(Errc::NotMaximal, "decomposition violates shifted containment");
  }
  const Rank rank = dec.rank;
  std::vector<int> alpha(static_cast<std::size_t>(rank.size()), 0);
  std::size_t cells = 0;
  for (int i = 0; i < rank.size(); ++i) {
    int j = 1;
    while (j <= static_cast<int>(dec.rows.size()) &&
           dec.rows[static_cast<std::size_t>(j - 1)].contains(
               filling_residue(rank, dec.direction, dec.side, i, j))) {
      ++j;
    }
    alpha[static_cast<std::size_t>(i)] = j - 1;
    cells += static_cast<std::size_t>(j - 1);
  }
  std::size_t total = 0;
  for (const ResidueSet& r : dec.rows) total += static_cast<std::size_t>(r.size());
  if (cells != total) {
    throw Error(Errc::NotMaximal, "rows do not fill bottom-justified columns");
  }
  return KCode(rank, std::move(alpha));
}

CyclicDecomposition decomposition_of(const KCode& code, Direction d, Side s) {
  const Rank rank = code.rank();
  CyclicDecomposition dec{rank, {}, d, s};
  for (int j = 1; j <= code.height(); ++j) {
    ResidueSet row(rank);
    for (int i = 0; i < rank.size(); ++i) {
      if (code[i] >= j) row = row.with(filling_residue(rank, d, s, i, j));
    }
    dec.rows.push_back(row);
  }
  return dec;
}

KCode rd(const AffinePermutation& x) {
  return code_of(canonical_decomposition(x, Direction::Decreasing, Side::Right));
}
KCode ri(const AffinePermutation& x) {
  return code_of(canonical_decomposition(x, Direction::Increasing, Side::Right));
}
KCode ld(const AffinePermutation& x) {
  return code_of(canonical_decomposition(x, Direction::Decreasing, Side::Left));
}
KCode li(const AffinePermutation& x) {
  return code_of(canonical_decomposition(x, Direction::Increasing, Side::Left));
}

KCode affine_code(const AffinePermutation& x, AffineCodeVariant v) {
  const Rank rank = x.rank();
  std::vector<int> alpha(static_cast<std::size_t>(rank.size()));
  for (int i = 0; i < rank.size(); ++i) {
    int value = 0;
    switch (v) {
      case AffineCodeVariant::CRD: value = count_left_greater(x, i + 1); break;
      case AffineCodeVariant::CRI: value = count_right_smaller(x, i); break;
      case AffineCodeVariant::CLD:
        value = count_left_greater(x, x.position_of(i));
        break;
      case AffineCodeVariant::CLI:
        value = count_right_smaller(x, x.position_of(i + 1));
        break;
    }
    alpha[static_cast<std::size_t>(i)] = value;
  }
  return KCode(rank, std::move(alpha));
}

Word reading_word(const KCode& code) {
  const Rank rank = code.rank();
  const int z = code.first_zero();
  Word w(rank);
  for (int j = code.height(); j >= 1; --j) {
    for (int t = rank.k(); t >= 1; --t) {
      const int i = rank.residue(z + t);
      if (code[i] >= j) w.push_back(rank.residue(i - j + 1));
    }
  }
  return w;
}

AffinePermutation code_to_permutation(const KCode& code) {
  return AffinePermutation::from_word(reading_word(code));
}

ResidueSet code_descents(const KCode& code) {
  ResidueSet s(code.rank());
  for (int i = 0; i < code.rank().size(); ++i) {
    if (code[i - 1] < code[i]) s = s.with(i);
  }
  return s;
}

SkewKCode::SkewKCode(KCode outer, KCode inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  require_same_rank(outer_.rank(), inner_.rank());
  for (int i = 0; i < outer_.rank().size(); ++i) {
    if (inner_[i] > outer_[i]) {
      throw Error(Errc::NotContained, "inner code exceeds outer code",
                  static_cast<std::size_t>(i));
    }
  }
}

bool is_horizontal_strip(const SkewKCode& s) {
  for (int i = 0; i < s.outer().rank().size(); ++i) {
    if (s.outer()[i] - s.inner()[i] > 1) return false;
  }
  return true;
}

bool is_vertical_strip(const SkewKCode& s) {
  for (int r = 1; r <= s.outer().height(); ++r) {
    int in_row = 0;
    for (int i = 0; i < s.outer().rank().size(); ++i) {
      if (s.inner()[i] < r && r <= s.outer()[i]) ++in_row;
    }
    if (in_row > 1) return false;
  }
  return true;
}

KCode reflected(const KCode& alpha) {
  const int n = alpha.rank().size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = alpha[(n - i) % n];
  return KCode(alpha.rank(), std::move(out));
}

AffinePermutation k_conjugate_perm(const AffinePermutation& x) {
  return code_to_permutation(reflected(ri(x)));
}

}  // namespace castle
