#include "castle/affine.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace castle {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

void check_letter(Rank rank, int letter, std::size_t pos) {
  if (letter < 0 || letter > rank.k()) {
    throw Error(Errc::BadResidue,
                "letter " + std::to_string(letter) + " is not in {0,...," +
                    std::to_string(rank.k()) + "}",
                pos);
  }
}

}  // namespace

Rank::Rank(int k) : k_(k) {
  if (k < 1 || k > kMax) {
    throw Error(Errc::InvalidRank, "k must lie in 1.." + std::to_string(kMax) +
                                       ", got " + std::to_string(k));
  }
}

// ResidueSet -----------------------------------------------------------------

ResidueSet::ResidueSet(Rank rank, std::initializer_list<int> members)
    : ResidueSet(rank, std::span<const int>(members.begin(), members.size())) {}

ResidueSet::ResidueSet(Rank rank, std::span<const int> members) : rank_(rank) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    check_letter(rank, members[i], i);
    mask_ |= std::uint64_t{1} << members[i];
  }
}

ResidueSet ResidueSet::full(Rank rank) {
  ResidueSet s(rank);
  s.mask_ = (std::uint64_t{1} << rank.size()) - 1;
  return s;
}

int ResidueSet::size() const noexcept { return std::popcount(mask_); }

ResidueSet ResidueSet::with(int r) const {
  ResidueSet s = *this;
  s.mask_ |= std::uint64_t{1} << rank_.residue(r);
  return s;
}

ResidueSet ResidueSet::without(int r) const {
  ResidueSet s = *this;
  s.mask_ &= ~(std::uint64_t{1} << rank_.residue(r));
  return s;
}

ResidueSet ResidueSet::shifted(int m) const {
  ResidueSet s(rank_);
  for (int r = 0; r < rank_.size(); ++r) {
    if ((mask_ >> r) & 1U) s.mask_ |= std::uint64_t{1} << rank_.residue(r + m);
  }
  return s;
}

ResidueSet ResidueSet::united(const ResidueSet& other) const {
  if (other.rank_ != rank_) throw Error(Errc::RankMismatch, "set ranks differ");
  ResidueSet s = *this;
  s.mask_ |= other.mask_;
  return s;
}

ResidueSet ResidueSet::intersected(const ResidueSet& other) const {
  if (other.rank_ != rank_) throw Error(Errc::RankMismatch, "set ranks differ");
  ResidueSet s = *this;
  s.mask_ &= other.mask_;
  return s;
}

std::vector<int> ResidueSet::members() const {
  std::vector<int> out;
  for (int r = 0; r < rank_.size(); ++r) {
    if ((mask_ >> r) & 1U) out.push_back(r);
  }
  return out;
}

// Word -----------------------------------------------------------------------

Word::Word(Rank rank, std::vector<int> letters)
    : rank_(rank), letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    check_letter(rank_, letters_[i], i);
  }
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

Word Word::shifted(int m) const {
  Word w = *this;
  for (int& a : w.letters_) a = rank_.residue(a + m);
  return w;
}

Word Word::concatenated(const Word& tail) const {
  if (tail.rank_ != rank_) throw Error(Errc::RankMismatch, "word ranks differ");
  Word w = *this;
  w.letters_.insert(w.letters_.end(), tail.letters_.begin(),
                    tail.letters_.end());
  return w;
}

void Word::push_back(int letter) {
  check_letter(rank_, letter, letters_.size());
  letters_.push_back(letter);
}

// AffinePermutation ----------------------------------------------------------

AffinePermutation AffinePermutation::identity(Rank rank) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(rank.size()));
  std::iota(w.begin(), w.end(), std::int64_t{1});
  return AffinePermutation(rank, std::move(w));
}

AffinePermutation AffinePermutation::from_window(
    Rank rank, std::span<const std::int64_t> window) {
  const std::int64_t n = rank.size();
  if (static_cast<std::int64_t>(window.size()) != n) {
    throw Error(Errc::WrongLength, "window needs " + std::to_string(n) +
                                       " entries, got " +
                                       std::to_string(window.size()));
  }
  std::int64_t sum = 0;
  for (std::int64_t v : window) sum += v;
  const std::int64_t expected = (n + 1) * n / 2;
  if (sum != expected) {
    throw Error(Errc::BadSum, "window sum is " + std::to_string(sum) +
                                  ", expected " + std::to_string(expected));
  }
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    int r = rank.residue(window[i]);
    if ((seen >> r) & 1U) {
      throw Error(Errc::RepeatedResidueClass,
                  "two window entries are congruent mod " + std::to_string(n),
                  i);
    }
    seen |= std::uint64_t{1} << r;
  }
  return AffinePermutation(rank,
                           std::vector<std::int64_t>(window.begin(), window.end()));
}

AffinePermutation AffinePermutation::from_word(const Word& word) {
  AffinePermutation x = identity(word.rank());
  for (int a : word.letters()) x = x.times_right(a);
  return x;
}

std::int64_t AffinePermutation::operator()(std::int64_t i) const noexcept {
  const std::int64_t n = rank_.size();
  std::int64_t q = floor_div(i - 1, n);
  std::int64_t r = i - 1 - q * n;
  return window_[static_cast<std::size_t>(r)] + q * n;
}

std::int64_t AffinePermutation::position_of(std::int64_t value) const noexcept {
  const std::int64_t n = rank_.size();
  for (std::size_t p = 0; p < window_.size(); ++p) {
    std::int64_t d = value - window_[p];
    if (d % n == 0) return static_cast<std::int64_t>(p) + 1 + d;
  }
  return 0;  // unreachable for a valid permutation
}

bool AffinePermutation::is_identity() const noexcept {
  for (std::size_t p = 0; p < window_.size(); ++p) {
    if (window_[p] != static_cast<std::int64_t>(p) + 1) return false;
  }
  return true;
}

std::size_t AffinePermutation::length() const noexcept {
  // Pairs (i, j0 + m n) with i, j0 in the window, j0 + m n > i and
  // x(j0) + m n < x(i); for each pair of window slots the admissible m form
  // an interval.
  const std::int64_t n = rank_.size();
  std::size_t count = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      std::int64_t lo = floor_div(i - j, n) + 1;
      std::int64_t hi = ceil_div((*this)(i) - (*this)(j), n) - 1;
      if (hi >= lo) count += static_cast<std::size_t>(hi - lo + 1);
    }
  }
  return count;
}

bool AffinePermutation::has_right_descent(int i) const noexcept {
  return (*this)(i) > (*this)(i + 1);
}

bool AffinePermutation::has_left_descent(int i) const noexcept {
  return position_of(i) > position_of(i + 1);
}

ResidueSet AffinePermutation::right_descents() const {
  ResidueSet s(rank_);
  for (int i = 0; i < rank_.size(); ++i) {
    if (has_right_descent(i)) s = s.with(i);
  }
  return s;
}

ResidueSet AffinePermutation::left_descents() const {
  ResidueSet s(rank_);
  for (int i = 0; i < rank_.size(); ++i) {
    if (has_left_descent(i)) s = s.with(i);
  }
  return s;
}

AffinePermutation AffinePermutation::times_right(int i) const {
  const int n = rank_.size();
  i = rank_.residue(i);
  std::vector<std::int64_t> w = window_;
  if (i == 0) {
    w[0] = (*this)(0);
    w[static_cast<std::size_t>(n - 1)] = (*this)(1) + n;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return AffinePermutation(rank_, std::move(w));
}

AffinePermutation AffinePermutation::times_left(int i) const {
  // s_i x = (x^{-1} s_i)^{-1}; done directly on values: shift the value
  // congruent to i up by one and the value congruent to i+1 down by one.
  i = rank_.residue(i);
  std::vector<std::int64_t> w = window_;
  for (auto& v : w) {
    int r = rank_.residue(v);
    if (r == i) {
      ++v;
    } else if (r == rank_.residue(i + 1)) {
      --v;
    }
  }
  return AffinePermutation(rank_, std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  const std::int64_t n = rank_.size();
  std::vector<std::int64_t> w(window_.size());
  for (std::int64_t i = 1; i <= n; ++i) {
    std::int64_t v = (*this)(i);
    std::int64_t q = floor_div(v - 1, n);
    std::int64_t r = v - 1 - q * n;
    w[static_cast<std::size_t>(r)] = i - q * n;
  }
  return AffinePermutation(rank_, std::move(w));
}

AffinePermutation AffinePermutation::dynkin_rotate(int m) const {
  // Psi^m(x)(i) = x(i - m) + m.
  std::vector<std::int64_t> w(window_.size());
  for (std::int64_t i = 1; i <= rank_.size(); ++i) {
    w[static_cast<std::size_t>(i - 1)] = (*this)(i - m) + m;
  }
  return AffinePermutation(rank_, std::move(w));
}

Word AffinePermutation::reduced_word() const {
  std::vector<int> rev;
  AffinePermutation y = *this;
  while (!y.is_identity()) {
    int i = 0;
    while (!y.has_right_descent(i)) ++i;
    rev.push_back(i);
    y = y.times_right(i);
  }
  std::reverse(rev.begin(), rev.end());
  return Word(rank_, std::move(rev));
}

AffinePermutation group_product(const AffinePermutation& x,
                                const AffinePermutation& y) {
  if (x.rank() != y.rank()) {
    throw Error(Errc::RankMismatch, "cannot multiply permutations of ranks " +
                                        std::to_string(x.rank().k()) + " and " +
                                        std::to_string(y.rank().k()));
  }
  std::vector<std::int64_t> w(x.window().size());
  for (std::size_t p = 0; p < w.size(); ++p) w[p] = x(y.window()[p]);
  return AffinePermutation::from_window(x.rank(), w);
}

bool is_reduced(const Word& word) {
  AffinePermutation x = AffinePermutation::identity(word.rank());
  for (int a : word.letters()) {
    if (x.has_right_descent(a)) return false;
    x = x.times_right(a);
  }
  return true;
}

std::size_t AffinePermutationHash::operator()(
    const AffinePermutation& x) const noexcept {
  std::size_t h = static_cast<std::size_t>(x.rank().k());
  for (std::int64_t v : x.window()) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace castle
