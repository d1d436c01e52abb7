#include "castle/nilcox.hpp"

#include <algorithm>
#include <bit>

#include "castle/cyclic.hpp"

namespace castle {

std::optional<AffinePermutation> monoid_product(const AffinePermutation& x,
                                                const AffinePermutation& y) {
  AffinePermutation xy = group_product(x, y);
  if (xy.length() != x.length() + y.length()) return std::nullopt;
  return xy;
}

// NilCoxSum ------------------------------------------------------------------

NilCoxSum NilCoxSum::one(Rank rank) {
  return monomial(AffinePermutation::identity(rank));
}

NilCoxSum NilCoxSum::monomial(const AffinePermutation& x, const BigInt& c) {
  NilCoxSum f(x.rank());
  f.add_term(x, c);
  return f;
}

void NilCoxSum::check_rank(Rank other) const {
  if (other != rank_) throw Error(Errc::RankMismatch, "sums of different ranks");
}

void NilCoxSum::add_term(const AffinePermutation& x, const BigInt& c) {
  check_rank(x.rank());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NilCoxSum& NilCoxSum::operator+=(const NilCoxSum& other) {
  check_rank(other.rank_);
  for (const auto& [x, c] : other.terms_) add_term(x, c);
  return *this;
}

NilCoxSum& NilCoxSum::operator-=(const NilCoxSum& other) {
  check_rank(other.rank_);
  for (const auto& [x, c] : other.terms_) add_term(x, -c);
  return *this;
}

NilCoxSum operator*(const NilCoxSum& a, const NilCoxSum& b) {
  a.check_rank(b.rank_);
  NilCoxSum out(a.rank_);
  std::vector<std::size_t> len_b;
  len_b.reserve(b.terms_.size());
  for (const auto& [y, c] : b.terms_) len_b.push_back(y.length());
  for (const auto& [x, cx] : a.terms_) {
    const std::size_t lx = x.length();
    std::size_t idx = 0;
    for (const auto& [y, cy] : b.terms_) {
      const std::size_t ly = len_b[idx++];
      AffinePermutation xy = group_product(x, y);
      if (xy.length() == lx + ly) out.add_term(xy, cx * cy);
    }
  }
  return out;
}

NilCoxSum nil_multiply(const NilCoxSum& f, const NilCoxSum& g) { return f * g; }

// h, e -----------------------------------------------------------------------

namespace {

NilCoxSum cyclic_sum(Rank rank, int i, bool decreasing) {
  if (i < 0 || i > rank.k()) {
    throw Error(Errc::IndexTooLarge,
                "index " + std::to_string(i) + " must lie in 0..k");
  }
  NilCoxSum f(rank);
  const std::uint64_t limit = std::uint64_t{1} << rank.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != i) continue;
    ResidueSet a(rank);
    for (int r = 0; r < rank.size(); ++r) {
      if ((mask >> r) & 1U) a = a.with(r);
    }
    f.add_term(decreasing ? d_element(a) : u_element(a), 1);
  }
  return f;
}

}  // namespace

NilCoxSum h(Rank rank, int i) { return cyclic_sum(rank, i, true); }
NilCoxSum e(Rank rank, int i) { return cyclic_sum(rank, i, false); }

NilCoxSum h_lambda(const BoundedPartition& lambda) {
  NilCoxSum f = NilCoxSum::one(lambda.rank());
  for (int part : lambda.parts()) f = f * h(lambda.rank(), part);
  return f;
}

NilCoxSum e_lambda(const BoundedPartition& lambda) {
  NilCoxSum f = NilCoxSum::one(lambda.rank());
  for (int part : lambda.parts()) f = f * e(lambda.rank(), part);
  return f;
}

BigInt coefficient(const NilCoxSum& f, const AffinePermutation& x) {
  auto it = f.terms().find(x);
  return it == f.terms().end() ? BigInt(0) : it->second;
}

// Pieri ------------------------------------------------------------------------

bool weak_strip(const BoundedPartition& lambda, const BoundedPartition& nu) {
  if (lambda.rank() != nu.rank()) throw Error(Errc::RankMismatch, "ranks differ");
  if (!nu.partition().contains(lambda.partition())) {
    throw Error(Errc::NotContained, "lambda is not contained in nu");
  }
  return is_horizontal_strip(nu.partition(), lambda.partition()) &&
         is_vertical_strip(k_conjugate_partition(nu).partition(),
                           k_conjugate_partition(lambda).partition());
}

std::vector<BoundedPartition> weak_strip_growths(const BoundedPartition& mu,
                                                 int boxes) {
  const Rank rank = mu.rank();
  const auto& m = mu.parts();
  const std::size_t rows = m.size() + 1;
  std::vector<BoundedPartition> out;
  std::vector<int> nu(rows, 0);
  // Horizontal strips interlace: mu_r <= nu_r <= mu_{r-1}, nu_1 <= k.
  auto rec = [&](auto&& self, std::size_t r, int left) -> void {
    if (r == rows) {
      if (left == 0) {
        BoundedPartition candidate(rank, nu);
        if (weak_strip(mu, candidate)) out.push_back(std::move(candidate));
      }
      return;
    }
    const int lo = r < m.size() ? m[r] : 0;
    const int hi = r == 0 ? rank.k() : m[r - 1];
    for (int v = lo; v <= hi && v - lo <= left; ++v) {
      nu[r] = v;
      self(self, r + 1, left - (v - lo));
    }
  };
  rec(rec, 0, boxes);
  return out;
}

const NilCoxSum& KSchurTable::get(const BoundedPartition& lambda) {
  if (lambda.rank() != rank_) throw Error(Errc::RankMismatch, "table rank differs");
  if (auto it = entries_.find(lambda); it != entries_.end()) return it->second;
  NilCoxSum value(rank_);
  const auto& parts = lambda.parts();
  if (parts.size() <= 1) {
    value = parts.empty() ? NilCoxSum::one(rank_) : h(rank_, parts[0]);
  } else {
    const int l = parts.back();
    const BoundedPartition mu(
        rank_, std::vector<int>(parts.begin(), parts.end() - 1));
    value = get(mu) * h(rank_, l);
    for (const auto& nu : weak_strip_growths(mu, l)) {
      if (nu != lambda) value -= get(nu);
    }
  }
  return entries_.emplace(lambda, std::move(value)).first->second;
}

NilCoxSum k_schur(const BoundedPartition& lambda, KSchurTable& table) {
  return table.get(lambda);
}

AffinePermutation dominant_summand(const NilCoxSum& f, int i) {
  std::optional<AffinePermutation> found;
  const ResidueSet allowed = ResidueSet(f.rank()).with(i);
  for (const auto& [x, c] : f.terms()) {
    if (x.right_descents().subset_of(allowed)) {
      if (found) throw Error(Errc::NotUnique, "several dominant summands");
      found = x;
    }
  }
  if (!found) throw Error(Errc::NotFound, "no dominant summand");
  return *found;
}

bool is_left_compatible(const AffinePermutation& x, const AffinePermutation& y) {
  auto xy = monoid_product(x, y);
  return xy && xy->right_descents() == y.right_descents();
}

// Split products ---------------------------------------------------------------

SplitReport verify_split_product(const BoundedPartition& lambda,
                                 KSchurTable& table) {
  SplitReport report;
  report.components = split_bounded_components(to_core(lambda));
  const std::size_t m = report.components.size();
  if (m <= 1) return report;

  const Rank rank = lambda.rank();
  const NilCoxSum& whole = table.get(lambda);
  report.status = SplitReport::Status::Equal;
  // Bit t of `cuts` set: a factor boundary after component t.
  for (std::uint64_t cuts = 1; cuts < (std::uint64_t{1} << (m - 1)); ++cuts) {
    std::vector<BoundedPartition> grouping;
    std::vector<int> block;
    for (std::size_t t = 0; t < m; ++t) {
      const auto& parts = report.components[t].parts();
      block.insert(block.end(), parts.begin(), parts.end());
      if (t + 1 == m || ((cuts >> t) & 1U)) {
        std::sort(block.rbegin(), block.rend());
        grouping.emplace_back(rank, block);
        block.clear();
      }
    }
    NilCoxSum product = NilCoxSum::one(rank);
    for (const auto& factor : grouping) product = product * table.get(factor);
    ++report.groupings_checked;
    if (product == whole) continue;
    report.status = SplitReport::Status::Mismatch;
    NilCoxSum diff = whole - product;
    const AffinePermutation& x = diff.terms().begin()->first;
    report.mismatch = SplitMismatch{grouping, x, coefficient(whole, x),
                                    coefficient(product, x)};
    break;
  }
  return report;
}

}  // namespace castle
