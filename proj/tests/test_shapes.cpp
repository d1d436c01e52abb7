#include <doctest.h>

#include <set>

#include "castle/format.hpp"
#include "castle/kcode.hpp"
#include "castle/shapes.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace castle;
using castle::testing::error_of;

namespace {

// Partitions of n with parts at most m.
int count_partitions(int n, int m) {
  if (n == 0) return 1;
  if (m == 0) return 0;
  int total = 0;
  for (int p = std::min(n, m); p >= 1; --p) total += count_partitions(n - p, p);
  return total;
}

std::vector<int> column_heights_then_zero(const Partition& p, int k) {
  std::vector<int> out(static_cast<std::size_t>(k + 1), 0);
  const auto t = p.transpose();
  for (int c = 1; c <= k; ++c) out[static_cast<std::size_t>(c - 1)] = t.part(static_cast<std::size_t>(c));
  return out;
}

}  // namespace

TEST_SUITE("shapes") {

TEST_CASE("partition basics") {
  const Partition p({3, 1});
  CHECK(p.size() == 4);
  CHECK(p.transpose() == Partition({2, 1, 1}));
  CHECK(p.hook(1, 1) == 4);
  CHECK(p.hook(1, 3) == 1);
  CHECK(p.contains(Partition({2, 1})));
  CHECK_FALSE(Partition({2, 1}).contains(p));
  CHECK(error_of([] { Partition({1, 2}); }) == Errc::Parse);
  CHECK(Partition({2, 0}) == Partition({2}));
  CHECK(error_of([] { Partition({2, -1}); }) == Errc::Parse);
  CHECK(error_of([] { BoundedPartition(Rank(2), {3}); }) == Errc::NotBounded);
  CHECK(error_of([] { CorePartition(Rank(2), Partition({3})); }) == Errc::NotACore);
}

TEST_CASE("cores of bounded partitions") {
  const Rank r3(3), r4(4);
  CHECK(to_core(BoundedPartition(r3, {3, 2, 2, 1, 1})).partition() ==
        Partition({6, 3, 3, 1, 1}));
  CHECK(to_core(BoundedPartition(r4, {3, 2, 2, 1, 1, 1})).partition() ==
        Partition({6, 3, 3, 1, 1, 1}));
  CHECK(to_core(BoundedPartition(r3, {1})).partition() == Partition({1}));
  CHECK(from_core(CorePartition(r4, Partition({6, 3, 3, 1, 1, 1}))) ==
        BoundedPartition(r4, {3, 2, 2, 1, 1, 1}));
  CHECK(from_core(CorePartition(r3, Partition({6, 3, 3, 1, 1}))) ==
        BoundedPartition(r3, {3, 2, 2, 1, 1}));
  CHECK(from_core(CorePartition(r3, Partition({1}))) == BoundedPartition(r3, {1}));
}

TEST_CASE("boundaries and components") {
  const Rank r4(4);
  const CorePartition mu(r4, Partition({6, 3, 3, 1, 1, 1}));
  const auto parts = split_bounded_components(mu);
  CHECK(parts == std::vector<BoundedPartition>{BoundedPartition(r4, {1, 1, 1}),
                                               BoundedPartition(r4, {2, 2}),
                                               BoundedPartition(r4, {3})});
  std::vector<int> sizes;
  for (const auto& p : parts) sizes.push_back(p.size());
  CHECK(sizes == std::vector<int>{3, 4, 3});
  const auto cores = split_components(mu);
  REQUIRE(cores.size() == 3);
  CHECK(cores[1].partition() == Partition({2, 2}));

  const CorePartition one(r4, Partition({1}));
  CHECK(k_boundary(one, 4).cells().size() == 1);
  CHECK(split_components(one).size() == 1);
  const Rank r2(2);
  CHECK(split_components(CorePartition(r2, Partition({2}))).size() == 1);

  const Rank r3(3);
  const auto b = k_boundary(CorePartition(r3, Partition({6, 3, 3, 1, 1})), 3);
  std::vector<int> row_lengths(5, 0);
  for (const auto& [row, col] : b.cells()) ++row_lengths[static_cast<std::size_t>(row - 1)];
  CHECK(row_lengths == std::vector<int>{3, 2, 2, 1, 1});
}

TEST_CASE("k-conjugate partitions") {
  const Rank r3(3);
  CHECK(k_conjugate_partition(BoundedPartition(r3, {3, 2, 2, 1, 1})) ==
        BoundedPartition(r3, {2, 2, 2, 1, 1, 1}));
  CHECK(k_conjugate_partition(BoundedPartition(r3, {1})) == BoundedPartition(r3, {1}));
  const Rank r5(5);
  CHECK(k_conjugate_partition(BoundedPartition(r5, {2, 1})) == BoundedPartition(r5, {2, 1}));
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition({2}), Partition({1, 1})));
  CHECK(dominates(Partition({2, 1}), Partition({2, 1})));
  CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
  CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
  CHECK(error_of([] { dominates(Partition({2}), Partition({1})); }) == Errc::SizeMismatch);
}

TEST_CASE("partition strips") {
  CHECK(is_horizontal_strip(Partition({3, 1}), Partition({1})));
  CHECK_FALSE(is_horizontal_strip(Partition({1, 1, 1}), Partition({1})));
  CHECK(is_vertical_strip(Partition({1, 1, 1}), Partition({1})));
  CHECK_FALSE(is_vertical_strip(Partition({3}), Partition({1})));
}

TEST_CASE("Grassmannian words") {
  const Rank r3(3);
  const BoundedPartition lambda(r3, {3, 2, 2, 1, 1});
  CHECK(grassmannian_word(lambda, Direction::Decreasing) ==
        Word(r3, {0, 1, 3, 2, 0, 3, 2, 1, 0}));
  CHECK(grassmannian_word(lambda, Direction::Increasing) ==
        Word(r3, {1, 0, 3, 1, 2, 0, 1, 3, 0}));
  CHECK(grassmannian_word(BoundedPartition(r3, {1}), Direction::Decreasing) == Word(r3, {0}));
  CHECK(grassmannian_perm(lambda) ==
        AffinePermutation::from_word(grassmannian_word(lambda, Direction::Increasing)));
}

TEST_CASE("split bound check") {
  const Rank r4(4);
  CHECK(split_row_column_bound_check(BoundedPartition(r4, {1, 1, 1}),
                                     BoundedPartition(r4, {2, 2})));
  CHECK_FALSE(split_row_column_bound_check(BoundedPartition(r4, {1, 1}),
                                           BoundedPartition(r4, {2, 2})));
  const Rank r1(1);
  CHECK(split_row_column_bound_check(BoundedPartition(r1, {1}), BoundedPartition(r1, {1})));
}

TEST_CASE("bounded partitions are counted correctly") {
  for (int k = 1; k <= 5; ++k) {
    for (int n = 0; n <= 10; ++n) {
      const auto all = bounded_partitions(Rank(k), n);
      CHECK(static_cast<int>(all.size()) == count_partitions(n, k));
      CHECK(std::is_sorted(all.rbegin(), all.rend()));
    }
  }
}

TEST_CASE("core bijection and k-conjugation") {
  for (int k = 1; k <= 5; ++k) {
    const Rank r(k);
    for (int n = 0; n <= 10; ++n) {
      for (const auto& lambda : bounded_partitions(r, n)) {
        const auto core = to_core(lambda);
        CHECK(from_core(core) == lambda);
        CHECK(to_core(from_core(core)) == core);
        CHECK(k_boundary(core, k).cells() == k_boundary(core, k + 1).cells());
        const auto conj = k_conjugate_partition(lambda);
        CHECK(conj.size() == lambda.size());
        CHECK(k_conjugate_partition(conj) == lambda);
        CHECK(to_core(conj).partition() == core.partition().transpose());
        int total = 0;
        for (const auto& piece : split_bounded_components(core)) total += piece.size();
        CHECK(total == lambda.size());
      }
    }
  }
}

TEST_CASE("Grassmannian elements and their codes") {
  for (int k = 1; k <= 4; ++k) {
    const Rank r(k);
    for (int n = 0; n <= 8; ++n) {
      for (const auto& lambda : bounded_partitions(r, n)) {
        const auto x = grassmannian_perm(lambda);
        CHECK(x.right_descents().subset_of(ResidueSet(r, {0})));
        CHECK(x.length() == static_cast<std::size_t>(n));
        CHECK(rd(x).entries() == column_heights_then_zero(lambda.partition(), k));
        CHECK(reflected(ri(x)).entries() ==
              column_heights_then_zero(k_conjugate_partition(lambda).partition(), k));
        CHECK(AffinePermutation::from_word(grassmannian_word(lambda, Direction::Decreasing)) ==
              x);
      }
    }
  }
}

TEST_CASE("every Grassmannian element comes from a partition") {
  for (int k = 1; k <= 3; ++k) {
    const Rank r(k);
    const oracle::Ball ball(k, 7);
    for (const auto& x : ball.all()) {
      if (!x.right_descents().subset_of(ResidueSet(r, {0}))) continue;
      const auto c = rd(x);
      std::vector<int> heights;
      for (int i = 0; i < k && c[i] > 0; ++i) heights.push_back(c[i]);
      const BoundedPartition lambda(r, Partition(heights).transpose());
      CHECK(grassmannian_perm(lambda) == x);
    }
  }
}

}  // TEST_SUITE
