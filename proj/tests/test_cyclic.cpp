#include <doctest.h>

#include "castle/cyclic.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace castle;
using castle::testing::error_of;

namespace {

ResidueSet set_of(Rank r, const std::vector<int>& v) { return ResidueSet(r, v); }

std::optional<AffinePermutation> ud_product(const ResidueSet& b, const ResidueSet& a) {
  const Word w = u_word(b).concatenated(d_word(a));
  return oracle::nil_product(b.rank().k(), w.letters());
}

std::vector<ResidueSet> all_proper(Rank r) {
  std::vector<ResidueSet> out;
  for (std::uint64_t m = 0; m + 1 < (std::uint64_t{1} << r.size()); ++m) {
    ResidueSet s(r);
    for (int i = 0; i < r.size(); ++i) {
      if ((m >> i) & 1U) s = s.with(i);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<ResidueSet> connected_nonempty(Rank r) {
  std::vector<ResidueSet> out;
  for (const auto& iv : oracle::cyclic_intervals(r.k())) out.push_back(set_of(r, iv));
  return out;
}

}  // namespace

TEST_SUITE("cyclic") {

TEST_CASE("d and u words") {
  const Rank r5(5);
  const ResidueSet a(r5, {0, 2, 4, 5});
  CHECK(d_word(a) == Word(r5, {0, 5, 4, 2}));
  CHECK(u_word(a) == Word(r5, {2, 4, 5, 0}));
  CHECK(d_word(ResidueSet(r5)).empty());
  const Rank r2(2);
  CHECK(d_word(ResidueSet(r2, {1})) == Word(r2, {1}));
  CHECK(u_word(ResidueSet(r2, {1})) == Word(r2, {1}));
  CHECK(error_of([&] { d_word(ResidueSet::full(r2)); }) == Errc::ImproperSet);
}

TEST_CASE("connected components") {
  const Rank r5(5);
  const auto wrap = connected_components(ResidueSet(r5, {4, 5, 0, 1, 2}));
  REQUIRE(wrap.size() == 1);
  CHECK(wrap[0] == Interval{4, 2});
  CHECK(connected_components(ResidueSet(r5)).empty());
  const auto points = connected_components(ResidueSet(r5, {0, 2, 4}));
  CHECK(points == std::vector<Interval>{{0, 0}, {2, 2}, {4, 4}});
  CHECK(is_connected(ResidueSet(r5)));
  CHECK_FALSE(is_connected(ResidueSet(r5, {0, 2})));
  CHECK(as_interval(ResidueSet(r5, {5, 0})) == Interval{5, 0});
  CHECK(interval_set(r5, Interval{5, 1}) == ResidueSet(r5, {5, 0, 1}));
  CHECK(error_of([&] { connected_components(ResidueSet::full(r5)); }) == Errc::ImproperSet);
}

TEST_CASE("interval adjust") {
  const Rank r6(6);
  CHECK(interval_adjust(ResidueSet(r6, {3, 4, 5, 6}), IntervalAdjust::PlusHi) ==
        ResidueSet(r6, {3, 4, 5, 6, 0}));
  CHECK(error_of([&] { interval_adjust(ResidueSet(r6, {3}), IntervalAdjust::MinusHi); }) ==
        Errc::WouldBeEmpty);
  const Rank r3(3);
  CHECK(interval_adjust(ResidueSet(r3, {1, 2}), IntervalAdjust::MinusLo) ==
        ResidueSet(r3, {2}));
  CHECK(interval_adjust(ResidueSet(r3, {1, 2}), IntervalAdjust::PlusLo) ==
        ResidueSet(r3, {0, 1, 2}));
  CHECK(error_of([&] {
          interval_adjust(ResidueSet(r3, {0, 1, 2}), IntervalAdjust::PlusHi);
        }) == Errc::WouldBeImproper);
  CHECK(error_of([&] { interval_adjust(ResidueSet(r3, {0, 2}), IntervalAdjust::PlusHi); }) ==
        Errc::NotConnected);
}

TEST_CASE("normalize_ud examples") {
  const Rank r6(6);
  const auto fat = normalize_ud(ResidueSet(r6, {3, 4, 5, 6}), ResidueSet(r6, {0, 1, 2, 3, 4}));
  CHECK_FALSE(fat.is_zero);
  CHECK(fat.a_prime == ResidueSet(r6, {1, 2, 3, 4, 5}));
  CHECK(fat.b_prime == ResidueSet(r6, {4, 5, 6, 0}));

  const Rank r3(3);
  const auto zero = normalize_ud(ResidueSet(r3, {1}), ResidueSet(r3, {1}));
  CHECK(zero.is_zero);
  CHECK(zero.case_tag == UdCase::Zero);

  const Rank r4(4);
  const auto commute = normalize_ud(ResidueSet(r4, {0}), ResidueSet(r4, {2}));
  CHECK(commute.a_prime == ResidueSet(r4, {2}));
  CHECK(commute.b_prime == ResidueSet(r4, {0}));
  CHECK(commute.case_tag == UdCase::Commute);

  const Rank r5(5);
  const auto nested = normalize_ud(ResidueSet(r5, {1, 2}), ResidueSet(r5, {1, 2, 3, 4}));
  CHECK(nested.a_prime == ResidueSet(r5, {1, 2, 3, 4}));
  CHECK(nested.b_prime == ResidueSet(r5, {2, 3}));
  CHECK(nested.case_tag == UdCase::BInA);

  CHECK(error_of([&] { normalize_ud(ResidueSet(r5, {0, 2}), ResidueSet(r5, {1})); }) ==
        Errc::NotConnected);
}

TEST_CASE("normalize_ud agrees with word multiplication") {
  for (int k = 1; k <= 6; ++k) {
    const Rank r(k);
    auto sets = connected_nonempty(r);
    sets.push_back(ResidueSet(r));
    for (const auto& b : sets) {
      for (const auto& a : sets) {
        const auto nf = normalize_ud(b, a);
        const auto lhs = ud_product(b, a);
        CAPTURE(k);
        CHECK(nf.is_zero == !lhs.has_value());
        if (nf.is_zero || !lhs) continue;
        CHECK(nf.a_prime.size() + nf.b_prime.size() == a.size() + b.size());
        CHECK(is_connected(nf.a_prime));
        CHECK(is_connected(nf.b_prime));
        const Word rhs = d_word(nf.a_prime).concatenated(u_word(nf.b_prime));
        const auto rhs_el = oracle::nil_product(k, rhs.letters());
        REQUIRE(rhs_el.has_value());
        CHECK(*rhs_el == *lhs);
      }
    }
  }
}

TEST_CASE("i-dominance of u_B d_A") {
  const Rank r6(6);
  CHECK(is_i_dominant_ud(ResidueSet(r6, {3, 4, 5, 6}), ResidueSet(r6, {0, 1, 2, 3, 4}), 0));
  const Rank r2(2);
  CHECK_FALSE(is_i_dominant_ud(ResidueSet(r2, {0, 1}), ResidueSet(r2, {0, 1}), 1));
  CHECK(is_i_dominant_ud(ResidueSet(r2, {1, 2}), ResidueSet(r2, {0}), 0));
  CHECK(error_of([&] { is_i_dominant_ud(ResidueSet(r6, {0}), ResidueSet(r6, {1}), 0); }) ==
        Errc::SizeTooSmall);
}

TEST_CASE("i-dominance matches descents of the product") {
  for (int k = 1; k <= 4; ++k) {
    const Rank r(k);
    const auto sets = connected_nonempty(r);
    for (const auto& b : sets) {
      for (const auto& a : sets) {
        if (a.size() + b.size() < k + 1) continue;
        const auto x = ud_product(b, a);
        for (int i = 0; i <= k; ++i) {
          const bool expected = x && x->right_descents().subset_of(ResidueSet(r, {i}));
          CHECK(is_i_dominant_ud(b, a, i) == expected);
        }
      }
    }
  }
}

TEST_CASE("cyclic words are reduced and reverse into each other") {
  for (int k = 1; k <= 5; ++k) {
    const Rank r(k);
    for (const auto& a : all_proper(r)) {
      const Word d = d_word(a);
      CHECK(d.size() == static_cast<std::size_t>(a.size()));
      CHECK(is_reduced(d));
      CHECK(d_element(a) == AffinePermutation::from_word(u_word(a).reversed()));
      CHECK(u_element(a) == d_element(a).inverse());
      // j precedes j-1 whenever both are present.
      const auto& letters = d.letters();
      for (std::size_t p = 0; p < letters.size(); ++p) {
        for (std::size_t q = 0; q < letters.size(); ++q) {
          if (r.residue(letters[p] - 1) == letters[q]) CHECK(p < q);
        }
      }
    }
  }
}

TEST_CASE("disjoint components commute") {
  const Rank r(5);
  for (const auto& a : all_proper(r)) {
    for (const auto& b : all_proper(r)) {
      if (!a.intersected(b).empty()) continue;
      const auto u = a.united(b);
      if (!u.is_proper()) continue;
      if (connected_components(u).size() !=
          connected_components(a).size() + connected_components(b).size()) {
        continue;
      }
      CHECK(d_element(a) * d_element(b) == d_element(u));
      CHECK(d_element(b) * d_element(a) == d_element(u));
    }
  }
}

TEST_CASE("fat move shift identity") {
  for (int k = 1; k <= 6; ++k) {
    const Rank r(k);
    const auto sets = connected_nonempty(r);
    for (int i = 0; i <= k; ++i) {
      for (const auto& a : sets) {
        const bool a_dom = d_element(a).right_descents() == ResidueSet(r, {i});
        if (!a_dom) continue;
        for (const auto& b : sets) {
          const bool b_dom = u_element(b).right_descents() == ResidueSet(r, {r.residue(i - 1)});
          if (!b_dom || a.size() + b.size() < k + 1) continue;
          const auto lhs = ud_product(b, a);
          const Word rhs = d_word(a.shifted(1)).concatenated(u_word(b.shifted(1)));
          const auto rhs_el = oracle::nil_product(k, rhs.letters());
          REQUIRE(lhs.has_value());
          REQUIRE(rhs_el.has_value());
          CHECK(*lhs == *rhs_el);
        }
      }
    }
  }
}

TEST_CASE("extended braid relation") {
  for (int k = 2; k <= 6; ++k) {
    const Rank r(k);
    for (const auto& iv : oracle::cyclic_intervals(k)) {
      if (iv.size() < 2) continue;
      std::vector<int> up(iv.begin(), iv.end());
      std::vector<int> down(iv.rbegin(), iv.rend());
      std::vector<int> first = up;  // i, ..., j, ..., i
      first.insert(first.end(), down.begin() + 1, down.end());
      std::vector<int> second = down;  // j, ..., i, ..., j
      second.insert(second.end(), up.begin() + 1, up.end());
      const auto x = oracle::nil_product(k, first);
      const auto y = oracle::nil_product(k, second);
      REQUIRE(x.has_value());
      REQUIRE(y.has_value());
      CHECK(*x == *y);
    }
  }
}

TEST_CASE("case names") {
  CHECK(std::string(ud_case_name(UdCase::Overlap)) == "OVERLAP");
  CHECK(std::string(ud_case_name(UdCase::BInA)) == "B_IN_A");
}

}  // TEST_SUITE
