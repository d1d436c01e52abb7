#include <doctest.h>

#include "castle/format.hpp"
#include "helpers.hpp"

using namespace castle;
using castle::testing::error_of;

namespace {

const Rank r3(3);

AffinePermutation golden() { return AffinePermutation::from_window(r3, {1, -6, 0, 15}); }

}  // namespace

TEST_SUITE("format") {

TEST_CASE("parsers") {
  CHECK(parse_word(r3, "2 1 0 3") == Word(r3, {2, 1, 0, 3}));
  CHECK(parse_word(r3, "2,1, 0") == Word(r3, {2, 1, 0}));
  CHECK(parse_word(r3, "  ").empty());
  CHECK(error_of([] { parse_word(r3, "2 x"); }) == Errc::Parse);
  CHECK(error_of([] { parse_word(r3, "4"); }) == Errc::BadResidue);
  CHECK(error_of([] { parse_word(r3, "-1"); }) == Errc::BadResidue);

  CHECK(parse_window(r3, "[1,-6,0,15]") == golden());
  CHECK(parse_window(r3, "1, -6, 0, 15") == golden());
  CHECK(error_of([] { parse_window(r3, "[1,2,3"); }) == Errc::Parse);
  CHECK(error_of([] { parse_window(r3, "[1,2,3]"); }) == Errc::WrongLength);
  CHECK(error_of([] { parse_window(r3, "[1,2,3,5]"); }) == Errc::BadSum);

  CHECK(parse_partition("3,2,2,1,1,1") == Partition({3, 2, 2, 1, 1, 1}));
  CHECK(parse_partition("(3,1)") == Partition({3, 1}));
  CHECK(parse_partition("()") == Partition());
  CHECK(error_of([] { parse_partition("1,2"); }) == Errc::Parse);
  CHECK(error_of([] { parse_partition("2,0"); }) == Errc::Parse);
  CHECK(error_of([] { parse_partition("a"); }) == Errc::Parse);

  CHECK(parse_code(r3, "(3,8,4,0)") == KCode(r3, {3, 8, 4, 0}));
  CHECK(parse_code(r3, "3,8,4,0") == KCode(r3, {3, 8, 4, 0}));
  CHECK(error_of([] { parse_code(r3, "(1,1,1,1)"); }) == Errc::InvalidCode);
}

TEST_CASE("printing") {
  const auto x = golden();
  CHECK(to_string(x) == "[1,-6,0,15]");
  CHECK(to_string(Word(r3, {2, 1, 0})) == "2 1 0");
  CHECK(to_string(ResidueSet(r3, {2, 0})) == "{0,2}");
  CHECK(to_cyclic_string(ResidueSet(r3, {3, 0})) == "{3,0}");
  const Rank r7(7);
  CHECK(to_cyclic_string(ResidueSet(r7, {0, 1, 2, 3, 4, 6, 7})) == "{6,7,0,1,2,3,4}");
  CHECK(to_string(Interval{3, 1}) == "[3,1]");
  CHECK(to_string(rd(x)) == "(3,8,4,0)");
  CHECK(to_string(Partition({3, 1})) == "(3,1)");
  CHECK(to_string(to_core(BoundedPartition(r3, {3, 1}))) == "(4,1)");
  const auto dec = canonical_decomposition(x, Direction::Decreasing, Side::Right);
  CHECK(to_string(dec).rfind("d{0,1,2} | d{3,0,1} | ", 0) == 0);
  CHECK(std::string(mode_name(Direction::Decreasing, Side::Right)) == "rd");
  CHECK(std::string(mode_name(Direction::Increasing, Side::Right)) == "ri");
  CHECK(std::string(mode_name(Direction::Decreasing, Side::Left)) == "ld");
  CHECK(std::string(mode_name(Direction::Increasing, Side::Left)) == "li");
}

TEST_CASE("tableau and trace text") {
  const auto res = insert_word(r3, Word(r3, {0, 3, 1, 2, 1, 0}));
  CHECK(to_string(res.tableau) == "2 5 1\n6 . 3\n. . 4\n");
  const auto one = insert(KCode(r3, {1, 0, 0, 0}), 1);
  CHECK(to_string(one.trace).find("bump") != std::string::npos);
}

TEST_CASE("json") {
  const auto x = golden();
  CHECK(to_json(x) == nlohmann::json::parse("[1,-6,0,15]"));
  CHECK(to_json(rd(x)) == nlohmann::json::parse("[3,8,4,0]"));
  const auto j = to_json(canonical_decomposition(x, Direction::Decreasing, Side::Right));
  CHECK(j["mode"] == "rd");
  CHECK(j["rows"].size() == 8);
  CHECK(AffinePermutation::from_word(Word(r3, j["word"].get<std::vector<int>>())) == x);
  const auto q = to_json(insert_word(r3, Word(r3, {0, 3, 1, 2, 1, 0})).tableau);
  CHECK(q.size() == 6);
  CHECK(q[0] == nlohmann::json::parse(R"({"column":0,"label":2,"row":1})"));
}

TEST_CASE("sum round trips") {
  for (int k = 1; k <= 3; ++k) {
    const Rank r(k);
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        const NilCoxSum f = h(r, i) * h(r, j) - e(r, j);
        CHECK(sum_from_json(r, to_json(f)) == f);
        CHECK(sum_from_json(r, nlohmann::json::parse(to_json(f).dump())) == f);
        CHECK(parse_sum_text(r, to_string(f)) == f);
      }
    }
  }
  CHECK(to_string(NilCoxSum(r3)).empty());
  CHECK(parse_sum_text(r3, "").is_zero());
}

TEST_CASE("large coefficients") {
  BigInt big = 1;
  for (int t = 0; t < 100; ++t) big *= 3;
  const auto f = NilCoxSum::monomial(golden(), big) - NilCoxSum::monomial(AffinePermutation::identity(r3), big);
  const auto j = to_json(f);
  bool saw_string = false;
  for (const auto& term : j) saw_string = saw_string || term["coeff"].is_string();
  CHECK(saw_string);
  CHECK(sum_from_json(r3, j) == f);
  CHECK(parse_sum_text(r3, to_string(f)) == f);
  CHECK(to_json(NilCoxSum::monomial(golden(), 5))[0]["coeff"] == 5);
}

TEST_CASE("malformed sums") {
  CHECK(error_of([] { sum_from_json(r3, nlohmann::json::object()); }) == Errc::Parse);
  CHECK(error_of([] { sum_from_json(r3, nlohmann::json::parse(R"([{"window":[1,2,3,4]}])")); }) ==
        Errc::Parse);
  CHECK(error_of([] {
          sum_from_json(r3, nlohmann::json::parse(R"([{"window":[1,2,3,4],"coeff":"12x"}])"));
        }) == Errc::Parse);
  CHECK(error_of([] { parse_sum_text(r3, "[1,2,3,4]"); }) == Errc::Parse);
  CHECK(error_of([] { parse_sum_text(r3, "[1,2,3,4] 1z"); }) == Errc::Parse);
}

}  // TEST_SUITE
