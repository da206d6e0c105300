#include "omc/sign_vector.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

using namespace omc;

TEST_CASE("parse accepts only '+' and '-' and reports the bad position") {
  CHECK(SignVector::parse("+-+").to_string() == "+-+");
  CHECK(SignVector::parse("-").to_string() == "-");

  CHECK_THROWS_WITH_AS(SignVector::parse("+x-"),
                       doctest::Contains("position 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(SignVector::parse("+10"),
                       doctest::Contains("position 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(SignVector::parse("++ "),
                       doctest::Contains("position 3"), std::invalid_argument);
  CHECK_THROWS_AS(SignVector::parse(""), std::invalid_argument);
}

TEST_CASE("construction rejects entries outside {+1,-1}") {
  CHECK_THROWS_AS(SignVector(std::vector<std::int8_t>{1, 0, -1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SignVector(std::vector<std::int8_t>{}),
                  std::invalid_argument);
}

TEST_CASE("element access is 1-indexed and range checked") {
  SignVector v = SignVector::parse("+-+");
  CHECK(v.size() == 3);
  CHECK(v.sign(1) == 1);
  CHECK(v.sign(2) == -1);
  CHECK(v.sign(3) == 1);
  CHECK(v.is_negative(2));
  CHECK_THROWS_AS(v.sign(0), std::out_of_range);
  CHECK_THROWS_AS(v.sign(4), std::out_of_range);
}

TEST_CASE("negation and single flips behave involutively") {
  SignVector v = SignVector::parse("+-+-");
  CHECK(negate(v).to_string() == "-+-+");
  CHECK(negate(negate(v)) == v);
  CHECK(v.flipped(1).to_string() == "--+-");
  CHECK(v.flipped(1).flipped(1) == v);
  CHECK_THROWS_AS(v.flipped(5), std::out_of_range);
}

TEST_CASE("canonical order is the text order with '+' before '-'") {
  CHECK(SignVector::parse("+++") < SignVector::parse("++-"));
  CHECK(SignVector::parse("++-") < SignVector::parse("+-+"));
  CHECK(SignVector::parse("+-+") < SignVector::parse("---"));

  // Property: the comparator agrees with std::string order of the text.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::int8_t> a, b;
    for (int i = 0; i < n; ++i) {
      a.push_back(rng() % 2 ? 1 : -1);
      b.push_back(rng() % 2 ? 1 : -1);
    }
    SignVector va{a}, vb{b};
    CHECK((va < vb) == (va.to_string() < vb.to_string()));
  }
}

TEST_CASE("reorient multiplies entrywise") {
  SignVector v = SignVector::parse("++--");
  SignVector w = SignVector::parse("+-+-");
  CHECK(reorient(v, w).to_string() == "+--+");
  CHECK(reorient(v, SignVector::all_plus(4)) == v);
  CHECK(reorient(v, v) == SignVector::all_plus(4));
  // Reorienting twice by the same vector is the identity.
  CHECK(reorient(reorient(v, w), w) == v);
  CHECK_THROWS_AS(reorient(v, SignVector::parse("+")), std::invalid_argument);
}

TEST_CASE("separation sets") {
  SignVector u = SignVector::parse("++-+-");
  SignVector v = SignVector::parse("+---+");
  GroundSubset s = separation_set(u, v);
  CHECK(s.members() == std::vector<int>{2, 4, 5});
  CHECK(s.cardinality() == 3);
  CHECK(separation_set(u, u).cardinality() == 0);
  CHECK(separation_set(u, negate(u)).cardinality() == 5);
  CHECK(separation_set(v, u) == s);
}

TEST_CASE("tope_sum is the entrywise integer sum") {
  std::vector<SignVector> vs = {SignVector::parse("+++"),
                                SignVector::parse("+--"),
                                SignVector::parse("--+")};
  IntVector sum = tope_sum(vs);
  CHECK(sum == IntVector{Int(1), Int(-1), Int(1)});
  CHECK_THROWS_AS(tope_sum({}), std::invalid_argument);
  CHECK_THROWS_AS(
      tope_sum({SignVector::parse("++"), SignVector::parse("+")}),
      std::invalid_argument);
}

TEST_CASE("ground subsets sort, deduplicate and range check") {
  GroundSubset s(6, {5, 2, 2, 3});
  CHECK(s.members() == std::vector<int>{2, 3, 5});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(s.complement().members() == std::vector<int>{1, 4, 6});
  CHECK(s.complement().complement() == s);
  CHECK(s.as_bits() == 0b010110u);
  CHECK_THROWS_AS(GroundSubset(4, {5}), std::invalid_argument);
  CHECK_THROWS_AS(GroundSubset(4, {0}), std::invalid_argument);
}

TEST_CASE("packed bits match the negative positions") {
  SignVector v = SignVector::parse("+--+-");
  CHECK(v.packed() == 0b10110u);
  CHECK(SignVector::all_plus(5).packed() == 0u);
}
