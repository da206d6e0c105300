#include "omc/decompose.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace omc;

namespace {

SymmetricCycle standard_cycle(const OMInstance& h, int n) {
  std::vector<int> order;
  for (int e = 1; e <= n; ++e) order.push_back(e);
  return distinguished_cycle(h, SignVector::all_plus(n), order);
}

std::vector<std::string> sorted_members(const Decomposition& d) {
  std::vector<std::string> out;
  for (const SignVector& m : d.members) out.push_back(m.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("three-element worked example") {
  OMInstance h3 = hypercube_instance(3);
  SymmetricCycle c = standard_cycle(h3, 3);
  Decomposition d = decompose(h3, c, SignVector::parse("+-+"));
  CHECK(d.lambda == std::vector<int>{1, -1, 1});
  CHECK(sorted_members(d) == std::vector<std::string>{"+++", "+--", "--+"});
  CHECK(d.q_size() == 3);
  CHECK(tope_sum(d.members) == tope_sum({d.tope}));
}

TEST_CASE("five-element worked example") {
  OMInstance h5 = hypercube_instance(5);
  SymmetricCycle c = standard_cycle(h5, 5);
  Decomposition d = decompose(h5, c, SignVector::parse("+-+-+"));
  CHECK(d.lambda == std::vector<int>{1, -1, 1, -1, 1});
  std::vector<std::string> expect = {"+++++", "+----", "--+++", "+++--",
                                     "----+"};
  std::vector<std::string> got;
  for (const SignVector& m : d.members) got.push_back(m.to_string());
  CHECK(got == expect);
}

TEST_CASE("six-element worked example includes a zero coordinate") {
  OMInstance h6 = hypercube_instance(6);
  SymmetricCycle c = standard_cycle(h6, 6);
  Decomposition d = decompose(h6, c, SignVector::parse("+-+-+-"));
  CHECK(d.lambda == std::vector<int>{0, -1, 1, -1, 1, -1});
  std::vector<std::string> expect = {"+-----", "--++++", "+++---", "----++",
                                     "+++++-"};
  std::vector<std::string> got;
  for (const SignVector& m : d.members) got.push_back(m.to_string());
  CHECK(got == expect);
  CHECK(d.q_size() == 5);
}

TEST_CASE("member sets do not depend on the basis window") {
  OMInstance h4 = hypercube_instance(4);
  SymmetricCycle c = standard_cycle(h4, 4);
  for (const SignVector& t : h4.topes()) {
    Decomposition base = decompose(h4, c, t, 0);
    for (int w = 1; w < 8; ++w) {
      Decomposition shifted = decompose(h4, c, t, w);
      CHECK(sorted_members(shifted) == sorted_members(base));
    }
  }
}

TEST_CASE("solver agrees with exhaustive subset search") {
  for (int n : {3, 4, 5}) {
    OMInstance h = hypercube_instance(n);
    SymmetricCycle c = standard_cycle(h, n);
    for (const SignVector& t : h.topes()) {
      Decomposition fast = decompose(h, c, t);
      Decomposition slow = brute_force_decompose(h, c, t);
      CHECK(fast.lambda == slow.lambda);
      CHECK(sorted_members(fast) == sorted_members(slow));
    }
  }
}

TEST_CASE("cycle vertices decompose as themselves") {
  OMInstance h5 = hypercube_instance(5);
  SymmetricCycle c = standard_cycle(h5, 5);
  for (int k = 0; k < 10; ++k) {
    Decomposition d = decompose(h5, c, c.vertex(k));
    CHECK(d.q_size() == 1);
    CHECK(d.members.front() == c.vertex(k));
  }
}

TEST_CASE("decomposition size is always odd") {
  OMInstance h6 = hypercube_instance(6);
  SymmetricCycle c = standard_cycle(h6, 6);
  for (const SignVector& t : h6.topes()) {
    Decomposition d = decompose(h6, c, t);
    CHECK(d.q_size() % 2 == 1);
    CHECK(d.members.size() == d.lambda.size() -
                                  std::count(d.lambda.begin(), d.lambda.end(),
                                             0));
  }
}

TEST_CASE("inputs are vetted before solving") {
  OMInstance h4 = hypercube_instance(4);
  SymmetricCycle c = standard_cycle(h4, 4);
  CHECK_THROWS_WITH_AS(decompose(h4, c, SignVector::parse("+++")),
                       doctest::Contains("not a tope"), std::invalid_argument);

  SymmetricCycle wrong_digest("ffffffffffffffff", c.vertices());
  CHECK_THROWS_WITH_AS(decompose(h4, wrong_digest, SignVector::all_plus(4)),
                       doctest::Contains("cycle"), std::invalid_argument);
}

TEST_CASE("the exhaustive oracle refuses oversized ground sets") {
  OMInstance h12 = hypercube_instance(12);
  SymmetricCycle c = standard_cycle(h12, 12);
  CHECK_THROWS_WITH_AS(
      brute_force_decompose(h12, c, SignVector::all_plus(12)),
      doctest::Contains("cap"), std::invalid_argument);
}

TEST_CASE("decompositions serialize with window-order members") {
  OMInstance h3 = hypercube_instance(3);
  SymmetricCycle c = standard_cycle(h3, 3);
  std::string json = decomposition_json_string(decompose(h3, c, SignVector::parse("+-+")));
  CHECK(json.find("\"tope\": \"+-+\"") != std::string::npos);
  CHECK(json.find("\"q_size\": 3") != std::string::npos);
  CHECK(json.find("\"+++\"") != std::string::npos);
  CHECK(json.back() == '\n');
}
