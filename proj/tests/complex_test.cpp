#include "omc/complex.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

using namespace omc;

namespace {

SymmetricCycle standard_cycle(const OMInstance& h, int n) {
  std::vector<int> order;
  for (int e = 1; e <= n; ++e) order.push_back(e);
  return distinguished_cycle(h, SignVector::all_plus(n), order);
}

std::vector<std::vector<int>> facet_lists(const SimplicialComplex& c) {
  std::vector<std::vector<int>> out;
  for (const GroundSubset& f : c.facets()) out.push_back(f.members());
  return out;
}

// Inclusion-exclusion count of | union of 2^{F_i} | over the facets —
// an arithmetic oracle that never touches the face enumeration code.
std::int64_t union_of_powersets_size(const std::vector<GroundSubset>& facets,
                                     int n) {
  std::int64_t total = 0;
  std::size_t m = facets.size();
  for (std::uint32_t pick = 1; pick < (1u << m); ++pick) {
    std::uint32_t inter = (1u << n) - 1;
    int chosen = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (pick & (1u << i)) {
        inter &= facets[i].as_bits();
        ++chosen;
      }
    std::int64_t block = 1ll << __builtin_popcount(inter);
    total += (chosen % 2 == 1) ? block : -block;
  }
  return total;
}

}  // namespace

TEST_CASE("facet absorption keeps only maximal generators") {
  SimplicialComplex c(4, {GroundSubset(4, {1, 2}), GroundSubset(4, {1}),
                          GroundSubset(4, {}), GroundSubset(4, {1, 2})});
  CHECK(facet_lists(c) == std::vector<std::vector<int>>{{1, 2}});
  CHECK(c.face_count() == 4);  // {}, {1}, {2}, {1,2}
}

TEST_CASE("the empty complex has exactly the empty face") {
  SimplicialComplex c(5, {});
  CHECK(facet_lists(c) == std::vector<std::vector<int>>{{}});
  CHECK(c.faces() == std::vector<std::uint32_t>{0});
  CHECK(long_f_vector(c, 5) == IntVector{1, 0, 0, 0, 0, 0});
}

TEST_CASE("faces enumerates the downward closure in sorted order") {
  SimplicialComplex c(3, {GroundSubset(3, {1, 2}), GroundSubset(3, {3})});
  // Masks: {}=0, {1}=1, {2}=2, {1,2}=3, {3}=4.
  CHECK(c.faces() == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
  CHECK(c.face_count() == 5);
}

TEST_CASE("face counts match an inclusion-exclusion oracle") {
  std::mt19937_64 rng(20260818);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);  // 4..10
    int gens = 1 + static_cast<int>(rng() % 5);
    std::vector<GroundSubset> facets;
    for (int g = 0; g < gens; ++g) {
      std::vector<int> members;
      for (int e = 1; e <= n; ++e)
        if (rng() % 3 == 0) members.push_back(e);
      facets.emplace_back(n, members);
    }
    SimplicialComplex c(n, facets);
    CHECK(static_cast<std::int64_t>(c.face_count()) ==
          union_of_powersets_size(facets, n));
  }
}

TEST_CASE("worked decomposition complexes and their face vectors") {
  SUBCASE("five elements") {
    OMInstance h5 = hypercube_instance(5);
    SymmetricCycle c5 = standard_cycle(h5, 5);
    SignVector t1 = SignVector::parse("+-+-+");
    SimplicialComplex k1 = lambda_complex(t1, decompose(h5, c5, t1));
    CHECK(long_f_vector(k1, 6) == IntVector{1, 5, 10, 5, 0, 0, 0});
    CHECK(long_f_vector(k1, 5) == IntVector{1, 5, 10, 5, 0, 0});
  }
  SUBCASE("six elements") {
    OMInstance h6 = hypercube_instance(6);
    SymmetricCycle c6 = standard_cycle(h6, 6);
    SignVector t2 = SignVector::parse("+-+-+-");
    SimplicialComplex k2 = lambda_complex(t2, decompose(h6, c6, t2));
    CHECK(facet_lists(k2) ==
          std::vector<std::vector<int>>{
              {1, 2, 4, 6}, {1, 3, 4, 6}, {1, 3, 5, 6}, {2, 3, 5}, {2, 4, 5}});
    CHECK(long_f_vector(k2, 6) == IntVector{1, 6, 15, 12, 3, 0, 0});
  }
}

TEST_CASE("padding only appends zeros") {
  SimplicialComplex c(3, {GroundSubset(3, {1, 2, 3})});
  IntVector narrow = long_f_vector(c, 3);
  IntVector wide = long_f_vector(c, 7);
  CHECK(narrow == IntVector{1, 3, 3, 1});
  REQUIRE(wide.size() == 8);
  for (std::size_t j = 0; j < narrow.size(); ++j) CHECK(wide[j] == narrow[j]);
  for (std::size_t j = narrow.size(); j < wide.size(); ++j)
    CHECK(wide[j] == 0);
  CHECK_THROWS_AS(long_f_vector(c, 2), std::invalid_argument);
}

TEST_CASE("full-simplex face vectors are binomial rows") {
  CHECK(beta_vector(5, 6) == IntVector{1, 5, 10, 10, 5, 1, 0});
  CHECK(beta_vector(6, 6) == IntVector{1, 6, 15, 20, 15, 6, 1});
  CHECK(beta_vector(1, 3) == IntVector{1, 1, 0, 0});
  CHECK_THROWS_AS(beta_vector(0, 6), std::invalid_argument);
  CHECK_THROWS_AS(beta_vector(7, 6), std::invalid_argument);
}

TEST_CASE("simplex boundaries drop exactly the top face") {
  SimplicialComplex b4 = simplex_boundary(4, 6);
  CHECK(long_f_vector(b4, 6) == IntVector{1, 4, 6, 4, 0, 0, 0});
  for (int k = 1; k <= 6; ++k) {
    IntVector f = long_f_vector(simplex_boundary(k, 6), 6);
    for (int j = 0; j <= 6; ++j) {
      Int expect = (j <= k) ? binomial(k, j) : Int(0);
      if (j == k) expect -= 1;
      CHECK(f[j] == expect);
    }
  }
  CHECK_THROWS_AS(simplex_boundary(0, 6), std::invalid_argument);
  CHECK_THROWS_AS(simplex_boundary(7, 6), std::invalid_argument);
}

TEST_CASE("lambda_complex rejects a tope/decomposition mismatch") {
  OMInstance h4 = hypercube_instance(4);
  SymmetricCycle c = standard_cycle(h4, 4);
  Decomposition d = decompose(h4, c, SignVector::parse("+-+-"));
  CHECK_THROWS_AS(lambda_complex(SignVector::parse("++--"), d),
                  std::invalid_argument);
}

TEST_CASE("ground sets beyond the enumeration limit are rejected") {
  CHECK_THROWS_WITH_AS(SimplicialComplex(kMaxComplexGround + 1, {}),
                       doctest::Contains("ground"), std::invalid_argument);
}

TEST_CASE("complex files round trip") {
  SimplicialComplex c(6, {GroundSubset(6, {1, 2, 4, 6}),
                          GroundSubset(6, {2, 3, 5})});
  auto path = std::filesystem::temp_directory_path() / "omc_complex_rt.json";
  save_complex(c, path);
  CHECK(load_complex(path) == c);

  std::ofstream(path) << "{\"facets\": [[1]]}";
  CHECK_THROWS_WITH_AS(load_complex(path), doctest::Contains("required"),
                       std::runtime_error);
  std::ofstream(path) << "{\"n\": 3, \"facets\": [[0]]}";
  CHECK_THROWS_AS(load_complex(path), std::runtime_error);
  std::filesystem::remove(path);
}
