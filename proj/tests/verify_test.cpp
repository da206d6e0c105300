#include "omc/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace omc;

namespace {

SymmetricCycle standard_cycle(const OMInstance& h, int n) {
  std::vector<int> order;
  for (int e = 1; e <= n; ++e) order.push_back(e);
  return distinguished_cycle(h, SignVector::all_plus(n), order);
}

ExperimentPlan hypercube_plan(int s, int t) {
  OMInstance a = hypercube_instance(s);
  OMInstance b = hypercube_instance(t);
  SymmetricCycle ca = standard_cycle(a, s);
  SymmetricCycle cb = standard_cycle(b, t);
  return ExperimentPlan{{std::move(a), std::move(ca), TopeSelector::all_topes()},
                        {std::move(b), std::move(cb), TopeSelector::all_topes()},
                        5,
                        true};
}

}  // namespace

TEST_CASE("the exhaustive five-by-six sweep holds every relation") {
  ExperimentResult r = run_experiment(hypercube_plan(5, 6));
  CHECK(r.s == 5);
  CHECK(r.t == 6);
  CHECK(r.hypotheses_enforced);
  CHECK(r.pairs_tested == 24);
  CHECK(r.pairs_skipped == 32 * 64 - 24);
  CHECK(r.violations == 0);
  CHECK(r.anomalies.empty());
  REQUIRE(r.pairs.size() == 24);
  for (const PairReport& p : r.pairs) {
    CHECK(p.q1 >= 5);
    CHECK(p.q2 >= 5);
    CHECK(p.ds1);
    CHECK(p.ds2);
    CHECK(p.iota1 == 0);
    CHECK(p.iota2 == 0);
    CHECK(p.span1);
    CHECK(p.orthogonal);
    CHECK(p.raw_value == 0);
    CHECK(p.raw_value == p.hh_value);
    CHECK(p.failed_checks.empty());
    CHECK_FALSE(p.violation);
  }
  // Admitted pairs come out in canonical tope order.
  CHECK(std::is_sorted(r.pairs.begin(), r.pairs.end(),
                       [](const PairReport& a, const PairReport& b) {
                         return std::tie(a.tope1, a.tope2) <
                                std::tie(b.tope1, b.tope2);
                       }));
}

TEST_CASE("a single admitted pair carries the worked numbers") {
  OMInstance h5 = hypercube_instance(5);
  OMInstance h6 = hypercube_instance(6);
  ExperimentPlan plan{
      {h5, standard_cycle(h5, 5),
       TopeSelector::just({SignVector::parse("+-+-+")})},
      {h6, standard_cycle(h6, 6),
       TopeSelector::just({SignVector::parse("+-+-+-")})},
      5,
      true};
  ExperimentResult r = run_experiment(plan);
  REQUIRE(r.pairs.size() == 1);
  const PairReport& p = r.pairs.front();
  CHECK(p.tope1 == "+-+-+");
  CHECK(p.tope2 == "+-+-+-");
  CHECK(p.q1 == 5);
  CHECK(p.q2 == 5);
  CHECK(p.f1 == IntVector{1, 5, 10, 5, 0, 0, 0});
  CHECK(p.f2 == IntVector{1, 6, 15, 12, 3, 0, 0});
  CHECK(p.h1 == IntVector{1, -1, -5, 10, -5, -1, 1});
  CHECK(p.h2 == IntVector{1, 0, -3, 0, 3, 0, -1});
  CHECK(p.hh_value == 0);
}

TEST_CASE("reports are bitwise reproducible") {
  ExperimentResult a = run_experiment(hypercube_plan(5, 6));
  ExperimentResult b = run_experiment(hypercube_plan(5, 6));
  CHECK(report_json_string(a) == report_json_string(b));
  CHECK(report_csv_string(a) == report_csv_string(b));
  CHECK(a.input_digest == b.input_digest);
}

TEST_CASE("plans are validated before any work starts") {
  SUBCASE("sides out of order") {
    CHECK_THROWS_WITH_AS(run_experiment(hypercube_plan(6, 5)),
                         doctest::Contains("swap the sides"),
                         std::invalid_argument);
  }
  SUBCASE("equal parity under enforcement") {
    CHECK_THROWS_WITH_AS(run_experiment(hypercube_plan(4, 6)),
                         doctest::Contains("parity_enforced=false"),
                         std::invalid_argument);
  }
  SUBCASE("even or nonpositive min_q") {
    ExperimentPlan plan = hypercube_plan(5, 6);
    plan.min_q = 4;
    CHECK_THROWS_AS(run_experiment(plan), std::invalid_argument);
    plan.min_q = -1;
    CHECK_THROWS_AS(run_experiment(plan), std::invalid_argument);
  }
  SUBCASE("selector naming a non-tope") {
    ExperimentPlan plan = hypercube_plan(5, 6);
    plan.first.topes = TopeSelector::just({SignVector::parse("+++++-")});
    CHECK_THROWS_WITH_AS(run_experiment(plan), doctest::Contains("not a tope"),
                         std::invalid_argument);
  }
  SUBCASE("cycle that fails validation") {
    ExperimentPlan plan = hypercube_plan(5, 6);
    std::vector<SignVector> verts = plan.first.cycle.vertices();
    verts[1] = verts[1].negated();
    plan.first.cycle = SymmetricCycle(plan.first.instance.digest(), verts);
    CHECK_THROWS_WITH_AS(run_experiment(plan), doctest::Contains("cycle"),
                         std::invalid_argument);
  }
}

TEST_CASE("negative controls require a relaxed hypothesis") {
  CHECK_THROWS_WITH_AS(negative_controls(hypercube_plan(5, 6)),
                       doctest::Contains("relax"), std::invalid_argument);
}

TEST_CASE("equal-parity controls break the theorems but never the identity") {
  ExperimentPlan plan = hypercube_plan(5, 7);
  plan.parity_enforced = false;
  ExperimentResult r = negative_controls(plan);
  CHECK_FALSE(r.hypotheses_enforced);
  CHECK(r.violations == 0);
  CHECK(r.pairs_tested > 0);
  CHECK_FALSE(r.anomalies.empty());

  bool some_nonzero = false;
  for (const PairReport& p : r.pairs) {
    CHECK(p.raw_value == p.hh_value);  // identity survives everywhere
    CHECK_FALSE(p.violation);
    if (p.raw_value != 0) some_nonzero = true;
  }
  CHECK(some_nonzero);

  for (const AnomalyRecord& a : r.anomalies) {
    CHECK_FALSE(a.check.empty());
    CHECK_FALSE(a.tope1.empty());
    CHECK_FALSE(a.tope2.empty());
  }
}

TEST_CASE("small decompositions are the knob min_q guards") {
  ExperimentPlan plan = hypercube_plan(5, 6);
  plan.min_q = 3;
  ExperimentResult r = negative_controls(plan);
  CHECK_FALSE(r.hypotheses_enforced);
  CHECK(r.violations == 0);
  CHECK(r.pairs_tested > 24);  // the q=3 pairs are now admitted

  // Size-three decompositions miss the vertex-count condition...
  bool vertex_anomaly = false;
  for (const AnomalyRecord& a : r.anomalies)
    if (a.check == "omega1:vertex_count" || a.check == "omega2:vertex_count")
      vertex_anomaly = true;
  CHECK(vertex_anomaly);

  // ...except the handful whose omega happens to be a genuine polytope
  // f-vector; those pairs pass every check despite q = 3.
  bool clean_small_pair = false;
  for (const PairReport& p : r.pairs)
    if (p.q2 == 3 && p.failed_checks.empty()) clean_small_pair = true;
  CHECK(clean_small_pair);
}

TEST_CASE("report writers") {
  ExperimentResult r = run_experiment(hypercube_plan(5, 6));

  SUBCASE("JSON carries the run header and all pairs") {
    nlohmann::json doc = nlohmann::json::parse(report_json_string(r));
    CHECK(doc["plan"]["s"] == 5);
    CHECK(doc["plan"]["t"] == 6);
    CHECK(doc["plan"]["min_q"] == 5);
    CHECK(doc["plan"]["hypotheses_enforced"] == true);
    CHECK(doc["pairs_tested"] == 24);
    CHECK(doc["violations"] == 0);
    CHECK(doc["pairs"].size() == 24);
    CHECK(doc["pairs"][0].contains("f1"));
    CHECK(doc["pairs"][0].contains("raw_value"));
    CHECK(doc["input_digest"].get<std::string>().size() == 16);
  }

  SUBCASE("CSV has a header and one row per pair") {
    std::istringstream csv(report_csv_string(r));
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line ==
          "tope1,tope2,s,t,q1,q2,f1,f2,h1,h2,ds1,ds2,iota1,iota2,span1,"
          "raw_value,hh_value,orthogonal,failed_checks,violation");
    int rows = 0;
    while (std::getline(csv, line))
      if (!line.empty()) ++rows;
    CHECK(rows == 24);
  }

  SUBCASE("file writers emit exactly the string forms") {
    auto dir = std::filesystem::temp_directory_path();
    auto jpath = dir / "omc_report_rt.json";
    auto cpath = dir / "omc_report_rt.csv";
    write_report_json(r, jpath);
    write_report_csv(r, cpath);
    std::ifstream jin(jpath, std::ios::binary);
    std::ifstream cin_(cpath, std::ios::binary);
    std::string jtext((std::istreambuf_iterator<char>(jin)),
                      std::istreambuf_iterator<char>());
    std::string ctext((std::istreambuf_iterator<char>(cin_)),
                      std::istreambuf_iterator<char>());
    CHECK(jtext == report_json_string(r));
    CHECK(ctext == report_csv_string(r));
    std::filesystem::remove(jpath);
    std::filesystem::remove(cpath);
  }

  SUBCASE("summary line") {
    CHECK(summary_line(r) ==
          "s=5 t=6 pairs_tested=24 pairs_skipped=2024 violations=0 "
          "anomalies=0");
  }
}

TEST_CASE("integers beyond int64 serialize as strings") {
  ExperimentResult r = run_experiment(hypercube_plan(5, 6));
  REQUIRE(!r.pairs.empty());
  r.pairs[0].raw_value = Int(1) << 70;
  r.pairs[0].hh_value = Int(1) << 70;
  nlohmann::json doc = nlohmann::json::parse(report_json_string(r));
  CHECK(doc["pairs"][0]["raw_value"].is_string());
  CHECK(doc["pairs"][0]["raw_value"] == (Int(1) << 70).str());
  CHECK(doc["pairs"][1]["raw_value"].is_number());
}
