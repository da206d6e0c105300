#pragma once

// The experiment engine: sweep tope pairs drawn from two instances
// (each carrying a symmetric cycle), push every pair through the
// decomposition -> complex -> spectra pipeline, and check the expected
// relations.  One run produces a deterministic report that can be
// serialized to JSON or CSV byte-for-byte reproducibly.
//
// Hypothesis handling.  The relations under test are theorems only when
// the two ground sizes have opposite parity (s < t) and both
// decompositions have at least five members.  A plan that enforces both
// counts every failed check as a *violation* (the run "fails"); a plan
// that relaxes either records failed checks as *anomalies* instead —
// that is the negative-control mode, where anomalies are the expected
// and interesting output.  The raw/factored agreement of the bilinear
// form is an algebraic identity independent of all hypotheses, so it is
// asserted unconditionally, even on pairs filtered out by min_q.

#include "omc/cycle.hpp"
#include "omc/decompose.hpp"
#include "omc/instance.hpp"
#include "omc/spectra.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace omc {

struct TopeSelector {
  bool all = true;
  std::vector<SignVector> chosen;  // used when !all; must be topes

  static TopeSelector all_topes() { return TopeSelector{}; }
  static TopeSelector just(std::vector<SignVector> list) {
    return TopeSelector{false, std::move(list)};
  }
};

struct ExperimentSide {
  OMInstance instance;
  SymmetricCycle cycle;
  TopeSelector topes;
};

struct ExperimentPlan {
  ExperimentSide first;   // ground size s
  ExperimentSide second;  // ground size t, s <= t
  int min_q = 5;          // odd, >= 1; pairs below the bound are skipped
  bool parity_enforced = true;
};

struct PairReport {
  std::string tope1, tope2;
  int s = 0, t = 0;
  int q1 = 0, q2 = 0;
  IntVector f1, f2;  // long f-vectors, both padded to t
  IntVector h1, h2;  // long h-vectors
  bool ds1 = false;  // h1 symmetric under reversal
  bool ds2 = false;  // h2 antisymmetric under reversal
  Int iota1, iota2;  // inner products with the all-ones vector
  bool span1 = false;
  Int raw_value, hh_value;
  bool orthogonal = false;
  std::vector<std::string> failed_checks;  // empty when everything holds
  bool violation = false;  // failed_checks nonempty AND hypotheses enforced
};

struct AnomalyRecord {
  std::string tope1, tope2;
  std::string check;  // which check failed, e.g. "ds1" or "omega2:euler"
};

struct ExperimentResult {
  int s = 0, t = 0;
  int min_q = 5;
  bool parity_enforced = true;
  bool hypotheses_enforced = true;  // parity_enforced && min_q >= 5
  std::string first_digest, second_digest;
  std::string input_digest;  // fingerprint of instances, cycles and knobs
  long long pairs_tested = 0;
  long long pairs_skipped = 0;
  long long violations = 0;
  std::vector<PairReport> pairs;        // admitted pairs, lexicographic
  std::vector<AnomalyRecord> anomalies; // failed checks on non-enforced runs
};

// Runs the full sweep.  Throws std::invalid_argument for inconsistent
// plans (s > t, enforced parity with equal parities, bad selectors,
// even or nonpositive min_q, cycles that fail validation) and
// InternalInconsistency if the raw and factored bilinear values ever
// disagree.
ExperimentResult run_experiment(const ExperimentPlan& plan);

// Control-mode entry point: requires that at least one hypothesis is
// relaxed (parity_enforced == false or min_q < 5) and delegates to
// run_experiment; failed checks surface as anomaly records.
ExperimentResult negative_controls(const ExperimentPlan& plan);

std::string report_json_string(const ExperimentResult& result);
std::string report_csv_string(const ExperimentResult& result);
void write_report_json(const ExperimentResult& result,
                       const std::filesystem::path& path);
void write_report_csv(const ExperimentResult& result,
                      const std::filesystem::path& path);

// One-line run summary, e.g. for terminal output.
std::string summary_line(const ExperimentResult& result);

}  // namespace omc
