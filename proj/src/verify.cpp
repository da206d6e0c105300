#include "omc/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace omc {

namespace {

// Everything the pair loop needs about one tope, computed once.
struct SideData {
  SignVector tope;
  int q = 0;
  IntVector f;      // padded to t
  IntVector omega;  // at this side's ground size
  IntVector h;
  bool ds = false;
  Int iota;
  std::vector<std::string> omega_tags;
  bool span = false;       // first side only
  bool span_defined = false;
};

std::vector<SignVector> resolve_selector(const ExperimentSide& side,
                                         const char* which) {
  std::vector<SignVector> out;
  if (side.topes.all) {
    out = side.instance.topes();
  } else {
    if (side.topes.chosen.empty())
      throw std::invalid_argument(std::string("plan: empty explicit tope list on ") +
                                  which + " side");
    for (const SignVector& v : side.topes.chosen) {
      if (!side.instance.contains(v))
        throw std::invalid_argument(std::string("plan: \"") + v.to_string() +
                                    "\" is not a tope of the " + which +
                                    " instance");
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

SideData make_side_data(const ExperimentSide& side, const SignVector& tope,
                        bool is_first, int s, int t) {
  SideData d{tope, 0, {}, {}, {}, false, Int(0), {}, false, false};
  const int m = is_first ? s : t;
  Decomposition dec = decompose(side.instance, side.cycle, tope);
  d.q = dec.q_size();
  d.f = long_f_vector(lambda_complex(tope, dec), t);
  d.omega = omega_vector(d.f, m, t);
  d.h = long_h_vector(d.f, m, t);
  d.ds = check_symmetry_law(d.h, is_first ? SymmetryLaw::Symmetric
                                          : SymmetryLaw::Antisymmetric);
  d.iota = iota_product(d.h);
  d.omega_tags = omega_anomalies(d.omega, m);
  if (is_first && s < t) {
    d.span_defined = true;
    d.span = span_membership(d.h, s, t).member;
  }
  return d;
}

std::string plan_fingerprint(const ExperimentPlan& plan,
                             const std::vector<SignVector>& first_topes,
                             const std::vector<SignVector>& second_topes) {
  std::string blob = "experiment\n";
  blob += plan.first.instance.digest() + "\n";
  blob += plan.second.instance.digest() + "\n";
  for (const SignVector& v : plan.first.cycle.vertices())
    blob += v.to_string() + ",";
  blob += "\n";
  for (const SignVector& v : plan.second.cycle.vertices())
    blob += v.to_string() + ",";
  blob += "\n";
  blob += "min_q=" + std::to_string(plan.min_q) + "\n";
  blob += std::string("parity=") + (plan.parity_enforced ? "1" : "0") + "\n";
  blob += plan.first.topes.all ? "all" : "list";
  for (const SignVector& v : first_topes) blob += " " + v.to_string();
  blob += "\n";
  blob += plan.second.topes.all ? "all" : "list";
  for (const SignVector& v : second_topes) blob += " " + v.to_string();
  blob += "\n";
  return fnv1a64_hex(blob);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentPlan& plan) {
  const int s = plan.first.instance.ground_size();
  const int t = plan.second.instance.ground_size();
  if (s > t)
    throw std::invalid_argument(
        "plan: first ground size must not exceed second (got s=" +
        std::to_string(s) + ", t=" + std::to_string(t) +
        "); swap the sides");
  if (plan.min_q < 1 || plan.min_q % 2 == 0)
    throw std::invalid_argument("plan: min_q must be odd and positive, got " +
                                std::to_string(plan.min_q));
  if (plan.parity_enforced && (s == t || (s + t) % 2 == 0))
    throw std::invalid_argument(
        "plan: enforced parity needs s < t with opposite parities, got s=" +
        std::to_string(s) + ", t=" + std::to_string(t) +
        " (relax with parity_enforced=false)");
  for (const auto* side : {&plan.first, &plan.second}) {
    ValidationReport rep = validate_cycle(side->instance, side->cycle);
    if (!rep.all_pass())
      throw std::invalid_argument("plan: cycle fails validation:\n" +
                                  rep.summary());
  }

  ExperimentResult result;
  result.s = s;
  result.t = t;
  result.min_q = plan.min_q;
  result.parity_enforced = plan.parity_enforced;
  result.hypotheses_enforced = plan.parity_enforced && plan.min_q >= 5;
  result.first_digest = plan.first.instance.digest();
  result.second_digest = plan.second.instance.digest();

  std::vector<SignVector> first_topes = resolve_selector(plan.first, "first");
  std::vector<SignVector> second_topes =
      resolve_selector(plan.second, "second");
  result.input_digest = plan_fingerprint(plan, first_topes, second_topes);

  std::vector<SideData> first_data, second_data;
  first_data.reserve(first_topes.size());
  second_data.reserve(second_topes.size());
  for (const SignVector& v : first_topes)
    first_data.push_back(make_side_data(plan.first, v, true, s, t));
  for (const SignVector& v : second_topes)
    second_data.push_back(make_side_data(plan.second, v, false, s, t));

  for (const SideData& a : first_data) {
    for (const SideData& b : second_data) {
      // The two evaluation routes of the bilinear form agree for any
      // inputs whatsoever; orthogonality_check throws if they do not.
      // This runs before (and regardless of) the min_q filter.
      OrthogonalityReport orep = orthogonality_check(a.f, s, b.f, t);

      if (a.q < plan.min_q || b.q < plan.min_q) {
        ++result.pairs_skipped;
        continue;
      }
      ++result.pairs_tested;

      PairReport pr;
      pr.tope1 = a.tope.to_string();
      pr.tope2 = b.tope.to_string();
      pr.s = s;
      pr.t = t;
      pr.q1 = a.q;
      pr.q2 = b.q;
      pr.f1 = a.f;
      pr.f2 = b.f;
      pr.h1 = a.h;
      pr.h2 = b.h;
      pr.ds1 = a.ds;
      pr.ds2 = b.ds;
      pr.iota1 = a.iota;
      pr.iota2 = b.iota;
      pr.span1 = a.span;
      pr.raw_value = orep.raw_value;
      pr.hh_value = orep.hh_value;
      pr.orthogonal = orep.orthogonal;

      if (!pr.ds1) pr.failed_checks.push_back("ds1");
      if (!pr.ds2) pr.failed_checks.push_back("ds2");
      if (pr.iota1 != 0) pr.failed_checks.push_back("iota1");
      if (pr.iota2 != 0) pr.failed_checks.push_back("iota2");
      if (!pr.orthogonal) pr.failed_checks.push_back("orthogonal");
      if (!a.span_defined)
        pr.failed_checks.push_back("span1:undefined");
      else if (!pr.span1)
        pr.failed_checks.push_back("span1");
      for (const std::string& tag : a.omega_tags)
        pr.failed_checks.push_back("omega1:" + tag);
      for (const std::string& tag : b.omega_tags)
        pr.failed_checks.push_back("omega2:" + tag);

      if (result.hypotheses_enforced) {
        pr.violation = !pr.failed_checks.empty();
        if (pr.violation) ++result.violations;
      } else {
        for (const std::string& check : pr.failed_checks)
          result.anomalies.push_back({pr.tope1, pr.tope2, check});
      }
      result.pairs.push_back(std::move(pr));
    }
  }
  return result;
}

ExperimentResult negative_controls(const ExperimentPlan& plan) {
  if (plan.parity_enforced && plan.min_q >= 5)
    throw std::invalid_argument(
        "negative_controls: plan enforces every hypothesis; relax parity or "
        "min_q, or call run_experiment");
  return run_experiment(plan);
}

namespace {

// Exact integers render as JSON numbers while they fit the widest
// integer JSON holds losslessly, and as decimal strings beyond that.
nlohmann::ordered_json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi)
    return nlohmann::ordered_json(static_cast<std::int64_t>(v));
  return nlohmann::ordered_json(v.str());
}

nlohmann::ordered_json json_vector(const IntVector& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Int& x : v) arr.push_back(json_int(x));
  return arr;
}

std::string join_ints(const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].str();
  }
  return out;
}

}  // namespace

std::string report_json_string(const ExperimentResult& result) {
  nlohmann::ordered_json j;
  j["plan"] = {{"s", result.s},
               {"t", result.t},
               {"min_q", result.min_q},
               {"parity_enforced", result.parity_enforced},
               {"hypotheses_enforced", result.hypotheses_enforced},
               {"first_digest", result.first_digest},
               {"second_digest", result.second_digest}};
  j["input_digest"] = result.input_digest;
  j["pairs_tested"] = result.pairs_tested;
  j["pairs_skipped"] = result.pairs_skipped;
  j["violations"] = result.violations;
  nlohmann::ordered_json anomalies = nlohmann::ordered_json::array();
  for (const AnomalyRecord& a : result.anomalies)
    anomalies.push_back(
        {{"tope1", a.tope1}, {"tope2", a.tope2}, {"check", a.check}});
  j["anomalies"] = std::move(anomalies);
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const PairReport& p : result.pairs) {
    nlohmann::ordered_json pj;
    pj["tope1"] = p.tope1;
    pj["tope2"] = p.tope2;
    pj["s"] = p.s;
    pj["t"] = p.t;
    pj["q1"] = p.q1;
    pj["q2"] = p.q2;
    pj["f1"] = json_vector(p.f1);
    pj["f2"] = json_vector(p.f2);
    pj["h1"] = json_vector(p.h1);
    pj["h2"] = json_vector(p.h2);
    pj["ds1"] = p.ds1;
    pj["ds2"] = p.ds2;
    pj["iota1"] = json_int(p.iota1);
    pj["iota2"] = json_int(p.iota2);
    pj["span1"] = p.span1;
    pj["raw_value"] = json_int(p.raw_value);
    pj["hh_value"] = json_int(p.hh_value);
    pj["orthogonal"] = p.orthogonal;
    pj["failed_checks"] = p.failed_checks;
    pj["violation"] = p.violation;
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  return j.dump(2) + "\n";
}

std::string report_csv_string(const ExperimentResult& result) {
  std::ostringstream os;
  os << "tope1,tope2,s,t,q1,q2,f1,f2,h1,h2,ds1,ds2,iota1,iota2,span1,"
        "raw_value,hh_value,orthogonal,failed_checks,violation\n";
  for (const PairReport& p : result.pairs) {
    os << '"' << p.tope1 << "\",\"" << p.tope2 << "\"," << p.s << ',' << p.t
       << ',' << p.q1 << ',' << p.q2 << ",\"" << join_ints(p.f1) << "\",\""
       << join_ints(p.f2) << "\",\"" << join_ints(p.h1) << "\",\""
       << join_ints(p.h2) << "\"," << (p.ds1 ? "true" : "false") << ','
       << (p.ds2 ? "true" : "false") << ',' << p.iota1.str() << ','
       << p.iota2.str() << ',' << (p.span1 ? "true" : "false") << ','
       << p.raw_value.str() << ',' << p.hh_value.str() << ','
       << (p.orthogonal ? "true" : "false") << ",\"";
    for (std::size_t i = 0; i < p.failed_checks.size(); ++i) {
      if (i) os << ';';
      os << p.failed_checks[i];
    }
    os << "\"," << (p.violation ? "true" : "false") << '\n';
  }
  return os.str();
}

namespace {

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
}

}  // namespace

void write_report_json(const ExperimentResult& result,
                       const std::filesystem::path& path) {
  write_text(report_json_string(result), path);
}

void write_report_csv(const ExperimentResult& result,
                      const std::filesystem::path& path) {
  write_text(report_csv_string(result), path);
}

std::string summary_line(const ExperimentResult& result) {
  std::ostringstream os;
  os << "s=" << result.s << " t=" << result.t
     << " pairs_tested=" << result.pairs_tested
     << " pairs_skipped=" << result.pairs_skipped
     << " violations=" << result.violations
     << " anomalies=" << result.anomalies.size();
  return os.str();
}

}  // namespace omc
