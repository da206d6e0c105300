// omcycles — command-line front end for the tope-cycle engine.
//
// Subcommands:
//   gen hypercube | gen arrangement    write an instance file
//   cycle find | distinguished | validate
//   decompose                          minimal decomposition of one tope
//   complex                            facet complex of one decomposition
//   verify pair                        full relation check on one tope pair
//   sweep                              relation check on all selected pairs
//
// Exit codes: 0 success, 1 failed checks / violations / run errors,
// 2 bad usage or invalid inputs.

#include "omc/complex.hpp"
#include "omc/cycle.hpp"
#include "omc/decompose.hpp"
#include "omc/instance.hpp"
#include "omc/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  int cap_n = omc::kDefaultEnumCap;
  std::int64_t budget = omc::kDefaultSearchBudget;
  std::string format;  // "", "json" or "csv"
  std::string out;     // output path for single-object commands
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open " + out_path + " for writing");
  f << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& p : split(text, ',')) {
    if (p.empty())
      throw std::invalid_argument("empty entry in integer list \"" + text + "\"");
    out.push_back(std::stoi(p));
  }
  return out;
}

// "instance.json,cycle.json[,tope]" -> loaded side
struct SideSpec {
  std::string instance_path, cycle_path, tope;
};

SideSpec parse_side(const std::string& text, bool with_tope, const char* flag) {
  std::vector<std::string> parts = split(text, ',');
  std::size_t want = with_tope ? 3 : 2;
  if (parts.size() != want)
    throw std::invalid_argument(
        std::string(flag) + " expects " +
        (with_tope ? "INSTANCE,CYCLE,TOPE" : "INSTANCE,CYCLE") + ", got \"" +
        text + "\"");
  SideSpec s;
  s.instance_path = parts[0];
  s.cycle_path = parts[1];
  if (with_tope) s.tope = parts[2];
  return s;
}

omc::ExperimentSide load_side(const SideSpec& spec,
                              std::optional<std::string> tope_csv) {
  omc::OMInstance inst = omc::load_instance(spec.instance_path);
  omc::SymmetricCycle cyc = omc::load_cycle(spec.cycle_path);
  omc::TopeSelector sel = omc::TopeSelector::all_topes();
  std::vector<omc::SignVector> chosen;
  if (!spec.tope.empty()) chosen.push_back(omc::SignVector::parse(spec.tope));
  if (tope_csv && !tope_csv->empty())
    for (const std::string& t : split(*tope_csv, ','))
      chosen.push_back(omc::SignVector::parse(t));
  if (!chosen.empty()) sel = omc::TopeSelector::just(std::move(chosen));
  return omc::ExperimentSide{std::move(inst), std::move(cyc), std::move(sel)};
}

// --format wins; otherwise the report extension decides; default json.
bool report_as_csv(const GlobalOpts& g, const std::string& report_path) {
  if (g.format == "csv") return true;
  if (g.format == "json") return false;
  return std::filesystem::path(report_path).extension() == ".csv";
}

void write_report(const omc::ExperimentResult& result, const GlobalOpts& g,
                  const std::string& report_path) {
  if (report_path.empty()) return;
  if (report_as_csv(g, report_path))
    omc::write_report_csv(result, report_path);
  else
    omc::write_report_json(result, report_path);
}

int run(int argc, char** argv) {
  CLI::App app{"Symmetric tope cycles, minimal decompositions and their "
               "spectral checks"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--seed", g.seed, "Seed for randomized generation")
      ->capture_default_str();
  app.add_option("--cap-n", g.cap_n,
                 "Enumeration cap on the ground size (2^n sign vectors)")
      ->capture_default_str();
  app.add_option("--budget", g.budget, "Search-node budget for cycle search")
      ->capture_default_str();
  app.add_option("--format", g.format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--out", g.out, "Output path (default: stdout)");

  // ---- gen ----------------------------------------------------------
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);

  int hyper_n = 0;
  CLI::App* gen_h = gen->add_subcommand("hypercube", "All 2^n sign vectors");
  gen_h->add_option("--n", hyper_n, "Ground size")->required();

  int arr_d = 0, arr_n = 0, arr_bound = 50;
  CLI::App* gen_a = gen->add_subcommand(
      "arrangement", "Topes of a random generic vector arrangement");
  gen_a->add_option("--dim", arr_d, "Ambient dimension")->required();
  gen_a->add_option("--n", arr_n, "Number of generators / ground size")
      ->required();
  gen_a->add_option("--coord-bound", arr_bound,
                    "Coordinates drawn uniformly from [-B, B]")
      ->capture_default_str();

  // ---- cycle --------------------------------------------------------
  CLI::App* cyc = app.add_subcommand("cycle", "Find or check symmetric cycles");
  cyc->require_subcommand(1);

  std::string find_inst, find_start;
  CLI::App* cyc_find = cyc->add_subcommand(
      "find", "Backtracking search (budget-bounded; not finding a cycle "
              "within budget proves nothing)");
  cyc_find->add_option("instance", find_inst, "Instance file")->required();
  cyc_find->add_option("--start", find_start,
                       "Start tope (default: first tope of the instance)");

  std::string dist_inst, dist_base, dist_order;
  CLI::App* cyc_dist = cyc->add_subcommand(
      "distinguished", "Canonical hypercube cycle: flip 1..n in order");
  cyc_dist->add_option("instance", dist_inst, "Hypercube instance file")
      ->required();
  cyc_dist->add_option("--base", dist_base,
                       "Base tope (default: all '+')");
  cyc_dist->add_option("--order", dist_order,
                       "Flip order, e.g. 2,1,3 (default: 1,2,..,n)");

  std::string val_inst, val_cycle;
  CLI::App* cyc_val = cyc->add_subcommand("validate", "Check a cycle file");
  cyc_val->add_option("instance", val_inst, "Instance file")->required();
  cyc_val->add_option("cycle", val_cycle, "Cycle file")->required();

  // ---- decompose / complex -----------------------------------------
  std::string dec_inst, dec_cycle, dec_tope;
  CLI::App* dec = app.add_subcommand(
      "decompose", "Minimal decomposition of a tope over a cycle");
  dec->add_option("instance", dec_inst, "Instance file")->required();
  dec->add_option("cycle", dec_cycle, "Cycle file")->required();
  dec->add_option("--tope", dec_tope, "Tope to decompose")->required();

  std::string cx_inst, cx_cycle, cx_tope;
  CLI::App* cx = app.add_subcommand(
      "complex", "Facet complex attached to a tope's decomposition");
  cx->add_option("instance", cx_inst, "Instance file")->required();
  cx->add_option("cycle", cx_cycle, "Cycle file")->required();
  cx->add_option("--tope", cx_tope, "Decomposed tope")->required();

  // ---- verify / sweep ----------------------------------------------
  std::string vp_first, vp_second, vp_report;
  int vp_min_q = 5;
  bool vp_equal_parity = false;
  CLI::App* verify = app.add_subcommand("verify", "Relation checks");
  verify->require_subcommand(1);
  CLI::App* vpair = verify->add_subcommand("pair", "Check one tope pair");
  vpair->add_option("--first", vp_first, "INSTANCE,CYCLE,TOPE (side s)")
      ->required();
  vpair->add_option("--second", vp_second, "INSTANCE,CYCLE,TOPE (side t)")
      ->required();
  vpair->add_option("--min-q", vp_min_q, "Minimal decomposition size admitted")
      ->capture_default_str();
  vpair->add_flag("--allow-equal-parity", vp_equal_parity,
                  "Relax the opposite-parity hypothesis (control mode)");
  vpair->add_option("--report", vp_report, "Write the full report here");

  std::string sw_first, sw_second, sw_report, sw_first_topes, sw_second_topes;
  int sw_min_q = 5;
  bool sw_equal_parity = false;
  CLI::App* sweep = app.add_subcommand("sweep", "Check all selected pairs");
  sweep->add_option("--first", sw_first, "INSTANCE,CYCLE (side s)")->required();
  sweep->add_option("--second", sw_second, "INSTANCE,CYCLE (side t)")
      ->required();
  sweep->add_option("--first-topes", sw_first_topes,
                    "Comma-separated topes (default: all)");
  sweep->add_option("--second-topes", sw_second_topes,
                    "Comma-separated topes (default: all)");
  sweep->add_option("--min-q", sw_min_q, "Minimal decomposition size admitted")
      ->capture_default_str();
  sweep->add_flag("--allow-equal-parity", sw_equal_parity,
                  "Relax the opposite-parity hypothesis (control mode)");
  sweep->add_option("--report", sw_report, "Write the full report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  if (gen_h->parsed()) {
    emit(omc::instance_json_string(omc::hypercube_instance(hyper_n, g.cap_n)),
         g.out);
    return 0;
  }
  if (gen_a->parsed()) {
    emit(omc::instance_json_string(omc::arrangement_instance(
             arr_d, arr_n, g.seed, arr_bound, g.cap_n)),
         g.out);
    return 0;
  }
  if (cyc_find->parsed()) {
    omc::OMInstance inst = omc::load_instance(find_inst);
    omc::SignVector start = find_start.empty()
                                ? inst.topes().front()
                                : omc::SignVector::parse(find_start);
    auto cycle = omc::find_symmetric_cycle(inst, start, g.budget);
    if (!cycle) {
      std::cerr << "no symmetric cycle found within budget "
                << g.budget << " (inconclusive: a larger budget may succeed)\n";
      return 1;
    }
    emit(omc::cycle_json_string(*cycle), g.out);
    return 0;
  }
  if (cyc_dist->parsed()) {
    omc::OMInstance inst = omc::load_instance(dist_inst);
    omc::SignVector base = dist_base.empty()
                               ? omc::SignVector::all_plus(inst.ground_size())
                               : omc::SignVector::parse(dist_base);
    std::vector<int> order;
    if (dist_order.empty())
      for (int e = 1; e <= inst.ground_size(); ++e) order.push_back(e);
    else
      order = parse_int_list(dist_order);
    emit(omc::cycle_json_string(omc::distinguished_cycle(inst, base, order)),
         g.out);
    return 0;
  }
  if (cyc_val->parsed()) {
    omc::OMInstance inst = omc::load_instance(val_inst);
    omc::SymmetricCycle cycle = omc::load_cycle(val_cycle);
    omc::ValidationReport rep = omc::validate_cycle(inst, cycle);
    std::cout << rep.summary();
    return rep.all_pass() ? 0 : 1;
  }
  if (dec->parsed()) {
    omc::OMInstance inst = omc::load_instance(dec_inst);
    omc::SymmetricCycle cycle = omc::load_cycle(dec_cycle);
    emit(omc::decomposition_json_string(omc::decompose(
             inst, cycle, omc::SignVector::parse(dec_tope))),
         g.out);
    return 0;
  }
  if (cx->parsed()) {
    omc::OMInstance inst = omc::load_instance(cx_inst);
    omc::SymmetricCycle cycle = omc::load_cycle(cx_cycle);
    omc::SignVector tope = omc::SignVector::parse(cx_tope);
    emit(omc::complex_json_string(omc::lambda_complex(
             tope, omc::decompose(inst, cycle, tope))),
         g.out);
    return 0;
  }
  if (vpair->parsed() || sweep->parsed()) {
    const bool is_pair = vpair->parsed();
    auto maybe = [](const std::string& s) {
      return s.empty() ? std::nullopt : std::optional<std::string>(s);
    };
    omc::ExperimentPlan plan =
        is_pair
            ? omc::ExperimentPlan{
                  load_side(parse_side(vp_first, true, "--first"), std::nullopt),
                  load_side(parse_side(vp_second, true, "--second"), std::nullopt),
                  vp_min_q, !vp_equal_parity}
            : omc::ExperimentPlan{
                  load_side(parse_side(sw_first, false, "--first"),
                            maybe(sw_first_topes)),
                  load_side(parse_side(sw_second, false, "--second"),
                            maybe(sw_second_topes)),
                  sw_min_q, !sw_equal_parity};
    omc::ExperimentResult result = omc::run_experiment(plan);
    std::cout << omc::summary_line(result) << '\n';
    write_report(result, g, is_pair ? vp_report : sw_report);
    return result.violations > 0 ? 1 : 0;
  }
  return 2;  // unreachable with require_subcommand
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
