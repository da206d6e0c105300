#include "omc/decompose.hpp"

#include "omc/linalg.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace omc {

std::string decomposition_json_string(const Decomposition& d) {
  nlohmann::ordered_json j;
  j["tope"] = d.tope.to_string();
  j["q_size"] = d.q_size();
  j["lambda"] = d.lambda;
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const SignVector& q : d.members) members.push_back(q.to_string());
  j["members"] = std::move(members);
  return j.dump(2) + "\n";
}

namespace {

void check_inputs(const OMInstance& inst, const SymmetricCycle& cycle,
                  const SignVector& tope, const char* who) {
  if (!validate_cycle(inst, cycle).all_pass())
    throw std::invalid_argument(std::string(who) +
                                ": cycle fails validation against the instance");
  if (!inst.contains(tope))
    throw std::invalid_argument(std::string(who) + ": \"" + tope.to_string() +
                                "\" is not a tope of the instance");
}

}  // namespace

Decomposition decompose(const OMInstance& inst, const SymmetricCycle& cycle,
                        const SignVector& tope, int window_start) {
  check_inputs(inst, cycle, tope, "decompose");
  const int n = inst.ground_size();

  // Equations: sum_k lambda_k * R^{w+k} = T, one row per coordinate.
  std::vector<IntVector> m(static_cast<std::size_t>(n),
                           IntVector(static_cast<std::size_t>(n)));
  IntVector rhs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          cycle.vertex(window_start + k).sign(i + 1);
    rhs[static_cast<std::size_t>(i)] = tope.sign(i + 1);
  }

  auto solution = bareiss_solve(std::move(m), std::move(rhs));
  if (!solution)
    throw InternalInconsistency(
        "cycle window does not span: singular system for tope \"" +
        tope.to_string() + "\"");

  Decomposition out{tope, {}, {}};
  out.lambda.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Rational& c = (*solution)[static_cast<std::size_t>(k)];
    if (boost::multiprecision::denominator(c) != 1)
      throw InternalInconsistency("non-integral window coefficient " +
                                  c.str() + " for tope \"" +
                                  tope.to_string() + "\"");
    Int num = boost::multiprecision::numerator(c);
    if (num < -1 || num > 1)
      throw InternalInconsistency("window coefficient " + num.str() +
                                  " outside {-1,0,1} for tope \"" +
                                  tope.to_string() + "\"");
    int lam = static_cast<int>(num);
    out.lambda.push_back(lam);
    if (lam == 1)
      out.members.push_back(cycle.vertex(window_start + k));
    else if (lam == -1)
      out.members.push_back(cycle.vertex(window_start + k).negated());
  }

  if (out.members.size() % 2 != 1)
    throw InternalInconsistency("decomposition of \"" + tope.to_string() +
                                "\" has even size " +
                                std::to_string(out.members.size()));
  if (tope_sum(out.members) != tope_sum({tope}))
    throw InternalInconsistency("decomposition members do not sum to \"" +
                                tope.to_string() + "\"");
  return out;
}

Decomposition brute_force_decompose(const OMInstance& inst,
                                    const SymmetricCycle& cycle,
                                    const SignVector& tope, int cap) {
  check_inputs(inst, cycle, tope, "brute_force_decompose");
  const int n = inst.ground_size();
  if (n > cap)
    throw std::invalid_argument(
        "brute_force_decompose: ground size " + std::to_string(n) +
        " exceeds oracle cap " + std::to_string(cap));

  // A minimal summing subset never contains an antipodal pair (the pair
  // cancels and could be dropped), so enumerating selections of one or
  // neither vertex per pair covers everything that matters: if some
  // subset with pairs sums to T, so does the pair-free subset under it.
  // Digit k of the ternary code: 0 skip, 1 take R^k, 2 take -R^k.
  std::vector<int> target(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> half(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    half[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      half[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          cycle.vertex(k).sign(i + 1);
  }
  for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] = tope.sign(i + 1);

  long long total = 1;
  for (int k = 0; k < n; ++k) total *= 3;

  std::vector<std::vector<int>> summing;  // digit strings of hits
  for (long long code = 0; code < total; ++code) {
    std::vector<int> digits(static_cast<std::size_t>(n));
    long long c = code;
    for (int k = 0; k < n; ++k) {
      digits[static_cast<std::size_t>(k)] = static_cast<int>(c % 3);
      c /= 3;
    }
    std::vector<int> sum(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      int d = digits[static_cast<std::size_t>(k)];
      if (d == 0) continue;
      int s = d == 1 ? 1 : -1;
      for (int i = 0; i < n; ++i)
        sum[static_cast<std::size_t>(i)] +=
            s * half[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }
    if (sum == target) summing.push_back(std::move(digits));
  }

  if (summing.empty())
    throw InternalInconsistency("oracle found no summing subset for \"" +
                                tope.to_string() + "\"");

  auto cardinality = [](const std::vector<int>& digits) {
    int q = 0;
    for (int d : digits) q += d != 0;
    return q;
  };

  std::size_t best = 0;
  for (std::size_t i = 1; i < summing.size(); ++i)
    if (cardinality(summing[i]) < cardinality(summing[best])) best = i;

  const std::vector<int>& min_digits = summing[best];
  int min_q = cardinality(min_digits);
  for (std::size_t i = 0; i < summing.size(); ++i) {
    if (i != best && cardinality(summing[i]) == min_q)
      throw InternalInconsistency(
          "oracle found two summing subsets of minimal size " +
          std::to_string(min_q) + " for \"" + tope.to_string() + "\"");
    for (int k = 0; k < n; ++k)
      if (min_digits[static_cast<std::size_t>(k)] != 0 &&
          summing[i][static_cast<std::size_t>(k)] !=
              min_digits[static_cast<std::size_t>(k)])
        throw InternalInconsistency(
            "oracle found a summing subset not containing the minimal one "
            "for \"" + tope.to_string() + "\"");
  }

  Decomposition out{tope, {}, {}};
  for (int k = 0; k < n; ++k) {
    int d = min_digits[static_cast<std::size_t>(k)];
    out.lambda.push_back(d == 0 ? 0 : d == 1 ? 1 : -1);
    if (d == 1)
      out.members.push_back(cycle.vertex(k));
    else if (d == 2)
      out.members.push_back(cycle.vertex(k).negated());
  }
  return out;
}

}  // namespace omc
