#include "omc/cycle.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace omc {

SymmetricCycle::SymmetricCycle(std::string instance_digest,
                               std::vector<SignVector> vertices)
    : instance_digest_(std::move(instance_digest)),
      vertices_(std::move(vertices)) {
  if (vertices_.empty())
    throw std::invalid_argument("cycle: empty vertex list");
  if (vertices_.size() % 2 != 0)
    throw std::invalid_argument("cycle: vertex count must be even, got " +
                                std::to_string(vertices_.size()));
  const int n = vertices_.front().size();
  for (const SignVector& v : vertices_)
    if (v.size() != n)
      throw std::invalid_argument("cycle: vertices of mixed ground size");
}

const SignVector& SymmetricCycle::vertex(long long k) const {
  const long long m = static_cast<long long>(vertices_.size());
  long long r = k % m;
  if (r < 0) r += m;
  return vertices_[static_cast<std::size_t>(r)];
}

SymmetricCycle distinguished_cycle(const OMInstance& inst,
                                   const SignVector& base,
                                   const std::vector<int>& order) {
  const int n = inst.ground_size();
  if (base.size() != n)
    throw std::invalid_argument("distinguished_cycle: base has wrong ground size");
  if (inst.tope_count() != (std::size_t{1} << n))
    throw std::invalid_argument(
        "distinguished_cycle: instance is not a full hypercube tope set");
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("distinguished_cycle: order must list all of 1.." +
                                std::to_string(n));
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int e : order) {
    if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
      throw std::invalid_argument(
          "distinguished_cycle: order is not a permutation of 1.." +
          std::to_string(n));
    seen[static_cast<std::size_t>(e)] = 1;
  }

  std::vector<SignVector> verts;
  verts.reserve(2 * static_cast<std::size_t>(n));
  verts.push_back(base);
  for (int k = 0; k + 1 < n; ++k)
    verts.push_back(verts.back().flipped(order[static_cast<std::size_t>(k)]));
  for (int k = 0; k < n; ++k)
    verts.push_back(verts[static_cast<std::size_t>(k)].negated());
  return SymmetricCycle(inst.digest(), std::move(verts));
}

namespace {

struct CycleSearch {
  const OMInstance& inst;
  std::int64_t budget;
  std::vector<SignVector> path;
  std::vector<char> used;  // 1-indexed element usage

  explicit CycleSearch(const OMInstance& i, std::int64_t b)
      : inst(i), budget(b), used(static_cast<std::size_t>(i.ground_size()) + 1, 0) {}

  // True once the first half (n flips) is complete; every completed
  // half extends uniquely to a symmetric cycle by antipodality.
  bool extend() {
    if (--budget < 0) return false;
    const int n = inst.ground_size();
    if (static_cast<int>(path.size()) == n + 1) return true;
    for (int e = 1; e <= n; ++e) {
      if (used[static_cast<std::size_t>(e)]) continue;
      SignVector next = path.back().flipped(e);
      if (!inst.contains(next)) continue;
      path.push_back(std::move(next));
      used[static_cast<std::size_t>(e)] = 1;
      if (extend()) return true;
      used[static_cast<std::size_t>(e)] = 0;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<SymmetricCycle> find_symmetric_cycle(const OMInstance& inst,
                                                   const SignVector& start,
                                                   std::int64_t budget) {
  if (budget < 1)
    throw std::invalid_argument("find_symmetric_cycle: budget must be positive");
  if (!inst.contains(start))
    throw std::invalid_argument("find_symmetric_cycle: start \"" +
                                start.to_string() +
                                "\" is not a tope of the instance");
  const int n = inst.ground_size();
  CycleSearch search(inst, budget);
  search.path.push_back(start);
  if (!search.extend()) return std::nullopt;

  // path[n] == -start by construction (all n elements flipped once), so
  // dropping it and appending the antipodal half closes the cycle.
  std::vector<SignVector> verts(search.path.begin(),
                                search.path.begin() + n);
  for (int k = 0; k < n; ++k)
    verts.push_back(verts[static_cast<std::size_t>(k)].negated());
  return SymmetricCycle(inst.digest(), std::move(verts));
}

ValidationReport validate_cycle(const OMInstance& inst,
                                const SymmetricCycle& cycle) {
  ValidationReport rep;
  const auto& verts = cycle.vertices();
  const int n = inst.ground_size();
  const long long m = static_cast<long long>(verts.size());

  {
    ValidationCheck c{"vertex_count", m == 2LL * n, ""};
    if (!c.pass)
      c.detail = std::to_string(m) + " vertices, expected " +
                 std::to_string(2 * n);
    rep.checks.push_back(std::move(c));
  }
  {
    ValidationCheck c{"digest_match", cycle.instance_digest() == inst.digest(), ""};
    if (!c.pass)
      c.detail = "cycle was built on instance " + cycle.instance_digest() +
                 ", not " + inst.digest();
    rep.checks.push_back(std::move(c));
  }
  {
    ValidationCheck c{"distinct_vertices", true, ""};
    std::set<SignVector> uniq(verts.begin(), verts.end());
    if (uniq.size() != verts.size()) {
      c.pass = false;
      c.detail = std::to_string(verts.size() - uniq.size()) +
                 " repeated vertex positions";
    }
    rep.checks.push_back(std::move(c));
  }
  {
    ValidationCheck c{"tope_membership", true, ""};
    for (const SignVector& v : verts)
      if (v.size() != n || !inst.contains(v)) {
        c.pass = false;
        c.detail = "vertex \"" + v.to_string() + "\" is not a tope";
        break;
      }
    rep.checks.push_back(std::move(c));
  }
  {
    ValidationCheck c{"adjacency", true, ""};
    std::vector<long long> bad;
    for (long long k = 0; k < m; ++k)
      if (separation_set(cycle.vertex(k), cycle.vertex(k + 1)).cardinality() != 1)
        bad.push_back(k);
    if (!bad.empty()) {
      c.pass = false;
      c.detail = "separation differs from one element at position" +
                 std::string(bad.size() > 1 ? "s" : "");
      for (long long k : bad) c.detail += " " + std::to_string(k);
    }
    rep.checks.push_back(std::move(c));
  }
  if (m % 2 == 0) {
    ValidationCheck c{"antipodal_pairing", true, ""};
    for (long long k = 0; k < m / 2; ++k)
      if (cycle.vertex(k + m / 2) != cycle.vertex(k).negated()) {
        c.pass = false;
        c.detail = "vertex " + std::to_string(k + m / 2) +
                   " is not the negation of vertex " + std::to_string(k);
        break;
      }
    rep.checks.push_back(std::move(c));
  }
  {
    ValidationCheck c{"element_flip_count", true, ""};
    const int vn = cycle.ground_size();  // may differ from n on bad input
    std::vector<int> flips(static_cast<std::size_t>(vn) + 1, 0);
    for (long long k = 0; k < m; ++k) {
      GroundSubset sep = separation_set(cycle.vertex(k), cycle.vertex(k + 1));
      for (int e : sep.members()) ++flips[static_cast<std::size_t>(e)];
    }
    for (int e = 1; e <= vn; ++e)
      if (flips[static_cast<std::size_t>(e)] != 2) {
        c.pass = false;
        c.detail = "element " + std::to_string(e) + " flips " +
                   std::to_string(flips[static_cast<std::size_t>(e)]) +
                   " times, expected 2";
        break;
      }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

std::string cycle_json_string(const SymmetricCycle& cycle) {
  nlohmann::ordered_json j;
  j["instance_digest"] = cycle.instance_digest();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SignVector& v : cycle.vertices()) arr.push_back(v.to_string());
  j["vertices"] = std::move(arr);
  return j.dump(2) + "\n";
}

void save_cycle(const SymmetricCycle& cycle, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << cycle_json_string(cycle);
}

SymmetricCycle load_cycle(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed cycle file " + path.string() + ": " +
                             e.what());
  }
  if (!j.is_object() || !j.contains("instance_digest") || !j.contains("vertices"))
    throw std::runtime_error("cycle file " + path.string() +
                             " lacks required fields \"instance_digest\" and \"vertices\"");
  std::vector<SignVector> verts;
  for (const auto& item : j.at("vertices")) {
    try {
      verts.push_back(SignVector::parse(item.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("cycle file " + path.string() +
                               ": bad vertex entry: " + e.what());
    }
  }
  try {
    return SymmetricCycle(j.at("instance_digest").get<std::string>(),
                          std::move(verts));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("cycle file " + path.string() + ": " + e.what());
  }
}

}  // namespace omc
