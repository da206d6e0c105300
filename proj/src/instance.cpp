#include "omc/instance.hpp"

#include "omc/feasibility.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace omc {

namespace {

void check_cap(int n, int cap, const char* who) {
  if (n < 1)
    throw std::invalid_argument(std::string(who) +
                                ": ground size must be positive");
  if (n > cap)
    throw std::invalid_argument(
        std::string(who) + ": ground size " + std::to_string(n) +
        " exceeds enumeration cap " + std::to_string(cap) +
        " (raise the cap explicitly to allow this)");
}

SignVector from_bits(std::uint64_t bits, int n) {
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    e[static_cast<std::size_t>(i)] =
        (bits >> i) & 1 ? std::int8_t{-1} : std::int8_t{1};
  return SignVector(std::move(e));
}

// Uniform draw from [-bound, bound] by rejection; deterministic for a
// given engine state on every platform (std::uniform_int_distribution
// is not portable across standard libraries).
long long draw_coord(std::mt19937_64& rng, int bound) {
  const std::uint64_t range = 2ULL * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<long long>(r % range) - bound;
}

}  // namespace

std::string GeneratorMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) os << ',';
      os << rows[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

OMInstance::OMInstance(int n, std::vector<SignVector> topes,
                       std::string source)
    : n_(n), topes_(std::move(topes)), source_(std::move(source)) {
  if (n_ < 1) throw std::invalid_argument("instance: ground size must be positive");
  if (n_ > 64) throw std::invalid_argument("instance: ground size above 64 unsupported");
  if (topes_.empty()) throw std::invalid_argument("instance: empty tope set");
  for (const SignVector& t : topes_)
    if (t.size() != n_)
      throw std::invalid_argument("instance: tope \"" + t.to_string() +
                                  "\" has length " +
                                  std::to_string(t.size()) + ", expected " +
                                  std::to_string(n_));
  std::sort(topes_.begin(), topes_.end());
  for (std::size_t i = 0; i + 1 < topes_.size(); ++i)
    if (topes_[i] == topes_[i + 1])
      throw std::invalid_argument("instance: duplicate tope \"" +
                                  topes_[i].to_string() + "\"");
  index_.reserve(topes_.size());
  for (std::size_t i = 0; i < topes_.size(); ++i)
    index_.emplace(topes_[i].packed(), i);

  std::string blob = "tope-set\nn=" + std::to_string(n_) + "\n";
  for (const SignVector& t : topes_) {
    blob += t.to_string();
    blob += '\n';
  }
  digest_ = fnv1a64_hex(blob);
}

bool OMInstance::contains(const SignVector& v) const {
  return v.size() == n_ && index_.count(v.packed()) > 0;
}

std::optional<std::size_t> OMInstance::index_of(const SignVector& v) const {
  if (v.size() != n_) return std::nullopt;
  auto it = index_.find(v.packed());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<SignVector> OMInstance::neighbors(const SignVector& v) const {
  if (v.size() != n_)
    throw std::invalid_argument("neighbors: ground size mismatch");
  std::vector<SignVector> out;
  for (int e = 1; e <= n_; ++e) {
    SignVector w = v.flipped(e);
    if (contains(w)) out.push_back(std::move(w));
  }
  return out;
}

OMInstance hypercube_instance(int n, int cap) {
  check_cap(n, cap, "hypercube_instance");
  std::vector<SignVector> topes;
  topes.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    topes.push_back(from_bits(bits, n));
  return OMInstance(n, std::move(topes), "hypercube(n=" + std::to_string(n) + ")");
}

OMInstance realizable_instance(const GeneratorMatrix& g, int cap) {
  const int n = g.ground_size();
  check_cap(n, cap, "realizable_instance");
  if (g.dim < 1)
    throw std::invalid_argument("realizable_instance: dimension must be positive");
  for (const IntVector& row : g.rows) {
    if (static_cast<int>(row.size()) != g.dim)
      throw std::invalid_argument("realizable_instance: ragged generator row");
    bool zero = true;
    for (const Int& v : row) zero = zero && v == 0;
    if (zero)
      throw std::invalid_argument("realizable_instance: zero generator row");
  }
  // Parallel or antiparallel rows collapse two elements into one; the
  // exact test is the vanishing of every 2x2 minor of the pair.
  for (std::size_t a = 0; a < g.rows.size(); ++a)
    for (std::size_t b = a + 1; b < g.rows.size(); ++b) {
      bool parallel = true;
      for (int i = 0; i < g.dim && parallel; ++i)
        for (int j = i + 1; j < g.dim && parallel; ++j)
          if (g.rows[a][i] * g.rows[b][j] != g.rows[a][j] * g.rows[b][i])
            parallel = false;
      if (parallel)
        throw std::invalid_argument(
            "realizable_instance: generator rows " + std::to_string(a + 1) +
            " and " + std::to_string(b + 1) + " are parallel");
    }

  std::vector<SignVector> topes;
  // Central symmetry is exact: test only patterns with first sign +,
  // then mirror.  This halves the feasibility work.
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    SignVector pattern = from_bits(bits << 1, n);  // bit 0 clear: sign(1) = +
    std::vector<IntVector> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      rows[static_cast<std::size_t>(i)] = g.rows[static_cast<std::size_t>(i)];
      if (pattern.sign(i + 1) < 0)
        for (Int& v : rows[static_cast<std::size_t>(i)]) v = -v;
    }
    if (strict_cone_nonempty(std::move(rows))) {
      topes.push_back(pattern.negated());
      topes.push_back(std::move(pattern));
    }
  }
  return OMInstance(n, std::move(topes),
                    "arrangement(d=" + std::to_string(g.dim) +
                        ",n=" + std::to_string(n) + ",g=" + g.to_string() + ")");
}

Int region_count(int d, int n) {
  if (d < 1 || n < 1)
    throw std::invalid_argument("region_count: d and n must be positive");
  Int total = 0;
  for (int i = 0; i < d; ++i) total += binomial(n - 1, i);
  return 2 * total;
}

OMInstance arrangement_instance(int d, int n, std::uint64_t seed,
                                int coord_bound, int cap, int max_attempts) {
  check_cap(n, cap, "arrangement_instance");
  if (d < 1) throw std::invalid_argument("arrangement_instance: d must be positive");
  if (coord_bound < 1)
    throw std::invalid_argument("arrangement_instance: coordinate bound must be positive");
  std::mt19937_64 rng(seed);
  const Int expected = region_count(d, n);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    GeneratorMatrix g;
    g.dim = d;
    g.rows.assign(static_cast<std::size_t>(n), IntVector());
    for (IntVector& row : g.rows) {
      row.resize(static_cast<std::size_t>(d));
      for (Int& v : row) v = draw_coord(rng, coord_bound);
    }
    std::optional<OMInstance> inst;
    try {
      inst = realizable_instance(g, cap);
    } catch (const std::invalid_argument&) {
      continue;  // zero or parallel rows: resample
    }
    // Genericity acceptance: a degenerate (non-general-position) sample
    // realizes strictly fewer cells than the generic count.
    if (Int(inst->tope_count()) == expected) return *std::move(inst);
  }
  throw std::runtime_error(
      "arrangement_instance: no generic sample accepted after " +
      std::to_string(max_attempts) + " attempts (d=" + std::to_string(d) +
      ", n=" + std::to_string(n) + ", seed=" + std::to_string(seed) + ")");
}

ValidationReport validate_instance(const OMInstance& inst) {
  ValidationReport rep;
  const auto& topes = inst.topes();
  const int n = inst.ground_size();

  {
    ValidationCheck c{"even_tope_count", inst.tope_count() % 2 == 0, ""};
    if (!c.pass)
      c.detail = std::to_string(inst.tope_count()) + " topes";
    rep.checks.push_back(std::move(c));
  }
  {
    ValidationCheck c{"central_symmetry", true, ""};
    for (const SignVector& t : topes)
      if (!inst.contains(t.negated())) {
        c.pass = false;
        c.detail = "missing negation of \"" + t.to_string() + "\"";
        break;
      }
    rep.checks.push_back(std::move(c));
  }
  {
    // A loop-like element would show a constant sign on every tope.
    ValidationCheck c{"no_constant_element", true, ""};
    for (int e = 1; e <= n && c.pass; ++e) {
      bool all_pos = true, all_neg = true;
      for (const SignVector& t : topes) {
        (t.sign(e) > 0 ? all_neg : all_pos) = false;
        if (!all_pos && !all_neg) break;
      }
      if (all_pos || all_neg) {
        c.pass = false;
        c.detail = "element " + std::to_string(e) + " has constant sign " +
                   (all_pos ? "+" : "-");
      }
    }
    rep.checks.push_back(std::move(c));
  }
  {
    // Parallel (or antiparallel) elements agree (or disagree) on every
    // tope; simplicity forbids both.
    ValidationCheck c{"no_parallel_elements", true, ""};
    for (int a = 1; a <= n && c.pass; ++a)
      for (int b = a + 1; b <= n && c.pass; ++b) {
        bool always_eq = true, always_ne = true;
        for (const SignVector& t : topes) {
          (t.sign(a) == t.sign(b) ? always_ne : always_eq) = false;
          if (!always_eq && !always_ne) break;
        }
        if (always_eq || always_ne) {
          c.pass = false;
          c.detail = "elements " + std::to_string(a) + " and " +
                     std::to_string(b) +
                     (always_eq ? " coincide" : " are opposite") +
                     " on every tope";
        }
      }
    rep.checks.push_back(std::move(c));
  }
  {
    ValidationCheck c{"connected_flip_graph", true, ""};
    std::vector<char> seen(inst.tope_count(), 0);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t visited = 1;
    while (!frontier.empty()) {
      const SignVector& cur = topes[frontier.front()];
      frontier.pop();
      for (const SignVector& nb : inst.neighbors(cur)) {
        std::size_t idx = *inst.index_of(nb);
        if (!seen[idx]) {
          seen[idx] = 1;
          ++visited;
          frontier.push(idx);
        }
      }
    }
    if (visited != inst.tope_count()) {
      c.pass = false;
      c.detail = std::to_string(visited) + " of " +
                 std::to_string(inst.tope_count()) +
                 " topes reachable from \"" + topes[0].to_string() + "\"";
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

std::string instance_json_string(const OMInstance& inst) {
  nlohmann::ordered_json j;
  j["n"] = inst.ground_size();
  j["source"] = inst.source();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SignVector& t : inst.topes()) arr.push_back(t.to_string());
  j["topes"] = std::move(arr);
  return j.dump(2) + "\n";
}

void save_instance(const OMInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << instance_json_string(inst);
}

OMInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed instance file " + path.string() +
                             ": " + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("topes"))
    throw std::runtime_error("instance file " + path.string() +
                             " lacks required fields \"n\" and \"topes\"");
  int n = j.at("n").get<int>();
  std::vector<SignVector> topes;
  for (const auto& item : j.at("topes")) {
    try {
      topes.push_back(SignVector::parse(item.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("instance file " + path.string() +
                               ": bad tope entry: " + e.what());
    }
  }
  std::string source = j.value("source", "file(" + path.string() + ")");
  try {
    return OMInstance(n, std::move(topes), std::move(source));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("instance file " + path.string() + ": " +
                             e.what());
  }
}

}  // namespace omc
