#include "omc/complex.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace omc {

SimplicialComplex::SimplicialComplex(int ground_size,
                                     std::vector<GroundSubset> generators)
    : n_(ground_size) {
  if (n_ < 0 || n_ > kMaxComplexGround)
    throw std::invalid_argument("complex: ground size " +
                                std::to_string(n_) + " outside 0.." +
                                std::to_string(kMaxComplexGround));
  for (const GroundSubset& g : generators)
    if (g.ground_size() != n_)
      throw std::invalid_argument("complex: generator ground size mismatch");

  // Absorb generators contained in others; survivors are the facets.
  std::vector<std::uint32_t> masks;
  masks.reserve(generators.size());
  for (const GroundSubset& g : generators) masks.push_back(g.as_bits());
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<std::uint32_t> kept;
  for (std::uint32_t m : masks) {
    bool absorbed = false;
    for (std::uint32_t k : kept)
      if ((m & k) == m) {
        absorbed = true;
        break;
      }
    if (!absorbed) kept.push_back(m);
  }
  if (kept.empty()) kept.push_back(0);  // the empty face alone

  for (std::uint32_t m : kept) {
    std::vector<int> members;
    for (int e = 1; e <= n_; ++e)
      if (m & (std::uint32_t{1} << (e - 1))) members.push_back(e);
    facets_.emplace_back(n_, std::move(members));
  }
  std::sort(facets_.begin(), facets_.end(),
            [](const GroundSubset& a, const GroundSubset& b) {
              return a.members() < b.members();
            });
}

std::vector<std::uint32_t> SimplicialComplex::faces() const {
  std::unordered_set<std::uint32_t> seen;
  for (const GroundSubset& f : facets_) {
    std::uint32_t mask = f.as_bits();
    // Walk every submask of the facet, empty face included.
    std::uint32_t sub = mask;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  }
  std::vector<std::uint32_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SimplicialComplex::face_count() const { return faces().size(); }

SimplicialComplex lambda_complex(const SignVector& tope,
                                 const Decomposition& decomposition) {
  if (decomposition.tope != tope)
    throw std::invalid_argument(
        "lambda_complex: decomposition belongs to tope \"" +
        decomposition.tope.to_string() + "\", not \"" + tope.to_string() +
        "\"");
  const int n = tope.size();
  std::vector<GroundSubset> gens;
  gens.reserve(decomposition.members.size());
  for (const SignVector& q : decomposition.members)
    gens.push_back(separation_set(tope, q).complement());
  return SimplicialComplex(n, std::move(gens));
}

IntVector long_f_vector(const SimplicialComplex& complex, int t) {
  if (t < complex.ground_size())
    throw std::invalid_argument(
        "long_f_vector: padding " + std::to_string(t) +
        " below ground size " + std::to_string(complex.ground_size()));
  IntVector f(static_cast<std::size_t>(t) + 1, Int(0));
  for (std::uint32_t face : complex.faces())
    ++f[static_cast<std::size_t>(std::popcount(face))];
  return f;
}

IntVector beta_vector(int m, int t) {
  if (m < 1 || m > t)
    throw std::invalid_argument("beta_vector: need 0 < m <= t, got m=" +
                                std::to_string(m) + ", t=" + std::to_string(t));
  IntVector b(static_cast<std::size_t>(t) + 1);
  for (int j = 0; j <= t; ++j)
    b[static_cast<std::size_t>(j)] = binomial(m, j);
  return b;
}

SimplicialComplex simplex_boundary(int k, int t) {
  if (k < 1 || k > t)
    throw std::invalid_argument("simplex_boundary: need 1 <= k <= t, got k=" +
                                std::to_string(k) + ", t=" + std::to_string(t));
  std::vector<GroundSubset> gens;
  // Generators: the k subsets of {1..k} of size k-1.
  for (int omit = 1; omit <= k; ++omit) {
    std::vector<int> members;
    for (int e = 1; e <= k; ++e)
      if (e != omit) members.push_back(e);
    gens.emplace_back(t, std::move(members));
  }
  return SimplicialComplex(t, std::move(gens));
}

std::string complex_json_string(const SimplicialComplex& complex) {
  nlohmann::ordered_json j;
  j["n"] = complex.ground_size();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const GroundSubset& f : complex.facets())
    arr.push_back(f.members());
  j["facets"] = std::move(arr);
  return j.dump(2) + "\n";
}

void save_complex(const SimplicialComplex& complex,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << complex_json_string(complex);
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed complex file " + path.string() +
                             ": " + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    throw std::runtime_error("complex file " + path.string() +
                             " lacks required fields \"n\" and \"facets\"");
  int n = j.at("n").get<int>();
  std::vector<GroundSubset> gens;
  try {
    for (const auto& item : j.at("facets"))
      gens.emplace_back(n, item.get<std::vector<int>>());
    return SimplicialComplex(n, std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("complex file " + path.string() + ": " +
                             e.what());
  }
}

}  // namespace omc
