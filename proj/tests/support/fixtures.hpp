#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncinv/decide.hpp"
#include "ncinv/io.hpp"

#ifndef NCINV_DATA_DIR
#define NCINV_DATA_DIR "data"
#endif

namespace ncinv::testing {

inline std::filesystem::path data_dir() { return NCINV_DATA_DIR; }

inline std::filesystem::path catalog_dir() {
  if (const char* env = std::getenv("NCINV_CATALOG"); env && *env) return env;
  return data_dir();
}

inline GroupPtr load_group(const std::string& name) {
  return read_group_file((data_dir() / "groups" / (name + ".json")).string()).group;
}

inline RepresentationMatrices load_rep(const std::string& name, const GroupPtr& G) {
  return read_representation_file((data_dir() / "reps" / (name + ".json")).string(), G);
}

/// Expected verdicts; nullopt where no value is asserted.
struct DecisionFixture {
  std::string name;
  std::optional<bool> unramified;
  std::optional<bool> pseudo;
};

inline std::vector<DecisionFixture> decision_fixtures() {
  std::vector<DecisionFixture> out = {{"S3", true, true}, {"S4", true, true}};
  for (int n = 3; n <= 12; ++n) out.push_back({"D" + std::to_string(2 * n), true, true});
  out.push_back({"Q8", true, true});
  out.push_back({"SL2F3", false, false});
  for (const char* g : {"Phi4_p3", "Phi5_p3", "Phi7_p3", "Phi9_p3"}) out.push_back({g, true, true});
  for (const char* g : {"Phi6_p3", "Phi10_p3"}) out.push_back({g, false, std::nullopt});
  out.push_back({"Phi11_p3", false, true});
  return out;
}

/// Every shipped group of order at most 243.
inline std::vector<std::string> property_fixtures() {
  std::vector<std::string> out = {"Z3", "S3", "Q8", "S4", "SL2F3"};
  for (int n = 3; n <= 12; ++n) out.push_back("D" + std::to_string(2 * n));
  for (const char* g : {"Phi4_p3", "Phi5_p3", "Phi6_p3", "Phi7_p3", "Phi9_p3", "Phi10_p3"}) out.push_back(g);
  return out;
}

/// Permutation of a group element built from permutation generators.
inline std::vector<std::uint32_t> element_permutation(const GroupPtr& G, Elem e) {
  const auto& prov = std::get<PermutationProvenance>(G->provenance());
  std::vector<std::uint32_t> p(prov.degree);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<std::size_t> letters;
  for (Elem x = e; x != G->identity(); x = G->word_parent(x)) letters.push_back(G->word_letter(x));
  // e = g_{l_k} ... g_{l_1} read from the identity outwards
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const auto& g = prov.generators[*it];
    std::vector<std::uint32_t> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[g[i]];
    p = q;
  }
  return p;
}

/// Sorted cycle lengths greater than one.
inline std::vector<std::size_t> cycle_type(const std::vector<std::uint32_t>& p) {
  std::vector<bool> seen(p.size());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncinv::testing
