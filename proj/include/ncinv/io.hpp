#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "ncinv/chartheory.hpp"
#include "ncinv/decide.hpp"
#include "ncinv/group.hpp"

namespace ncinv {

using json = nlohmann::json;

struct GroupFile {
  GroupPtr group;
  std::vector<std::string> generator_names;
  std::string description;
};

/// Parses {"kind":"permutation"|"matrix"|"table", ...}.
GroupFile parse_group(const json& j, std::size_t budget = kDefaultElementBudget);
GroupFile read_group_file(const std::string& path, std::size_t budget = kDefaultElementBudget);

/// Parses {"dim":d, "generators":[[entries]], "variables":[...]}. Entries are
/// rational strings, integers, or {"m":m,"coeffs":[...]}.
RepresentationMatrices parse_representation(const json& j, const GroupPtr& G);
RepresentationMatrices read_representation_file(const std::string& path, const GroupPtr& G);

json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const json& j);

json export_table(const CharacterTable& table);

json export_certificate(const DecisionCertificate& cert);
json export_completeness(const CompletenessReport& report);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace ncinv
