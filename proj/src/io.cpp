#include "ncinv/io.hpp"

#include <fstream>

#include "ncinv/errors.hpp"

namespace ncinv {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

GroupFile parse_group(const json& j, std::size_t budget) {
  if (!j.is_object()) throw InputError("group description must be an object");
  const auto kind = field<std::string>(j, "kind");
  GroupFile gf;
  if (kind == "permutation") {
    const auto degree = field<std::size_t>(j, "degree");
    const auto gens = field<std::vector<std::vector<std::uint32_t>>>(j, "generators");
    gf.group = group_from_permutations(degree, gens, budget);
  } else if (kind == "matrix") {
    const auto prime = field<std::uint32_t>(j, "prime");
    const auto dim = field<std::size_t>(j, "dim");
    const auto gens = field<std::vector<std::vector<std::uint32_t>>>(j, "generators");
    gf.group = group_from_matrices(prime, dim, gens, budget);
  } else if (kind == "table") {
    const auto order = field<std::size_t>(j, "order");
    if (order > budget) throw ResourceError("table order exceeds the element budget");
    auto mul = field<std::vector<Elem>>(j, "mul");
    gf.group = group_from_table(order, std::move(mul));
  } else {
    throw InputError("unknown group kind \"" + kind + "\"");
  }
  if (j.contains("names")) gf.generator_names = field<std::vector<std::string>>(j, "names");
  if (j.contains("description")) gf.description = field<std::string>(j, "description");
  return gf;
}

GroupFile read_group_file(const std::string& path, std::size_t budget) { return parse_group(read_json_file(path), budget); }

Cyclotomic cyclotomic_from_json(const json& j) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  if (j.is_string()) return Cyclotomic(parse_rational(j.get<std::string>()));
  if (j.is_object()) {
    const auto m = field<std::uint64_t>(j, "m");
    if (m == 0) throw InputError("cyclotomic modulus must be positive");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (c.is_number_integer()) {
        coeffs.emplace_back(c.get<long>());
      } else if (c.is_string()) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
      } else {
        throw InputError("cyclotomic coefficients must be strings or integers");
      }
    }
    return Cyclotomic::from_powers(m, coeffs);
  }
  throw InputError("malformed cyclotomic number");
}

json to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_string(q));
  return json{{"m", c.modulus()}, {"coeffs", coeffs}};
}

RepresentationMatrices parse_representation(const json& j, const GroupPtr& G) {
  const auto dim = field<std::size_t>(j, "dim");
  if (dim == 0) throw InputError("representation dimension must be positive");
  if (!j.contains("generators") || !j.at("generators").is_array()) throw InputError("missing generator matrices");
  std::vector<Matrix> mats;
  for (const auto& g : j.at("generators")) {
    if (!g.is_array() || g.size() != dim * dim) throw InputError("generator matrix must have dim*dim entries");
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim * dim; ++i) m(i / dim, i % dim) = cyclotomic_from_json(g[i]);
    mats.push_back(std::move(m));
  }
  std::vector<std::string> vars;
  if (j.contains("variables")) vars = field<std::vector<std::string>>(j, "variables");
  return RepresentationMatrices(G, dim, std::move(mats), std::move(vars));
}

RepresentationMatrices read_representation_file(const std::string& path, const GroupPtr& G) {
  return parse_representation(read_json_file(path), G);
}

json export_table(const CharacterTable& table) {
  const auto& G = *table.group();
  const auto& cls = table.classes();
  json classes = json::array();
  for (std::size_t c = 0; c < cls.count(); ++c) {
    classes.push_back({{"representative", cls.representatives[c]},
                       {"label", G.labels()[cls.representatives[c]]},
                       {"size", cls.sizes[c]},
                       {"element_order", G.element_order(cls.representatives[c])}});
  }
  json rows = json::array();
  for (const auto& chi : table.irreducibles()) {
    json vals = json::array();
    json text = json::array();
    for (const auto& v : chi.values) {
      vals.push_back(to_json(v));
      text.push_back(v.str());
    }
    rows.push_back({{"degree", chi.degree().str()}, {"values", vals}, {"display", text}});
  }
  return json{{"order", G.order()}, {"classes", classes}, {"characters", rows}};
}

json export_certificate(const DecisionCertificate& cert) {
  json j;
  j["property"] = to_string(cert.property);
  j["verdict"] = cert.verdict;
  json chain = json::array();
  for (const auto& l : cert.chain) {
    json x;
    x["group_order"] = l.group_order;
    x["subgroup"] = l.subgroup;
    x["tags"] = l.tags;
    json ch = json::array();
    for (const auto& [mu, chi] : l.choices) ch.push_back({{"linear", mu}, {"character", chi}});
    x["choices"] = ch;
    chain.push_back(x);
  }
  j["chain"] = chain;
  if (cert.counterexample) {
    const auto& c = *cert.counterexample;
    json x;
    x["subgroup"] = c.subgroup;
    if (c.character) x["character"] = *c.character;
    if (c.linear) x["linear"] = *c.linear;
    x["note"] = c.note;
    j["counterexample"] = x;
  } else {
    j["counterexample"] = nullptr;
  }
  j["prunes_applied"] = cert.prunes_applied;
  j["nodes_explored"] = cert.nodes_explored;
  return j;
}

json export_completeness(const CompletenessReport& report) {
  json j;
  j["verdict"] = report.verdict;
  j["reason"] = report.reason;
  j["nodes_explored"] = report.nodes_explored;
  json levels = json::array();
  for (const auto& l : report.levels) {
    json x;
    x["group_order"] = l.group->order();
    x["subgroup"] = l.subgroup;
    x["support"] = l.support;
    x["pi_B"] = l.b_part;
    x["pi_J"] = l.j_part;
    x["next_support"] = l.next_support;
    json degrees = json::array();
    for (auto i : l.support) degrees.push_back(to_json((*l.table)[i].degree()));
    x["support_degrees"] = degrees;
    levels.push_back(x);
  }
  j["levels"] = levels;
  return j;
}

}  // namespace ncinv
