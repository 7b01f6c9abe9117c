#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include "ncinv/decide.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/invariants.hpp"
#include "ncinv/io.hpp"

namespace fs = std::filesystem;
using namespace ncinv;

namespace {

#ifndef NCINV_DATA_DIR
#define NCINV_DATA_DIR "data"
#endif

struct JobConfig {
  std::string command;
  std::string group;
  std::string representation;
  std::string out;
  std::string property = "totally";
  std::string over;
  std::string field = "real";
  bool regular = false;
  bool verify = false;
  std::size_t trials = 3;
  std::size_t dim = 4;
  std::size_t budget = kDefaultElementBudget;
  std::string ingest_file;
  std::string ingest_id;
};

fs::path catalog_dir() {
  if (const char* env = std::getenv("NCINV_CATALOG"); env && *env) return env;
  return NCINV_DATA_DIR;
}

std::string catalog_key(std::string id) {
  std::string out;
  for (char c : id) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      out.push_back(c);
    } else if (c == ',' && !out.empty()) {
      out.push_back('_');
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      out.push_back(c);
    }
  }
  return out;
}

GroupFile resolve_group(const std::string& arg, std::size_t budget) {
  if (fs::exists(arg)) return read_group_file(arg, budget);
  const fs::path dir = catalog_dir();
  for (const fs::path& p : {dir / "groups" / (arg + ".json"), dir / "tables" / (catalog_key(arg) + ".json")}) {
    if (fs::exists(p)) return read_group_file(p.string(), budget);
  }
  throw InputError("no group file or catalog entry named \"" + arg + "\"");
}

std::string resolve_rep(const std::string& arg) {
  if (fs::exists(arg)) return arg;
  const fs::path p = catalog_dir() / "reps" / (arg + ".json");
  if (fs::exists(p)) return p.string();
  throw InputError("no representation file or catalog entry named \"" + arg + "\"");
}

void emit(const JobConfig& cfg, const json& j) {
  if (cfg.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(cfg.out, j);
  }
}

std::vector<Elem> parse_index_list(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    const unsigned long v = std::stoul(tok, &pos);
    if (pos != tok.size()) throw InputError("malformed index \"" + tok + "\"");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

// "elements:0,3,5" or "generated:3,5"; a bare list means elements
Subgroup parse_over(const GroupPtr& G, const std::string& spec) {
  std::string kind = "elements", list = spec;
  if (auto c = spec.find(':'); c != std::string::npos) {
    kind = spec.substr(0, c);
    list = spec.substr(c + 1);
  }
  auto idx = parse_index_list(list);
  for (auto e : idx) {
    if (e >= G->order()) throw InputError("subgroup index out of range");
  }
  if (kind == "generated") return subgroup_generated(G, idx);
  if (kind != "elements") throw InputError("subgroup spec must start with elements: or generated:");
  Subgroup H(G, idx);
  if (subgroup_generated(G, H.elements()).order() != H.order()) throw InputError("listed elements do not form a subgroup");
  return H;
}

int cmd_chartab(const JobConfig& cfg) {
  const auto gf = resolve_group(cfg.group, cfg.budget);
  emit(cfg, export_table(CharacterTable::compute(gf.group)));
  return 0;
}

int cmd_decide(const JobConfig& cfg) {
  const auto gf = resolve_group(cfg.group, cfg.budget);
  const bool pseudo = cfg.property == "pseudo" || cfg.property == "totally-pseudo";
  const Property p = pseudo ? Property::PseudoUnramified : Property::Unramified;
  if (cfg.property == "unramified" || cfg.property == "pseudo") {
    if (cfg.over.empty()) throw InputError("--over is required for the single-subgroup properties");
    const Subgroup N = parse_over(gf.group, cfg.over);
    if (N.is_trivial() || !is_abelian(N) || !is_normal(N)) {
      throw InputError("--over must name a nontrivial abelian normal subgroup");
    }
    const GroupContext ctx(gf.group);
    const OverResult r = check_over(ctx, N, p);
    std::cout << (r.holds ? "true" : "false") << "\n";
    json j;
    j["property"] = to_string(p);
    j["verdict"] = r.holds;
    j["subgroup"] = N.elements();
    if (r.violating_character) j["violating_character"] = *r.violating_character;
    if (r.orphan_linear) j["orphan_linear"] = *r.orphan_linear;
    json ch = json::array();
    for (const auto& [mu, chi] : r.choices) ch.push_back({{"linear", mu}, {"character", chi}});
    j["choices"] = ch;
    if (!cfg.out.empty()) write_json_file(cfg.out, j);
    return r.holds ? 0 : 1;
  }
  if (!cfg.over.empty()) throw InputError("--over only applies to unramified and pseudo");
  const DecisionCertificate cert = decide_totally(gf.group, p);
  std::cout << (cert.verdict ? "true" : "false") << "\n";
  if (!cfg.out.empty()) write_json_file(cfg.out, export_certificate(cert));
  return cert.verdict ? 0 : 1;
}

int cmd_complete(const JobConfig& cfg) {
  const auto gf = resolve_group(cfg.group, cfg.budget);
  CompletenessReport rep;
  if (cfg.regular) {
    if (!cfg.representation.empty()) throw InputError("give either a representation file or --regular");
    rep = is_complete_regular(gf.group);
  } else {
    if (cfg.representation.empty()) throw InputError("a representation file (or --regular) is required");
    rep = is_complete(read_representation_file(resolve_rep(cfg.representation), gf.group));
  }
  std::cout << (rep.verdict ? "complete" : "not complete") << "\n";
  if (!cfg.out.empty()) write_json_file(cfg.out, export_completeness(rep));
  return rep.verdict ? 0 : 1;
}

int cmd_invariants(const JobConfig& cfg) {
  const auto gf = resolve_group(cfg.group, cfg.budget);
  const auto pi = read_representation_file(resolve_rep(cfg.representation), gf.group);
  const Field field = cfg.field == "real" ? Field::Real : Field::Complex;
  GeneratorSet gs;
  try {
    gs = invariant_generators(pi, field);
  } catch (const NotCompleteError& e) {
    std::cerr << "error: " << e.what() << "\n" << export_completeness(e.report()).dump(2) << "\n";
    return 2;
  }
  json j = export_generators(gs);
  if (cfg.verify) {
    const auto rep = verify_invariance(gs, pi, cfg.trials, cfg.dim);
    j["verification"] = {{"passed", rep.passed},    {"count_ok", rep.count_ok}, {"real_ok", rep.real_ok},
                         {"trials", rep.trials},    {"dim", cfg.dim},           {"checks", rep.checks},
                         {"failures", rep.failures}};
    emit(cfg, j);
    for (const auto& f : rep.failures) std::cerr << "verification: " << f << "\n";
    return rep.passed ? 0 : 1;
  }
  emit(cfg, j);
  return 0;
}

int cmd_catalog_list(const JobConfig&) {
  const fs::path dir = catalog_dir();
  std::cout << "catalog: " << dir.string() << "\n";
  for (const char* sub : {"groups", "tables", "reps"}) {
    if (!fs::exists(dir / sub)) continue;
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir / sub)) {
      if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
    }
    std::sort(names.begin(), names.end());
    std::cout << sub << ":";
    for (const auto& n : names) std::cout << " " << n;
    std::cout << "\n";
  }
  return 0;
}

// user-supplied table with metadata: {"id":"[48,15]","order":48,"class_count":12,"kind":"table",...}
int cmd_catalog_ingest(const JobConfig& cfg) {
  json j = read_json_file(cfg.ingest_file);
  const std::string id = !cfg.ingest_id.empty() ? cfg.ingest_id : j.value("id", std::string());
  if (id.empty()) throw InputError("catalog entries need an id (in the file or via --id)");
  const GroupFile gf = parse_group(j, cfg.budget);
  if (j.contains("order") && j["order"].get<std::size_t>() != gf.group->order()) {
    throw InputError("order metadata does not match the table");
  }
  if (j.contains("class_count") && j["class_count"].get<std::size_t>() != gf.group->classes().count()) {
    throw InputError("class-count metadata does not match the table");
  }
  j["id"] = id;
  j["order"] = gf.group->order();
  j["class_count"] = gf.group->classes().count();
  const fs::path dest = catalog_dir() / "tables" / (catalog_key(id) + ".json");
  fs::create_directories(dest.parent_path());
  write_json_file(dest.string(), j);
  std::cout << "ingested " << id << " (order " << gf.group->order() << ", " << gf.group->classes().count()
            << " classes) -> " << dest.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncinv: character tables, (pseudo-)unramified decisions, completeness and noncommutative invariants"};
  app.require_subcommand(1);
  JobConfig cfg;
  app.add_option("--budget-elements", cfg.budget, "maximal group order accepted when closing generators")
      ->check(CLI::PositiveNumber);

  auto* chartab = app.add_subcommand("chartab", "character table of a group");
  chartab->add_option("group", cfg.group, "group file or catalog name")->required();
  chartab->add_option("--out", cfg.out, "write the table here instead of stdout");

  auto* decide = app.add_subcommand("decide", "unramified / pseudo-unramified decisions");
  decide->add_option("group", cfg.group, "group file or catalog name")->required();
  decide->add_option("--property", cfg.property, "unramified | pseudo | totally | totally-pseudo")
      ->check(CLI::IsMember({"unramified", "pseudo", "totally", "totally-pseudo"}));
  decide->add_option("--over", cfg.over, "subgroup: elements:i,j,... or generated:i,j,...");
  decide->add_option("--out", cfg.out, "certificate file");

  auto* complete = app.add_subcommand("complete", "completeness of a representation");
  complete->add_option("group", cfg.group, "group file or catalog name")->required();
  complete->add_option("representation", cfg.representation, "representation file or catalog name");
  complete->add_flag("--regular", cfg.regular, "use the regular representation");
  complete->add_option("--out", cfg.out, "report file");

  auto* inv = app.add_subcommand("invariants", "free generators of the invariant skew field");
  inv->add_option("group", cfg.group, "group file or catalog name")->required();
  inv->add_option("representation", cfg.representation, "representation file or catalog name")->required();
  inv->add_option("--field", cfg.field, "real | complex (default real)")->check(CLI::IsMember({"real", "complex"}));
  inv->add_flag("--verify", cfg.verify, "check invariance on random matrix tuples");
  inv->add_option("--trials", cfg.trials, "verification trials (default 3)")->check(CLI::PositiveNumber);
  inv->add_option("--dim", cfg.dim, "verification matrix size (default 4)")->check(CLI::PositiveNumber);
  inv->add_option("--out", cfg.out, "generator export file");

  auto* catalog = app.add_subcommand("catalog", "fixture catalog (NCINV_CATALOG overrides the location)");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog entries");
  auto* ingest = catalog->add_subcommand("ingest", "validate and store a user-supplied group table");
  ingest->add_option("file", cfg.ingest_file, "table file")->required()->check(CLI::ExistingFile);
  ingest->add_option("--id", cfg.ingest_id, "catalog id, e.g. [48,15]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (chartab->parsed()) return cmd_chartab(cfg);
    if (decide->parsed()) return cmd_decide(cfg);
    if (complete->parsed()) return cmd_complete(cfg);
    if (inv->parsed()) return cmd_invariants(cfg);
    if (list->parsed()) return cmd_catalog_list(cfg);
    if (ingest->parsed()) return cmd_catalog_ingest(cfg);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
