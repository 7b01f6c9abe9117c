#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support/fixtures.hpp"
#include "ncinv/io.hpp"

using namespace ncinv;
using namespace ncinv::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("ncinv_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const fs::path dir = scratch();
  const std::string cmd = env + " '" NCINV_CLI "' " + args + " >'" + (dir / "out").string() + "' 2>'" +
                          (dir / "err").string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(dir / "out"), slurp(dir / "err")};
}

std::string generated_spec(const std::vector<Elem>& gens) {
  std::string s = "generated:";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + std::to_string(gens[i]);
  return s;
}

}  // namespace

TEST(Cli, Chartab) {
  const auto r = run("chartab S3");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("characters").size(), 3u);
}

TEST(Cli, DecideTotally) {
  auto r = run("decide S4 --property totally");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "true\n");
  const fs::path cert = scratch() / "cert.json";
  r = run("decide SL2F3 --property totally-pseudo --out '" + cert.string() + "'");
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(read_json_file(cert.string()).at("verdict"), false);
}

TEST(Cli, DecideOverSubgroup) {
  const GroupPtr G = load_group("S4");
  const Subgroup V = abelian_normal_subgroups(G).front();
  auto r = run("decide S4 --property unramified --over " + generated_spec(V.generators()));
  EXPECT_EQ(r.code, 0) << r.err;
  r = run("decide S4 --property pseudo --over elements:0");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("nontrivial abelian normal"), std::string::npos);
  r = run("decide S4 --property unramified");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("decide S4 --property sideways").code, 2);
  EXPECT_EQ(run("decide no_such_group").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("invariants Z3 Z3_perm --trials 0").code, 2);
  EXPECT_EQ(run("--budget-elements 5 chartab S4").code, 2);
}

TEST(Cli, Complete) {
  EXPECT_EQ(run("complete D6 D6_pi_omega").code, 0);
  const fs::path rep = scratch() / "rep.json";
  const auto r = run("complete D8 D8_pi_omega --out '" + rep.string() + "'");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(read_json_file(rep.string()).at("verdict"), false);
  EXPECT_EQ(run("complete S4 --regular").code, 0);
  EXPECT_EQ(run("complete SL2F3 --regular").code, 1);
  EXPECT_EQ(run("complete S4").code, 2);
}

TEST(Cli, Invariants) {
  const fs::path out = scratch() / "gens.json";
  auto r = run("invariants Z3 Z3_perm --verify --out '" + out.string() + "'");
  EXPECT_EQ(r.code, 0) << r.err;
  const json j = read_json_file(out.string());
  EXPECT_EQ(j.at("count"), 7);
  EXPECT_EQ(j.at("verification").at("passed"), true);
  r = run("invariants D8 D8_pi_omega --field complex");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("verdict"), std::string::npos);
}

TEST(Cli, CatalogIngest) {
  const fs::path cat = scratch() / "catalog";
  fs::create_directories(cat);
  const fs::path table = scratch() / "c4.json";
  write_json_file(table.string(), json::parse(R"({"kind":"table","order":4,"class_count":4,
      "mul":[0,1,2,3,1,2,3,0,2,3,0,1,3,0,1,2]})"));
  const std::string env = "NCINV_CATALOG='" + cat.string() + "'";
  auto r = run("catalog ingest '" + table.string() + "' --id '[4,1]'", env);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(cat / "tables" / "4_1.json"));
  r = run("decide '[4,1]' --property totally", env);
  EXPECT_EQ(r.code, 0) << r.err;
  r = run("chartab '[4,1]'", env);
  EXPECT_EQ(r.code, 0) << r.err;
  r = run("catalog list", env);
  EXPECT_NE(r.out.find("4_1"), std::string::npos);

  const fs::path wrong = scratch() / "wrong.json";
  write_json_file(wrong.string(), json::parse(R"({"kind":"table","order":4,"class_count":3,
      "mul":[0,1,2,3,1,2,3,0,2,3,0,1,3,0,1,2]})"));
  r = run("catalog ingest '" + wrong.string() + "' --id '[4,2]'", env);
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(cat / "tables" / "4_2.json"));
  r = run("catalog ingest '" + table.string() + "'", env);
  EXPECT_EQ(r.code, 2);  // no id
}
