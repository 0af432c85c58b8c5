#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "surgery/floer.hpp"
#include "surgery/torsion.hpp"

using namespace surgery;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args, const char* env = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("surgery_cli_test_" + name);
  fs::remove_all(d);
  return d;
}

json without_hit(json env) {
  env.erase("cache_hit");
  return env;
}

}  // namespace

TEST_CASE("cli examples") {
  Run r = invoke({"d-inv", "9", "2", "--knot", "rtrefoil"});
  REQUIRE(r.code == 0);
  json d = r.doc();
  CHECK(d["command"] == "d-inv");
  CHECK(d["results"]["classes"].size() == 1);
  CHECK(d["results"]["classes"][0]["d"] == "0/1");

  r = invoke({"verdict", "9", "1", "2", "--knot", "rtrefoil"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["results"]["verdict"] == "SurvivesAsReflective(0)");

  r = invoke({"cf", "9", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["results"]["weights"] == json({-2, -2, -2, -3}));
}

TEST_CASE("envelope shape and key order") {
  Run r = invoke({"cw", "9", "1", "--knot", "rtrefoil"});
  REQUIRE(r.code == 0);
  json d = r.doc();
  for (const char* k : {"command", "inputs", "results", "tool_version", "cache_hit"}) CHECK(d.contains(k));
  CHECK(d["tool_version"] == cli::kToolVersion);
  CHECK(d["cache_hit"] == false);
  // parse + dump re-sorts; a sorted document survives unchanged
  CHECK(r.out == d.dump(2) + "\n");
  CHECK(r.out.find("\"cache_hit\"") < r.out.find("\"command\""));
}

TEST_CASE("cli payloads match the library") {
  for (auto [p, q, qp] : {std::tuple{9, 7, 8}, {27, 4, 5}, {12, 1, 5}, {-9, 1, 2}}) {
    json v = invoke({"verdict", std::to_string(p), std::to_string(q), std::to_string(qp), "--knot", "rtrefoil"})
                 .doc()["results"];
    CosmeticVerdict lib = cosmetic_verdict(p, q, qp, KnotModel::right_trefoil());
    CHECK(v["verdict"] == lib.label());
    CHECK(v["torsion_witnesses"] == json(lib.torsion_witnesses));
    if (lib.lambda) CHECK(v["lambda"] == to_fraction_string(*lib.lambda));
  }
  json t = invoke({"torsion-pair", "9", "1", "2"}).doc()["results"];
  CHECK(t["witnesses"] == json(torsion_equivalent(9, 1, 2, KnotModel::right_trefoil().alexander())));
  CHECK(t["a_prime"] == 5);
  CHECK(invoke({"torsion-pair", "7", "1", "2"}).doc()["results"]["equivalent"] == false);

  json c = invoke({"cw", "27", "5", "--knot", "ltrefoil"}).doc()["results"];
  CHECK(c["lambda"] == to_fraction_string(casson_walker(27, 5, KnotModel::left_trefoil())));

  json all = invoke({"d-inv", "-7", "3", "--knot", "ltrefoil", "--all-spinc"}).doc()["results"]["classes"];
  auto lib = d_invariant_all(KnotModel::left_trefoil(), -7, 3);
  REQUIRE(all.size() == lib.size());
  for (std::size_t i = 0; i < lib.size(); ++i) CHECK(all[i]["d"] == to_fraction_string(lib[i]));
}

TEST_CASE("csv rows") {
  Run r = invoke({"--format", "csv", "d-inv", "5", "2", "--all-spinc"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "knot,p,q,i,d,red_rank");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);

  r = invoke({"verdict", "9", "7", "8", "--knot", "rtrefoil", "--format", "csv"});
  CHECK(r.out == "knot,p,q,q_prime,verdict\nrtrefoil,9,7,8,CWObstructed\n");
}

TEST_CASE("usage errors exit 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"nonsense"}).code == 1);
  CHECK(invoke({"d-inv", "9"}).code == 1);
  CHECK(invoke({"d-inv", "9", "3"}).code == 1);
  CHECK(invoke({"d-inv", "0", "1"}).code == 1);
  CHECK(invoke({"d-inv", "9", "2", "--knot", "figure8"}).code == 1);
  CHECK(invoke({"verdict", "9", "1", "2"}).code == 1);
  CHECK(invoke({"cf", "-9", "2"}).code == 1);
  CHECK(invoke({"franz", "--m", "2", "--box", "1"}).code == 1);
  CHECK(invoke({"enumerate", "--pmax", "0"}).code == 1);
  CHECK(invoke({"cf", "9", "7", "--format", "xml"}).code == 1);
  Run r = invoke({"d-inv", "9", "3"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("small verification commands") {
  Run r = invoke({"franz", "--m", "7", "--box", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["results"]["holds"] == true);

  r = invoke({"verify-thm31", "--mmax", "12"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["results"]["all_agree"] == true);
  CHECK(r.doc()["results"]["moduli"].size() == 10);

  r = invoke({"enumerate", "--pmax", "9"});
  REQUIRE(r.code == 0);
  json e = r.doc()["results"];
  CHECK(e["truly_cosmetic"].empty());
  CHECK(e["matches_mathieu_families"] == true);
  REQUIRE(e["reflective"].size() == 2);
  CHECK(e["reflective"][0]["knot"] == "ltrefoil");
  CHECK(e["reflective"][1]["verdict"] == "SurvivesAsReflective(0)");
}

TEST_CASE("warm cache reproduces cold output") {
  fs::path dir = fresh_dir("warm");
  std::vector<std::string> args = {"d-inv", "11", "3", "--all-spinc", "--cache-dir", dir.string()};
  Run cold = invoke(args), warm = invoke(args);
  REQUIRE(cold.code == 0);
  REQUIRE(warm.code == 0);
  CHECK(cold.doc()["cache_hit"] == false);
  CHECK(warm.doc()["cache_hit"] == true);
  CHECK(without_hit(cold.doc()).dump(2) == without_hit(warm.doc()).dump(2));
  CHECK(without_hit(cold.doc()) == without_hit(invoke({"d-inv", "11", "3", "--all-spinc"}).doc()));

  args.push_back("--format");
  args.push_back("csv");
  CHECK(invoke(args).out == invoke({"d-inv", "11", "3", "--all-spinc", "--format", "csv"}).out);

  std::vector<std::string> v = {"verify-thm31", "--mmax", "9", "--cache-dir", dir.string()};
  CHECK(invoke(v).doc()["cache_hit"] == false);
  CHECK(invoke(v).doc()["cache_hit"] == true);
  v[2] = "10";  // m = 10 is new, so not every lookup hits
  CHECK(invoke(v).doc()["cache_hit"] == false);
  fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  fs::path dir = fresh_dir("env");
  std::string env = dir.string();
  CHECK(invoke({"franz", "--m", "9", "--box", "1"}, env.c_str()).doc()["cache_hit"] == false);
  CHECK(invoke({"franz", "--m", "9", "--box", "1"}, env.c_str()).doc()["cache_hit"] == true);
  CHECK(fs::exists(dir / "franz-box1-m9.json"));
  // the flag wins over the environment
  fs::path other = fresh_dir("flag");
  CHECK(invoke({"franz", "--m", "9", "--box", "1", "--cache-dir", other.string()}, env.c_str()).doc()["cache_hit"] ==
        false);
  fs::remove_all(dir);
  fs::remove_all(other);
}

TEST_CASE("stale or corrupt cache files are ignored") {
  fs::path dir = fresh_dir("stale");
  cli::Cache cache(dir);
  json params = {{"box", 1}, {"m", 7}};
  json good = invoke({"franz", "--m", "7", "--box", "1"}).doc();

  cache.store("franz", params, json{{"holds", false}});
  json doc = json::parse(std::ifstream(cache.path_for("franz", params)));
  doc["tool_version"] = "0.0.1";
  std::ofstream(cache.path_for("franz", params)) << doc.dump();
  Run r = invoke({"franz", "--m", "7", "--box", "1", "--cache-dir", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.doc()["cache_hit"] == false);
  CHECK(r.doc()["results"] == good["results"]);

  std::ofstream(cache.path_for("franz", params)) << "{ not json";
  r = invoke({"franz", "--m", "7", "--box", "1", "--cache-dir", dir.string()});
  CHECK(r.doc()["cache_hit"] == false);
  CHECK(r.doc()["results"] == good["results"]);
  CHECK(cache.load("franz", params) == good["results"]);
  CHECK_FALSE(cache.load("franz", {{"box", 2}, {"m", 7}}));
  fs::remove_all(dir);
}
