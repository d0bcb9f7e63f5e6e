#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "malcev/catalog.hpp"
#include "malcev/cli.hpp"
#include "malcev/document.hpp"

using namespace malcev;
using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"malcev"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name, const std::string& content) {
  const std::filesystem::path dir = "cli_fixtures";
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / name;
  std::ofstream file(path, std::ios::binary);
  file << content;
  return path.string();
}

std::string catalog_file(const std::string& name) {
  return fixture(name + ".json", serialize_algebra(catalog_algebra(name)));
}

std::string broken_file() {
  return fixture("broken.json",
                 R"({"name":"broken","dim":3,"basis":["a","b","c"],)"
                 R"("brackets":[{"left":"a","right":"b","value":{"c":"1"}},)"
                 R"({"left":"a","right":"c","value":{"a":"1"}}]})");
}

}  // namespace

TEST_CASE("validate reports identities and exits zero either way") {
  const RunResult lie = run({"--format", "json", "validate", catalog_file("sl2")});
  CHECK(lie.code == 0);
  const json r = json::parse(lie.out);
  CHECK(r["command"] == "validate");
  CHECK(r["algebra"] == "sl2");
  CHECK(r["dim"] == 3);
  CHECK(r["is_lie"] == true);
  CHECK(r["is_malcev"] == true);
  CHECK(r["exit"] == 0);

  // A non-Malcev input is a successful validation run, not a refutation.
  const RunResult bad = run({"--format", "json", "validate", broken_file()});
  CHECK(bad.code == 0);
  const json b = json::parse(bad.out);
  CHECK(b["is_malcev"] == false);
  CHECK(b["is_lie"] == false);
  CHECK(b["jacobi_failures"].get<std::size_t>() > 0);
  CHECK(b["identity_failures"].get<std::size_t>() > 0);
  CHECK_FALSE(b["jacobi_witnesses"].empty());
  CHECK_FALSE(b["identity_witnesses"].empty());
}

TEST_CASE("analyze reports the full structural picture") {
  const RunResult r = run({"--format", "json", "analyze", catalog_file("sl2_plus_M7")});
  CHECK(r.code == 0);
  const json a = json::parse(r.out);
  CHECK(a["jacobian_span"]["dim"] == 7);
  CHECK(a["jacobian_span"]["is_ideal"] == true);
  CHECK(a["nucleus"]["dim"] == 3);
  CHECK(a["nucleus"]["is_ideal"] == true);
  CHECK(a["nucleus_annihilates_jacobian_span"] == true);
  CHECK(a["direct"] == true);
  CHECK(a["quotient"]["dim"] == 3);
  CHECK(a["quotient"]["is_lie"] == true);
  CHECK(a["minimality"]["all_hold"] == true);
  CHECK(a["findings"].empty());

  const RunResult gate = run({"analyze", broken_file()});
  CHECK(gate.code == 2);
  CHECK(gate.err.find("NotMalcev") != std::string::npos);
}

TEST_CASE("ideals enumerates, multiplies and searches") {
  const RunResult r = run({"--format", "json", "ideals", catalog_file("solv4")});
  CHECK(r.code == 0);
  const json a = json::parse(r.out);
  CHECK(a["max_seed_size"] == 2);
  CHECK(a["direct"] == false);
  CHECK(a["ideals"].size() == 6);
  CHECK(a["jacobian_containing_products"]["pairs"] == 15);
  CHECK(a["jacobian_containing_products"]["all_products_are_ideals"] == true);
  CHECK(a["product_counterexample"].is_null());
  for (const auto& ideal : a["ideals"]) CHECK(ideal["minimality_holds"] == true);

  const RunResult direct =
      run({"--format", "json", "ideals", catalog_file("heisenberg3"),
           "--max-seed-size", "1"});
  CHECK(direct.code == 0);
  const json h = json::parse(direct.out);
  CHECK(h["direct"] == true);
  for (const auto& ideal : h["ideals"]) {
    CHECK(ideal["correspondence"]["forward"] == true);
    CHECK(ideal["correspondence"]["backward"] == true);
  }
  CHECK(h.contains("nucleus_ideals"));
  CHECK(h["coprime_products"]["all_products_pass"] == true);
}

TEST_CASE("delta reports status, operator and span closure") {
  const RunResult unique = run({"--format", "json", "delta", catalog_file("sl2"),
                                "--x", "1,0,0", "--y", "0,1,0"});
  CHECK(unique.code == 0);
  const json u = json::parse(unique.out);
  CHECK(u["status"] == "Unique");
  CHECK(u["particular"] == json::array({"0", "0", "0"}));
  CHECK(u["back_substitution"] == true);
  CHECK(u["kernel"]["dim"] == 0);
  CHECK(u["span"]["dim"] == 0);
  CHECK(u["span"]["closed_under_commutator"] == true);

  const RunResult none = run({"--format", "json", "delta", catalog_file("solv4"),
                              "--x", "1,0,0,0", "--y", "0,1,0,0"});
  CHECK(none.code == 0);
  const json n = json::parse(none.out);
  CHECK(n["status"] == "NoSolution");
  CHECK_FALSE(n.contains("particular"));
  CHECK(n["span"]["dim"] == 3);
  CHECK(n["operator"][3][2] == "3");

  const RunResult short_csv =
      run({"delta", catalog_file("sl2"), "--x", "1,0", "--y", "0,1,0"});
  CHECK(short_csv.code == 2);
  CHECK(short_csv.err.find("DimensionMismatch") != std::string::npos);

  const RunResult bad_csv =
      run({"delta", catalog_file("sl2"), "--x", "1,q,0", "--y", "0,1,0"});
  CHECK(bad_csv.code == 2);
  CHECK(bad_csv.err.find("MalformedRational") != std::string::npos);
}

TEST_CASE("weights reports the decomposition and its lift") {
  const RunResult r =
      run({"--format", "json", "weights", catalog_file("sl2_plus_M7"), "--h", "h"});
  CHECK(r.code == 0);
  const json w = json::parse(r.out);
  REQUIRE(w["weight_spaces"].size() == 3);
  CHECK(w["weight_spaces"][0]["weight"] == json::array({"-2"}));
  CHECK(w["weight_spaces"][1]["weight"] == json::array({"0"}));
  CHECK(w["weight_spaces"][2]["weight"] == json::array({"2"}));
  CHECK(w["complete"] == true);
  CHECK(w["h_in_zero_space"] == true);
  CHECK(w["graded"] == true);
  CHECK(w["lift"]["literal"]["direct"] == false);
  CHECK(w["lift"]["literal"]["total_dim"] == 3);
  CHECK(w["lift"]["extended"]["direct"] == true);
  CHECK(w["lift"]["extended"]["total_dim"] == 10);

  CHECK(run({"weights", catalog_file("sl2_plus_M7"), "--h", "nope"}).code == 2);
  CHECK(run({"weights", catalog_file("solv4"), "--h", "e1"}).code == 2);
  const RunResult in_j = run({"weights", catalog_file("sl2_plus_M7"), "--h", "e1"});
  CHECK(in_j.code == 2);
  CHECK(in_j.err.find("NotInsideN") != std::string::npos);
}

TEST_CASE("catalog subcommands") {
  const RunResult list = run({"--format", "json", "catalog", "list"});
  CHECK(list.code == 0);
  const json l = json::parse(list.out);
  REQUIRE(l["entries"].size() == 9);
  CHECK(l["entries"][0]["name"] == "abelian1");
  CHECK(l["entries"][6]["name"] == "M7");
  CHECK(l["entries"][6]["is_lie"] == false);

  const RunResult show = run({"--format", "json", "catalog", "show", "sl2"});
  CHECK(show.code == 0);
  const json s = json::parse(show.out);
  CHECK(s["document"]["name"] == "sl2");
  CHECK(s["document"]["brackets"].size() == 3);
  CHECK(s["is_lie"] == true);

  const RunResult exported = run({"catalog", "export", "sl2"});
  CHECK(exported.code == 0);
  CHECK(exported.out == serialize_algebra(catalog_algebra("sl2")));

  CHECK(run({"catalog", "show", "nope"}).code == 2);
}

TEST_CASE("fuzz writes self-verifying finding documents") {
  std::filesystem::remove_all("findings");
  const RunResult quiet =
      run({"--format", "json", "fuzz", "--dim", "2", "--trials", "5"});
  CHECK(quiet.code == 0);
  const json q = json::parse(quiet.out);
  CHECK(q["identity_hits"] == 5);
  CHECK(q["findings_written"].empty());
  CHECK_FALSE(std::filesystem::exists("findings"));

  const RunResult hit = run({"--format", "json", "fuzz", "--dim", "4", "--trials",
                             "100", "--seed", "26"});
  CHECK(hit.code == 1);
  const json h = json::parse(hit.out);
  REQUIRE(h["findings_written"].size() == 1);
  CHECK(h["findings_written"][0]["trial"] == 86);
  const std::string path = h["findings_written"][0]["document"];
  REQUIRE(std::filesystem::exists(path));

  const RunResult replay = run({"--format", "json", "validate", path});
  CHECK(replay.code == 0);
  const json v = json::parse(replay.out);
  CHECK(v["is_malcev"] == true);
  CHECK(v["is_lie"] == false);
}

TEST_CASE("usage errors exit two") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"--format", "yaml", "catalog", "list"}).code == 2);
  CHECK(run({"fuzz", "--target", "everything"}).code == 2);
  CHECK(run({"catalog"}).code == 2);
}

TEST_CASE("repeated runs are byte-identical in both formats") {
  const std::vector<std::vector<std::string>> commands = {
      {"validate", catalog_file("M7")},
      {"analyze", catalog_file("sl2_plus_M7")},
      {"ideals", catalog_file("solv4")},
      {"delta", catalog_file("solv4"), "--x", "1,0,0,0", "--y", "0,1,0,0"},
      {"weights", catalog_file("sl2"), "--h", "h"},
      {"catalog", "list"},
      {"fuzz", "--dim", "3", "--trials", "20", "--seed", "7"},
  };
  for (const auto& base : commands) {
    for (const std::string& format : {"text", "json"}) {
      std::vector<std::string> args{"--format", format};
      args.insert(args.end(), base.begin(), base.end());
      const RunResult first = run(args);
      const RunResult second = run(args);
      CHECK(first.code == second.code);
      CHECK(first.out == second.out);
    }
  }
}

TEST_CASE("the format flag may follow the subcommand") {
  const RunResult trailing =
      run({"validate", catalog_file("sl2"), "--format", "json"});
  CHECK(trailing.code == 0);
  CHECK(json::parse(trailing.out)["is_malcev"] == true);
}
