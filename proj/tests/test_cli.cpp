#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"

using namespace toricfano;
using namespace toricfano::cli;
using nlohmann::json;

namespace {

const std::string config_dir = TORICFANO_CONFIG_DIR;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "toricfano");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string cfg(const std::string& name) { return config_dir + "/" + name; }

json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = invoke(std::move(args));
  REQUIRE(r.status == 0);
  return json::parse(r.out);
}

std::set<long long> fano_scales(const json& report) {
  std::set<long long> s;
  for (const auto& k : report["summary"]["fano_scales"]) s.insert(k.get<long long>());
  return s;
}

void collect_strings(const json& j, std::vector<std::string>& out) {
  if (j.is_string())
    out.push_back(j.get<std::string>());
  else if (j.is_structured())
    for (const auto& x : j) collect_strings(x, out);
}

}  // namespace

TEST_CASE("check verdicts on the shipped configs") {
  CHECK(invoke_json({"check", cfg("hirzebruch_n0.json")})["verdict"]["is_fano"] == true);
  CHECK(invoke_json({"check", cfg("hirzebruch_n1.json")})["verdict"]["is_fano"] == true);
  const auto n2 = invoke_json({"check", cfg("hirzebruch_n2.json")});
  CHECK(n2["verdict"]["is_fano"] == false);
  CHECK(n2["verdict"]["min_margin"] == "0");
  CHECK(invoke_json({"check", cfg("so4n_n5.json")})["verdict"]["is_fano"] == true);
  const auto n4 = invoke_json({"check", cfg("so4n_n4.json")});
  CHECK(n4["verdict"]["is_fano"] == false);
  CHECK(n4["verdict"]["min_margin"] == "-1/28");
}

TEST_CASE("report carries the documented fields") {
  const auto r = invoke_json({"check", cfg("hirzebruch_n1.json")});
  for (const char* key : {"verdict", "margins", "flag", "fiber", "warnings", "config"}) CHECK(r.contains(key));
  REQUIRE(r["margins"].size() == 2);
  for (const auto& m : r["margins"]) {
    CHECK(m.contains("vertex"));
    CHECK(m.contains("root"));
    CHECK(m["value"].is_string());
  }
  // alpha(h_Q) = 1/2 +- n/4 at n = 1; vertex 0 is Q_o = -1
  CHECK(r["margins"][0]["value"] == "3/4");
  CHECK(r["margins"][1]["value"] == "1/4");
}

TEST_CASE("output is deterministic") {
  for (const auto* mode : {"--json", "--oracle"}) {
    const auto a = invoke({mode, "check", cfg("so4n_n5.json")});
    const auto b = invoke({mode, "check", cfg("so4n_n5.json")});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
  const auto a = invoke({"--json", "scan", cfg("so4n_n5_scan.json"), "--threads", "1"});
  const auto b = invoke({"--json", "scan", cfg("so4n_n5_scan.json"), "--threads", "7"});
  CHECK(a.out == b.out);
}

TEST_CASE("JSON and human reports carry the same rationals") {
  for (const auto* file : {"so4n_n4.json", "hirzebruch_n2.json", "cp1xcp1.json"}) {
    const auto j = invoke_json({"check", cfg(file)});
    const auto text = invoke({"check", cfg(file)}).out;
    std::vector<std::string> values;
    for (const auto& m : j["margins"]) values.push_back(m["value"].get<std::string>());
    collect_strings(j["flag"]["h_v"], values);
    collect_strings(j["fiber"]["vertices"], values);
    for (const auto& v : values) CHECK_MESSAGE(text.find(v) != std::string::npos, v);
    // every margin line appears in order
    std::size_t pos = 0;
    for (const auto& m : j["margins"]) {
      pos = text.find(m["value"].get<std::string>(), pos);
      CHECK(pos != std::string::npos);
    }
  }
}

TEST_CASE("scan") {
  SUBCASE("Hirzebruch scalar scan") {
    const auto r = invoke_json({"scan", cfg("hirzebruch_scan.json")});
    CHECK(fano_scales(r) == std::set<long long>{0, 1});
    CHECK(r["summary"]["total"] == 6);
  }
  SUBCASE("SO(20) scalar scan is a prefix starting at 1") {
    const auto r = invoke_json({"scan", cfg("so4n_n5_scan.json")});
    const auto s = fano_scales(r);
    REQUIRE(!s.empty());
    CHECK(*s.begin() == 1);
    CHECK(static_cast<long long>(s.size()) == *s.rbegin());
    CHECK(s == std::set<long long>{1, 2, 3, 4, 5, 6});
  }
  SUBCASE("SO(20) scalar scan endpoint") {
    // At scale s the binding margin is (2n - 3s/n)/k on e_i - e_j at Q_2,
    // positive for n = 5 exactly when s <= 16.
    const auto r = invoke_json({"scan", cfg("so4n_n5_scan.json"), "--max", "30"});
    std::set<long long> expected;
    for (long long k = 1; k <= 16; ++k) expected.insert(k);
    CHECK(fano_scales(r) == expected);
  }
  SUBCASE("--max overrides the range") {
    const auto r = invoke_json({"scan", cfg("hirzebruch_scan.json"), "--max", "1"});
    CHECK(r["summary"]["total"] == 2);
  }
  SUBCASE("empty range gives an empty table") {
    const auto r = invoke_json({"scan", cfg("hirzebruch_scan.json"), "--max", "-1"});
    CHECK(r["results"].empty());
    CHECK(r["summary"]["total"] == 0);
  }
  SUBCASE("box scan in lexicographic order") {
    const auto r = invoke_json({"scan", cfg("hirzebruch_box.json")});
    REQUIRE(r["results"].size() == 7);
    std::vector<std::string> first;
    for (const auto& row : r["results"]) first.push_back(row["tau"][0][0].get<std::string>());
    CHECK(first == std::vector<std::string>{"-3", "-2", "-1", "0", "1", "2", "3"});
    std::set<std::string> fano;
    for (const auto& row : r["results"])
      if (row["is_fano"].get<bool>()) fano.insert(row["tau"][0][0].get<std::string>());
    CHECK(fano == std::set<std::string>{"-1", "0", "1"});
  }
  SUBCASE("explosion guard") {
    const auto r = invoke({"scan", cfg("hirzebruch_box.json"), "--max", "1000", "--cap", "100"});
    CHECK(r.status != 0);
    CHECK(r.err.find("cap") != std::string::npos);
  }
}

TEST_CASE("polytope and flag-info") {
  const auto f2 = invoke({"polytope", cfg("f2_fan.json")});
  CHECK(f2.status == 0);
  CHECK(f2.out.find("warning: fan is not Fano") != std::string::npos);

  const auto p = invoke_json({"polytope", cfg("cp1xcp1.json")});
  std::set<std::vector<std::string>> verts;
  for (const auto& v : p["fiber"]["vertices"]) verts.insert(v.get<std::vector<std::string>>());
  CHECK(verts == std::set<std::vector<std::string>>{{"-1", "-1"}, {"1", "-1"}, {"-1", "1"}, {"1", "1"}});

  const auto d10 = invoke_json({"flag-info", cfg("d10_flag.json")});
  CHECK(d10["flag"]["r_m_plus_count"] == 70);

  const auto a1 = invoke_json({"flag-info", cfg("hirzebruch_n1.json")});
  REQUIRE(a1["flag"]["h_v_margins"].size() == 1);
  CHECK(a1["flag"]["h_v_margins"][0]["value"] == "1/2");

  const auto empty = parse_config_text(R"({"base": {"components": [{"letter": "A", "rank": 3}], "crossed": []}})");
  const auto report = cmd_flag_info(empty, Options{});
  REQUIRE(report["warnings"].size() == 1);
  CHECK(report["warnings"][0].get<std::string>().find("no bundle possible (m>0)") != std::string::npos);
}

TEST_CASE("oracle on projective fibers") {
  const auto r = invoke_json({"--oracle", "polytope", cfg("so4n_n5.json")});
  CHECK(r["oracle"]["pass"] == true);
  const auto f2 = invoke_json({"--oracle", "polytope", cfg("f2_fan.json")});
  CHECK(!f2.contains("oracle"));
}

TEST_CASE("input errors name the offending field") {
  const auto r = invoke({"check", cfg("malformed_crossed.json")});
  CHECK(r.status != 0);
  CHECK(r.err.find("base.crossed[1]") != std::string::npos);

  auto message = [](const std::string& text) {
    try {
      parse_config_text(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("{").find("parse") != std::string::npos);
  CHECK(message(R"({"base": {"components": [{"letter": "Q", "rank": 2}], "crossed": [1]}})").find("base.components[0]") !=
        std::string::npos);
  CHECK(message(R"({"base": {"components": [{"letter": "A", "rank": 2}], "crossed": [1]}, "tau": [["1/0"]]})")
            .find("tau[0][0]") != std::string::npos);
  CHECK(message(R"({"base": {"components": [{"letter": "A", "rank": 2}], "crossed": [1]},
                    "fiber": {"kind": "fan", "rays": [[2, 0]], "max_cones": [[0]]}})")
            .find("fiber") != std::string::npos);

  CHECK(invoke({"check", cfg("does_not_exist.json")}).status != 0);
  CHECK(invoke({"frobnicate"}).status != 0);
  CHECK(invoke({}).status != 0);
}
