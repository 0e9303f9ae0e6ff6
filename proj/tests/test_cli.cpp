#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(E7_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json parse_cert(const std::string& args) {
  auto r = run_cli(args + " --json");
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer();
  if (type == "null") return value.is_null();
  return false;
}

// enough of a draft-07 walker for the shipped schema: required keys,
// declared property types (string or union), additionalProperties, pattern
void check_against(const json& schema, const json& value) {
  if (schema.contains("type")) {
    const auto& t = schema.at("type");
    if (t.is_string()) {
      CHECK(type_matches(value, t.get<std::string>()));
    } else {
      bool any = false;
      for (const auto& alt : t) any = any || type_matches(value, alt.get<std::string>());
      CHECK(any);
    }
  }
  if (schema.contains("pattern") && value.is_string())
    CHECK(std::regex_match(value.get<std::string>(), std::regex(schema.at("pattern").get<std::string>())));
  if (!value.is_object()) return;
  if (schema.contains("required"))
    for (const auto& key : schema.at("required")) CHECK(value.contains(key.get<std::string>()));
  if (schema.contains("properties")) {
    const auto& props = schema.at("properties");
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        check_against(props.at(key), sub);
      } else if (schema.contains("additionalProperties") &&
                 schema.at("additionalProperties") == false) {
        FAIL_CHECK("unexpected field ", key);
      }
    }
  }
}

json load_schema() {
  std::ifstream f(E7_SCHEMA_PATH);
  REQUIRE(f.good());
  return json::parse(f);
}

}  // namespace

TEST_CASE("census subcommand emits the documented counts") {
  auto cert = parse_cert("sympl enum --g 3");
  CHECK(cert.at("results") ==
        json{{"g", 3}, {"forms", 64}, {"odd", 28}, {"even", 36}});
  CHECK(cert.at("pass") == true);
}

TEST_CASE("aronhold subcommand emits the canonical basis and its conversion") {
  auto cert = parse_cert("sympl aronhold --g 2");
  const auto& r = cert.at("results");
  CHECK(r.at("epsilon") == 1);
  REQUIRE(r.at("basis").size() == 5);
  CHECK(r.at("symplectic_basis") ==
        json::parse(R"(["0x8","0x4","0x2","0x1"])"));
  auto verified = parse_cert("sympl aronhold --g 2 --verify");
  CHECK(verified.at("results").at("bases") == 720);
  CHECK(verified.at("pass") == true);
}

TEST_CASE("order, split and experiment values") {
  CHECK(parse_cert("weyl order --degree 2").at("results").at("order") == 2903040);
  auto split = parse_cert("weyl split-check");
  CHECK(split.at("results").at("mod2_image_order") == 1451520);
  CHECK(split.at("results").at("center_size") == 2);
  auto exp = parse_cert("torus experiment --prime 101 --trials 200 --seed 7");
  CHECK(exp.at("results").at("stats").at("agreements") == 200);
  CHECK(exp.at("results").at("stats").at("trials") == 200);
}

TEST_CASE("parameter and budget violations exit 2") {
  CHECK(run_cli("sympl enum --g 9").exit_code == 2);
  CHECK(run_cli("lattice roots --degree 9").exit_code == 2);
  CHECK(run_cli("torus sample --prime 7").exit_code == 2);
  CHECK(run_cli("inv perm-sw --source weyl --degree 20").exit_code == 2);
  CHECK(run_cli("weyl order --method closure --budget 100").exit_code == 2);
  CHECK(run_cli("inv pullback --matrix /nonexistent.json").exit_code == 2);

  std::string bad = "/tmp/e7_cli_test_bad_matrix.json";
  {
    std::ofstream f(bad);
    f << "{\"rows\": [[1,0],[1,1]]}\n";
  }
  auto wrong_shape = run_cli("inv pullback --matrix " + bad + " --degree 2");
  CHECK(wrong_shape.exit_code == 2);
  {
    std::ofstream f(bad);
    f << "not json at all\n";
  }
  auto not_json = run_cli("inv pullback --matrix " + bad + " --degree 2");
  CHECK(not_json.exit_code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("results objects are byte-deterministic") {
  auto a = parse_cert("weyl abelian-report");
  auto b = parse_cert("weyl abelian-report");
  CHECK(a.at("results").dump() == b.at("results").dump());
  CHECK(a.at("command") == b.at("command"));

  auto c = parse_cert("torus verify --prime 101 --seed 42");
  auto d = parse_cert("torus verify --prime 101 --seed 42");
  CHECK(c.at("results").dump() == d.at("results").dump());
}

TEST_CASE("certificates validate against the shipped schema") {
  auto schema = load_schema();
  for (const char* args : {"sympl enum --g 2", "lattice exceptional --degree 2",
                           "weyl abelian-report", "inv tables",
                           "torus sample --prime 101 --seed 42"}) {
    auto cert = parse_cert(args);
    check_against(schema, cert);
  }
}

TEST_CASE("aggregate battery passes and the fault hook fails by name") {
  auto all = parse_cert("report-all");
  CHECK(all.at("pass") == true);
  CHECK(all.at("results").at("criteria").size() == 12);
  for (const auto& c : all.at("results").at("criteria")) CHECK(c.at("pass") == true);
  check_against(load_schema(), all);

  auto faulty = run_cli("report-all --fault-inject --json");
  CHECK(faulty.exit_code == 1);
  auto cert = json::parse(faulty.out);
  CHECK(cert.at("pass") == false);
  CHECK(cert.at("results").at("first_failure") == "form-census");
}

TEST_CASE("out flag writes the printed certificate") {
  std::string path = "/tmp/e7_cli_test_out.json";
  auto r = run_cli("inv tables --json --out " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  auto from_file = json::parse(f);
  CHECK(from_file == json::parse(r.out));
  std::remove(path.c_str());
}

TEST_CASE("pullback degree zero renders as the unit") {
  std::string path = "/tmp/e7_cli_test_matrix.json";
  {
    std::ofstream f(path);
    f << "[[1,0],[1,1]]\n";
  }
  auto cert = parse_cert("inv pullback --matrix " + path + " --degree 0");
  CHECK(cert.at("results").at("rendered") == "1");
  auto cert2 = parse_cert("inv pullback --matrix " + path + " --degree 2");
  CHECK(cert2.at("results").at("value") == json::parse("[[1,2]]"));
  std::remove(path.c_str());
}
