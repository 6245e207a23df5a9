#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chernlat/cli.hpp"

using namespace chernlat;
using cli::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

// Just enough JSON Schema for the shipped schema: type, enum, required,
// properties, additionalProperties = false, items, local $ref.
class Validator {
 public:
  explicit Validator(Json schema) : root_(std::move(schema)) {}

  std::vector<std::string> validate(const Json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  const Json& resolve(const Json& s) const {
    if (!s.contains("$ref")) return s;
    const std::string ref = s["$ref"];
    REQUIRE(ref.rfind("#/$defs/", 0) == 0);
    return root_["$defs"][ref.substr(8)];
  }

  static bool has_type(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    return false;
  }

  void check(const Json& schema, const Json& v, const std::string& path, std::vector<std::string>& errors) const {
    const Json& s = resolve(schema);
    if (s.contains("type") && !has_type(v, s["type"])) errors.push_back(path + ": expected " + s["type"].dump());
    if (s.contains("enum")) {
      bool ok = false;
      for (const auto& e : s["enum"]) ok = ok || e == v;
      if (!ok) errors.push_back(path + ": " + v.dump() + " not in enum");
    }
    if (v.is_object()) {
      for (const auto& r : s.value("required", Json::array()))
        if (!v.contains(r.get<std::string>())) errors.push_back(path + ": missing " + r.get<std::string>());
      const Json props = s.value("properties", Json::object());
      for (const auto& [k, x] : v.items()) {
        if (props.contains(k)) check(props[k], x, path + "." + k, errors);
        else if (s.contains("additionalProperties") && !s["additionalProperties"].get<bool>())
          errors.push_back(path + ": unexpected key " + k);
      }
    }
    if (v.is_array() && s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) check(s["items"], v[i], path + "[" + std::to_string(i) + "]", errors);
  }

  Json root_;
};

std::string shell(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  pclose(p);
  return out;
}

}  // namespace

TEST_CASE("classify on Hirzebruch(0)") {
  const Result r = run({"classify", "--surface", "hirzebruch:0", "--max-c2", "6", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 1 + 16);  // header + rows
  CHECK(r.out.find("[H+F]⊕[H+2F]") != std::string::npos);
  CHECK(run_json({"classify", "--surface", "hirzebruch:0", "--max-c2", "6"}).size() == 16);
}

TEST_CASE("curves on dp:1") {
  const Json j = run_json({"curves", "--surface", "dp:1", "--type", "minus-one"});
  CHECK(j.size() == 240);
  CHECK(j[0].contains("signature"));
  CHECK(run_json({"curves", "--surface", "dp:7", "--type", "zero"}).size() == 2);
  CHECK(run({"curves", "--surface", "dp:1", "--type", "two"}).code == 2);
  CHECK(run({"curves", "--surface", "p2"}).code == 2);
}

TEST_CASE("check the tangent bundle") {
  const Json j = run_json({"check", "--surface", "p2", "--bundle", "tangent"});
  CHECK(j["c1"]["coeffs"] == Json::array({3}));
  CHECK(j["c2"] == 3);
  CHECK(j["delta"] == 7);
  CHECK(j["checks"]["curve_degree"] == true);
  CHECK(j["checks"]["kleiman"] == true);
  CHECK(j["checks"]["ballico"] == true);
  CHECK(j["passes"] == true);
  CHECK(j["stability"] == "stable");
  const Result t = run({"check", "--surface", "p2", "--bundle", "tangent"});
  CHECK(t.out.find("FAIL") == std::string::npos);
}

TEST_CASE("check reports a destabilizing pair and failures") {
  const Json j = run_json({"check", "--surface", "p2", "--bundle", "sum(H, 3H)"});
  CHECK(j["bogomolov_unstable"] == true);
  CHECK(j["destabilizing"]["L"]["coeffs"] == Json::array({3}));
  CHECK(j["destabilizing"]["degZ"] == 0);
  const Json bad = run_json({"check", "--surface", "hirzebruch:1", "--bundle", "sum(H, H+2F)"});
  CHECK(bad["passes"] == false);
  CHECK(bad["checks"]["summands_ample"] == false);
}

TEST_CASE("input errors exit with 2 and one line") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"classify", "--surface", "dp:9", "--max-c2", "3"},
        {"classify", "--surface", "p2", "--max-c2", "99"},
        {"classify", "--surface", "p2"},
        {"check", "--surface", "hirzebruch:1", "--bundle", "sum(H+F)"},
        {"verify", "--corollary", "5.1"},
        {"surfaces", "--format", "yaml"},
        {"frobnicate"},
        {}}) {
    const Result r = run(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK(lines(r.err).size() == 1);
    CHECK(r.out.empty());
  }
  const Result range = run({"classify", "--surface", "p2", "--max-c2", "99"});
  CHECK(range.err.find("c2 <= 6") != std::string::npos);
  const Result parse = run({"check", "--surface", "hirzebruch:1", "--bundle", "sum(H+F)"});
  CHECK(parse.err.find("position") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const Result ok = run({"verify", "--corollary", "4.7"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("nothing is claimed outside") != std::string::npos);
  const Json j = run_json({"verify", "--corollary", "2.11"});
  CHECK(j["success"] == true);
  CHECK(j["agreed"].size() == 32);
  CHECK(j["classifier_only"].empty());
  CHECK(j["unexplained"] == 0);
  // A too-small cap loses published entries: the agreement fails, exit 1.
  const Result small = run({"verify", "--corollary", "2.11", "--cap", "3"});
  CHECK(small.code == 1);
  CHECK(small.out.find("classifier-only") != std::string::npos);
}

TEST_CASE("JSON output matches the shipped schema") {
  std::ifstream in(CHERNLAT_SCHEMA_PATH);
  REQUIRE(in.good());
  const Validator v(Json::parse(in));
  for (const auto& id : corollary_ids()) {
    CAPTURE(id);
    const auto errors = v.validate(run_json({"classify", "--corollary", id}));
    CHECK(errors.empty());
    if (!errors.empty()) MESSAGE(errors.front());
  }
  const auto errors = v.validate(run_json({"classify", "--surface", "dp:4", "--max-c2", "6"}));
  CHECK(errors.empty());
  CHECK_FALSE(v.validate(Json::array({Json{{"surface", "p2"}}})).empty());
}

TEST_CASE("table rows round-trip through the bundle parser") {
  for (const auto& id : corollary_ids())
    for (const auto& e : corollary(id)) {
      CAPTURE(e.case_label);
      const std::string text = cli::render_bundle(e);
      if (std::holds_alternative<OpenCase>(e.bundle)) {
        CHECK(text == "open");
        continue;
      }
      const BundleDescriptor b = parse_bundle(text, e.surface);
      if (const auto* d = std::get_if<BundleDescriptor>(&e.bundle)) CHECK(b == *d);
      else CHECK(b == std::get<FamilyDescriptor>(e.bundle).at(std::get<FamilyDescriptor>(e.bundle).t_min));
      CHECK(chern(b) == e.chern);
    }
  // The JSON "text" field carries the same string.
  const Json j = run_json({"classify", "--corollary", "3.14"});
  CHECK(j[1]["bundle"]["text"] == "sum(-K, -2K)");
}

TEST_CASE("output is byte-identical across runs") {
  const std::string cmd = std::string(CHERNLAT_CLI_PATH) + " classify --corollary 2.11 --format json";
  const std::string a = shell(cmd), b = shell(cmd);
  CHECK_FALSE(a.empty());
  CHECK(a == b);
  const std::string v = std::string(CHERNLAT_CLI_PATH) + " verify --corollary 4.8";
  CHECK(shell(v) == shell(v));
}

TEST_CASE("format defaults to the environment variable") {
  setenv("CHERN_LATTICE_FORMAT", "json", 1);
  const Result r = run({"surfaces"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).size() == 9);
  setenv("CHERN_LATTICE_FORMAT", "table", 1);
  CHECK(run({"surfaces"}).out.rfind("surface", 0) == 0);
  setenv("CHERN_LATTICE_FORMAT", "xml", 1);
  CHECK(run({"surfaces"}).code == 2);
  unsetenv("CHERN_LATTICE_FORMAT");
  CHECK(run({"surfaces"}).out.rfind("surface", 0) == 0);
}
