#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "ybx/io.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code = -1;
  std::string out, err;
};

Result ybx_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = ybx::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ybx_test_cli";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

// Emits a catalog entry into the scratch directory.
std::string emitted(const std::string& name) {
  const fs::path p = scratch() / (name + ".json");
  const Result r = ybx_run({"catalog", "emit", name, "-o", p.string()});
  REQUIRE(r.code == 0);
  return p.string();
}

Json report(const Result& r) {
  Json j = Json::parse(r.out);
  j["input"] = fs::path(j["input"].get<std::string>()).filename().string();
  return j;
}

void check_golden(const std::string& golden, const Result& r) {
  const fs::path path = fs::path(YBX_GOLDEN_DIR) / golden;
  const std::string actual = report(r).dump(2) + "\n";
  if (std::getenv("YBX_UPDATE_GOLDEN")) spit(path, actual);
  REQUIRE(fs::exists(path));
  CHECK(slurp(path) == actual);
}

}  // namespace

TEST_CASE("catalog list", "[cli]") {
  const Result r = ybx_run({"catalog", "list"});
  CHECK(r.code == 0);
  for (const auto* name : {"flip2", "glq2", "glq3", "so3", "nonflat"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
}

TEST_CASE("emit and load round trip byte-identically", "[cli]") {
  for (const auto* name : {"flip1", "flip2", "flip3", "glq2", "glq3", "so3", "nonflat"}) {
    const std::string path = emitted(name);
    const std::string text = slurp(path);
    CHECK(ybx::format_file(ybx::parse_input(text)) == text);
    // stdout and -o agree
    CHECK(ybx_run({"catalog", "emit", name}).out == text);
  }
}

TEST_CASE("specializing glq2 at q = 1 gives the flip", "[cli]") {
  const Result r = ybx_run({"specialize", emitted("glq2"), "--at", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(emitted("flip2")));
}

TEST_CASE("exit code contract", "[cli]") {
  SECTION("pass") {
    const Result r = ybx_run({"check", emitted("glq2")});
    CHECK(r.code == ybx::cli::kOk);
    CHECK(r.out.find("verdict: PASS") != std::string::npos);
  }
  SECTION("failing axiom") {
    Json j = Json::parse(slurp(emitted("glq2")));
    j["matrix"][1][2] = "2";  // breaks the braid relation
    const fs::path p = scratch() / "typo.json";
    spit(p, j.dump());
    const Result r = ybx_run({"--json", "check", p.string()});
    CHECK(r.code == ybx::cli::kCheckFailed);
    const Json rep = Json::parse(r.out);
    CHECK(rep["verdict"] == "FAIL");
    CHECK(std::find(rep["failures"].begin(), rep["failures"].end(), "braid") !=
          rep["failures"].end());
  }
  SECTION("malformed file") {
    const fs::path p = scratch() / "broken.json";
    spit(p, "{\"dim\": 2, \"matrix\": [");
    const Result r = ybx_run({"check", p.string()});
    CHECK(r.code == ybx::cli::kInputError);
    CHECK(r.err.find("error") != std::string::npos);
    CHECK(r.out.empty());
  }
  SECTION("bad entry is located") {
    Json j = Json::parse(slurp(emitted("glq2")));
    j["matrix"][2][3] = "q +";
    const fs::path p = scratch() / "badentry.json";
    spit(p, j.dump());
    const Result r = ybx_run({"check", p.string()});
    CHECK(r.code == ybx::cli::kInputError);
    CHECK(r.err.find("matrix[2][3]") != std::string::npos);
  }
  SECTION("missing file") {
    CHECK(ybx_run({"check", (scratch() / "absent.json").string()}).code ==
          ybx::cli::kInputError);
  }
  SECTION("usage errors") {
    CHECK(ybx_run({"frobnicate"}).code == ybx::cli::kInputError);
    CHECK(ybx_run({"dims"}).code == ybx::cli::kInputError);
    CHECK(ybx_run({"dims", emitted("glq2"), "-K", "x"}).code == ybx::cli::kInputError);
    CHECK(ybx_run({"catalog", "emit", "nosuch"}).code == ybx::cli::kInputError);
  }
  SECTION("resource guards") {
    Result r = ybx_run({"dims", emitted("glq3"), "-K", "9"});
    CHECK(r.code == ybx::cli::kResourceGuard);
    CHECK(r.err.find("--max-ambient") != std::string::npos);
    r = ybx_run({"--json", "tower", emitted("glq2"), "-k", "3", "--max-work", "10"});
    CHECK(r.code == ybx::cli::kResourceGuard);
    CHECK(r.err.find("--max-work") != std::string::npos);
    CHECK(Json::parse(r.out)["verdict"] == "RESOURCE-GUARD");
    CHECK(ybx_run({"semigroup", emitted("glq3"), "-K", "5"}).code == ybx::cli::kResourceGuard);
  }
  SECTION("failing verdicts") {
    CHECK(ybx_run({"dims", emitted("nonflat")}).code == ybx::cli::kCheckFailed);
    CHECK(ybx_run({"check", emitted("nonflat")}).code == ybx::cli::kInputError);
  }
}

TEST_CASE("text reports show both columns", "[cli]") {
  const Result r = ybx_run({"dims", emitted("glq2"), "-K", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("verdict: FLAT to degree 4") != std::string::npos);
  const Result t = ybx_run({"tower", emitted("glq2"), "-k", "3"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("CRITERION SATISFIED") != std::string::npos);
}

TEST_CASE("json reports match the golden files", "[cli][golden]") {
  check_golden("check_glq2.json", ybx_run({"--json", "check", emitted("glq2")}));
  check_golden("check_so3.json", ybx_run({"--json", "check", emitted("so3")}));
  check_golden("dims_glq2_M1.json", ybx_run({"--json", "dims", emitted("glq2"), "-K", "4"}));
  check_golden("dims_glq2_M2.json",
               ybx_run({"--json", "dims", emitted("glq2"), "-K", "4", "-M", "2"}));
  check_golden("dims_nonflat.json", ybx_run({"--json", "dims", emitted("nonflat"), "-K", "3"}));
  check_golden("tower_glq2.json", ybx_run({"--json", "tower", emitted("glq2"), "-k", "3"}));
  check_golden("semigroup_flip2.json",
               ybx_run({"--json", "semigroup", emitted("flip2"), "-K", "2"}));
}

TEST_CASE("json keys are in schema order", "[cli]") {
  const Json j = Json::parse(ybx_run({"--json", "check", emitted("flip2")}).out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "input", "generic", "classical", "verdict",
                                          "failures"});
}
