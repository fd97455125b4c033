// Copyright 2026 The bkl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "cli/run_config.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using bkl::cli::cdouble;
using bkl::cli::ConfigError;
using bkl::cli::parse_complex;
using bkl::cli::RunConfig;

// Runs the CLI through the shell and returns its exit status.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(BKL_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("bkl_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("complex parsing") {
  CHECK(parse_complex("0.5") == cdouble(0.5, 0.0));
  CHECK(parse_complex("1+1i") == cdouble(1.0, 1.0));
  CHECK(parse_complex("-2.5-0.25i") == cdouble(-2.5, -0.25));
  CHECK(parse_complex("3i") == cdouble(0.0, 3.0));
  CHECK(parse_complex("i") == cdouble(0.0, 1.0));
  CHECK(parse_complex("(1,2)") == cdouble(1.0, 2.0));
  CHECK(parse_complex("1e-3,2") == cdouble(1e-3, 2.0));
  CHECK_THROWS_AS(parse_complex("abc"), ConfigError);
  CHECK_THROWS_AS(parse_complex(""), ConfigError);
  CHECK_THROWS_AS(parse_complex("1+"), ConfigError);
}

TEST_CASE("config JSON round trip") {
  RunConfig cfg;
  cfg.command = "sweep";
  cfg.family = "rectangle";
  cfg.zeta = {2.0, 1.0};
  cfg.z = {0.3, 0.4};
  cfg.theta = {{1.0, 0.0}, {0.0, 0.25}};
  cfg.tol = 1e-7;
  cfg.re = {0.1, 1.9, 5};
  cfg.im = {0.1, 0.9, 3};
  cfg.seed = 42;
  const RunConfig back = bkl::cli::config_from_json(bkl::cli::to_json(cfg));
  CHECK(back == cfg);
  nlohmann::json doc = {{"header", bkl::cli::to_json(cfg)}, {"records", nlohmann::json::array()}};
  CHECK(bkl::cli::config_from_json(doc) == cfg);
}

TEST_CASE("config rejects unknown keys and bad values") {
  nlohmann::json j = bkl::cli::to_json(RunConfig{});
  j["bogus"] = 1;
  CHECK_THROWS_AS(bkl::cli::config_from_json(j), ConfigError);
  RunConfig cfg;
  cfg.family = "torus";
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = RunConfig{};
  cfg.h = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("axis points") {
  CHECK(bkl::cli::Axis{0.0, 1.0, 0}.points().empty());
  CHECK(bkl::cli::Axis{0.25, 1.0, 1}.points() == std::vector<double>{0.25});
  const auto p = bkl::cli::Axis{0.0, 1.0, 5}.points();
  REQUIRE(p.size() == 5);
  CHECK(p[2] == doctest::Approx(0.5));
  CHECK(p[4] == 1.0);
}

TEST_CASE("output number encoding") {
  CHECK(bkl::cli::number(NAN).is_null());
  CHECK(bkl::cli::number(INFINITY) == "inf");
  CHECK(bkl::cli::number(-INFINITY) == "-inf");
  CHECK(bkl::cli::number(1.5) == 1.5);
}

TEST_CASE("eval command in process") {
  RunConfig cfg;
  const auto out = bkl::cli::run_command(cfg);
  CHECK(out.exit_code == 0);
  const std::string text = bkl::cli::render_json(cfg, out, bkl::cli::library_version());
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["records"][0]["kernel"].get<double>() ==
        doctest::Approx(3.3431319160242876).epsilon(1e-13));
  CHECK(bkl::cli::config_from_json(doc) == cfg);
  cfg.z = {0.3, 0.0};
  CHECK_THROWS_AS(bkl::cli::run_command(cfg), bkl::cli::DomainError);
}

TEST_CASE("csv header") {
  RunConfig cfg;
  cfg.format = "csv";
  const std::string text = bkl::cli::render_csv(bkl::cli::run_command(cfg));
  CHECK(text.rfind(std::string(bkl::cli::kCsvColumns) + "\n", 0) == 0);
}

TEST_CASE("binary exit codes") {
  TempDir tmp;
  CHECK(run_cli("--help >/dev/null") == 0);
  CHECK(run_cli("eval --family annulus --zeta 0.5 --z 0.7 --out " + tmp.file("a.json")) == 0);
  CHECK(run_cli("selftest --out " + tmp.file("s.json")) == 0);
  CHECK(run_cli("reproduce --theorem 4 --out " + tmp.file("r4.json")) == 0);
  CHECK(run_cli("reproduce --theorem 4 --tol 1e-30 --out " + tmp.file("r4s.json")) == 1);
  CHECK(fs::exists(tmp.file("r4s.json")));
  CHECK(run_cli("eval --zeta abc --out " + tmp.file("bad.json")) == 2);
  CHECK(!fs::exists(tmp.file("bad.json")));
  CHECK(run_cli("eval --family annulus --zeta 0.5 --z 0.3 --out " + tmp.file("dom.json")) == 2);
  CHECK(!fs::exists(tmp.file("dom.json")));
  CHECK(run_cli("eval --nope 1") == 2);
  CHECK(run_cli("--config " + tmp.file("missing.json") + " eval") == 2);
  for (const auto& e : fs::directory_iterator(tmp.path)) {
    CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
  }
}

TEST_CASE("binary output is deterministic and replayable") {
  TempDir tmp;
  const std::string args = "sweep --family disc --zeta 0 --re-min -1.5 --re-max -0.5 --re-n 3 "
                           "--im-min 0 --im-max 0.5 --im-n 2 --theta 1 0.2+0.1i";
  REQUIRE(run_cli(args + " --out " + tmp.file("a.json")) == 0);
  const std::string a = slurp(tmp.file("a.json"));
  REQUIRE(run_cli(args + " --out " + tmp.file("a.json")) == 0);
  CHECK(slurp(tmp.file("a.json")) == a);
  const auto doc = nlohmann::json::parse(a);
  REQUIRE(doc["records"].size() == 6);
  for (const auto& r : doc["records"]) CHECK(r["kernel"].is_number());

  // Replaying the header as a config reproduces the file byte for byte.
  {
    std::ofstream cfg(tmp.file("cfg.json"));
    cfg << doc["header"].dump(2);
  }
  REQUIRE(run_cli("sweep --config " + tmp.file("cfg.json")) == 0);
  CHECK(slurp(tmp.file("a.json")) == a);

  REQUIRE(run_cli(args + " --format csv --out " + tmp.file("a.csv")) == 0);
  std::istringstream csv(slurp(tmp.file("a.csv")));
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == 7);
}

TEST_CASE("empty grid gives an empty dataset") {
  TempDir tmp;
  CHECK(run_cli("sweep --family disc --zeta 0 --re-n 0 --im-n 0 --out " + tmp.file("e.json")) ==
        0);
  const auto doc = nlohmann::json::parse(slurp(tmp.file("e.json")));
  CHECK(doc["records"].empty());
}

TEST_CASE("seed from the environment") {
  TempDir tmp;
  const std::string out = tmp.file("seed.json");
  REQUIRE(run_cli("eval --out " + out) == 0);
  CHECK(nlohmann::json::parse(slurp(out))["header"]["seed"] == 20260101);
  ::setenv("BKL_SEED", "77", 1);
  REQUIRE(run_cli("eval --out " + out) == 0);
  CHECK(nlohmann::json::parse(slurp(out))["header"]["seed"] == 77);
  ::setenv("BKL_SEED", "x7", 1);
  CHECK(run_cli("eval --out " + out) == 2);
  ::unsetenv("BKL_SEED");
}
