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

// bkl: evaluate Bergman kernels and Levi forms, probe boundary limits,
// reproduce the limit tables and emit sweep data as JSON or CSV.
//
// Exit codes: 0 success, 1 failed claim or check, 2 configuration or domain
// error (nothing is written to --out in that case).

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/output.hpp"
#include "cli/run_config.hpp"

namespace {

using bkl::cli::ConfigError;
using bkl::cli::RunConfig;

constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

struct Flags {
  std::string config;
  std::string family, zeta, z, target, direction;
  std::vector<std::string> theta;
  double h = 0.0, eta = 0.0, tol = 0.0, d0 = 0.0;
  std::string format, out, method, evaluator, sweep;
  int theorem = 0;
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0, from = 0.0, to = 0.0;
  int re_n = 0, im_n = 0, n = 0;
};

// Writes next to the destination and renames, so readers never see a partial file.
void write_atomically(const std::string& path, const std::string& data) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot open '" + tmp + "' for writing");
    f << data;
    f.flush();
    if (!f) {
      std::remove(tmp.c_str());
      throw ConfigError("write to '" + tmp + "' failed");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    const std::string why = std::strerror(errno);
    std::remove(tmp.c_str());
    throw ConfigError("cannot rename output to '" + path + "': " + why);
  }
}

std::uint64_t parse_seed(const char* text) {
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (errno != 0 || end == text || *end != '\0' || text[0] == '-') {
    throw ConfigError(std::string("BKL_SEED must be an unsigned integer, got '") + text + "'");
  }
  return v;
}

RunConfig merge(const CLI::App& app, const Flags& f, const std::string& command) {
  RunConfig c = f.config.empty() ? RunConfig{} : bkl::cli::load_config(f.config);
  c.command = command;
  auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("--family")) c.family = f.family;
  if (given("--zeta")) c.zeta = bkl::cli::parse_complex(f.zeta);
  if (given("--z")) c.z = bkl::cli::parse_complex(f.z);
  if (given("--theta")) {
    c.theta.clear();
    for (const auto& t : f.theta) c.theta.push_back(bkl::cli::parse_complex(t));
  }
  if (given("--h")) c.h = f.h;
  if (given("--eta")) c.eta = f.eta;
  if (given("--tol")) c.tol = f.tol;
  if (given("--format")) c.format = f.format;
  if (given("--out")) c.out = f.out;
  if (given("--method")) c.method = f.method;
  if (given("--theorem")) c.theorem = f.theorem;
  if (given("--target")) c.target = bkl::cli::parse_complex(f.target);
  if (given("--direction")) c.direction = bkl::cli::parse_complex(f.direction);
  if (given("--d0")) c.d0 = f.d0;
  if (given("--evaluator")) c.evaluator = f.evaluator;
  if (given("--sweep")) c.sweep = f.sweep;
  if (given("--re-min")) c.re.from = f.re_min;
  if (given("--re-max")) c.re.to = f.re_max;
  if (given("--re-n")) c.re.n = f.re_n;
  if (given("--im-min")) c.im.from = f.im_min;
  if (given("--im-max")) c.im.to = f.im_max;
  if (given("--im-n")) c.im.n = f.im_n;
  if (given("--from")) c.axis.from = f.from;
  if (given("--to")) c.axis.to = f.to;
  if (given("--n")) c.axis.n = f.n;
  if (const char* seed = std::getenv("BKL_SEED"); seed != nullptr && *seed != '\0') {
    c.seed = parse_seed(seed);
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman kernel Levi-form toolkit"};
  app.set_help_flag("--help", "print this help and exit");
  app.set_version_flag("--version", bkl::cli::library_version());
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config, "JSON config (same schema as the output header)");
  app.add_option("--family", f.family, "annulus | disc | slit | rectangle | halfstrip");
  app.add_option("--zeta", f.zeta, "domain parameter, e.g. 0.5 or 1+1i or (1,1)");
  app.add_option("--z", f.z, "evaluation point");
  app.add_option("--theta", f.theta, "disc-family coefficients a_1 a_2 ...");
  app.add_option("--h", f.h, "finite-difference step");
  app.add_option("--eta", f.eta, "offset added to zeta by probes");
  app.add_option("--tol", f.tol, "override for value-claim tolerances (0 keeps defaults)");
  app.add_option("--format", f.format, "json | csv");
  app.add_option("--out", f.out, "output path (stdout when omitted)");
  app.add_option("--method", f.method, "levi: fd | analytic | exact | inner");
  app.add_option("--theorem", f.theorem, "reproduce: theorem number 1..6");
  app.add_option("--target", f.target, "probe: limit point");
  app.add_option("--direction", f.direction, "probe: approach direction");
  app.add_option("--d0", f.d0, "probe: initial distance");
  app.add_option("--evaluator", f.evaluator, "probe: fd | analytic | exact | fd-inner");
  app.add_option("--sweep", f.sweep, "sweep: grid | slit-profile | halfstrip-tail");
  app.add_option("--re-min", f.re_min, "grid: Re z start");
  app.add_option("--re-max", f.re_max, "grid: Re z end");
  app.add_option("--re-n", f.re_n, "grid: Re z points");
  app.add_option("--im-min", f.im_min, "grid: Im z start");
  app.add_option("--im-max", f.im_max, "grid: Im z end");
  app.add_option("--im-n", f.im_n, "grid: Im z points");
  app.add_option("--from", f.from, "1-d sweep start (theta or Re z)");
  app.add_option("--to", f.to, "1-d sweep end");
  app.add_option("--n", f.n, "1-d sweep points");

  const char* commands[][2] = {
      {"eval", "kernel and Levi form at one point"},
      {"levi", "Levi form by one method"},
      {"probe", "limit along a geometric approach path"},
      {"reproduce", "limit table for one theorem"},
      {"sweep", "dataset over a grid or a 1-d parameter"},
      {"selftest", "oracle cross-checks and identity suites"},
  };
  for (const auto& c : commands) app.add_subcommand(c[0], c[1])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    const RunConfig cfg = merge(app, f, command);
    const bkl::cli::Output out = bkl::cli::run_command(cfg);
    const std::string text = cfg.format == "csv"
                                 ? bkl::cli::render_csv(out)
                                 : bkl::cli::render_json(cfg, out, bkl::cli::library_version());
    if (cfg.out.empty()) {
      std::cout << text << std::flush;
    } else {
      write_atomically(cfg.out, text);
    }
    if (out.exit_code != 0) {
      std::cerr << "bkl: " << command << ": one or more claims failed\n";
      return kExitFailed;
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "bkl: configuration error: " << e.what() << "\n";
  } catch (const bkl::cli::DomainError& e) {
    std::cerr << "bkl: domain error: " << e.what() << "\n";
  }
  return kExitConfig;
}
