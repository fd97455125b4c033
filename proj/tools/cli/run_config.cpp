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

#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace bkl::cli {

namespace {

using nlohmann::json;

const char* const kNumber = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";

double to_double(const std::string& s) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v = 0.0;
  in >> v;
  return v;
}

json complex_json(cdouble v) { return json::array({v.real(), v.imag()}); }

cdouble complex_from(const json& j, const std::string& key) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError("config key '" + key + "': expected [re, im]");
}

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "': wrong type");
  }
}

json axis_json(const Axis& a) { return json{{"from", a.from}, {"to", a.to}, {"n", a.n}}; }

Axis axis_from(const json& j, const std::string& key) {
  if (!j.is_object()) throw ConfigError("config key '" + key + "': expected an object");
  Axis a;
  for (const auto& [k, v] : j.items()) {
    if (k == "from") a.from = get_as<double>(v, key + ".from");
    else if (k == "to") a.to = get_as<double>(v, key + ".to");
    else if (k == "n") a.n = get_as<int>(v, key + ".n");
    else throw ConfigError("unknown config key '" + key + "." + k + "'");
  }
  return a;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool finite(cdouble v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

std::vector<double> Axis::points() const {
  std::vector<double> p;
  for (int i = 0; i < n; ++i) {
    p.push_back(n == 1 ? from : from + (to - from) * static_cast<double>(i) / (n - 1));
  }
  return p;
}

cdouble parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const std::string num(kNumber);
  std::smatch m;
  const std::regex pair("^\\(?([+-]?" + num + "),([+-]?" + num + ")\\)?$");
  if (std::regex_match(s, m, pair)) return {to_double(m[1]), to_double(m[2])};
  const std::regex real("^([+-]?" + num + ")$");
  if (std::regex_match(s, m, real)) return {to_double(m[1]), 0.0};
  const std::regex imag("^([+-]?)(" + num + ")?\\*?[ij]$");
  if (std::regex_match(s, m, imag)) {
    const double b = m[2].matched ? to_double(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -b : b};
  }
  const std::regex full("^([+-]?" + num + ")([+-])(" + num + ")?\\*?[ij]$");
  if (std::regex_match(s, m, full)) {
    const double b = m[3].matched ? to_double(m[3]) : 1.0;
    return {to_double(m[1]), m[2] == "-" ? -b : b};
  }
  throw ConfigError("malformed complex number '" + text + "'");
}

void RunConfig::validate() const {
  static const std::set<std::string> commands{"eval", "levi", "probe", "reproduce", "sweep",
                                              "selftest"};
  static const std::set<std::string> families{"annulus", "disc", "slit", "rectangle",
                                              "halfstrip"};
  require(commands.count(command) == 1, "unknown command '" + command + "'");
  require(families.count(family) == 1, "unknown family '" + family + "'");
  require(format == "json" || format == "csv", "format must be json or csv");
  require(method == "fd" || method == "analytic" || method == "exact" || method == "inner",
          "method must be fd, analytic, exact or inner");
  require(evaluator == "fd" || evaluator == "analytic" || evaluator == "exact" ||
              evaluator == "fd-inner",
          "evaluator must be fd, analytic, exact or fd-inner");
  require(sweep == "grid" || sweep == "slit-profile" || sweep == "halfstrip-tail",
          "sweep must be grid, slit-profile or halfstrip-tail");
  require(finite(zeta) && finite(z) && finite(target) && finite(direction),
          "complex values must be finite");
  require(!theta.empty(), "theta needs at least one coefficient");
  for (const auto& c : theta) require(finite(c), "theta coefficients must be finite");
  require(std::isfinite(h) && h > 0.0, "h must be positive");
  require(std::isfinite(eta) && eta >= 0.0, "eta must be >= 0");
  require(std::isfinite(tol) && tol >= 0.0, "tol must be >= 0");
  require(std::isfinite(d0) && d0 > 0.0, "d0 must be positive");
  for (const Axis* a : {&re, &im, &axis}) {
    require(a->n >= 0, "axis point counts must be >= 0");
    require(std::isfinite(a->from) && std::isfinite(a->to), "axis bounds must be finite");
  }
  if (command == "reproduce") require(theorem >= 1 && theorem <= 6, "theorem must be 1..6");
}

nlohmann::json to_json(const RunConfig& c) {
  json theta = json::array();
  for (const auto& a : c.theta) theta.push_back(complex_json(a));
  return json{{"command", c.command},
              {"family", c.family},
              {"zeta", complex_json(c.zeta)},
              {"z", complex_json(c.z)},
              {"theta", theta},
              {"h", c.h},
              {"eta", c.eta},
              {"tol", c.tol},
              {"format", c.format},
              {"out", c.out},
              {"method", c.method},
              {"theorem", c.theorem},
              {"target", complex_json(c.target)},
              {"direction", complex_json(c.direction)},
              {"d0", c.d0},
              {"evaluator", c.evaluator},
              {"sweep", c.sweep},
              {"re", axis_json(c.re)},
              {"im", axis_json(c.im)},
              {"axis", axis_json(c.axis)},
              {"seed", c.seed}};
}

RunConfig config_from_json(const nlohmann::json& doc) {
  const json& j = doc.is_object() && doc.contains("header") ? doc.at("header") : doc;
  require(j.is_object(), "config must be a JSON object");
  RunConfig c;
  for (const auto& [k, v] : j.items()) {
    if (k == "command") c.command = get_as<std::string>(v, k);
    else if (k == "family") c.family = get_as<std::string>(v, k);
    else if (k == "zeta") c.zeta = complex_from(v, k);
    else if (k == "z") c.z = complex_from(v, k);
    else if (k == "theta") {
      require(v.is_array(), "config key 'theta': expected an array");
      c.theta.clear();
      for (const auto& a : v) c.theta.push_back(complex_from(a, k));
    } else if (k == "h") c.h = get_as<double>(v, k);
    else if (k == "eta") c.eta = get_as<double>(v, k);
    else if (k == "tol") c.tol = get_as<double>(v, k);
    else if (k == "format") c.format = get_as<std::string>(v, k);
    else if (k == "out") c.out = get_as<std::string>(v, k);
    else if (k == "method") c.method = get_as<std::string>(v, k);
    else if (k == "theorem") c.theorem = get_as<int>(v, k);
    else if (k == "target") c.target = complex_from(v, k);
    else if (k == "direction") c.direction = complex_from(v, k);
    else if (k == "d0") c.d0 = get_as<double>(v, k);
    else if (k == "evaluator") c.evaluator = get_as<std::string>(v, k);
    else if (k == "sweep") c.sweep = get_as<std::string>(v, k);
    else if (k == "re") c.re = axis_from(v, k);
    else if (k == "im") c.im = axis_from(v, k);
    else if (k == "axis") c.axis = axis_from(v, k);
    else if (k == "seed") c.seed = get_as<std::uint64_t>(v, k);
    else throw ConfigError("unknown config key '" + k + "'");
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read config file '" + path + "'");
  try {
    return config_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
}

}  // namespace bkl::cli
