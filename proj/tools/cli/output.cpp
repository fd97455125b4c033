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

#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace bkl::cli {

namespace {

std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

ojson record_json(const Record& r) {
  ojson j = ojson::object();
  j["family"] = r.family;
  j["zeta"] = r.zeta ? complex_value(*r.zeta) : ojson(nullptr);
  j["z"] = r.z ? complex_value(*r.z) : ojson(nullptr);
  j["kernel"] = number(r.kernel);
  j["levi"] = number(r.levi);
  j["method"] = r.method;
  j["h"] = number(r.h);
  j["rich_err"] = number(r.rich_err);
  j["claim"] = r.claim;
  j["target"] = r.target_infinite ? ojson("inf") : number(r.target);
  j["pass"] = r.pass ? ojson(*r.pass) : ojson(nullptr);
  j["diverged"] = r.diverged;
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

}  // namespace

const char* const kCsvColumns =
    "family,zeta_re,zeta_im,z_re,z_im,kernel,levi,method,h,rich_err,claim,target,pass";

ojson number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

ojson complex_value(cdouble v) { return ojson::array({number(v.real()), number(v.imag())}); }

std::string render_json(const RunConfig& cfg, const Output& out, const std::string& version) {
  ojson doc = ojson::object();
  doc["version"] = version;
  doc["header"] = ojson::parse(to_json(cfg).dump());
  if (out.json_records) {
    doc["records"] = *out.json_records;
  } else {
    ojson rows = ojson::array();
    for (const auto& r : out.records) rows.push_back(record_json(r));
    doc["records"] = rows;
  }
  if (out.summary) doc["summary"] = *out.summary;
  return doc.dump(2) + "\n";
}

std::string render_csv(const Output& out) {
  std::string s = std::string(kCsvColumns) + "\n";
  for (const auto& r : out.records) {
    const cdouble zeta = r.zeta.value_or(cdouble(kNaN, kNaN));
    const cdouble z = r.z.value_or(cdouble(kNaN, kNaN));
    const std::string cells[] = {csv_text(r.family),
                                 csv_number(zeta.real()),
                                 csv_number(zeta.imag()),
                                 csv_number(z.real()),
                                 csv_number(z.imag()),
                                 csv_number(r.kernel),
                                 csv_number(r.levi),
                                 csv_text(r.method),
                                 csv_number(r.h),
                                 csv_number(r.rich_err),
                                 csv_text(r.claim),
                                 r.target_infinite ? "inf" : csv_number(r.target),
                                 r.pass ? (*r.pass ? "1" : "0") : ""};
    for (std::size_t i = 0; i < std::size(cells); ++i) {
      if (i > 0) s += ',';
      s += cells[i];
    }
    s += '\n';
  }
  return s;
}

}  // namespace bkl::cli
