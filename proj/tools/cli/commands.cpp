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

#include "commands.hpp"

#include <bkl/bkl.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace bkl::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTailSteps = 12;
constexpr double kProfileTolerance = 1e-3;

bkl_complex to_c(cdouble v) { return {v.real(), v.imag()}; }
cdouble from_c(bkl_complex v) { return {v.re, v.im}; }

std::string status_message(bkl_context* ctx, bkl_status s) {
  std::string msg = bkl_status_string(s);
  const char* detail = bkl_last_error(ctx);
  if (detail != nullptr && *detail != '\0') msg += ": " + std::string(detail);
  return msg;
}

class Context {
 public:
  explicit Context(const RunConfig& cfg) {
    if (bkl_context_create(&ctx_) != BKL_OK) throw DomainError("cannot create context");
    std::vector<bkl_complex> theta;
    for (const auto& a : cfg.theta) theta.push_back(to_c(a));
    check(bkl_set_theta(ctx_, theta.data(), theta.size()));
    check(bkl_set_step(ctx_, cfg.h));
    check(bkl_set_eta(ctx_, cfg.eta));
    check(bkl_set_tolerance(ctx_, cfg.tol));
    check(bkl_set_seed(ctx_, cfg.seed));
  }
  ~Context() { bkl_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  bkl_context* get() const { return ctx_; }

  void check(bkl_status s) const {
    if (s != BKL_OK) throw DomainError(status_message(ctx_, s));
  }

 private:
  bkl_context* ctx_ = nullptr;
};

class Report {
 public:
  Report() = default;
  ~Report() { bkl_report_destroy(rep_); }
  Report(const Report&) = delete;
  Report& operator=(const Report&) = delete;

  bkl_report** out() { return &rep_; }
  std::size_t size() const { return bkl_report_size(rep_); }
  const bkl_row& row(std::size_t i) const { return *bkl_report_row(rep_, i); }
  std::string claim(std::size_t i) const { return bkl_report_claim(rep_, i); }
  std::string description(std::size_t i) const { return bkl_report_description(rep_, i); }
  std::string error(std::size_t i) const { return bkl_report_error(rep_, i); }
  bkl_limit limit() const {
    bkl_limit l{};
    bkl_report_limit(rep_, &l);
    return l;
  }

 private:
  bkl_report* rep_ = nullptr;
};

bkl_family family_of(const std::string& name) {
  bkl_family f;
  if (bkl_family_from_name(name.c_str(), &f) != BKL_OK) throw ConfigError("unknown family '" + name + "'");
  return f;
}

bkl_evaluator evaluator_of(const std::string& name) {
  if (name == "fd") return BKL_EVAL_FD;
  if (name == "analytic") return BKL_EVAL_ANNULUS_ANALYTIC;
  if (name == "exact") return BKL_EVAL_ANNULUS_EXACT;
  return BKL_EVAL_SLIT_INNER;
}

const char* evaluator_name(bkl_evaluator e) {
  switch (e) {
    case BKL_EVAL_FD: return "fd";
    case BKL_EVAL_ANNULUS_ANALYTIC: return "analytic";
    case BKL_EVAL_ANNULUS_EXACT: return "exact";
    case BKL_EVAL_SLIT_INNER: return "fd-inner";
  }
  return "fd";
}

const char* target_kind_name(bkl_target_kind k) {
  switch (k) {
    case BKL_TARGET_VALUE: return "value";
    case BKL_TARGET_INFINITY: return "inf";
    case BKL_TARGET_ORDER: return "order";
    case BKL_TARGET_GREATER: return "greater";
    case BKL_TARGET_NONNEGATIVE: return "nonnegative";
  }
  return "value";
}

std::string format_double(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.precision(17);
  s << v;
  return s.str();
}

Record levi_record(const std::string& family, cdouble zeta, cdouble z, double kernel,
                   const bkl_levi& l, const char* method) {
  Record r;
  r.family = family;
  r.zeta = zeta;
  r.z = z;
  r.kernel = kernel;
  r.levi = l.value;
  r.method = method;
  r.h = l.h;
  r.rich_err = l.richardson_error;
  return r;
}

Output cmd_eval(const RunConfig& cfg) {
  Context ctx(cfg);
  const bkl_family f = family_of(cfg.family);
  const cdouble zeta = cfg.zeta;
  double kernel = kNaN;
  ctx.check(bkl_kernel(ctx.get(), f, to_c(zeta), to_c(cfg.z), &kernel));
  bkl_levi fd{};
  ctx.check(bkl_levi_fd(ctx.get(), f, to_c(zeta), to_c(cfg.z), &fd));

  Output out;
  out.records.push_back(levi_record(cfg.family, zeta, cfg.z, kernel, fd, "fd"));
  ojson rec = ojson::object();
  rec["family"] = cfg.family;
  rec["zeta"] = complex_value(zeta);
  rec["z"] = complex_value(cfg.z);
  rec["kernel"] = number(kernel);
  rec["levi_fd"] = number(fd.value);
  if (f == BKL_ANNULUS) {
    bkl_levi analytic{}, exact{};
    ctx.check(bkl_levi_analytic(ctx.get(), f, to_c(zeta), to_c(cfg.z), &analytic));
    ctx.check(bkl_levi_annulus_exact(ctx.get(), to_c(zeta), to_c(cfg.z), &exact));
    out.records.push_back(levi_record(cfg.family, zeta, cfg.z, kernel, analytic, "analytic"));
    out.records.push_back(levi_record(cfg.family, zeta, cfg.z, kernel, exact, "exact"));
    rec["levi_analytic"] = number(analytic.value);
    rec["levi_exact"] = number(exact.value);
  }
  rec["h"] = number(fd.h);
  rec["richardson_error"] = number(fd.richardson_error);
  out.json_records = ojson::array({rec});
  return out;
}

Output cmd_levi(const RunConfig& cfg) {
  Context ctx(cfg);
  const bkl_family f = family_of(cfg.family);
  bkl_levi l{};
  double kernel = kNaN;
  cdouble zeta = cfg.zeta;
  if (cfg.method == "inner") {
    if (f != BKL_SLIT) throw ConfigError("method inner applies to the slit family only");
    ctx.check(bkl_levi_slit_inner(ctx.get(), to_c(cfg.z), &l));
    zeta = cdouble(1.0, 0.0);
  } else {
    ctx.check(bkl_kernel(ctx.get(), f, to_c(zeta), to_c(cfg.z), &kernel));
    if (cfg.method == "fd") {
      ctx.check(bkl_levi_fd(ctx.get(), f, to_c(zeta), to_c(cfg.z), &l));
    } else if (cfg.method == "analytic") {
      ctx.check(bkl_levi_analytic(ctx.get(), f, to_c(zeta), to_c(cfg.z), &l));
    } else {
      if (f != BKL_ANNULUS) throw ConfigError("method exact applies to the annulus only");
      ctx.check(bkl_levi_annulus_exact(ctx.get(), to_c(zeta), to_c(cfg.z), &l));
    }
  }
  Output out;
  out.records.push_back(levi_record(cfg.family, zeta, cfg.z, kernel, l, cfg.method.c_str()));
  return out;
}

void append_probe(Output& out, const std::string& family, const Report& rep) {
  for (std::size_t j = 0; j < rep.size(); ++j) {
    const bkl_row& row = rep.row(j);
    Record r;
    r.family = family;
    r.zeta = from_c(row.zeta);
    r.z = from_c(row.z);
    r.kernel = row.kernel;
    r.levi = row.levi;
    r.method = evaluator_name(row.evaluator);
    r.h = row.h;
    r.rich_err = row.richardson_error;
    r.claim = rep.claim(j);
    r.extra["distance"] = number(row.distance);
    out.records.push_back(r);
  }
}

Output cmd_probe(const RunConfig& cfg) {
  Context ctx(cfg);
  const bkl_family f = family_of(cfg.family);
  const bkl_evaluator ev = evaluator_of(cfg.evaluator);
  Report rep;
  ctx.check(bkl_probe(ctx.get(), f, to_c(cfg.zeta), to_c(cfg.target), to_c(cfg.direction), cfg.d0,
                      ev, rep.out()));
  Output out;
  append_probe(out, cfg.family, rep);
  const bkl_limit l = rep.limit();
  Record lim;
  lim.family = cfg.family;
  lim.z = cfg.target;
  lim.levi = l.fitted_limit;
  lim.method = evaluator_name(ev);
  lim.claim = "limit";
  lim.diverged = l.diverged != 0;
  out.records.push_back(lim);
  ojson summary = ojson::object();
  summary["target"] = complex_value(cfg.target);
  summary["fitted_limit"] = number(l.fitted_limit);
  summary["diverged"] = l.diverged != 0;
  summary["fitted_order"] = number(l.fitted_order);
  summary["slope_stderr"] = number(l.slope_stderr);
  summary["points"] = rep.size();
  out.summary = summary;
  return out;
}

Output cmd_reproduce(const RunConfig& cfg) {
  Context ctx(cfg);
  Report rep;
  ctx.check(bkl_reproduce(ctx.get(), cfg.theorem, rep.out()));
  Output out;
  int failed = 0;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    const bkl_row& row = rep.row(i);
    Record r;
    r.family = bkl_family_name(row.family);
    r.zeta = from_c(row.zeta);
    r.z = from_c(row.z);
    r.kernel = row.kernel;
    r.levi = row.levi;
    r.method = evaluator_name(row.evaluator);
    r.h = row.h;
    r.rich_err = row.richardson_error;
    r.claim = rep.claim(i);
    r.target = row.target;
    r.target_infinite = row.target_kind == BKL_TARGET_INFINITY;
    r.pass = row.pass != 0;
    r.diverged = row.diverged != 0;
    r.extra["theorem"] = row.theorem;
    r.extra["description"] = rep.description(i);
    r.extra["target_kind"] = target_kind_name(row.target_kind);
    r.extra["tolerance"] = number(row.tolerance);
    r.extra["estimate"] = number(row.estimate);
    r.extra["order"] = number(row.order);
    r.extra["order_stderr"] = number(row.order_stderr);
    r.extra["error"] = rep.error(i);
    if (!row.pass) ++failed;
    out.records.push_back(r);
  }
  out.summary = ojson{{"theorem", cfg.theorem}, {"rows", rep.size()}, {"failed", failed}};
  out.exit_code = failed > 0 ? 1 : 0;
  return out;
}

Output cmd_selftest(const RunConfig& cfg) {
  Context ctx(cfg);
  Report rep;
  ctx.check(bkl_selftest(ctx.get(), rep.out()));
  Output out;
  int failed = 0;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    const bkl_row& row = rep.row(i);
    Record r;
    r.method = "selftest";
    r.claim = rep.claim(i);
    r.levi = row.estimate;
    r.target = row.tolerance;
    r.pass = row.pass != 0;
    r.extra["measured"] = number(row.estimate);
    r.extra["tolerance"] = number(row.tolerance);
    r.extra["error"] = rep.error(i);
    if (!row.pass) ++failed;
    out.records.push_back(r);
  }
  out.summary = ojson{{"checks", rep.size()}, {"failed", failed}};
  out.exit_code = failed > 0 ? 1 : 0;
  return out;
}

Record skipped(const std::string& family, cdouble zeta, cdouble z, const std::string& why) {
  Record r;
  r.family = family;
  r.zeta = zeta;
  r.z = z;
  r.claim = "skipped: " + why;
  r.extra["skipped"] = true;
  return r;
}

void sweep_grid(const RunConfig& cfg, Context& ctx, Output& out) {
  const bkl_family f = family_of(cfg.family);
  for (double y : cfg.im.points()) {
    for (double x : cfg.re.points()) {
      const cdouble z(x, y);
      double kernel = kNaN;
      bkl_levi l{};
      bkl_status s = bkl_kernel(ctx.get(), f, to_c(cfg.zeta), to_c(z), &kernel);
      if (s == BKL_OK) s = bkl_levi_fd(ctx.get(), f, to_c(cfg.zeta), to_c(z), &l);
      if (s != BKL_OK) {
        out.records.push_back(skipped(cfg.family, cfg.zeta, z, status_message(ctx.get(), s)));
        continue;
      }
      out.records.push_back(levi_record(cfg.family, cfg.zeta, z, kernel, l, "fd"));
    }
  }
}

void sweep_slit_profile(const RunConfig& cfg, Context& ctx, Output& out) {
  const double tol = cfg.tol > 0.0 ? cfg.tol : kProfileTolerance;
  for (double theta : cfg.axis.points()) {
    const cdouble e = std::polar(1.0, theta);
    double target = kNaN;
    if (bkl_slit_boundary_profile(ctx.get(), theta, &target) != BKL_OK) target = kNaN;
    Report rep;
    const double t = theta - 2.0 * kPi * std::floor(theta / (2.0 * kPi));
    const double d0 = 0.1 * std::min({1.0, t, 2.0 * kPi - t});
    const bkl_status s =
        d0 > 0.0 ? bkl_probe(ctx.get(), BKL_SLIT, {1.0, 0.0}, to_c(e), to_c(-e), d0,
                             BKL_EVAL_SLIT_INNER, rep.out())
                 : BKL_ERR_BOUNDARY_GUARD;
    if (s != BKL_OK) {
      Record r = skipped("slit", cdouble(1.0, 0.0), e,
                         d0 > 0.0 ? status_message(ctx.get(), s) : "boundary point z = 1");
      r.target = target;
      r.extra["theta"] = theta;
      out.records.push_back(r);
      continue;
    }
    const bkl_limit l = rep.limit();
    Record r;
    r.family = "slit";
    r.zeta = cdouble(1.0, 0.0);
    r.z = e;
    r.levi = l.fitted_limit;
    r.method = "fd-inner";
    const bkl_row& last = rep.row(rep.size() - 1);
    r.h = last.h;
    r.rich_err = last.richardson_error;
    r.claim = "theta=" + format_double(theta);
    r.target = target;
    r.diverged = l.diverged != 0;
    r.pass = std::isfinite(l.fitted_limit) && std::abs(l.fitted_limit - target) <= tol;
    r.extra["theta"] = theta;
    out.records.push_back(r);
  }
}

void sweep_halfstrip_tail(const RunConfig& cfg, Context& ctx, Output& out) {
  const double tol = cfg.tol > 0.0 ? cfg.tol : kProfileTolerance;
  const cdouble zeta = cfg.zeta + cfg.eta;
  for (double re : cfg.axis.points()) {
    double target = kNaN;
    ctx.check(bkl_halfstrip_tail_limit(ctx.get(), kPi * re / 2.0, &target));
    std::vector<bkl_complex> zetas, zs;
    std::vector<double> dist;
    double y = 1.0;
    for (int j = 0; j < kTailSteps; ++j, y *= 2.0) {
      zetas.push_back(to_c(zeta));
      zs.push_back({re, y});
      dist.push_back(1.0 / y);
    }
    Report rep;
    const bkl_status s = bkl_probe_path(ctx.get(), BKL_HALFSTRIP, zetas.data(), zs.data(),
                                        dist.data(), zs.size(), BKL_EVAL_FD, rep.out());
    if (s != BKL_OK) {
      Record r = skipped("halfstrip", zeta, cdouble(re, 1.0), status_message(ctx.get(), s));
      r.target = target;
      out.records.push_back(r);
      continue;
    }
    const bkl_limit l = rep.limit();
    const bkl_row& last = rep.row(rep.size() - 1);
    Record r;
    r.family = "halfstrip";
    r.zeta = zeta;
    r.z = from_c(last.z);
    r.levi = l.fitted_limit;
    r.method = "fd";
    r.h = last.h;
    r.rich_err = last.richardson_error;
    r.claim = "Re z=" + format_double(re);
    r.target = target;
    r.diverged = l.diverged != 0;
    r.pass = std::isfinite(l.fitted_limit) && std::abs(l.fitted_limit - target) <= tol;
    out.records.push_back(r);
  }
}

Output cmd_sweep(const RunConfig& cfg) {
  Context ctx(cfg);
  Output out;
  if (cfg.sweep == "grid") {
    sweep_grid(cfg, ctx, out);
  } else if (cfg.sweep == "slit-profile") {
    sweep_slit_profile(cfg, ctx, out);
  } else {
    sweep_halfstrip_tail(cfg, ctx, out);
  }
  return out;
}

}  // namespace

std::string library_version() { return bkl_version(); }

Output run_command(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.command == "eval") return cmd_eval(cfg);
  if (cfg.command == "levi") return cmd_levi(cfg);
  if (cfg.command == "probe") return cmd_probe(cfg);
  if (cfg.command == "reproduce") return cmd_reproduce(cfg);
  if (cfg.command == "selftest") return cmd_selftest(cfg);
  return cmd_sweep(cfg);
}

}  // namespace bkl::cli
