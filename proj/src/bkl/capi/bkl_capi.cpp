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

#include "bkl/bkl.h"

#include <cmath>
#include <complex>
#include <exception>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bkl/domains/conformal.hpp"
#include "bkl/domains/families.hpp"
#include "bkl/error.hpp"
#include "bkl/levi/levi.hpp"
#include "bkl/levi/probe.hpp"
#include "bkl/levi/theorems.hpp"
#include "bkl/selftest.hpp"
#include "bkl/special/elliptic.hpp"
#include "bkl/special/jacobi.hpp"
#include "bkl/special/weierstrass.hpp"

struct bkl_context {
  bkl::domains::ThetaSpec theta;
  double h = bkl::levi::kDefaultStep;
  double eta = 1e-6;
  double tol = 0.0;  // 0 keeps the per-row defaults
  std::uint64_t seed = 20260101;
  std::string last_error;
};

struct bkl_report {
  std::vector<bkl_row> rows;
  std::vector<std::string> claims;
  std::vector<std::string> descriptions;
  std::vector<std::string> errors;
  std::optional<bkl_limit> limit;
};

namespace {

using cdouble = std::complex<double>;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

cdouble to_cpp(bkl_complex c) { return {c.re, c.im}; }
bkl_complex to_c(cdouble c) { return {c.real(), c.imag()}; }

bkl_status to_status(bkl::ErrorCode code) {
  return static_cast<bkl_status>(static_cast<int>(code));
}

bool valid_family(bkl_family f) { return f >= BKL_ANNULUS && f <= BKL_HALFSTRIP; }

bkl::domains::Family to_family(bkl_family f) { return static_cast<bkl::domains::Family>(f); }

template <class F>
bkl_status guarded(bkl_context* ctx, F&& body) {
  if (ctx == nullptr) return BKL_ERR_INVALID_ARGUMENT;
  try {
    body();
    ctx->last_error.clear();
    return BKL_OK;
  } catch (const bkl::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return BKL_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) bkl::fail(bkl::ErrorCode::kInvalidArgument, what);
}

bkl::levi::ProbeConfig probe_config(const bkl_context* ctx) {
  bkl::levi::ProbeConfig cfg;
  cfg.eta = ctx->eta;
  cfg.h = ctx->h;
  cfg.theta = ctx->theta;
  return cfg;
}

bkl_levi to_c(const bkl::levi::LeviEstimate& e) {
  return {e.value, e.h, e.richardson_error,
          e.method == bkl::levi::Method::kAnalytic ? BKL_METHOD_ANALYTIC : BKL_METHOD_FD};
}

bkl_row blank_row() {
  bkl_row r{};
  r.kernel = r.levi = r.estimate = r.order = r.order_stderr = r.distance = kNaN;
  return r;
}

void push(bkl_report& rep, const bkl_row& row, std::string claim, std::string description,
          std::string error) {
  rep.rows.push_back(row);
  rep.claims.push_back(std::move(claim));
  rep.descriptions.push_back(std::move(description));
  rep.errors.push_back(std::move(error));
}

bkl_report* make_probe_report(bkl_context* ctx, bkl_family family,
                              const bkl::levi::ApproachPath& path) {
  const auto cfg = probe_config(ctx);
  const auto lr = bkl::levi::probe_limit(path, cfg);
  auto rep = std::make_unique<bkl_report>();
  for (std::size_t j = 0; j < lr.estimates.size(); ++j) {
    bkl_row r = blank_row();
    r.family = family;
    r.zeta = to_c(lr.zeta[j]);
    r.z = to_c(lr.z[j]);
    if (path.evaluator != bkl::levi::Evaluator::kSlitInner) {
      try {
        r.kernel = bkl::domains::bergman_kernel({to_family(family), lr.zeta[j], lr.z[j]}, ctx->theta);
      } catch (const bkl::Error&) {
      }
    }
    r.levi = r.estimate = lr.estimates[j].value;
    r.h = lr.estimates[j].h;
    r.richardson_error = lr.estimates[j].richardson_error;
    r.evaluator = static_cast<bkl_evaluator>(path.evaluator);
    r.distance = lr.distance[j];
    r.pass = 1;
    push(*rep, r, "point " + std::to_string(j), path.description, "");
  }
  rep->limit = bkl_limit{lr.fitted_limit, lr.diverged ? 1 : 0, lr.fitted_order, lr.slope_stderr};
  return rep.release();
}

}  // namespace

extern "C" {

const char* bkl_version(void) { return "1.0.0"; }

const char* bkl_status_string(bkl_status status) {
  if (status == BKL_OK) return "ok";
  if (status == BKL_ERR_INTERNAL) return "internal";
  if (status >= BKL_ERR_DOMAIN && status <= BKL_ERR_INVALID_ARGUMENT) {
    return bkl::to_string(static_cast<bkl::ErrorCode>(static_cast<int>(status)));
  }
  return "unknown";
}

bkl_status bkl_context_create(bkl_context** out) {
  if (out == nullptr) return BKL_ERR_INVALID_ARGUMENT;
  try {
    *out = new bkl_context();
  } catch (...) {
    *out = nullptr;
    return BKL_ERR_INTERNAL;
  }
  return BKL_OK;
}

void bkl_context_destroy(bkl_context* ctx) { delete ctx; }

const char* bkl_last_error(const bkl_context* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

bkl_status bkl_set_theta(bkl_context* ctx, const bkl_complex* coefficients, size_t n) {
  return guarded(ctx, [&] {
    require(coefficients != nullptr || n == 0, "bkl_set_theta: null coefficients");
    std::vector<cdouble> c;
    for (size_t i = 0; i < n; ++i) {
      require(std::isfinite(coefficients[i].re) && std::isfinite(coefficients[i].im),
              "bkl_set_theta: non-finite coefficient");
      c.push_back(to_cpp(coefficients[i]));
    }
    ctx->theta.coefficients = std::move(c);
  });
}

bkl_status bkl_set_step(bkl_context* ctx, double h) {
  return guarded(ctx, [&] {
    require(h > 0.0 && std::isfinite(h), "bkl_set_step: h must be positive");
    ctx->h = h;
  });
}

bkl_status bkl_set_eta(bkl_context* ctx, double eta) {
  return guarded(ctx, [&] {
    require(eta >= 0.0 && eta < 0.1, "bkl_set_eta: eta must lie in [0, 0.1)");
    ctx->eta = eta;
  });
}

bkl_status bkl_set_tolerance(bkl_context* ctx, double tol) {
  return guarded(ctx, [&] {
    require(tol >= 0.0 && std::isfinite(tol), "bkl_set_tolerance: tol must be >= 0");
    ctx->tol = tol;
  });
}

bkl_status bkl_set_seed(bkl_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] { ctx->seed = seed; });
}

bkl_status bkl_family_from_name(const char* name, bkl_family* out) {
  if (name == nullptr || out == nullptr) return BKL_ERR_INVALID_ARGUMENT;
  const auto f = bkl::domains::family_from_string(name);
  if (!f) return BKL_ERR_INVALID_ARGUMENT;
  *out = static_cast<bkl_family>(*f);
  return BKL_OK;
}

const char* bkl_family_name(bkl_family family) {
  return valid_family(family) ? bkl::domains::to_string(to_family(family)) : "unknown";
}

bkl_status bkl_contains(bkl_context* ctx, bkl_family family, bkl_complex zeta, bkl_complex z,
                        int* out) {
  return guarded(ctx, [&] {
    require(out != nullptr && valid_family(family), "bkl_contains: bad arguments");
    *out = bkl::domains::contains({to_family(family), to_cpp(zeta), to_cpp(z)}, ctx->theta) ? 1 : 0;
  });
}

bkl_status bkl_kernel(bkl_context* ctx, bkl_family family, bkl_complex zeta, bkl_complex z,
                      double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr && valid_family(family), "bkl_kernel: bad arguments");
    *out = bkl::domains::bergman_kernel({to_family(family), to_cpp(zeta), to_cpp(z)}, ctx->theta);
  });
}

bkl_status bkl_solve_modulus(bkl_context* ctx, bkl_complex zeta, double* k) {
  return guarded(ctx, [&] {
    require(k != nullptr, "bkl_solve_modulus: null output");
    *k = bkl::domains::solve_modulus(to_cpp(zeta)).modulus.k();
  });
}

bkl_status bkl_levi_fd(bkl_context* ctx, bkl_family family, bkl_complex zeta, bkl_complex z,
                       bkl_levi* out) {
  return guarded(ctx, [&] {
    require(out != nullptr && valid_family(family), "bkl_levi_fd: bad arguments");
    *out = to_c(bkl::levi::levi_fd(to_family(family), to_cpp(zeta), to_cpp(z), ctx->theta, ctx->h));
  });
}

bkl_status bkl_levi_analytic(bkl_context* ctx, bkl_family family, bkl_complex zeta, bkl_complex z,
                             bkl_levi* out) {
  return guarded(ctx, [&] {
    require(out != nullptr && valid_family(family), "bkl_levi_analytic: bad arguments");
    require(family == BKL_ANNULUS, "bkl_levi_analytic: closed form available for the annulus only");
    *out = to_c(bkl::levi::levi_annulus_analytic(to_cpp(zeta), to_cpp(z)));
  });
}

bkl_status bkl_levi_annulus_exact(bkl_context* ctx, bkl_complex zeta, bkl_complex z, bkl_levi* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_levi_annulus_exact: null output");
    *out = to_c(bkl::levi::levi_annulus_exact(to_cpp(zeta), to_cpp(z)));
  });
}

bkl_status bkl_levi_slit_inner(bkl_context* ctx, bkl_complex z, bkl_levi* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_levi_slit_inner: null output");
    *out = to_c(bkl::levi::levi_slit_inner(to_cpp(z), ctx->h));
  });
}

bkl_status bkl_complete_K(bkl_context* ctx, double k, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_complete_K: null output");
    *out = bkl::special::complete_K(k);
  });
}

bkl_status bkl_complete_E(bkl_context* ctx, double k, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_complete_E: null output");
    *out = bkl::special::complete_E(k);
  });
}

bkl_status bkl_incomplete_F(bkl_context* ctx, bkl_complex w, double k, bkl_complex* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_incomplete_F: null output");
    *out = to_c(bkl::special::incomplete_F(to_cpp(w), bkl::special::Modulus(k)));
  });
}

bkl_status bkl_jacobi(bkl_context* ctx, bkl_complex u, double k, bkl_complex* sn, bkl_complex* cn,
                      bkl_complex* dn) {
  return guarded(ctx, [&] {
    require(sn != nullptr && cn != nullptr && dn != nullptr, "bkl_jacobi: null output");
    const auto j = bkl::special::jacobi(to_cpp(u), bkl::special::Modulus(k));
    *sn = to_c(j.sn);
    *cn = to_c(j.cn);
    *dn = to_c(j.dn);
  });
}

bkl_status bkl_weierstrass_p(bkl_context* ctx, bkl_complex u, double omega1, bkl_complex* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_weierstrass_p: null output");
    *out = to_c(bkl::special::weierstrass_p(to_cpp(u), bkl::special::Lattice(omega1)));
  });
}

bkl_status bkl_weierstrass_zeta(bkl_context* ctx, bkl_complex u, double omega1, bkl_complex* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_weierstrass_zeta: null output");
    *out = to_c(bkl::special::weierstrass_zeta(to_cpp(u), bkl::special::Lattice(omega1)));
  });
}

bkl_status bkl_robin_c(bkl_context* ctx, double omega1, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_robin_c: null output");
    *out = bkl::special::robin_c(omega1);
  });
}

bkl_status bkl_probe(bkl_context* ctx, bkl_family family, bkl_complex zeta0, bkl_complex target,
                     bkl_complex direction, double d0, bkl_evaluator evaluator, bkl_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr && valid_family(family), "bkl_probe: bad arguments");
    require(evaluator >= BKL_EVAL_FD && evaluator <= BKL_EVAL_SLIT_INNER, "bkl_probe: bad evaluator");
    require(d0 > 0.0 && std::isfinite(d0), "bkl_probe: d0 must be positive");
    require(std::abs(to_cpp(direction)) > 0.0, "bkl_probe: zero direction");
    *out = nullptr;
    const auto path = bkl::levi::geometric_path(
        to_family(family), to_cpp(zeta0) + ctx->eta, to_cpp(target), to_cpp(direction), d0,
        probe_config(ctx), static_cast<bkl::levi::Evaluator>(evaluator));
    *out = make_probe_report(ctx, family, path);
  });
}

bkl_status bkl_probe_path(bkl_context* ctx, bkl_family family, const bkl_complex* zeta,
                          const bkl_complex* z, const double* distance, size_t n,
                          bkl_evaluator evaluator, bkl_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr && valid_family(family), "bkl_probe_path: bad arguments");
    require(evaluator >= BKL_EVAL_FD && evaluator <= BKL_EVAL_SLIT_INNER,
            "bkl_probe_path: bad evaluator");
    require(z != nullptr && distance != nullptr &&
                (zeta != nullptr || evaluator == BKL_EVAL_SLIT_INNER),
            "bkl_probe_path: null path arrays");
    *out = nullptr;
    bkl::levi::ApproachPath path;
    path.family = to_family(family);
    path.evaluator = static_cast<bkl::levi::Evaluator>(evaluator);
    for (size_t j = 0; j < n; ++j) {
      require(distance[j] > 0.0, "bkl_probe_path: distances must be positive");
      path.zeta_path.push_back(zeta != nullptr ? to_cpp(zeta[j]) : cdouble(1.0, 0.0));
      path.z_path.push_back(to_cpp(z[j]));
      path.distance.push_back(distance[j]);
    }
    *out = make_probe_report(ctx, family, path);
  });
}

bkl_status bkl_slit_boundary_profile(bkl_context* ctx, double theta, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_slit_boundary_profile: null output");
    *out = bkl::levi::levi_slit_boundary(theta);
  });
}

bkl_status bkl_halfstrip_tail_limit(bkl_context* ctx, double x, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_halfstrip_tail_limit: null output");
    *out = bkl::levi::halfstrip_tail_limit(x);
  });
}

bkl_status bkl_reproduce(bkl_context* ctx, int theorem, bkl_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_reproduce: null output");
    *out = nullptr;
    const auto rows = bkl::levi::reproduce_theorem(theorem, probe_config(ctx));
    auto rep = std::make_unique<bkl_report>();
    for (const auto& t : rows) {
      bkl_row r = blank_row();
      r.theorem = t.theorem;
      r.family = static_cast<bkl_family>(t.family);
      r.zeta = to_c(t.zeta);
      r.z = to_c(t.z);
      r.kernel = t.kernel;
      r.levi = t.estimate;
      r.h = t.h;
      r.richardson_error = t.richardson_error;
      r.evaluator = static_cast<bkl_evaluator>(t.evaluator);
      r.target_kind = static_cast<bkl_target_kind>(t.kind);
      r.target = t.target;
      r.tolerance = t.tolerance;
      r.estimate = t.estimate;
      r.order = t.order;
      r.order_stderr = t.order_stderr;
      r.diverged = t.diverged ? 1 : 0;
      r.pass = t.pass ? 1 : 0;
      // A positive context tolerance replaces the per-row tolerance of value rows.
      if (ctx->tol > 0.0 && t.kind == bkl::levi::TargetKind::kValue && t.error.empty()) {
        r.tolerance = ctx->tol;
        r.pass = std::isfinite(t.estimate) && std::abs(t.estimate - t.target) <= ctx->tol ? 1 : 0;
      }
      push(*rep, r, t.claim, t.description, t.error);
    }
    *out = rep.release();
  });
}

bkl_status bkl_selftest(bkl_context* ctx, bkl_report** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "bkl_selftest: null output");
    *out = nullptr;
    auto rep = std::make_unique<bkl_report>();
    for (const auto& c : bkl::run_selftest(ctx->seed)) {
      bkl_row r = blank_row();
      r.target_kind = BKL_TARGET_VALUE;
      r.target = 0.0;
      r.tolerance = c.tolerance;
      r.estimate = c.measured;
      r.pass = c.pass ? 1 : 0;
      push(*rep, r, c.name, "worst deviation over the sample", c.error);
    }
    *out = rep.release();
  });
}

size_t bkl_report_size(const bkl_report* rep) { return rep == nullptr ? 0 : rep->rows.size(); }

const bkl_row* bkl_report_row(const bkl_report* rep, size_t i) {
  return rep == nullptr || i >= rep->rows.size() ? nullptr : &rep->rows[i];
}

const char* bkl_report_claim(const bkl_report* rep, size_t i) {
  return rep == nullptr || i >= rep->claims.size() ? nullptr : rep->claims[i].c_str();
}

const char* bkl_report_description(const bkl_report* rep, size_t i) {
  return rep == nullptr || i >= rep->descriptions.size() ? nullptr : rep->descriptions[i].c_str();
}

const char* bkl_report_error(const bkl_report* rep, size_t i) {
  return rep == nullptr || i >= rep->errors.size() ? nullptr : rep->errors[i].c_str();
}

bkl_status bkl_report_limit(const bkl_report* rep, bkl_limit* out) {
  if (rep == nullptr || out == nullptr || !rep->limit) return BKL_ERR_INVALID_ARGUMENT;
  *out = *rep->limit;
  return BKL_OK;
}

int bkl_report_all_pass(const bkl_report* rep) {
  if (rep == nullptr) return 0;
  for (const bkl_row& r : rep->rows) {
    if (!r.pass) return 0;
  }
  return 1;
}

void bkl_report_destroy(bkl_report* rep) { delete rep; }

}  // extern "C"
