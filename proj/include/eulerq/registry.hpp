#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The eulerq Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// A catalogue of checkable identities, each bound to a residual, a default
// parameter grid and a tolerance.

#include "eulerq/config.hpp"
#include "eulerq/dilog.hpp"
#include "eulerq/hypergeometric.hpp"
#include "eulerq/lambert.hpp"
#include "eulerq/pochhammer.hpp"
#include "eulerq/qlog.hpp"
#include "eulerq/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace eulerq {

/// A sweep over q and evaluation points.
///
/// Points are complex arguments, or nonnegative integers (stored as reals) for
/// index-parameterised identities. q_powers adds the points q^p for each q.
struct GridSpec
{
  std::vector<double>  q_values;
  std::vector<complex> points;
  std::vector<int>     q_powers;
};

struct IdentityCase
{
  std::string                               id;
  std::string                               description;
  std::function<double(QParam, complex)> residual;
  GridSpec                                  domain;
  double                                    tolerance     = 1e-10;
  bool                                      informational = false;
};

struct CaseResult
{
  std::string id;
  double      max_residual = 0.0;
  double      argmax_q     = 0.0;
  complex     argmax_point{};
  bool        pass          = false;
  bool        informational = false;
  double      tolerance     = 0.0;
  std::string error;  // set when an evaluation raised
};

struct IdentityReport
{
  std::vector<CaseResult> cases;
  std::size_t             total  = 0;
  std::size_t             passed = 0;
  std::size_t             failed = 0;

  /// True when every non-informational case passed.
  bool gating_pass() const
  {
    return std::all_of(cases.begin(), cases.end(),
                       [](CaseResult const &c) { return c.pass || c.informational; });
  }
};

namespace detail {

inline std::vector<double> const default_q_values{0.1, 0.3, 0.5, 0.7, 0.9};

inline std::vector<complex> const default_points{0.0, 0.5, -0.5, 1.0, 2.0, -2.0, {1.0, 1.0}};

inline std::vector<int> const default_q_powers{-1, -3};

inline std::vector<complex> integer_points(int from, int to)
{
  std::vector<complex> pts;
  for (int n = from; n <= to; ++n)
  {
    pts.emplace_back(static_cast<double>(n));
  }
  return pts;
}

inline std::size_t as_index(complex p, std::size_t min_value)
{
  double const r = p.real();
  if (p.imag() != 0.0 || r != std::floor(r) || r < static_cast<double>(min_value) || r > 1e6)
  {
    throw domain_error("point must be an integer >= " + std::to_string(min_value));
  }
  return static_cast<std::size_t>(r);
}

inline GridSpec complex_grid()
{
  return {default_q_values, default_points, default_q_powers};
}

inline GridSpec index_grid(int from, int to, std::vector<double> qs = default_q_values)
{
  return {std::move(qs), integer_points(from, to), {}};
}

inline double max_over(std::vector<complex> const &ts, std::function<double(complex)> const &f)
{
  double m = 0.0;
  for (complex const t : ts)
  {
    m = std::max(m, f(t));
  }
  return m;
}

inline std::vector<complex> const lambert_t_values{0.2, 0.5, 0.8};

/// Amount by which lo <= v <= hi is violated, relative to max(1, |v|).
inline double violation(double lo, double v, double hi)
{
  return std::max({0.0, lo - v, v - hi}) / std::max(1.0, std::abs(v));
}

inline std::vector<IdentityCase> build_registry()
{
  EvalConfig const cfg{};
  std::vector<IdentityCase> r;
  GridSpec const            cgrid = complex_grid();
  GridSpec const            small{default_q_values, default_points, {}};

  r.push_back({"qbinom", "(ax;q)_inf/(x;q)_inf = sum (a;q)_j x^j/(q;q)_j, |x| < 1",
               [cfg](QParam q, complex x) {
                 return max_over({0.0, 0.4, 1.0, {-0.7, 0.3}, 2.0},
                                 [&](complex a) { return qbinomial_theorem_residual(a, x, q, cfg); });
               },
               {default_q_values, {0.0, 0.5, -0.5, {0.3, 0.4}, -0.8, 0.9}, {}}, 1e-10});
  r.push_back({"qbinom_finite", "(z;q)_k = sum_j [k,j]_q q^{j(j-1)/2} (-z)^j, k <= 20",
               [](QParam q, complex z) { return finite_qbinomial_residual(z, q, 20); },
               {default_q_values, {0.0, 0.5, -0.5, 1.0, 2.0, -2.0, {1.0, 1.0}, {0.0, 2.0}}, {}}, 1e-12});
  r.push_back({"telescope", "sum_k q^k (x;q)_k = (1 - (x;q)_inf)/x",
               [cfg](QParam q, complex x) { return telescoping_residual(x, q, cfg); },
               {default_q_values, {0.5, -0.5, 1.0, 2.0, -2.0, {1.0, 1.0}}, default_q_powers}, 1e-10});
  r.push_back({"sq_taylor", "S_q(x) equals its Taylor series at 0",
               [cfg](QParam q, complex x) { return residual(s_q(x, q, cfg).value, s_q_taylor(x, q, cfg).value); },
               cgrid, 1e-10});
  r.push_back({"sq_onemxk", "S_q(x) = -sum (-1)^{k-1} q^{k(k+1)/2} (1-x^k)/((1-q^k)(q;q)_k)",
               [cfg](QParam q, complex x) { return residual(s_q(x, q, cfg).value, s_q_onemxk(x, q, cfg).value); },
               cgrid, 1e-10});
  r.push_back({"sq_qintegral", "S_q(x) = -q(1-x)/(1-q) int_0^1 G_q(qx, qt) d_q t",
               [cfg](QParam q, complex x) {
                 return residual(s_q(x, q, cfg).value, s_q_via_qintegral(x, q, cfg).value);
               },
               cgrid, 1e-9});
  r.push_back({"g_dualform", "sum t^k (x;q)_k = sum (-xt)^j q^{j(j-1)/2}/(t;q)_{j+1}, |t| <= 0.9",
               [cfg](QParam q, complex x) {
                 return max_over({0.5, -0.3, 0.9, {0.2, 0.5}}, [&](complex t) {
                   return residual(g_kernel({q, x, t}, cfg).value, g_kernel_dual({q, x, t}, cfg).value);
                 });
               },
               small, 1e-10});
  r.push_back({"qrecur", "S_q(x/q) - S_q(x) = 1 - (x;q)_inf",
               [cfg](QParam q, complex x) { return qrecur_residual(x, q, cfg); }, cgrid, 1e-10});
  r.push_back({"second_order", "(1-qx) S_q(q^2 x) - (2-qx) S_q(qx) + S_q(x) = qx",
               [cfg](QParam q, complex x) { return second_order_residual(x, q, cfg); }, cgrid, 1e-10});
  r.push_back({"sq_qn", "S_q(q^n) = -n + (q;q)_inf sum_{k<n} 1/(q;q)_k",
               [cfg](QParam q, complex p) {
                 std::size_t const n = as_index(p, 1);
                 complex const     x = std::pow(q.value(), static_cast<double>(n));
                 return residual(s_q(x, q, cfg).value, s_q_at_qn(n, q, cfg).value);
               },
               index_grid(1, 10), 1e-11});
  r.push_back({"sumform1", "summation formulas from S_q(q^{-n}) = n",
               [cfg](QParam q, complex p) {
                 SummationResiduals const s = summation_residuals(as_index(p, 0), q, cfg);
                 return std::max(s.finite_at_q_minus_n, s.alternating_at_q_minus_n);
               },
               index_grid(0, 10), 1e-10});
  r.push_back({"sumform2", "summation formulas from the closed form of S_q(q^n)",
               [cfg](QParam q, complex p) {
                 SummationResiduals const s = summation_residuals(as_index(p, 0), q, cfg);
                 return std::max(s.series_at_q_n, s.alternating_at_q_n);
               },
               index_grid(0, 10), 1e-10});
  r.push_back({"zeta1_alt", "zeta_q(1) = sum (-1)^{k-1} q^{k(k+1)/2}/((1-q^k)(q;q)_k)",
               [cfg](QParam q, complex) {
                 return residual(zeta_q(1, q, cfg).value, zeta1_alternating(q, cfg).value);
               },
               {default_q_values, {0.0}, {}}, 1e-12});
  r.push_back({"fq_equals_sq", "F_q(x, q) = S_q(x)",
               [cfg](QParam q, complex x) { return residual(f_q(x, q.value(), q, cfg).value, s_q(x, q, cfg).value); },
               cgrid, 1e-11});
  r.push_back({"fq_divisor", "F_q(x, t) = -sum_l (sum_{k|l} (x;q)_k) t^l",
               [cfg](QParam q, complex x) {
                 return max_over(lambert_t_values, [&](complex t) {
                   return residual(f_q(x, t, q, cfg).value, f_q_divisor_expansion(x, t, q, cfg).value);
                 });
               },
               small, 1e-10});
  r.push_back({"fq_xexp", "F_q(x, t) as a power series in x",
               [cfg](QParam q, complex x) {
                 return max_over(lambert_t_values, [&](complex t) {
                   return residual(f_q(x, t, q, cfg).value, f_q_x_expansion(x, t, q, cfg).value);
                 });
               },
               small, 1e-10});
  r.push_back({"qgauss_spec", "two q-Gauss specialisations, l = 1..15",
               [cfg](QParam q, complex p) {
                 auto const [a, b] = gauss_specialization_residual(as_index(p, 1), q, cfg);
                 return std::max(a, b);
               },
               index_grid(1, 15), 1e-11});
  r.push_back({"quad_transform", "the t = q^2 quadratic transformation, j = 1..10",
               [cfg](QParam q, complex p) {
                 auto const [a, b] = quadratic_transform_residual(as_index(p, 1), q, cfg);
                 return std::max(a, b);
               },
               index_grid(1, 10), 1e-11});
  r.push_back({"fq_qintegral", "F_q(x, p) = -p(1-x)/(1-p) int_0^1 G_q(qx, pt) d_p t",
               [cfg](QParam q, complex x) {
                 return max_over(lambert_t_values, [&](complex p) {
                   return residual(f_q(x, p, q, cfg).value, f_q_via_qintegral(x, p.real(), q, cfg).value);
                 });
               },
               small, 1e-9});
  r.push_back({"li2_specials", "Li_2(1;q) = 0, Li_2(0;q) = zeta_q(2), Li_2(q^{-n};q) = -sum k/(1-q^k)",
               [cfg](QParam q, complex p) {
                 std::size_t const n = as_index(p, 0);
                 if (n == 0)
                 {
                   return std::max(std::abs(li2q(1.0, q, cfg).value),
                                   residual(li2q(0.0, q, cfg).value, zeta_q(2, q, cfg).value));
                 }
                 double expected = 0.0;
                 double qk       = 1.0;
                 for (std::size_t k = 1; k <= n; ++k)
                 {
                   qk *= q.value();
                   expected -= static_cast<double>(k) / (1.0 - qk);
                 }
                 complex const x = std::pow(q.value(), -static_cast<double>(n));
                 return residual(li2q(x, q, cfg).value, expected);
               },
               index_grid(0, 10), 1e-10});
  r.push_back({"li2_qdiff", "Li_2(qx;q) - Li_2(x;q) = -x/(1-x) S_q(x)",
               [cfg](QParam q, complex x) { return li2q_qdiff_residual(x, q, cfg); }, cgrid, 1e-10});
  r.push_back({"li2_taylor", "Li_2(x;q) equals its Taylor series at 0",
               [cfg](QParam q, complex x) {
                 return residual(li2q(x, q, cfg).value, li2q_taylor(x, q, cfg).value);
               },
               cgrid, 1e-10});
  r.push_back({"li2_qintegral", "Li_2(x;q) = zeta_q(2) + 1/(1-q) int_0^x S_q(t)/(1-t) d_q t",
               [cfg](QParam q, complex x) {
                 return residual(li2q(x, q, cfg).value, li2q_via_qintegral(x, q, cfg).value);
               },
               {default_q_values, {0.0, 0.5, -0.5, 1.7, -2.0, {1.0, 1.0}, -3.0, {0.0, 2.5}}, {}}, 1e-9});
  r.push_back({"sumform_li", "summation formulas from Li_2(q^{-n};q), n = 0..6",
               [cfg](QParam q, complex p) { return sumform_li_residual(as_index(p, 0), q, cfg); },
               index_grid(0, 6), 1e-10});
  r.push_back({"zeta2_alt", "alternating series for zeta_q(2)",
               [cfg](QParam q, complex) {
                 return residual(zeta_q(2, q, cfg).value, zeta2_alternating(q, cfg).value);
               },
               {default_q_values, {0.0}, {}}, 1e-10});
  r.push_back({"zeta2_rearr", "sum n q^n/(1-q^n) = sum q^k/(1-q^k)^2",
               [cfg](QParam q, complex) { return zeta2_rearrangement_residual(q, cfg); },
               {default_q_values, {0.0}, {}}, 1e-11});
  r.push_back({"remainder", "tail of the alternating zeta_q(1) series as a 2phi1",
               [cfg](QParam q, complex p) { return remainder_relation_residual(as_index(p, 1), q, cfg); },
               index_grid(1, 8), 1e-11});
  r.push_back({"coeff_relation", "(q^n - 1) a_n = -sum_{p<n} b_p for the Taylor coefficients",
               [cfg](QParam q, complex p) { return coefficient_relation_residual(as_index(p, 1), q, cfg); },
               index_grid(1, 12), 1e-11});
  r.push_back({"growth_bounds", "(-rq;q)_inf - (q;q)_inf <= M(r) <= (-r;q)_inf zeta_q(1)",
               [cfg](QParam q, complex p) {
                 GrowthBounds const b = growth_bounds(p.real(), q, cfg);
                 return violation(b.lower, b.m, b.upper);
               },
               {{0.3, 0.5, 0.9}, {0.1, 1.0, 10.0, 100.0}, {}}, 1e-12});
  r.push_back({"dominated_bound", "q^k (1-q)^2/(1-q^k)^2 <= 1/k^2, k = 1..200",
               [](QParam q, complex) {
                 double       worst = 0.0;
                 double const qv    = q.value();
                 double       qk    = 1.0;
                 for (std::size_t k = 1; k <= 200; ++k)
                 {
                   qk *= qv;
                   double const ratio = (1.0 - qv) / (1.0 - qk);
                   double const kk    = static_cast<double>(k * k);
                   worst              = std::max(worst, qk * ratio * ratio * kk - 1.0);
                 }
                 return std::max(worst, 0.0);
               },
               {{0.3, 0.5, 0.9, 0.99}, {0.0}, {}}, 1e-12});
  r.push_back({"limit_probes",
               "(1-q) S_q(x) -> ln x and (1-q)^2 Li_2(x;q) -> Li_2(1-x) along q = 1 - 2^-i, i <= 12",
               [cfg](QParam, complex p) {
                 double const x     = p.real();
                 double       worst = 0.0;
                 if (x > 0.0)
                 {
                   worst = std::max(worst, qlog_limit_probe(x, 12, cfg).back());
                 }
                 if (std::abs(1.0 - x) <= 1.0 && x < 1.0)
                 {
                   worst = std::max(worst, dilog_limit_probe(x, 12, cfg).errors.back());
                 }
                 return worst;
               },
               {{1.0 - 1.0 / 4096.0}, {0.0, 0.5, 2.0}, {}}, 1e-2, true});
  return r;
}

}  // namespace detail

/// Every registered identity, in a fixed order.
inline std::vector<IdentityCase> const &registry_list()
{
  static std::vector<IdentityCase> const cases = detail::build_registry();
  return cases;
}

inline IdentityCase const &registry_lookup(std::string const &id)
{
  for (IdentityCase const &c : registry_list())
  {
    if (c.id == id)
    {
      return c;
    }
  }
  throw unknown_identity(id);
}

/// Evaluates one case over its grid; evaluation errors mark the case failed.
inline CaseResult run_case(IdentityCase const &c, GridSpec const &grid)
{
  CaseResult res;
  res.id            = c.id;
  res.informational = c.informational;
  res.tolerance     = c.tolerance;
  try
  {
    bool first = true;
    for (double const qv : grid.q_values)
    {
      QParam const         q(qv);
      std::vector<complex> pts = grid.points;
      for (int const p : grid.q_powers)
      {
        pts.emplace_back(std::pow(qv, static_cast<double>(p)));
      }
      for (complex const x : pts)
      {
        double const v = c.residual(q, x);
        if (first || !(v <= res.max_residual))
        {
          res.max_residual = v;
          res.argmax_q     = qv;
          res.argmax_point = x;
          first            = false;
        }
      }
    }
    res.pass = res.max_residual <= c.tolerance;
  }
  catch (std::exception const &e)
  {
    res.error        = e.what();
    res.max_residual = std::numeric_limits<double>::infinity();
    res.pass         = false;
  }
  return res;
}

/// Runs the selected cases (all when no selection is given).
///
/// A grid override replaces the q values, points and q powers of every
/// selected case, field by field where the override is nonempty.
inline IdentityReport run_checks(std::optional<std::vector<std::string>> const &selection = std::nullopt,
                                 std::optional<GridSpec> const &grid_override = std::nullopt)
{
  std::vector<IdentityCase const *> chosen;
  if (selection)
  {
    for (std::string const &id : *selection)
    {
      chosen.push_back(&registry_lookup(id));
    }
  }
  else
  {
    for (IdentityCase const &c : registry_list())
    {
      chosen.push_back(&c);
    }
  }
  IdentityReport report;
  for (IdentityCase const *c : chosen)
  {
    GridSpec grid = c->domain;
    if (grid_override)
    {
      if (!grid_override->q_values.empty())
      {
        grid.q_values = grid_override->q_values;
      }
      if (!grid_override->points.empty())
      {
        grid.points   = grid_override->points;
        grid.q_powers = grid_override->q_powers;
      }
      else if (!grid_override->q_powers.empty())
      {
        grid.q_powers = grid_override->q_powers;
      }
    }
    report.cases.push_back(run_case(*c, grid));
  }
  report.total  = report.cases.size();
  report.passed = static_cast<std::size_t>(
      std::count_if(report.cases.begin(), report.cases.end(), [](CaseResult const &r) { return r.pass; }));
  report.failed = report.total - report.passed;
  return report;
}

}  // namespace eulerq
