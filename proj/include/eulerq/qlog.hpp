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

// Euler's q-logarithm S_q(x) = -sum_{k>=1} q^k (x;q)_k / (1 - q^k).

#include "eulerq/config.hpp"
#include "eulerq/detail/summation.hpp"
#include "eulerq/jackson.hpp"
#include "eulerq/pochhammer.hpp"
#include "eulerq/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace eulerq {
namespace detail {

/// Generator maker for the defining series of S_q.
inline auto s_q_make(double q, complex x)
{
  return [q, x](auto tag) {
    using R = typename decltype(tag)::type;
    using C = Cx<R>;
    return [qr = R(q), poch = C(R(1)), xqk = C::from(x), qk = R(1)](std::size_t) mutable {
      poch *= one_minus(xqk);
      xqk  = xqk * qr;
      qk   = qk * qr;
      return poch * R(-qk / (R(1) - qk));
    };
  };
}

/// Number of q-difference steps that bring |x| down to at most `radius`.
inline std::size_t reduction_steps(complex x, double q, double radius)
{
  double const mag = std::abs(x);
  if (mag <= radius)
  {
    return 0;
  }
  auto m = static_cast<std::size_t>(std::ceil(std::log(mag / radius) / -std::log(q)));
  while (mag * std::pow(q, static_cast<double>(m)) > radius)
  {
    ++m;
  }
  return m;
}

/// Points beyond this radius are reduced through the q-difference equation.
inline constexpr double direct_radius = 2.0;

}  // namespace detail

/// The defining series of S_q, summed in whatever working precision its
/// cancellation requires.
inline SeriesValue s_q_series(complex x, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  return detail::sum_adaptive(detail::s_q_make(q.value(), x), {q.value(), std::nullopt, "s_q"}, cfg);
}

/// S_q(x) for any complex x.
///
/// For |x| > 2 the argument is first reduced with
/// S_q(x) = S_q(q^m x) + m - sum_{i=1}^m (q^i x;q)_inf, which avoids the
/// growth of (x;q)_k in the defining series.
inline SeriesValue s_q(complex x, QParam q, EvalConfig const &cfg = {})
{
  std::size_t const m = detail::reduction_steps(x, q.value(), detail::direct_radius);
  if (m == 0)
  {
    return s_q_series(x, q, cfg);
  }
  double const qv = q.value();
  SeriesValue  v  = s_q_series(x * std::pow(qv, static_cast<double>(m)), q, cfg);
  v.value += static_cast<double>(m);
  complex y = x;
  for (std::size_t i = 1; i <= m; ++i)
  {
    y *= qv;
    SeriesValue const p = qpochhammer_inf(y, q, cfg);
    v.value -= p.value;
    v.err_estimate += p.err_estimate;
    v.terms_used += p.terms_used;
  }
  return v;
}

/// Taylor coefficient of S_q at x = 0: coeff(0) = -zeta_q(1) and
/// coeff(j) = (-1)^{j-1} q^{j(j+1)/2} / ((1 - q^j)(q;q)_j).
inline double s_q_taylor_coeff(std::size_t j, QParam q, EvalConfig const &cfg = {})
{
  if (j == 0)
  {
    return -zeta_q(1, q, cfg).real();
  }
  double const qv = q.value();
  double       c  = 1.0;
  double       qk = 1.0;
  for (std::size_t k = 1; k <= j; ++k)
  {
    qk *= qv;
    c *= -qk / (1.0 - qk);
  }
  return -c / (1.0 - qk);
}

/// S_q by its Taylor series at 0.
inline SeriesValue s_q_taylor(complex x, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  SeriesValue v = detail::sum_adaptive(detail::alternating_make(q.value(), x, false),
                                       {q.value(), std::nullopt, "s_q_taylor"}, cfg);
  SeriesValue const z = zeta_q(1, q, cfg);
  v.value -= z.value;
  v.err_estimate += z.err_estimate;
  v.terms_used += z.terms_used;
  return v;
}

/// S_q(x) = -sum_{k>=1} (-1)^{k-1} q^{k(k+1)/2} (1 - x^k) / ((1 - q^k)(q;q)_k).
inline SeriesValue s_q_onemxk(complex x, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const qv   = q.value();
  auto         make = [qv, x](auto tag) {
    auto base = detail::alternating_make(qv, 1.0, false)(tag);
    using C   = detail::Cx<typename decltype(tag)::type>;
    return [base, xr = C::from(x), xk = C::from(1.0)](std::size_t i) mutable {
      xk *= xr;
      return -(base(i) * detail::one_minus(xk));
    };
  };
  return detail::sum_adaptive(make, {qv, std::nullopt, "s_q_onemxk"}, cfg);
}

/// dS_q/dx at x = 1, equal to sum_{k>=1} (-1)^{k-1} k q^{k(k+1)/2} / ((1 - q^k)(q;q)_k).
inline SeriesValue s_q_derivative_at_1(QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  return detail::sum_adaptive(detail::alternating_make(q.value(), 1.0, true),
                              {q.value(), std::nullopt, "s_q_derivative_at_1"}, cfg);
}

/// Arguments of the kernel G_q(x, t) = sum_{k>=0} t^k (x;q)_k, |t| < 1.
struct GKernel
{
  QParam  q;
  complex x;
  complex t;
};

namespace detail {

inline void require_unit_disk(complex t, char const *what)
{
  if (!(std::abs(t) < 1.0))
  {
    throw divergent_series(std::string(what) + " requires |t| < 1");
  }
}

}  // namespace detail

/// G_q(x, t) = sum_{k>=0} t^k (x;q)_k.
inline SeriesValue g_kernel(GKernel const &g, EvalConfig const &cfg = {})
{
  cfg.validate();
  detail::require_unit_disk(g.t, "g_kernel");
  double const qv   = g.q.value();
  auto         make = [qv, &g](auto tag) {
    using R = typename decltype(tag)::type;
    using C = detail::Cx<R>;
    return [qr = R(qv), tr = C::from(g.t), xqk = C::from(g.x), term = C(R(1))](std::size_t k) mutable {
      if (k > 0)
      {
        term  = term * detail::one_minus(xqk) * tr;
        xqk   = xqk * qr;
      }
      return term;
    };
  };
  double const ratio = std::min(std::max(std::abs(g.t), qv), 0.999999);
  return detail::sum_adaptive(make, {ratio, std::nullopt, "g_kernel"}, cfg);
}

/// G_q(x, t) = sum_{j>=0} (-xt)^j q^{j(j-1)/2} / (t;q)_{j+1}.
inline SeriesValue g_kernel_dual(GKernel const &g, EvalConfig const &cfg = {})
{
  cfg.validate();
  detail::require_unit_disk(g.t, "g_kernel_dual");
  double const qv   = g.q.value();
  auto         make = [qv, &g](auto tag) {
    using R = typename decltype(tag)::type;
    using C = detail::Cx<R>;
    C const t = C::from(g.t);
    return [qr = R(qv), w = -(C::from(g.x) * t), tqj = t, qj = R(1), term = C{}](std::size_t j) mutable {
      if (j == 0)
      {
        term = C(R(1)) / detail::one_minus(tqj);
      }
      else
      {
        // ratio: (-xt) q^{j-1} / (1 - t q^j)
        tqj  = tqj * qr;
        term = term * w * qj / detail::one_minus(tqj);
        qj   = qj * qr;
      }
      return term;
    };
  };
  return detail::sum_adaptive(make, {qv, std::nullopt, "g_kernel_dual"}, cfg);
}

/// S_q(x) = -q (1 - x) / (1 - q) * int_0^1 G_q(qx, qt) d_q t.
inline SeriesValue s_q_via_qintegral(complex x, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  if (x == 1.0)
  {
    return {0.0, 0.0, 1};
  }
  double const qv = q.value();
  SeriesValue  v  = jackson_integrate(
      [&](complex t) { return g_kernel({q, qv * x, qv * t}, cfg); }, 1.0, q, cfg);
  return scaled(v, -qv * (1.0 - x) / (1.0 - qv));
}

/// |S_q(x/q) - S_q(x) - 1 + (x;q)_inf|, normalised as in residual().
///
/// Both sides use the defining series so that the check does not depend on
/// the q-difference reduction inside s_q().
inline double qrecur_residual(complex x, QParam q, EvalConfig const &cfg = {})
{
  complex const a = s_q_series(x / q.value(), q, cfg).value;
  complex const b = s_q_series(x, q, cfg).value;
  complex const p = qpochhammer_inf(x, q, cfg).value;
  return residual(a - b, 1.0 - p, std::max({std::abs(a), std::abs(b), std::abs(p)}));
}

/// Residual of (1 - qx) S_q(q^2 x) - (2 - qx) S_q(qx) + S_q(x) = qx.
inline double second_order_residual(complex x, QParam q, EvalConfig const &cfg = {})
{
  double const  qv = q.value();
  complex const s2 = s_q_series(qv * qv * x, q, cfg).value;
  complex const s1 = s_q_series(qv * x, q, cfg).value;
  complex const s0 = s_q_series(x, q, cfg).value;
  complex const a  = (1.0 - qv * x) * s2;
  complex const b  = (2.0 - qv * x) * s1;
  return residual(a - b + s0, qv * x, std::max({std::abs(a), std::abs(b), std::abs(s0)}));
}

namespace detail {

/// -n + (q;q)_inf sum_{k=0}^{n-1} 1/(q;q)_k, valid for n >= 0.
inline SeriesValue s_q_at_qn_closed(std::size_t n, QParam q, EvalConfig const &cfg)
{
  SeriesValue  p   = qpochhammer_inf(q.value(), q, cfg);
  double const qv  = q.value();
  double       inv = 1.0;  // 1/(q;q)_k
  double       sum = 0.0;
  double       qk  = 1.0;
  for (std::size_t k = 0; k < n; ++k)
  {
    if (k > 0)
    {
      qk *= qv;
      inv /= 1.0 - qk;
    }
    sum += inv;
  }
  SeriesValue v = scaled(p, sum);
  v.value -= static_cast<double>(n);
  v.err_estimate += 4.0 * unit_roundoff<double>::value * (static_cast<double>(n) + std::abs(v.value));
  return v;
}

}  // namespace detail

/// S_q(q^n) = -n + (q;q)_inf sum_{k=0}^{n-1} 1/(q;q)_k, n >= 1.
inline SeriesValue s_q_at_qn(std::size_t n, QParam q, EvalConfig const &cfg = {})
{
  if (n == 0)
  {
    throw domain_error("s_q_at_qn: n must be positive");
  }
  return detail::s_q_at_qn_closed(n, q, cfg);
}

/// Residual of y_n (1 - q^{n-1}) - (2 - q^{n-1}) y_{n-1} + y_{n-2} = q^{n-1},
/// y_n = S_q(q^n) from the closed form; n >= 2.
inline double second_order_sequence_residual(std::size_t n, QParam q, EvalConfig const &cfg = {})
{
  if (n < 2)
  {
    throw domain_error("second_order_sequence_residual: n must be at least 2");
  }
  double const  qn1 = std::pow(q.value(), static_cast<double>(n - 1));
  complex const y0  = detail::s_q_at_qn_closed(n, q, cfg).value;
  complex const y1  = detail::s_q_at_qn_closed(n - 1, q, cfg).value;
  complex const y2  = detail::s_q_at_qn_closed(n - 2, q, cfg).value;
  complex const a   = y0 * (1.0 - qn1);
  complex const b   = (2.0 - qn1) * y1;
  return residual(a - b + y2, qn1, std::max({std::abs(a), std::abs(b), std::abs(y2)}));
}

/// Residuals of the four summation formulas obtained from S_q(q^{-n}) = n and
/// the closed form of S_q(q^n).
struct SummationResiduals
{
  double finite_at_q_minus_n;       // sum_{k=1}^n (q^{-n};q)_k q^k/(1-q^k) = -n
  double alternating_at_q_minus_n;  // alternating series in q^{-nk} = n + zeta_q(1)
  double series_at_q_n;             // sum (q^n;q)_k q^k/(1-q^k) = n - sum (q^{k+1};q)_inf
  double alternating_at_q_n;        // alternating series in q^{nk}

  double max() const
  {
    return std::max({finite_at_q_minus_n, alternating_at_q_minus_n, series_at_q_n, alternating_at_q_n});
  }
};

inline SummationResiduals summation_residuals(std::size_t n, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const qv = q.value();
  double const nd = static_cast<double>(n);
  complex const zeta1 = zeta_q(1, q, cfg).value;

  // sum_{k=0}^{n-1} (q^{k+1};q)_inf
  complex tail_products = 0.0;
  for (std::size_t k = 0; k < n; ++k)
  {
    tail_products += qpochhammer_inf(std::pow(qv, static_cast<double>(k + 1)), q, cfg).value;
  }

  // (q^{-n};q)_k q^k / (1 - q^k) for k = 1..n in working precision
  auto finite_make = [qv, n](auto tag) {
    using R = typename decltype(tag)::type;
    using C = detail::Cx<R>;
    R const qr = R(qv);
    return [qr, a = C(detail::pow_int(qr, -static_cast<long long>(n))), poch = C(R(1)),
            qk = R(1)](std::size_t) mutable {
      poch *= detail::one_minus(a);
      a  = a * qr;
      qk = qk * qr;
      return poch * R(qk / (R(1) - qk));
    };
  };
  // alternating series with weight w^k, w = q^{+-n}, formed in working precision
  auto alternating = [qv, n](long long sign) {
    return [qv, n, sign](auto tag) {
      using R  = typename decltype(tag)::type;
      R const w = detail::pow_int(R(qv), sign * static_cast<long long>(n));
      return [base = detail::alternating_make(qv, 1.0, false)(tag), w, wk = R(1)](std::size_t i) mutable {
        wk = wk * w;
        return base(i) * wk;
      };
    };
  };

  SummationResiduals r{};
  SeriesValue const f1 = detail::sum_adaptive(finite_make, {qv, n, "sumform1"}, cfg);
  r.finite_at_q_minus_n = residual(f1.value, -nd);
  SeriesValue const a1 = detail::sum_adaptive(alternating(-1), {qv, std::nullopt, "sumform1"}, cfg);
  r.alternating_at_q_minus_n = residual(a1.value, nd + zeta1);
  SeriesValue const s2 = s_q_series(std::pow(qv, nd), q, cfg);
  r.series_at_q_n = residual(-s2.value, nd - tail_products);
  SeriesValue const a2 = detail::sum_adaptive(alternating(1), {qv, std::nullopt, "sumform2"}, cfg);
  r.alternating_at_q_n = residual(a2.value, -nd + zeta1 + tail_products);
  return r;
}

/// Bounds around M(r) = sum q^k (-r;q)_k / (1 - q^k), the maximum of |S_q| on |x| <= r.
struct GrowthBounds
{
  double lower;  // (-rq;q)_inf - (q;q)_inf
  double m;      // M(r)
  double upper;  // (-r;q)_inf zeta_q(1)

  bool holds() const
  {
    return lower <= m && m <= upper;
  }
};

inline GrowthBounds growth_bounds(double r, QParam q, EvalConfig const &cfg = {})
{
  if (!(r > 0.0))
  {
    throw domain_error("growth_bounds: r must be positive");
  }
  cfg.validate();
  double const qv   = q.value();
  double       poch = 1.0;
  double       qk   = 1.0;
  auto         gen  = [&](std::size_t) {
    poch *= 1.0 + r * qk;
    qk *= qv;
    return detail::Cx<double>(poch * qk / (1.0 - qk));
  };
  GrowthBounds b{};
  b.m     = detail::sum_series(gen, {qv, std::nullopt, "growth M(r)"}, cfg).real();
  b.lower = qpochhammer_inf(-r * qv, q, cfg).real() - qpochhammer_inf(qv, q, cfg).real();
  b.upper = qpochhammer_inf(-r, q, cfg).real() * zeta_q(1, q, cfg).real();
  return b;
}

inline bool growth_bound_check(double r, QParam q, EvalConfig const &cfg = {})
{
  return growth_bounds(r, q, cfg).holds();
}

/// Largest index of the probe sequence q_i = 1 - 2^{-i}.
inline constexpr std::size_t max_probe_index = 20;

namespace detail {

inline EvalConfig probe_config(EvalConfig cfg, double q)
{
  auto const needed = static_cast<std::size_t>(64.0 / (1.0 - q));
  cfg.max_terms     = std::max(cfg.max_terms, needed);
  return cfg;
}

inline double probe_q(std::size_t i)
{
  return 1.0 - std::ldexp(1.0, -static_cast<int>(i));
}

}  // namespace detail

/// |(1 - q_i) S_{q_i}(x) - ln x| for q_i = 1 - 2^{-i}, i = 1..m.
///
/// The term caps are raised to 64/(1 - q_i); indices past 20 are refused.
inline std::vector<double> qlog_limit_probe(double x, std::size_t m, EvalConfig const &cfg = {})
{
  if (!(x > 0.0))
  {
    throw domain_error("qlog_limit_probe: x must be positive");
  }
  if (m > max_probe_index)
  {
    throw max_terms_exceeded("qlog_limit_probe: q_i = 1 - 2^-i is limited to i <= 20");
  }
  std::vector<double> errors;
  for (std::size_t i = 1; i <= m; ++i)
  {
    double const qi = detail::probe_q(i);
    double const s  = s_q(x, QParam(qi), detail::probe_config(cfg, qi)).real();
    errors.push_back(std::abs((1.0 - qi) * s - std::log(x)));
  }
  return errors;
}

}  // namespace eulerq
