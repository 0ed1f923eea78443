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

// The q-dilogarithm Li_2(x;q) = sum_{k>=1} q^k (x;q)_k / (1 - q^k)^2 and the
// classical dilogarithm.

#include "eulerq/config.hpp"
#include "eulerq/detail/summation.hpp"
#include "eulerq/hypergeometric.hpp"
#include "eulerq/jackson.hpp"
#include "eulerq/pochhammer.hpp"
#include "eulerq/qlog.hpp"
#include "eulerq/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace eulerq {

/// The defining series of Li_2(x;q).
inline SeriesValue li2q_series(complex x, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const qv   = q.value();
  auto         make = [qv, x](auto tag) {
    using R = typename decltype(tag)::type;
    using C = detail::Cx<R>;
    return [qr = R(qv), poch = C(R(1)), xqk = C::from(x), qk = R(1)](std::size_t) mutable {
      poch *= detail::one_minus(xqk);
      xqk   = xqk * qr;
      qk    = qk * qr;
      R const d = R(1) - qk;
      return poch * R(qk / (d * d));
    };
  };
  return detail::sum_adaptive(make, {qv, std::nullopt, "li2q"}, cfg);
}

/// Li_2(x;q) for any complex x.
///
/// For |x| > 2 the argument is reduced with
/// Li_2(x;q) = Li_2(q^m x;q) + sum_{i<m} y_i S_q(y_i) / (1 - y_i), y_i = q^i x.
inline SeriesValue li2q(complex x, QParam q, EvalConfig const &cfg = {})
{
  std::size_t const m = detail::reduction_steps(x, q.value(), detail::direct_radius);
  if (m == 0)
  {
    return li2q_series(x, q, cfg);
  }
  double const qv = q.value();
  SeriesValue  v  = li2q_series(x * std::pow(qv, static_cast<double>(m)), q, cfg);
  complex      y  = x;
  for (std::size_t i = 0; i < m; ++i, y *= qv)
  {
    SeriesValue const s = scaled(s_q(y, q, cfg), y / (1.0 - y));
    v.value += s.value;
    v.err_estimate += s.err_estimate;
    v.terms_used += s.terms_used;
  }
  return v;
}

/// Residual of Li_2(qx;q) - Li_2(x;q) = -x / (1 - x) S_q(x).
///
/// At x = 1 the right side is replaced by its limit dS_q/dx(1).
inline double li2q_qdiff_residual(complex x, QParam q, EvalConfig const &cfg = {})
{
  complex const a = li2q_series(q.value() * x, q, cfg).value;
  complex const b = li2q_series(x, q, cfg).value;
  complex       rhs;
  if (std::abs(1.0 - x) < detail::zero_factor_threshold)
  {
    rhs = s_q_derivative_at_1(q, cfg).value;
  }
  else
  {
    rhs = -x / (1.0 - x) * s_q_series(x, q, cfg).value;
  }
  return residual(a - b, rhs, std::max(std::abs(a), std::abs(b)));
}

/// Li_2(x;q) = zeta_q(2) + 1/(1 - q) int_0^x S_q(t) / (1 - t) d_q t.
///
/// Undefined when a node x q^k equals 1, i.e. at x = q^{-k}.
inline SeriesValue li2q_via_qintegral(complex x, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  if (detail::terminating_index(x, q.value()))
  {
    throw domain_error("li2q_via_qintegral: a node x q^k equals 1");
  }
  SeriesValue const z = zeta_q(2, q, cfg);
  if (x == 0.0)
  {
    return z;
  }
  SeriesValue v = jackson_integrate(
      [&](complex t) {
        if (std::abs(1.0 - t) < detail::zero_factor_threshold)
        {
          throw domain_error("li2q_via_qintegral: a node x q^k equals 1");
        }
        return scaled(s_q(t, q, cfg), 1.0 / (1.0 - t));
      },
      x, q, cfg);
  v = scaled(v, 1.0 / (1.0 - q.value()));
  v.value += z.value;
  v.err_estimate += z.err_estimate;
  v.terms_used += z.terms_used;
  return v;
}

/// Taylor coefficient of Li_2(.;q) at 0: coeff(0) = zeta_q(2) and
/// coeff(j) = (-1)^j q^{j(j+1)/2} / (1 - q^j)^2 2phi1(q^j, q^j; q^{j+1}; q, q).
inline double li2q_taylor_coeff(std::size_t j, QParam q, EvalConfig const &cfg = {})
{
  if (j == 0)
  {
    return zeta_q(2, q, cfg).real();
  }
  double const qv  = q.value();
  double       c   = 1.0;
  double       qk  = 1.0;
  for (std::size_t k = 1; k <= j; ++k)
  {
    qk *= qv;
    c *= -qk;
  }
  double const d = 1.0 - qk;
  return c / (d * d) * detail::phi_jj(qv, j, 4.0 * detail::unit_roundoff<double>::value, cfg.max_terms);
}

/// Li_2(x;q) by its Taylor series at 0.
inline SeriesValue li2q_taylor(complex x, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  SeriesValue v = detail::sum_adaptive(detail::dilog_alternating_make(q.value(), x, cfg.max_terms),
                                       {q.value(), std::nullopt, "li2q_taylor"}, cfg);
  SeriesValue const z = zeta_q(2, q, cfg);
  v.value = z.value - v.value;
  v.err_estimate += z.err_estimate;
  v.terms_used += z.terms_used;
  return v;
}

/// Largest residual in the chain
/// sum_{k=1}^n (q^{-n};q)_k q^k / (1 - q^k)^2 = -sum_{k=1}^n k / (1 - q^k)
///   = zeta_q(2) + sum_{j>=1} (-1)^j q^{j(j+1)/2} q^{-nj} / (1 - q^j)^2 2phi1(q^j, q^j; q^{j+1}; q, q).
inline double sumform_li_residual(std::size_t n, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const qv = q.value();

  auto finite_make = [qv, n](auto tag) {
    using R = typename decltype(tag)::type;
    using C = detail::Cx<R>;
    R const qr = R(qv);
    return [qr, a = C(detail::pow_int(qr, -static_cast<long long>(n))), poch = C(R(1)),
            qk = R(1)](std::size_t) mutable {
      poch *= detail::one_minus(a);
      a  = a * qr;
      qk = qk * qr;
      R const d = R(1) - qk;
      return poch * R(qk / (d * d));
    };
  };
  complex const finite = detail::sum_adaptive(finite_make, {qv, n, "sumform_li"}, cfg).value;

  double closed = 0.0;
  double qk     = 1.0;
  for (std::size_t k = 1; k <= n; ++k)
  {
    qk *= qv;
    closed -= static_cast<double>(k) / (1.0 - qk);
  }

  complex const alt = zeta_q(2, q, cfg).value -
                      detail::sum_adaptive(detail::dilog_alternating_qpow_make(qv, -static_cast<long long>(n),
                                                                               cfg.max_terms),
                                           {qv, std::nullopt, "sumform_li"}, cfg)
                          .value;
  return std::max({residual(finite, closed), residual(closed, alt), residual(finite, alt)});
}

/// Residual of
/// (-1)^{n-1} q^{n(n+1)/2} / (1 - q^n) 2phi1(q^n, q^n; q^{n+1}; q, q)
///   = zeta_q(1) + sum_{j=1}^{n-1} (-1)^j q^{j(j+1)/2} / ((1 - q^j)(q;q)_j),
/// the tail of the alternating series for zeta_q(1) after n - 1 terms.
inline double remainder_relation_residual(std::size_t n, QParam q, EvalConfig const &cfg = {})
{
  if (n == 0)
  {
    throw domain_error("remainder_relation_residual: n must be positive");
  }
  cfg.validate();
  double const qv  = q.value();
  double       c   = 1.0;  // (-1)^{n-1} q^{n(n+1)/2}, built up to n
  double       qk  = 1.0;
  double       rhs = zeta_q(1, q, cfg).real();
  double       cj  = 1.0;  // (-1)^j q^{j(j+1)/2} / (q;q)_j
  for (std::size_t j = 1; j <= n; ++j)
  {
    qk *= qv;
    c = (j == 1) ? qv : -c * qk;
    if (j < n)
    {
      cj *= -qk / (1.0 - qk);
      rhs += cj / (1.0 - qk);
    }
  }
  double const lhs =
      c / (1.0 - qk) * detail::phi_jj(qv, n, 4.0 * detail::unit_roundoff<double>::value, cfg.max_terms);
  return residual(lhs, rhs);
}

/// Residual of (q^n - 1) a_n = -sum_{p<n} b_p, with a_n and b_p the Taylor
/// coefficients of Li_2(.;q) and S_q.
inline double coefficient_relation_residual(std::size_t n, QParam q, EvalConfig const &cfg = {})
{
  if (n == 0)
  {
    throw domain_error("coefficient_relation_residual: n must be positive");
  }
  double const a   = li2q_taylor_coeff(n, q, cfg);
  double       rhs = 0.0;
  for (std::size_t p = 0; p < n; ++p)
  {
    rhs -= s_q_taylor_coeff(p, q, cfg);
  }
  return residual((std::pow(q.value(), static_cast<double>(n)) - 1.0) * a, rhs);
}

namespace detail {

inline SeriesValue li2_power_series(complex z, EvalConfig const &cfg)
{
  complex zn  = 1.0;
  auto    gen = [&](std::size_t i) {
    double const n = static_cast<double>(i + 1);
    zn *= z;
    return Cx<double>::from(zn / (n * n));
  };
  double const ratio = std::min(std::abs(z), 0.999999);
  return sum_series(gen, {ratio, std::nullopt, "classical_li2"}, cfg);
}

/// Li_2(z) = sum_{k>=0} B_k u^{k+1} / (k+1)!, u = -ln(1 - z), via
/// B_{2k} / (2k+1)! = (-1)^{k+1} 2 zeta(2k) / ((2 pi)^{2k} (2k+1)).
inline SeriesValue li2_bernoulli_series(complex z, EvalConfig const &cfg)
{
  complex const u   = -std::log(1.0 - z);
  complex const u2  = u * u;
  double const  tpi = 2.0 * std::numbers::pi;
  // B_0 and B_1 terms
  complex const head = u - u2 / 4.0;
  complex       up   = u;                 // u^{2k+1}
  double        s    = 1.0 / (tpi * tpi);  // (2 pi)^{-2k}
  auto          gen  = [&](std::size_t i) {
    double const k = static_cast<double>(i + 1);
    up *= u2;
    if (i > 0)
    {
      s /= tpi * tpi;
    }
    double const sign = (i % 2 == 0) ? 1.0 : -1.0;
    double const coef = sign * 2.0 * std::riemann_zeta(2.0 * k) * s / (2.0 * k + 1.0);
    return Cx<double>::from(coef * up);
  };
  double const ratio = std::min(std::norm(u) / (tpi * tpi), 0.999999);
  SeriesValue  v     = sum_series(gen, {ratio, std::nullopt, "classical_li2"}, cfg);
  v.value += head;
  return v;
}

}  // namespace detail

/// The classical dilogarithm sum_{n>=1} z^n / n^2 on |z| <= 1.
///
/// Away from the origin the series is accelerated by the reflection
/// Li_2(z) = pi^2/6 - ln z ln(1 - z) - Li_2(1 - z) near z = 1, and by the
/// Bernoulli series in -ln(1 - z) elsewhere.
inline SeriesValue classical_li2(complex z, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const mag = std::abs(z);
  if (mag > 1.0 + 1e-15)
  {
    throw domain_error("classical_li2: requires |z| <= 1");
  }
  double const zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  if (z == 1.0)
  {
    return {zeta2, 0.0, 1};
  }
  if (mag <= 0.5)
  {
    return detail::li2_power_series(z, cfg);
  }
  if (std::abs(1.0 - z) <= 0.5)
  {
    SeriesValue v = detail::li2_power_series(1.0 - z, cfg);
    v.value       = zeta2 - std::log(z) * std::log(1.0 - z) - v.value;
    return v;
  }
  return detail::li2_bernoulli_series(z, cfg);
}

/// q^k (1 - q)^2 / (1 - q^k)^2 <= 1/k^2 for k = 1..kmax.
inline bool dominated_bound_holds(QParam q, std::size_t kmax = 200)
{
  double const qv = q.value();
  double       qk = 1.0;
  for (std::size_t k = 1; k <= kmax; ++k)
  {
    qk *= qv;
    double const r  = (1.0 - qv) / (1.0 - qk);
    double const kd = static_cast<double>(k);
    if (qk * r * r > 1.0 / (kd * kd))
    {
      return false;
    }
  }
  return true;
}

struct DilogProbe
{
  /// |(1 - q_i)^2 Li_2(x;q_i) - Li_2(1 - x)| for q_i = 1 - 2^{-i}.
  std::vector<double> errors;
  /// Whether |q^k (1 - q)^2 (x;q)_k / (1 - q^k)^2| <= 1/k^2, k = 1..200, at every q_i.
  bool termwise_bound_holds = true;
};

/// The q -> 1 limit of (1 - q)^2 Li_2(x;q) towards Li_2(1 - x), |1 - x| <= 1.
inline DilogProbe dilog_limit_probe(double x, std::size_t m, EvalConfig const &cfg = {})
{
  if (!(std::abs(1.0 - x) <= 1.0))
  {
    throw domain_error("dilog_limit_probe: requires |1 - x| <= 1");
  }
  if (m > max_probe_index)
  {
    throw max_terms_exceeded("dilog_limit_probe: q_i = 1 - 2^-i is limited to i <= 20");
  }
  double const target = classical_li2(1.0 - x, cfg).real();
  DilogProbe   probe;
  for (std::size_t i = 1; i <= m; ++i)
  {
    double const qi = detail::probe_q(i);
    QParam const q(qi);
    double const li = li2q(x, q, detail::probe_config(cfg, qi)).real();
    probe.errors.push_back(std::abs((1.0 - qi) * (1.0 - qi) * li - target));

    double qk = 1.0;
    double pk = 1.0;
    for (std::size_t k = 1; k <= 200; ++k)
    {
      pk *= 1.0 - x * qk;
      qk *= qi;
      double const r  = (1.0 - qi) / (1.0 - qk);
      double const kd = static_cast<double>(k);
      if (qk * r * r * std::abs(pk) > 1.0 / (kd * kd))
      {
        probe.termwise_bound_holds = false;
      }
    }
  }
  return probe;
}

}  // namespace eulerq
