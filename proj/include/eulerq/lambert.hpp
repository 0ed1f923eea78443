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

// The Lambert series F_q(x, t) = -sum_{k>=1} (x;q)_k t^k / (1 - t^k), |t| < 1.

#include "eulerq/config.hpp"
#include "eulerq/detail/summation.hpp"
#include "eulerq/hypergeometric.hpp"
#include "eulerq/jackson.hpp"
#include "eulerq/pochhammer.hpp"
#include "eulerq/qlog.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace eulerq {
namespace detail {

inline double lambert_ratio(complex t, double q)
{
  return std::min(std::max(std::abs(t), q), 0.999999);
}

}  // namespace detail

/// F_q(x, t) by its defining series. F_q(x, q) = S_q(x).
inline SeriesValue f_q(complex x, complex t, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  detail::require_unit_disk(t, "f_q");
  double const qv   = q.value();
  auto         make = [qv, x, t](auto tag) {
    using R = typename decltype(tag)::type;
    using C = detail::Cx<R>;
    return [qr = R(qv), tr = C::from(t), xqk = C::from(x), poch = C(R(1)), tk = C(R(1))](std::size_t) mutable {
      poch *= detail::one_minus(xqk);
      xqk = xqk * qr;
      tk *= tr;
      return -(poch * tk / detail::one_minus(tk));
    };
  };
  return detail::sum_adaptive(make, {detail::lambert_ratio(t, qv), std::nullopt, "f_q"}, cfg);
}

/// F_q(x, t) = -sum_{l>=1} (sum_{k | l} (x;q)_k) t^l.
inline SeriesValue f_q_divisor_expansion(complex x, complex t, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  detail::require_unit_disk(t, "f_q_divisor_expansion");
  double const qv   = q.value();
  auto         make = [qv, x, t](auto tag) {
    using R = typename decltype(tag)::type;
    using C = detail::Cx<R>;
    // poch[k-1] = (x;q)_k
    return [qr = R(qv), tr = C::from(t), xqk = C::from(x), poch = std::vector<C>{}, tl = C(R(1))](
               std::size_t i) mutable {
      std::size_t const l    = i + 1;
      C const           prev = poch.empty() ? C(R(1)) : poch.back();
      poch.push_back(prev * detail::one_minus(xqk));
      xqk = xqk * qr;
      tl *= tr;
      C divisor_sum{};
      for (std::size_t k = 1; k * k <= l; ++k)
      {
        if (l % k == 0)
        {
          divisor_sum += poch[k - 1];
          if (k * k != l)
          {
            divisor_sum += poch[l / k - 1];
          }
        }
      }
      return -(divisor_sum * tl);
    };
  };
  return detail::sum_adaptive(make, {detail::lambert_ratio(t, qv), std::nullopt, "f_q_divisor_expansion"},
                              cfg);
}

namespace detail {

/// sum_{n>=1} t^{nl} / (t^n;q)_{l+1} in working precision R, relative accuracy rel_tol.
template <class R>
Cx<R> x_expansion_inner(Cx<R> const &t, R const &q, std::size_t l, double rel_tol, std::size_t max_terms)
{
  using C          = Cx<R>;
  C const    tl    = pow_int(t, static_cast<long long>(l));
  double const rho = std::pow(magnitude(t), static_cast<double>(l));
  C          tn    = t;   // t^n
  C          tnl   = tl;  // t^{nl}
  C          sum{};
  for (std::size_t n = 1; n <= max_terms; ++n)
  {
    C den(R(1));
    C f = tn;
    for (std::size_t j = 0; j <= l; ++j)
    {
      C const factor = one_minus(f);
      if (is_zero(factor))
      {
        throw pole_error("f_q_x_expansion: (t^n;q)_inf vanishes");
      }
      den *= factor;
      f = f * q;
    }
    C const term = tnl / den;
    sum += term;
    if (magnitude(term) <= rel_tol * (1.0 - rho) * magnitude(sum))
    {
      return sum;
    }
    tn *= t;
    tnl *= tl;
  }
  throw max_terms_exceeded("f_q_x_expansion: inner series did not converge");
}

}  // namespace detail

/// F_q(x, t) as a power series in x:
/// -sum_k t^k/(1 - t^k) - sum_{l>=1} (-x)^l q^{l(l-1)/2} sum_{n>=1} t^{nl} / (t^n;q)_{l+1}.
///
/// The inner quotient (t^n q^{l+1};q)_inf / (t^n;q)_inf is evaluated as the
/// equal finite product 1/(t^n;q)_{l+1}.
inline SeriesValue f_q_x_expansion(complex x, complex t, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  detail::require_unit_disk(t, "f_q_x_expansion");
  double const qv   = q.value();
  auto         make = [qv, x, t, &cfg](auto tag) {
    using R = typename decltype(tag)::type;
    using C = detail::Cx<R>;
    double const inner_tol = 4.0 * detail::unit_roundoff<R>::value;
    return [qr = R(qv), mx = -C::from(x), tr = C::from(t), coeff = C(R(1)), ql = R(1), inner_tol,
            max_terms = cfg.max_terms](std::size_t i) mutable {
      std::size_t const l = i + 1;
      // coeff = (-x)^l q^{l(l-1)/2}; ql = q^{l-1}
      coeff = coeff * mx * ql;
      ql    = ql * qr;
      return -(coeff * detail::x_expansion_inner(tr, qr, l, inner_tol, max_terms));
    };
  };
  SeriesValue v = detail::sum_adaptive(make, {qv, std::nullopt, "f_q_x_expansion"}, cfg);
  SeriesValue const lambert = f_q(0.0, t, q, cfg);
  v.value += lambert.value;
  v.err_estimate += lambert.err_estimate;
  v.terms_used += lambert.terms_used;
  return v;
}

/// Residuals of the two q-Gauss specialisations
/// sum_{n>=1} q^{nl} (q^{l+n+1};q)_inf / (q^n;q)_inf = q^l / ((1 - q^l)(q;q)_l) and
/// sum_{n>=1} (q;q)_{n-1} q^{nl} / (q^{l+1};q)_n = q^l / (1 - q^l).
inline std::pair<double, double> gauss_specialization_residual(std::size_t l, QParam q,
                                                               EvalConfig const &cfg = {})
{
  if (l == 0)
  {
    throw domain_error("gauss_specialization_residual: l must be positive");
  }
  cfg.validate();
  double const qv = q.value();
  double const ql = std::pow(qv, static_cast<double>(l));

  double qn   = 1.0;
  auto   gen1 = [&](std::size_t) {
    qn *= qv;
    complex const num = qpochhammer_inf(ql * qv * qn, q, cfg).value;
    complex const den = qpochhammer_inf(qn, q, cfg).value;
    return detail::Cx<double>::from(std::pow(qn, static_cast<double>(l)) * num / den);
  };
  SeriesValue const lhs1 = detail::sum_series(gen1, {ql, std::nullopt, "gauss_specialization"}, cfg);
  double const rhs1 = ql / ((1.0 - ql) * qpochhammer(qv, q, l).real());

  double ratio = 1.0;  // (q;q)_{n-1} / (q^{l+1};q)_n
  double qnl   = 1.0;
  double qk    = 1.0;  // q^{n-1}
  auto   gen2  = [&](std::size_t i) {
    if (i > 0)
    {
      ratio *= 1.0 - qk * qv;
      qk *= qv;
    }
    ratio /= 1.0 - ql * qv * qk;
    qnl *= ql;
    return detail::Cx<double>(ratio * qnl);
  };
  SeriesValue const lhs2 = detail::sum_series(gen2, {ql, std::nullopt, "gauss_specialization"}, cfg);
  double const rhs2 = ql / (1.0 - ql);
  return {residual(lhs1.value, rhs1), residual(lhs2.value, rhs2)};
}

namespace detail {

/// 2phi1(q^j, -q^j; -q^{j+1}; q, q^2).
inline SeriesValue quadratic_rhs(std::size_t j, QParam q, EvalConfig const &cfg)
{
  double const qv = q.value();
  double const qj = std::pow(qv, static_cast<double>(j));
  return phi_eval({{qj, -qj}, {-qj * qv}, q, qv * qv}, cfg);
}

/// (1 - q^{2j}) / (q^2;q)_{j+1} 3phi2(q^2, q^2, q^3; q^{j+3}, q^{j+4}; q^2, z).
inline SeriesValue quadratic_lhs(std::size_t j, QParam q, complex z, EvalConfig const &cfg)
{
  double const qv  = q.value();
  double const qj  = std::pow(qv, static_cast<double>(j));
  double const q2  = qv * qv;
  SeriesValue  phi = phi_eval({{q2, q2, q2 * qv}, {qj * q2 * qv, qj * q2 * q2}, QParam(q2), z}, cfg);
  return scaled(phi, (1.0 - qj * qj) / qpochhammer(q2, q, j + 1));
}

}  // namespace detail

/// Residuals of the quadratic transformation at t = q^2:
/// first sum_{n>=1} q^{2nj} (q^{2n+j+1};q)_inf / (q^{2n};q)_inf
///         = q^{2j} / (1 - q^{2j}) 2phi1(q^j, -q^j; -q^{j+1}; q, q^2),
/// then (1 - q^{2j}) / (q^2;q)_{j+1} 3phi2(q^2, q^2, q^3; q^{j+3}, q^{j+4}; q^2, q^{2j})
///         = 2phi1(q^j, -q^j; -q^{j+1}; q, q^2).
inline std::pair<double, double> quadratic_transform_residual(std::size_t j, QParam q,
                                                              EvalConfig const &cfg = {})
{
  if (j == 0)
  {
    throw domain_error("quadratic_transform_residual: j must be positive");
  }
  cfg.validate();
  double const qv  = q.value();
  double const qj  = std::pow(qv, static_cast<double>(j));
  double const q2j = qj * qj;

  double q2n = 1.0;
  auto   gen = [&](std::size_t) {
    q2n *= qv * qv;
    complex const num = qpochhammer_inf(q2n * qj * qv, q, cfg).value;
    complex const den = qpochhammer_inf(q2n, q, cfg).value;
    return detail::Cx<double>::from(std::pow(q2n, static_cast<double>(j)) * num / den);
  };
  SeriesValue const series = detail::sum_series(gen, {q2j, std::nullopt, "quadratic_transform"}, cfg);
  SeriesValue const rhs    = detail::quadratic_rhs(j, q, cfg);
  SeriesValue const lhs    = detail::quadratic_lhs(j, q, q2j, cfg);
  return {residual(series.value, q2j / (1.0 - q2j) * rhs.value), residual(lhs.value, rhs.value)};
}

/// F_q(x, p) = -p (1 - x) / (1 - p) int_0^1 G_q(qx, pt) d_p t.
inline SeriesValue f_q_via_qintegral(complex x, double p, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  QParam const base(p);
  if (x == 1.0)
  {
    return {0.0, 0.0, 1};
  }
  double const qv = q.value();
  SeriesValue  v  = jackson_integrate(
      [&](complex t) { return g_kernel({q, qv * x, p * t}, cfg); }, 1.0, base, cfg);
  return scaled(v, -p * (1.0 - x) / (1.0 - p));
}

}  // namespace eulerq
