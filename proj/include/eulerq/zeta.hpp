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

// q-zeta values.

#include "eulerq/config.hpp"
#include "eulerq/detail/summation.hpp"
#include "eulerq/hypergeometric.hpp"

#include <cmath>
#include <cstddef>

namespace eulerq {
namespace detail {

/// Generator maker for sum_{k>=1} c_k k^m w^k, where
/// c_k = (-1)^{k-1} q^{k(k+1)/2} / ((1 - q^k)(q;q)_k) and m is 0 or 1.
///
/// The terms are built by their ratio so that q^{k(k+1)/2} and w^k never
/// appear separately, which would underflow and overflow for |w| > 1.
inline auto alternating_make(double q, complex w, bool weighted)
{
  return [q, w, weighted](auto tag) {
    using R = typename decltype(tag)::type;
    using C = Cx<R>;
    return [qr = R(q), wr = C::from(w), weighted, c = C{}, qk = R(1)](std::size_t i) mutable {
      std::size_t const k = i + 1;
      R const           qprev = qk;
      qk                      = qk * qr;
      R const           den   = R(1) - qk;
      if (k == 1)
      {
        c = wr * (qr / (den * den));
      }
      else
      {
        c = c * wr * (R(-qk) * (R(1) - qprev) / (den * den));
      }
      return weighted ? c * R(static_cast<double>(k)) : c;
    };
  };
}

/// Generator maker for sum_{j>=1} d_j w^j, where
/// d_j = (-1)^{j-1} q^{j(j+1)/2} / (1 - q^j)^2 2phi1(q^j, q^j; q^{j+1}; q, q)
/// and w = w_of(tag) is formed in the working precision.
///
/// The inner 2phi1 is summed to a few units of the working precision.
template <class WOf>
auto dilog_alternating_make_with(double q, WOf w_of, std::size_t max_terms)
{
  return [q, w_of, max_terms](auto tag) {
    using R = typename decltype(tag)::type;
    using C = Cx<R>;
    double const inner_tol = 4.0 * unit_roundoff<R>::value;
    return [qr = R(q), wr = C(w_of(tag)), c = C{}, qk = R(1), inner_tol, max_terms](std::size_t i) mutable {
      std::size_t const j = i + 1;
      qk                  = qk * qr;
      // c = (-1)^{j-1} q^{j(j+1)/2} w^j
      c = (j == 1) ? wr * qr : c * wr * R(-qk);
      R const den = R(1) - qk;
      return c * R(phi_jj(qr, j, inner_tol, max_terms) / (den * den));
    };
  };
}

inline auto dilog_alternating_make(double q, complex w, std::size_t max_terms)
{
  return dilog_alternating_make_with(
      q, [w](auto tag) { return Cx<typename decltype(tag)::type>::from(w); }, max_terms);
}

/// As dilog_alternating_make with w = q^p.
inline auto dilog_alternating_qpow_make(double q, long long p, std::size_t max_terms)
{
  return dilog_alternating_make_with(
      q,
      [q, p](auto tag) {
        using R = typename decltype(tag)::type;
        return Cx<R>(pow_int(R(q), p));
      },
      max_terms);
}

/// sum_{k>=1} k^{s-1} q^k / (1 - q^k) in double; all terms are positive.
inline SeriesValue zeta_direct(double q, unsigned s, EvalConfig const &cfg)
{
  double qk  = 1.0;
  auto   gen = [&](std::size_t i) {
    double const k = static_cast<double>(i + 1);
    qk *= q;
    return Cx<double>(std::pow(k, static_cast<double>(s) - 1.0) * qk / (1.0 - qk));
  };
  double const ratio = (s == 1) ? q : 0.5 * (1.0 + q);
  return sum_series(gen, {ratio, std::nullopt, "zeta_q"}, cfg);
}

}  // namespace detail

/// sum_{n>=1} n^{s-1} q^n / (1 - q^n).
///
/// s = 1 and s = 2 are the q-analogues of the harmonic series and of zeta(2);
/// larger s is provided as an extension.
inline SeriesValue zeta_q(unsigned s, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  if (s < 1)
  {
    throw domain_error("zeta_q: s must be a positive integer");
  }
  return detail::zeta_direct(q.value(), s, cfg);
}

/// zeta_q(1) by the superexponentially convergent alternating series
/// sum_{k>=1} (-1)^{k-1} q^{k(k+1)/2} / ((1 - q^k)(q;q)_k).
inline SeriesValue zeta1_alternating(QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  return detail::sum_adaptive(detail::alternating_make(q.value(), 1.0, false),
                              {q.value(), std::nullopt, "zeta1_alternating"}, cfg);
}

/// zeta_q(2) as sum_{j>=1} (-1)^{j-1} q^{j(j+1)/2} / (1 - q^j)^2 2phi1(q^j, q^j; q^{j+1}; q, q).
inline SeriesValue zeta2_alternating(QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  return detail::sum_adaptive(detail::dilog_alternating_make(q.value(), 1.0, cfg.max_terms),
                              {q.value(), std::nullopt, "zeta2_alternating"}, cfg);
}

/// Residual of sum n q^n / (1 - q^n) = sum q^k / (1 - q^k)^2.
inline double zeta2_rearrangement_residual(QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const qv  = q.value();
  double       qk  = 1.0;
  auto         gen = [&](std::size_t) {
    qk *= qv;
    double const d = 1.0 - qk;
    return detail::Cx<double>(qk / (d * d));
  };
  SeriesValue const lhs = zeta_q(2, q, cfg);
  SeriesValue const rhs = detail::sum_series(gen, {qv, std::nullopt, "zeta2_rearrangement"}, cfg);
  return residual(lhs.value, rhs.value);
}

/// sum_{k>=1} q^{2k} / (1 - q^k)^2, a close relative of zeta_q(2) used for comparison.
inline SeriesValue zeta2_un(QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const qv  = q.value();
  double       qk  = 1.0;
  auto         gen = [&](std::size_t) {
    qk *= qv;
    double const d = 1.0 - qk;
    return detail::Cx<double>(qk * qk / (d * d));
  };
  return detail::sum_series(gen, {qv, std::nullopt, "zeta2_un"}, cfg);
}

}  // namespace eulerq
