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

// q-Pochhammer symbols, q-binomial coefficients, q-exponentials and the
// q-difference operator.

#include "eulerq/config.hpp"
#include "eulerq/detail/summation.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace eulerq {

namespace detail {

/// (x;q)_k in working precision R, with near-zero factors snapped to zero.
template <class R>
Cx<R> qpoch(Cx<R> const &x, R const &q, std::size_t k)
{
  Cx<R> p(R(1));
  R     qj(1);
  for (std::size_t j = 0; j < k; ++j)
  {
    Cx<R> const f = one_minus(x * qj);
    if (is_zero(f))
    {
      return Cx<R>{};
    }
    p *= f;
    qj = qj * q;
  }
  return p;
}

/// (q;q)_k for real q.
template <class R>
R qpoch_q(R const &q, std::size_t k)
{
  R p(1);
  R qj = q;
  for (std::size_t j = 0; j < k; ++j)
  {
    p  = p * (R(1) - qj);
    qj = qj * q;
  }
  return p;
}

}  // namespace detail

/// The finite product (x;q)_k = (1-x)(1-xq)...(1-xq^{k-1}); (x;q)_0 = 1.
inline complex qpochhammer(complex x, QParam q, std::size_t k)
{
  return detail::qpoch(detail::Cx<double>::from(x), q.value(), k).to_complex();
}

/// The infinite product (x;q)_inf.
///
/// Truncated at the first j >= min_terms with |x| q^j < eps/4; returns an
/// exact zero when some factor |1 - x q^j| falls below 1e-13, i.e. at
/// x = q^{-n}.
inline SeriesValue qpochhammer_inf(complex x, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const ax = std::abs(x);
  double const qv = q.value();
  complex      p(1.0);
  double       qj = 1.0;
  for (std::size_t j = 0;; ++j)
  {
    if (j >= cfg.min_terms && ax * qj < cfg.eps / 4.0)
    {
      double const tail  = std::abs(p) * ax * qj / (1.0 - qv);
      double const round = 2.0 * detail::unit_roundoff<double>::value * double(j) * std::abs(p);
      return {p, tail + round, j};
    }
    if (j >= cfg.max_terms)
    {
      throw max_terms_exceeded("qpochhammer_inf: product not converged within max_terms");
    }
    complex const f = 1.0 - x * qj;
    if (std::abs(f) < detail::zero_factor_threshold)
    {
      return {complex(0.0), 0.0, j + 1};
    }
    p *= f;
    if (!std::isfinite(std::abs(p)))
    {
      throw overflow_error("qpochhammer_inf: product overflowed binary64 range");
    }
    qj *= qv;
  }
}

/// Gaussian binomial coefficient [k choose j]_q = (q;q)_k / ((q;q)_j (q;q)_{k-j}).
inline double qbinomial_coeff(std::size_t k, std::size_t j, QParam q)
{
  if (j > k)
  {
    throw domain_error("qbinomial_coeff: require j <= k");
  }
  std::size_t const m  = std::min(j, k - j);
  double const      qv = q.value();
  double            c  = 1.0;
  for (std::size_t i = 1; i <= m; ++i)
  {
    c *= (1.0 - std::pow(qv, double(k - m + i))) / (1.0 - std::pow(qv, double(i)));
  }
  return c;
}

/// e_q(z) = sum z^n / (q;q)_n, |z| < 1.
inline SeriesValue e_q_series(complex z, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  if (std::abs(z) >= 1.0)
  {
    throw divergent_series("e_q: the series form requires |z| < 1");
  }
  double const qv  = q.value();
  auto         gen = [z, qv, term = complex(1.0), qn = 1.0](std::size_t n) mutable {
    if (n > 0)
    {
      qn *= qv;
      term *= z / (1.0 - qn);
    }
    return detail::Cx<double>::from(term);
  };
  return detail::sum_series(gen, {std::max(std::abs(z), qv), {}, "e_q"}, cfg);
}

/// e_q(z) = 1 / (z;q)_inf.
inline SeriesValue e_q_product(complex z, QParam q, EvalConfig const &cfg = {})
{
  SeriesValue const p = qpochhammer_inf(z, q, cfg);
  if (p.value == 0.0)
  {
    throw pole_error("e_q: pole at z = q^{-n}");
  }
  double const ap = std::abs(p.value);
  return {1.0 / p.value, p.err_estimate / (ap * ap), p.terms_used};
}

/// The small q-exponential e_q(z); series inside the unit disk, product outside.
inline SeriesValue e_q(complex z, QParam q, EvalConfig const &cfg = {})
{
  return std::abs(z) < 1.0 ? e_q_series(z, q, cfg) : e_q_product(z, q, cfg);
}

/// E_q(z) = (-z;q)_inf.
inline SeriesValue E_q_product(complex z, QParam q, EvalConfig const &cfg = {})
{
  return qpochhammer_inf(-z, q, cfg);
}

/// E_q(z) = sum q^{n(n-1)/2} z^n / (q;q)_n. Entire in z.
inline SeriesValue E_q_series(complex z, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const qv   = q.value();
  auto         make = [z, qv](auto tag) {
    using R = typename decltype(tag)::type;
    return [zr = detail::Cx<R>::from(z), qr = R(qv), term = detail::Cx<R>(R(1)),
            qn = R(1)](std::size_t n) mutable {
      if (n > 0)
      {
        // term_n = term_{n-1} * z q^{n-1} / (1 - q^n)
        R const qprev = qn;
        qn            = qn * qr;
        term          = term * zr * (qprev / (R(1) - qn));
      }
      return term;
    };
  };
  return detail::sum_adaptive(make, {qv, {}, "E_q"}, cfg);
}

/// The big q-exponential E_q(z), evaluated through its product form.
inline SeriesValue E_q(complex z, QParam q, EvalConfig const &cfg = {})
{
  return E_q_product(z, q, cfg);
}

/// Residual of (ax;q)_inf / (x;q)_inf = sum (a;q)_j x^j / (q;q)_j, |x| < 1.
inline double qbinomial_theorem_residual(complex a, complex x, QParam q, EvalConfig const &cfg = {})
{
  if (std::abs(x) >= 1.0)
  {
    throw divergent_series("q-binomial theorem requires |x| < 1");
  }
  SeriesValue const den = qpochhammer_inf(x, q, cfg);
  if (den.value == 0.0)
  {
    throw pole_error("q-binomial theorem: (x;q)_inf vanishes");
  }
  SeriesValue const num = qpochhammer_inf(a * x, q, cfg);
  double const      qv  = q.value();
  auto              make = [a, x, qv](auto tag) {
    using R = typename decltype(tag)::type;
    return [ar = detail::Cx<R>::from(a), xr = detail::Cx<R>::from(x), qr = R(qv),
            term = detail::Cx<R>(R(1)), qn = R(1)](std::size_t j) mutable {
      if (j > 0)
      {
        // (a;q)_j / (q;q)_j x^j from the previous term
        term = term * detail::one_minus(ar * qn) * xr / (R(1) - qn * qr);
        qn   = qn * qr;
      }
      return term;
    };
  };
  SeriesValue const rhs = detail::sum_adaptive(make, {std::max(std::abs(x), qv), {}, "q-binomial"}, cfg);
  return residual(num.value / den.value, rhs.value);
}

/// Max over k <= kmax of the finite q-binomial theorem residual
/// (z;q)_k = sum_j [k choose j]_q q^{j(j-1)/2} (-z)^j.
inline double finite_qbinomial_residual(complex z, QParam q, std::size_t kmax = 20)
{
  double worst = 0.0;
  for (std::size_t k = 0; k <= kmax; ++k)
  {
    complex sum(0.0);
    double  scale = 0.0;
    for (std::size_t j = 0; j <= k; ++j)
    {
      complex const t = qbinomial_coeff(k, j, q) * std::pow(q.value(), 0.5 * double(j) * double(j - 1)) *
                        detail::pow_int(detail::Cx<double>::from(-z), static_cast<long long>(j)).to_complex();
      sum += t;
      scale = std::max(scale, std::abs(t));
    }
    worst = std::max(worst, residual(qpochhammer(z, q, k), sum, scale));
  }
  return worst;
}

/// Residual of sum_{k>=0} q^k (x;q)_k = (1 - (x;q)_inf) / x, x != 0.
inline double telescoping_residual(complex x, QParam q, EvalConfig const &cfg = {})
{
  if (x == 0.0)
  {
    throw domain_error("telescoping identity requires x != 0");
  }
  double const qv  = q.value();
  auto         gen = [x, qv, poch = complex(1.0), qk = 1.0](std::size_t k) mutable {
    if (k > 0)
    {
      poch *= 1.0 - x * (qk / qv);
    }
    complex const t = qk * poch;
    qk *= qv;
    return detail::Cx<double>::from(t);
  };
  SeriesValue const lhs = detail::sum_series(gen, {qv, {}, "telescoping sum"}, cfg);
  SeriesValue const p   = qpochhammer_inf(x, q, cfg);
  return residual(lhs.value, (1.0 - p.value) / x);
}

/// The q-difference operator D_q f(x) = (f(qx) - f(x)) / (x (q - 1)).
template <class F>
complex d_q(F &&f, complex x, QParam q)
{
  if (x == 0.0)
  {
    throw domain_error("d_q: undefined at x = 0");
  }
  double const qv = q.value();
  return (f(qv * x) - f(x)) / (x * (qv - 1.0));
}

/// D_{1/q}, the q-difference operator for base 1/q.
template <class F>
complex d_q_inv(F &&f, complex x, QParam q)
{
  if (x == 0.0)
  {
    throw domain_error("d_q_inv: undefined at x = 0");
  }
  double const p = 1.0 / q.value();
  return (f(p * x) - f(x)) / (x * (p - 1.0));
}

}  // namespace eulerq
