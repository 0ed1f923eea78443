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

// Basic hypergeometric series r_phi_s.

#include "eulerq/config.hpp"
#include "eulerq/detail/summation.hpp"
#include "eulerq/pochhammer.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace eulerq {

/// Parameters of r_phi_s(upper; lower; q, z).
///
/// A lower parameter 0 contributes (0;q)_k = 1. When r <= s the terms carry
/// the extra factor [(-1)^k q^{k(k-1)/2}]^{1+s-r}.
struct PhiSeries
{
  std::vector<complex> upper;
  std::vector<complex> lower;
  QParam               q;
  complex              z;
};

namespace detail {

/// n >= 0 with a q^n = 1 (within the zero-factor threshold), if any.
inline std::optional<std::size_t> terminating_index(complex a, double q)
{
  double const mag = std::abs(a);
  if (mag < 1.0 - 1e-12)
  {
    return std::nullopt;
  }
  double const n = std::round(std::log(mag) / -std::log(q));
  if (n < 0.0 || n > 1e9)
  {
    return std::nullopt;
  }
  if (std::abs(1.0 - a * std::pow(q, n)) < zero_factor_threshold)
  {
    return static_cast<std::size_t>(n);
  }
  return std::nullopt;
}

/// 2phi1(q^j, q^j; q^{j+1}; q, q) in working precision R, summed until the
/// tail is below rel_tol relative to the sum. All terms are positive.
template <class R>
R phi_jj(R const &q, std::size_t j, double rel_tol, std::size_t max_terms)
{
  R const qj  = pow_int(q, static_cast<long long>(j));
  R const num = R(1) - qj;
  R       a(1);       // (q^j;q)_l q^l / (q;q)_l
  R       ql(1);      // q^l
  R       qjl = qj;   // q^{j+l}
  R       sum(0);
  double const inv_tail = 1.0 - to_double(q);
  for (std::size_t l = 0; l < max_terms; ++l)
  {
    if (l > 0)
    {
      ql  = ql * q;
      a   = a * (R(1) - qjl) / (R(1) - ql) * q;
      qjl = qjl * q;
    }
    R const t = a * num / (R(1) - qjl);
    sum       = sum + t;
    if (l >= 4 && to_double(t) <= rel_tol * inv_tail * to_double(sum))
    {
      return sum;
    }
  }
  throw max_terms_exceeded("2phi1(q^j,q^j;q^{j+1};q,q): no convergence within max_terms");
}

}  // namespace detail

/// Evaluates a basic hypergeometric series.
///
/// Terminating series (an upper parameter q^{-n}) are summed exactly over
/// n + 1 terms. Nonterminating series with r = s + 1 need |z| < 1; r > s + 1
/// diverges for z != 0.
inline SeriesValue phi_eval(PhiSeries const &s, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const qv = s.q.value();
  std::size_t const r = s.upper.size();
  std::size_t const d = s.lower.size();

  std::optional<std::size_t> length;
  for (complex const a : s.upper)
  {
    if (auto const n = detail::terminating_index(a, qv))
    {
      length = length ? std::min(*length, *n + 1) : *n + 1;
    }
  }
  if (s.z == 0.0)
  {
    length = 1;
  }
  if (!length)
  {
    if (r > d + 1)
    {
      throw divergent_series("phi_eval: r > s + 1 nonterminating series diverges");
    }
    if (r == d + 1 && std::abs(s.z) >= 1.0)
    {
      throw divergent_series("phi_eval: nonterminating r = s + 1 series requires |z| < 1");
    }
  }
  int const extra = (r <= d) ? int(1 + d - r) : 0;

  auto make = [&s, qv, extra](auto tag) {
    using R  = typename decltype(tag)::type;
    using C  = detail::Cx<R>;
    std::vector<C> up, lo;
    for (complex const a : s.upper)
    {
      up.push_back(C::from(a));
    }
    for (complex const b : s.lower)
    {
      lo.push_back(C::from(b));
    }
    return [up = std::move(up), lo = std::move(lo), zr = C::from(s.z), qr = R(qv), extra,
            term = C(R(1)), qk = R(1)](std::size_t k) mutable {
      if (k > 0)
      {
        // factors at index k-1; qk holds q^{k-1}
        C num(R(1));
        for (C const &a : up)
        {
          num *= detail::one_minus(a * qk);
        }
        C den(R(1) - qk * qr);
        for (C const &b : lo)
        {
          C const f = detail::one_minus(b * qk);
          if (detail::is_zero(f))
          {
            throw zero_denominator("phi_eval: lower parameter equals q^{-m}");
          }
          den *= f;
        }
        term = term * num / den * zr;
        for (int e = 0; e < extra; ++e)
        {
          term = term * R(-qk);
        }
        qk = qk * qr;
      }
      return term;
    };
  };
  double const ratio = (r == d + 1) ? std::max(std::abs(s.z), qv) : qv;
  return detail::sum_adaptive(make, {std::min(ratio, 0.999999), length, "phi_eval"}, cfg);
}

/// Residual of the q-Gauss sum
/// 2phi1(a, b; c; q, c/(ab)) = (c/a;q)_inf (c/b;q)_inf / ((c;q)_inf (c/(ab);q)_inf).
inline double qgauss_residual(complex a, complex b, complex c, QParam q, EvalConfig const &cfg = {})
{
  complex const z = c / (a * b);
  if (std::abs(z) >= 1.0)
  {
    throw divergent_series("q-Gauss sum requires |c/(ab)| < 1");
  }
  SeriesValue const lhs = phi_eval({{a, b}, {c}, q, z}, cfg);
  complex const     den = qpochhammer_inf(c, q, cfg).value * qpochhammer_inf(z, q, cfg).value;
  if (den == 0.0)
  {
    throw pole_error("q-Gauss sum: (c;q)_inf (c/(ab);q)_inf vanishes");
  }
  complex const rhs = qpochhammer_inf(c / a, q, cfg).value * qpochhammer_inf(c / b, q, cfg).value / den;
  return residual(lhs.value, rhs);
}

}  // namespace eulerq
