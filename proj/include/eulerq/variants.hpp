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

// Other q-logarithms: Tsallis, Borwein, Kirillov, and Zudilin's L_1, L_2.

#include "eulerq/config.hpp"
#include "eulerq/detail/summation.hpp"
#include "eulerq/pochhammer.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace eulerq {

/// A base for one of the variant q-logarithms, each with its own domain.
///
/// Kept apart from QParam so that the 0 < q < 1 guarantee of the main-line
/// functions is never relaxed.
class VariantParam
{
public:
  enum class Domain
  {
    tsallis,   // q != 1
    borwein,   // |q| > 1
    kirillov,  // 0 < q < 1
  };

  static VariantParam tsallis(double q)
  {
    if (!std::isfinite(q) || q == 1.0)
    {
      throw domain_error("tsallis: q must be a finite real other than 1");
    }
    return {Domain::tsallis, q};
  }

  static VariantParam borwein(double q)
  {
    if (!std::isfinite(q) || !(std::abs(q) > 1.0))
    {
      throw domain_error("borwein: requires |q| > 1, got " + std::to_string(q));
    }
    return {Domain::borwein, q};
  }

  static VariantParam kirillov(double q)
  {
    QParam const checked(q);
    return {Domain::kirillov, checked.value()};
  }

  double value() const noexcept
  {
    return q_;
  }

  Domain domain() const noexcept
  {
    return domain_;
  }

private:
  VariantParam(Domain d, double q)
    : domain_(d)
    , q_(q)
  {}

  Domain domain_;
  double q_;
};

/// ln_q(x) = (x^{1-q} - 1) / (1 - q), x > 0.
inline double tsallis_lnq(double x, VariantParam q)
{
  if (q.domain() != VariantParam::Domain::tsallis)
  {
    throw domain_error("tsallis_lnq: parameter is not a Tsallis base");
  }
  if (!(x > 0.0))
  {
    throw domain_error("tsallis_lnq: x must be positive");
  }
  double const a = 1.0 - q.value();
  return std::expm1(a * std::log(x)) / a;
}

inline double tsallis_lnq(double x, double q)
{
  return tsallis_lnq(x, VariantParam::tsallis(q));
}

/// ln_q(1 + z) = sum_{k>=1} (-1)^k z^k / (1 - q^k), |z| < |q|, |q| > 1.
inline SeriesValue borwein_lnq(complex z, VariantParam q, EvalConfig const &cfg = {})
{
  if (q.domain() != VariantParam::Domain::borwein)
  {
    throw domain_error("borwein_lnq: parameter is not a Borwein base");
  }
  cfg.validate();
  double const qv = q.value();
  if (!(std::abs(z) < std::abs(qv)))
  {
    throw divergent_series("borwein_lnq: requires |z| < |q|");
  }
  complex w   = 1.0;  // (-z)^k
  double  qk  = 1.0;
  auto    gen = [&](std::size_t) {
    w *= -z;
    qk *= qv;
    return detail::Cx<double>::from(w / (1.0 - qk));
  };
  double const ratio = std::min(std::max(std::abs(z / qv), 1.0 / std::abs(qv)), 0.999999);
  return detail::sum_series(gen, {ratio, std::nullopt, "borwein_lnq"}, cfg);
}

inline SeriesValue borwein_lnq(complex z, double q, EvalConfig const &cfg = {})
{
  return borwein_lnq(z, VariantParam::borwein(q), cfg);
}

namespace detail {

inline void require_open_disk(complex z, char const *what)
{
  if (!(std::abs(z) < 1.0))
  {
    throw divergent_series(std::string(what) + ": requires |z| < 1");
  }
}

/// sum_{n>=1} n^{-p} z^n / (1 - q^n) for p in {-1, 0, 1}.
inline SeriesValue weighted_lambert(complex z, double q, int p, char const *name, EvalConfig const &cfg)
{
  complex zn  = 1.0;
  double  qn  = 1.0;
  auto    gen = [&](std::size_t i) {
    double const n = static_cast<double>(i + 1);
    zn *= z;
    qn *= q;
    return Cx<double>::from(zn * std::pow(n, -p) / (1.0 - qn));
  };
  double const ratio = std::min(std::max(std::abs(z), q), 0.999999);
  return sum_series(gen, {ratio, std::nullopt, name}, cfg);
}

}  // namespace detail

/// log_q(z) = sum_{n>=1} z^n / (1 - q^n), |z| < 1.
inline SeriesValue kirillov_logq(complex z, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  detail::require_open_disk(z, "kirillov_logq");
  return detail::weighted_lambert(z, q.value(), 0, "kirillov_logq", cfg);
}

/// log_q(z) as z e_q'(z) / e_q(z), with e_q' from the differentiated series.
inline SeriesValue kirillov_logq_quotient(complex z, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  detail::require_open_disk(z, "kirillov_logq_quotient");
  double const qv    = q.value();
  complex      coeff = 1.0;  // z^n / (q;q)_n
  double       qn    = 1.0;
  auto         gen   = [&](std::size_t i) {
    double const n = static_cast<double>(i + 1);
    qn *= qv;
    coeff *= z / (1.0 - qn);
    return detail::Cx<double>::from(n * coeff);
  };
  double const ratio = std::min(std::max(std::abs(z), qv), 0.999999);
  SeriesValue  deriv = detail::sum_series(gen, {ratio, std::nullopt, "kirillov_logq_quotient"}, cfg);
  SeriesValue const eq = e_q(z, q, cfg);
  return scaled(deriv, 1.0 / eq.value);
}

/// sum_{k>=1} z^k / (k (1 - q^k)) = log e_q(z), |z| < 1.
inline SeriesValue kirillov_li2(complex z, QParam q, EvalConfig const &cfg = {})
{
  cfg.validate();
  detail::require_open_disk(z, "kirillov_li2");
  return detail::weighted_lambert(z, q.value(), 1, "kirillov_li2", cfg);
}

/// L_1(x;q) = sum (xq)^n / (1 - q^n) and L_2(x;q) = sum n (xq)^n / (1 - q^n), |xq| < 1.
inline SeriesValue zudilin_l(complex x, QParam q, int order, EvalConfig const &cfg = {})
{
  cfg.validate();
  if (order != 1 && order != 2)
  {
    throw domain_error("zudilin_l: order must be 1 or 2");
  }
  complex const w = x * q.value();
  if (!(std::abs(w) < 1.0))
  {
    throw divergent_series("zudilin_l: requires |xq| < 1");
  }
  return detail::weighted_lambert(w, q.value(), 1 - order, order == 1 ? "zudilin_l1" : "zudilin_l2", cfg);
}

}  // namespace eulerq
