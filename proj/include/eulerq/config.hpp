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

#include "eulerq/errors.hpp"

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>

namespace eulerq {

using complex = std::complex<double>;

/// The base q of every main-line function, restricted to 0 < q < 1.
///
/// Euler's original base is a = 1/q.
class QParam
{
public:
  explicit QParam(double q)
    : q_(q)
  {
    if (!(q > 0.0 && q < 1.0))
    {
      throw domain_error("q must satisfy 0 < q < 1, got " + std::to_string(q));
    }
  }

  constexpr double value() const noexcept
  {
    return q_;
  }

  constexpr double euler_base() const noexcept
  {
    return 1.0 / q_;
  }

  friend bool operator==(QParam a, QParam b) noexcept
  {
    return a.q_ == b.q_;
  }

private:
  double q_;
};

/// Tolerance and term caps for every series or product evaluation.
struct EvalConfig
{
  double      eps       = 1e-14;
  std::size_t min_terms = 8;
  std::size_t max_terms = 100000;

  void validate() const
  {
    if (!(eps > 0.0))
    {
      throw domain_error("eps must be positive");
    }
    if (min_terms == 0 || max_terms == 0 || min_terms > max_terms)
    {
      throw domain_error("require 0 < min_terms <= max_terms");
    }
  }
};

/// A computed value with an estimate of its absolute error.
///
/// err_estimate bounds the truncated tail (geometric tail bound) plus the
/// accumulated rounding of the working precision the series was summed in.
struct SeriesValue
{
  complex     value{};
  double      err_estimate = 0.0;
  std::size_t terms_used   = 0;

  double real() const noexcept
  {
    return value.real();
  }
};

inline SeriesValue scaled(SeriesValue v, complex factor)
{
  v.value *= factor;
  v.err_estimate *= std::abs(factor);
  return v;
}

/// Residual |lhs - rhs| normalised by the magnitude of the quantities involved.
///
/// Identities are checked to a mixed absolute/relative tolerance: below unit
/// scale the residual is absolute, above it relative to the largest
/// participating term.
inline double residual(complex lhs, complex rhs, double scale = 0.0)
{
  double const s = std::max({1.0, std::abs(lhs), std::abs(rhs), scale});
  return std::abs(lhs - rhs) / s;
}

}  // namespace eulerq
