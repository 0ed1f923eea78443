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

// Jackson q-integral over [0, a].

#include "eulerq/config.hpp"
#include "eulerq/detail/summation.hpp"

#include <cstddef>
#include <functional>
#include <type_traits>
#include <utility>

namespace eulerq {

/// The integral of `integrand` from 0 to `upper_limit` in base `base`.
struct QIntegral
{
  QParam                            base;
  complex                           upper_limit;
  std::function<complex(complex)> integrand;
};

/// (1 - p) a sum_k f(a p^k) p^k.
///
/// The integrand may return either a complex value or a SeriesValue; in the
/// latter case the integrand's own error estimates are propagated.
template <class F>
SeriesValue jackson_integrate(F &&f, complex a, QParam p, EvalConfig const &cfg = {})
{
  cfg.validate();
  double const pv        = p.value();
  double       inner_err = 0.0;
  double       pk        = 1.0;
  auto gen = [&](std::size_t k) {
    if (k > 0)
    {
      pk *= pv;
    }
    complex const t = a * pk;
    using Result    = std::invoke_result_t<F &, complex>;
    complex value;
    if constexpr (std::is_same_v<std::decay_t<Result>, SeriesValue>)
    {
      SeriesValue const v = f(t);
      inner_err += v.err_estimate * pk;
      value = v.value;
    }
    else
    {
      value = f(t);
    }
    return detail::Cx<double>::from(value * pk);
  };
  SeriesValue v = detail::sum_series(gen, {pv, std::nullopt, "jackson_integrate"}, cfg);
  v.err_estimate += inner_err;
  return scaled(v, (1.0 - pv) * a);
}

inline SeriesValue jackson_integrate(QIntegral const &j, EvalConfig const &cfg = {})
{
  return jackson_integrate(j.integrand, j.upper_limit, j.base, cfg);
}

}  // namespace eulerq
