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

// Series summation under the library-wide truncation policy.
//
// The tail after a term t_k is bounded geometrically by |t_k| / (1 - rho),
// where rho is the last observed term ratio capped at the series' asymptotic
// ratio bound. A series is stopped once this bound (past min_terms) is at most
// eps * max(|partial|, 1) for two consecutive terms, which implies
// |t_k| <= eps * max(|partial|, 1). Rounding is bounded by 4 u sum |t_k|, u the
// unit roundoff of the working precision.
//
// sum_adaptive() re-sums a series in quad and then 100-digit precision when the
// rounding bound of the cheaper precision exceeds eps/2 relative to the sum.
// This only triggers for alternating series with large intermediate terms.

#include "eulerq/config.hpp"
#include "eulerq/detail/precision.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>

namespace eulerq::detail {

struct SeriesPlan
{
  /// Upper bound on the eventual |t_{k+1} / t_k|; must be < 1.
  double ratio_bound = 0.5;
  /// Sum exactly this many terms instead of truncating (terminating series).
  std::optional<std::size_t> exact_length{};
  /// Name reported in error messages.
  char const *name = "series";
};

template <class R>
struct SumState
{
  Cx<R>       sum{};
  Cx<R>       comp{};  // Neumaier compensation, used for double only
  double      abs_sum  = 0.0;
  double      last_mag = 0.0;
  double      prev_mag = 0.0;
  std::size_t terms    = 0;
  bool        exact    = false;
};

template <class R>
void neumaier_add(R &sum, R &comp, R const &t)
{
  R const s = sum + t;
  if (abs_r(sum) >= abs_r(t))
  {
    comp = comp + ((sum - s) + t);
  }
  else
  {
    comp = comp + ((t - s) + sum);
  }
  sum = s;
}

/// Geometric bound on the tail after a term of magnitude m.
inline double tail_bound(double m, double prev, SeriesPlan const &plan)
{
  double rho = plan.ratio_bound;
  if (prev > 0.0)
  {
    rho = std::min(m / prev, plan.ratio_bound);
  }
  return m / (1.0 - rho);
}

template <class R, class Gen>
SumState<R> run_series(Gen &gen, SeriesPlan const &plan, EvalConfig const &cfg)
{
  SumState<R> st;
  int         small = 0;
  for (std::size_t k = 0;; ++k)
  {
    if (plan.exact_length && k == *plan.exact_length)
    {
      st.exact = true;
      break;
    }
    if (k >= cfg.max_terms)
    {
      throw max_terms_exceeded(std::string(plan.name) + ": no convergence within " +
                               std::to_string(cfg.max_terms) + " terms");
    }
    Cx<R> const  t = gen(k);
    double const m = magnitude(t);
    if (!std::isfinite(m))
    {
      throw overflow_error(std::string(plan.name) + ": term overflowed binary64 range");
    }
    if constexpr (std::is_same_v<R, double>)
    {
      neumaier_add(st.sum.re, st.comp.re, t.re);
      neumaier_add(st.sum.im, st.comp.im, t.im);
    }
    else
    {
      st.sum += t;
    }
    st.abs_sum += m;
    st.prev_mag = st.last_mag;
    st.last_mag = m;
    st.terms    = k + 1;
    if (plan.exact_length)
    {
      continue;
    }
    double const partial = magnitude(st.sum + st.comp);
    if (st.terms >= cfg.min_terms && tail_bound(m, st.prev_mag, plan) <= cfg.eps * std::max(partial, 1.0))
    {
      if (++small >= 2)
      {
        break;
      }
    }
    else
    {
      small = 0;
    }
  }
  st.sum += st.comp;
  return st;
}

template <class R>
double tail_estimate(SumState<R> const &st, SeriesPlan const &plan)
{
  if (st.exact || st.last_mag == 0.0)
  {
    return 0.0;
  }
  return tail_bound(st.last_mag, st.prev_mag, plan);
}

template <class R>
double rounding_estimate(SumState<R> const &st)
{
  return 4.0 * unit_roundoff<R>::value * st.abs_sum;
}

template <class R>
SeriesValue finish(SumState<R> const &st, SeriesPlan const &plan)
{
  SeriesValue v;
  v.value        = st.sum.to_complex();
  v.err_estimate = tail_estimate(st, plan) + rounding_estimate(st);
  v.terms_used   = st.terms;
  if (!std::isfinite(v.value.real()) || !std::isfinite(v.value.imag()))
  {
    throw overflow_error(std::string(plan.name) + ": value overflowed binary64 range");
  }
  return v;
}

/// Sums the series produced by `gen(k)`, k = 0, 1, ..., in the working precision R.
template <class R = double, class Gen>
SeriesValue sum_series(Gen &&gen, SeriesPlan const &plan, EvalConfig const &cfg)
{
  auto st = run_series<R>(gen, plan, cfg);
  return finish(st, plan);
}

template <class R>
struct precision_tag
{
  using type = R;
};

template <class R>
bool rounding_acceptable(SumState<R> const &st, EvalConfig const &cfg)
{
  return rounding_estimate(st) <= 0.5 * cfg.eps * std::max(1.0, magnitude(st.sum));
}

/// Sums a series whose generator can be built in any working precision.
///
/// `make(precision_tag<R>{})` must return a fresh generator `gen(k) -> Cx<R>`.
template <class Make>
SeriesValue sum_adaptive(Make &&make, SeriesPlan const &plan, EvalConfig const &cfg)
{
  {
    auto gen = make(precision_tag<double>{});
    auto st  = run_series<double>(gen, plan, cfg);
    if (rounding_acceptable(st, cfg))
    {
      return finish(st, plan);
    }
  }
  {
    auto gen = make(precision_tag<quad>{});
    auto st  = run_series<quad>(gen, plan, cfg);
    if (rounding_acceptable(st, cfg))
    {
      return finish(st, plan);
    }
  }
  auto gen = make(precision_tag<wide>{});
  auto st  = run_series<wide>(gen, plan, cfg);
  return finish(st, plan);
}

}  // namespace eulerq::detail
