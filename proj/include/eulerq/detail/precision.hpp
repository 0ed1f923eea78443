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

// Working-precision real types and a minimal complex type usable with all of
// them. std::complex is unspecified for non-builtin arithmetic types, so the
// summation engine carries its own.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>

namespace eulerq::detail {

#if defined(__SIZEOF_FLOAT128__) && !defined(EULERQ_NO_FLOAT128)
using quad = __float128;
#else
using quad = boost::multiprecision::cpp_bin_float_quad;
#endif

using wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                           boost::multiprecision::et_off>;

template <class R>
struct unit_roundoff;

template <>
struct unit_roundoff<double>
{
  static constexpr double value = 0x1p-53;
};

#if defined(__SIZEOF_FLOAT128__) && !defined(EULERQ_NO_FLOAT128)
template <>
struct unit_roundoff<__float128>
{
  static constexpr double value = 0x1p-113;
};
#endif

template <class Backend, boost::multiprecision::expression_template_option ET>
struct unit_roundoff<boost::multiprecision::number<Backend, ET>>
{
  static inline double const value =
      static_cast<double>(std::numeric_limits<boost::multiprecision::number<Backend, ET>>::epsilon()) /
      2.0;
};

template <class R>
constexpr R abs_r(R const &x)
{
  return x < R(0) ? R(-x) : x;
}

template <class R>
double to_double(R const &x)
{
  return static_cast<double>(x);
}

/// x^n for integer n by binary powering.
template <class R>
R pow_int(R base, long long n)
{
  if (n < 0)
  {
    base = R(1) / base;
    n    = -n;
  }
  R result(1);
  while (n > 0)
  {
    if (n & 1)
    {
      result = result * base;
    }
    base = base * base;
    n >>= 1;
  }
  return result;
}

template <class R>
struct Cx
{
  R re{0};
  R im{0};

  Cx() = default;
  Cx(R r)  // NOLINT(google-explicit-constructor)
    : re(std::move(r))
    , im(0)
  {}
  Cx(R r, R i)
    : re(std::move(r))
    , im(std::move(i))
  {}

  static Cx from(std::complex<double> z)
  {
    return Cx(R(z.real()), R(z.imag()));
  }

  std::complex<double> to_complex() const
  {
    return {to_double(re), to_double(im)};
  }

  Cx &operator+=(Cx const &o)
  {
    re = re + o.re;
    im = im + o.im;
    return *this;
  }
  Cx &operator-=(Cx const &o)
  {
    re = re - o.re;
    im = im - o.im;
    return *this;
  }
  Cx &operator*=(Cx const &o)
  {
    R const r = re * o.re - im * o.im;
    im        = re * o.im + im * o.re;
    re        = r;
    return *this;
  }
  Cx &operator/=(Cx const &o)
  {
    // Smith's algorithm
    if (abs_r(o.re) >= abs_r(o.im))
    {
      R const ratio = o.im / o.re;
      R const den   = o.re + o.im * ratio;
      R const r     = (re + im * ratio) / den;
      im            = (im - re * ratio) / den;
      re            = r;
    }
    else
    {
      R const ratio = o.re / o.im;
      R const den   = o.re * ratio + o.im;
      R const r     = (re * ratio + im) / den;
      im            = (im * ratio - re) / den;
      re            = r;
    }
    return *this;
  }

  friend Cx operator+(Cx a, Cx const &b)
  {
    return a += b;
  }
  friend Cx operator-(Cx a, Cx const &b)
  {
    return a -= b;
  }
  friend Cx operator*(Cx a, Cx const &b)
  {
    return a *= b;
  }
  friend Cx operator/(Cx a, Cx const &b)
  {
    return a /= b;
  }
  friend Cx operator-(Cx const &a)
  {
    return Cx(R(-a.re), R(-a.im));
  }
  friend Cx operator*(Cx a, R const &s)
  {
    a.re = a.re * s;
    a.im = a.im * s;
    return a;
  }
  friend Cx operator*(R const &s, Cx a)
  {
    return a * s;
  }
  friend Cx operator/(Cx a, R const &s)
  {
    a.re = a.re / s;
    a.im = a.im / s;
    return a;
  }
};

template <class R>
double magnitude(Cx<R> const &z)
{
  return std::hypot(to_double(z.re), to_double(z.im));
}

template <class R>
Cx<R> pow_int(Cx<R> base, long long n)
{
  if (n < 0)
  {
    base = Cx<R>(R(1)) / base;
    n    = -n;
  }
  Cx<R> result(R(1));
  while (n > 0)
  {
    if (n & 1)
    {
      result *= base;
    }
    base *= base;
    n >>= 1;
  }
  return result;
}

/// Factors |1 - x q^j| below this are treated as exact zeros, which makes the
/// vanishing of (q^{-n};q)_k for k > n usable in floating point.
inline constexpr double zero_factor_threshold = 1e-13;

/// 1 - y, snapped to an exact zero when it is within zero_factor_threshold.
template <class R>
Cx<R> one_minus(Cx<R> const &y)
{
  Cx<R> f(R(R(1) - y.re), R(-y.im));
  if (magnitude(f) < zero_factor_threshold)
  {
    return Cx<R>{};
  }
  return f;
}

template <class R>
bool is_zero(Cx<R> const &z)
{
  return z.re == R(0) && z.im == R(0);
}

}  // namespace eulerq::detail
