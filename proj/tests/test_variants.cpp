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

#include "reference_values.hpp"
#include "test_util.hpp"

#include "eulerq/pochhammer.hpp"
#include "eulerq/variants.hpp"
#include "eulerq/zeta.hpp"

using namespace eulerq;
namespace ref = eulerq::test::ref;

TEST(Tsallis, Values)
{
  EXPECT_EQ(tsallis_lnq(1.0, 0.3), 0.0);
  EXPECT_EQ(tsallis_lnq(1.0, 2.5), 0.0);
  EXPECT_DOUBLE_EQ(tsallis_lnq(3.0, 0.0), 2.0);
  EXPECT_DOUBLE_EQ(tsallis_lnq(4.0, 2.0), 0.75);
  EXPECT_THROW(tsallis_lnq(2.0, 1.0), domain_error);
  EXPECT_THROW(tsallis_lnq(0.0, 0.5), domain_error);
  EXPECT_THROW(tsallis_lnq(2.0, VariantParam::borwein(2.0)), domain_error);
}

TEST(Tsallis, ApproachesLog)
{
  double prev = 1.0;
  for (int i = 1; i <= 30; ++i)
  {
    double const q   = 1.0 - std::ldexp(1.0, -i);
    double const err = std::abs(tsallis_lnq(2.0, q) - std::log(2.0));
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-9);
}

TEST(Borwein, Values)
{
  EXPECT_EQ(borwein_lnq(0.0, 2.0).value, 0.0);
  // At z = -1, q = 2 the series is -sum 1/(2^k - 1) = -sum_n d(n) 2^{-n}.
  double divisor_sum = 0.0;
  for (int n = 60; n >= 1; --n)
  {
    int d = 0;
    for (int k = 1; k <= n; ++k)
    {
      d += (n % k == 0);
    }
    divisor_sum += d * std::ldexp(1.0, -n);
  }
  EXPECT_NEAR(borwein_lnq(-1.0, 2.0).real(), -divisor_sum, 2e-14);
  EXPECT_NEAR(borwein_lnq(-1.0, 2.0).real(), ref::borwein_m1_q2, 2e-14);
  EXPECT_NEAR(borwein_lnq(1.0, 3.0).real(), ref::borwein_1_q3, 2e-14);
  EXPECT_THROW(borwein_lnq(2.0, 2.0), divergent_series);
  EXPECT_THROW(borwein_lnq(0.1, 0.5), domain_error);
}

TEST(Borwein, NegativeBase)
{
  complex const z(0.4, 0.3);
  complex       want = 0.0;
  for (int k = 80; k >= 1; --k)
  {
    want += std::pow(-z, double(k)) / (1.0 - std::pow(-1.5, double(k)));
  }
  EXPECT_CNEAR(borwein_lnq(z, -1.5).value, want, 2e-14);
}

TEST(Kirillov, Log)
{
  QParam const q(0.5);
  EXPECT_EQ(kirillov_logq(0.0, q).value, 0.0);
  EXPECT_NEAR(kirillov_logq(0.5, q).real(), ref::kirillov_log_05_q05, 2e-14);
  EXPECT_NEAR(kirillov_logq(0.5, q).real(), kirillov_logq_quotient(0.5, q).real(), 1e-11);
  EXPECT_CREL(kirillov_logq(complex(0.2, -0.6), QParam(0.8)).value,
              kirillov_logq_quotient(complex(0.2, -0.6), QParam(0.8)).value, 1e-11);
  double const z  = 0.3;
  double const h  = 1e-5;
  double const fd = z * (kirillov_li2(z + h, q).real() - kirillov_li2(z - h, q).real()) / (2 * h);
  EXPECT_NEAR(kirillov_logq(z, q).real(), fd, 1e-9);
  EXPECT_THROW(kirillov_logq(1.0, q), divergent_series);
}

TEST(Kirillov, Dilog)
{
  EXPECT_EQ(kirillov_li2(0.0, QParam(0.5)).value, 0.0);
  EXPECT_NEAR(kirillov_li2(0.4, QParam(0.5)).real(), std::log(e_q(0.4, QParam(0.5)).real()), 1e-12);
  EXPECT_NEAR(kirillov_li2(0.4, QParam(0.5)).real(), ref::kirillov_li2_04_q05, 2e-14);
  for (double qv : {0.3, 0.5, 0.9})
  {
    for (double z = 0.05; z < 0.9; z += 0.1)
    {
      EXPECT_NEAR(kirillov_li2(z, QParam(qv)).real(), std::log(e_q(z, QParam(qv)).real()), 1e-11) << qv << " " << z;
    }
  }
}

TEST(Zudilin, Values)
{
  QParam const q(0.5);
  EXPECT_EQ(zudilin_l(0.0, q, 1).value, 0.0);
  EXPECT_EQ(zudilin_l(0.0, q, 2).value, 0.0);
  EXPECT_NEAR(zudilin_l(1.0, q, 1).real(), ref::zeta1_q05, 2e-14);
  EXPECT_NEAR(zudilin_l(1.0, q, 2).real(), ref::zeta2_q05, 1e-14);
  EXPECT_NEAR(zudilin_l(1.0, q, 2).real(), zeta_q(2, q).real(), 1e-14);
  EXPECT_THROW(zudilin_l(1.0, q, 3), domain_error);
  EXPECT_THROW(zudilin_l(2.0, q, 1), divergent_series);
}

TEST(VariantParam, Domains)
{
  EXPECT_THROW(VariantParam::borwein(1.0), domain_error);
  EXPECT_THROW(VariantParam::borwein(-0.5), domain_error);
  EXPECT_THROW(VariantParam::kirillov(1.2), domain_error);
  EXPECT_THROW(VariantParam::tsallis(1.0), domain_error);
  EXPECT_EQ(VariantParam::borwein(-3.0).value(), -3.0);
  EXPECT_EQ(VariantParam::kirillov(0.4).domain(), VariantParam::Domain::kirillov);
}
