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

using namespace eulerq;
namespace ref = eulerq::test::ref;

TEST(QPochhammer, FiniteValues)
{
  EXPECT_EQ(qpochhammer(3.7, QParam(0.5), 0), 1.0);
  EXPECT_EQ(qpochhammer(1.0, QParam(0.3), 3), 0.0);
  EXPECT_DOUBLE_EQ(qpochhammer(0.5, QParam(0.5), 2).real(), 0.375);
}

TEST(QPochhammer, Recurrence)
{
  QParam const  q(0.6);
  complex const x(0.7, -1.3);
  for (std::size_t k = 1; k <= 30; ++k)
  {
    EXPECT_CREL(qpochhammer(x, q, k), (1.0 - x * std::pow(0.6, double(k - 1))) * qpochhammer(x, q, k - 1), 1e-14);
  }
}

TEST(QPochhammer, InfiniteValues)
{
  EXPECT_EQ(qpochhammer_inf(0.0, QParam(0.5)).value, 1.0);
  EXPECT_EQ(qpochhammer_inf(1.0, QParam(0.7)).value, 0.0);
  SeriesValue const v = qpochhammer_inf(0.5, QParam(0.5));
  EXPECT_NEAR(v.real(), ref::half_half_inf, 2e-14);
  EXPECT_NEAR(v.real(), qpochhammer(0.5, QParam(0.5), 200).real(), 2e-14);
  EXPECT_NEAR(qpochhammer_inf(0.9, QParam(0.9)).real(), ref::qq_inf_q09, 1e-19);
}

TEST(QPochhammer, BinomialCoefficients)
{
  EXPECT_EQ(qbinomial_coeff(5, 0, QParam(0.3)), 1.0);
  EXPECT_DOUBLE_EQ(qbinomial_coeff(2, 1, QParam(0.5)), 1.5);
  QParam const q(0.5);
  double const direct =
      (qpochhammer(0.5, q, 4) / (qpochhammer(0.5, q, 2) * qpochhammer(0.5, q, 2))).real();
  EXPECT_NEAR(qbinomial_coeff(4, 2, q), direct, 1e-14);
  EXPECT_THROW(qbinomial_coeff(3, 4, q), domain_error);
  for (std::size_t k = 0; k <= 20; ++k)
  {
    for (std::size_t j = 0; j <= k; ++j)
    {
      double const a = qbinomial_coeff(k, j, QParam(0.7));
      EXPECT_NEAR(a, qbinomial_coeff(k, k - j, QParam(0.7)), 1e-13 * a);
    }
  }
}

TEST(QPochhammer, FiniteBinomialTheorem)
{
  for (double qv : {0.1, 0.5, 0.9})
  {
    for (complex z : {complex(0.0), complex(2.0), complex(-2.0), complex(1.2, 1.2), complex(0.0, -2.0)})
    {
      EXPECT_LE(finite_qbinomial_residual(z, QParam(qv)), 1e-12) << qv << " " << z;
    }
  }
}

TEST(QPochhammer, Telescoping)
{
  for (double qv : {0.2, 0.5, 0.9})
  {
    for (complex x : {complex(0.5), complex(-3.0), complex(2.0, 1.0)})
    {
      EXPECT_LE(telescoping_residual(x, QParam(qv)), 1e-13) << qv << " " << x;
    }
  }
}

TEST(QExponential, SmallQ)
{
  EXPECT_EQ(e_q(0.0, QParam(0.5)).value, 1.0);
  EXPECT_NEAR(e_q(0.5, QParam(0.5)).real(), 1.0 / ref::half_half_inf, 1e-14);
  EXPECT_CREL(e_q_series(complex(0.3, 0.4), QParam(0.6)).value, e_q_product(complex(0.3, 0.4), QParam(0.6)).value,
              1e-14);
  EXPECT_THROW(e_q_series(1.5, QParam(0.5)), divergent_series);
  EXPECT_THROW(e_q_product(1.0, QParam(0.5)), pole_error);
  for (double z : {-0.9, -0.3, 0.2, 0.8})
  {
    EXPECT_NEAR((e_q(z, QParam(0.4)).value * qpochhammer_inf(z, QParam(0.4)).value).real(), 1.0, 1e-14);
  }
}

TEST(QExponential, BigQ)
{
  EXPECT_EQ(E_q(0.0, QParam(0.2)).value, 1.0);
  EXPECT_EQ(E_q(-1.0, QParam(0.7)).value, 0.0);
  for (complex z : {complex(3.0), complex(-2.5), complex(1.0, 2.0)})
  {
    EXPECT_CREL(E_q_series(z, QParam(0.5)).value, E_q_product(z, QParam(0.5)).value, 1e-13);
  }
}

TEST(QBinomialTheorem, Residuals)
{
  QParam const q(0.5);
  EXPECT_LE(qbinomial_theorem_residual(1.0, 0.5, q), 2e-14);
  EXPECT_LE(qbinomial_theorem_residual(0.0, 0.3, q), 1e-14);
  EXPECT_LE(qbinomial_theorem_residual(0.4, 0.6, q), 1e-12);
  EXPECT_LE(qbinomial_theorem_residual(complex(2.0, -1.0), complex(-0.3, 0.5), QParam(0.8)), 1e-12);
  EXPECT_THROW(qbinomial_theorem_residual(0.4, 1.0, q), divergent_series);
}

TEST(QDerivative, Basics)
{
  QParam const q(0.5);
  EXPECT_EQ(d_q([](complex) { return complex(4.0); }, 1.3, q), 0.0);
  EXPECT_NEAR(d_q([](complex t) { return t; }, 2.0, q).real(), 1.0, 2e-14);
  EXPECT_THROW(d_q([](complex t) { return t; }, 0.0, q), domain_error);

  // Base 1/q applied to (t;q)_3 gives -(1 - q^3)/(1 - q) (x;q)_2.
  auto const   f    = [q](complex t) { return qpochhammer(t, q, 3); };
  complex const got = d_q_inv(f, 0.5, q);
  complex const want = -(1.0 - 0.125) / 0.5 * qpochhammer(0.5, q, 2);
  EXPECT_CNEAR(got, want, 1e-14);
}
