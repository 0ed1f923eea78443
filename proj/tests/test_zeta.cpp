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

#include "eulerq/dilog.hpp"
#include "eulerq/hypergeometric.hpp"
#include "eulerq/qlog.hpp"
#include "eulerq/zeta.hpp"

#include <cmath>

using namespace eulerq;
namespace ref = eulerq::test::ref;

TEST(ZetaQ, ReferenceValues)
{
  double const qs[]  = {0.1, 0.3, 0.5, 0.7, 0.9};
  double const z1[]  = {ref::zeta1_q01, ref::zeta1_q03, ref::zeta1_q05, ref::zeta1_q07, ref::zeta1_q09};
  double const z2[]  = {ref::zeta2_q01, ref::zeta2_q03, ref::zeta2_q05, ref::zeta2_q07, ref::zeta2_q09};
  for (int i = 0; i < 5; ++i)
  {
    QParam const q(qs[i]);
    EXPECT_NEAR(zeta_q(1, q).real(), z1[i], 1e-13 * z1[i]) << qs[i];
    EXPECT_NEAR(zeta_q(2, q).real(), z2[i], 1e-13 * z2[i]) << qs[i];
    EXPECT_NEAR(zeta1_alternating(q).real(), z1[i], 1e-14 * z1[i]) << qs[i];
    EXPECT_NEAR(zeta2_alternating(q).real(), z2[i], 1e-14 * z2[i]) << qs[i];
    EXPECT_LT(z1[i], z2[i]);
  }
  EXPECT_NEAR(zeta_q(3, QParam(0.5)).real(), ref::zeta3_q05, 1e-14 * ref::zeta3_q05);
  EXPECT_NEAR(zeta_q(1, QParam(1e-6)).real(), 1e-6, 1e-11);
  EXPECT_NEAR(zeta_q(1, QParam(1e-6)).real(), ref::zeta1_q1em6, 1e-20);
  EXPECT_THROW(zeta_q(0, QParam(0.5)), domain_error);
}

TEST(ZetaQ, CrossChecks)
{
  QParam const q(0.5);
  EXPECT_NEAR(zeta_q(1, q).real(), -s_q(0.0, q).real(), 2e-14);
  EXPECT_NEAR(zeta_q(2, q).real(), li2q(0.0, q).real(), 1e-14);
}

TEST(ZetaQ, AlternatingSeries)
{
  EXPECT_NEAR(zeta1_alternating(QParam(0.5)).real(), zeta_q(1, QParam(0.5)).real(), 1e-13);
  SeriesValue const alt    = zeta1_alternating(QParam(0.99));
  SeriesValue const direct = zeta_q(1, QParam(0.99));
  EXPECT_NEAR(alt.real(), direct.real(), 1e-10);
  EXPECT_LT(alt.terms_used * 10, direct.terms_used);
  EXPECT_NEAR(zeta2_alternating(QParam(0.5)).real(), zeta_q(2, QParam(0.5)).real(), 1e-12);
  EXPECT_NEAR(zeta2_alternating(QParam(0.9)).real(), zeta_q(2, QParam(0.9)).real(), 1e-10);
  EXPECT_LE(sumform_li_residual(0, QParam(0.5)), 1e-14);
}

TEST(ZetaQ, AlternatingTermCounts)
{
  // The q^{k^2/2} estimate ignores the growth of 1/(q;q)_k, which matters close to q = 1;
  // the second bound adds ln(1/(q;q)_inf) to the required decay.
  EvalConfig const cfg;
  for (double qv : {0.1, 0.5, 0.9, 0.99})
  {
    QParam const q(qv);
    double const lq      = std::log(1 / qv);
    double const le      = std::log(1 / cfg.eps);
    double const growth  = -std::log(qpochhammer_inf(qv, q).real());
    double const simple  = std::ceil(std::sqrt(2 * le / lq)) + cfg.min_terms;
    double const refined = std::ceil(std::sqrt(2 * (le + growth) / lq)) + cfg.min_terms;
    for (SeriesValue const &v : {zeta1_alternating(q, cfg), zeta2_alternating(q, cfg)})
    {
      EXPECT_LE(double(v.terms_used), refined) << qv;
      if (qv <= 0.9)
      {
        EXPECT_LE(double(v.terms_used), simple) << qv;
      }
    }
  }
}

TEST(ZetaQ, Rearrangement)
{
  EXPECT_LE(zeta2_rearrangement_residual(QParam(0.5)), 1e-12);
  EXPECT_LE(zeta2_rearrangement_residual(QParam(0.95)), 1e-10);
  // Brute-force double sum of n q^{nk}.
  double const q    = 0.5;
  double const cap  = 60 * std::log(1e14) / std::log(1 / q);
  double       dbl  = 0.0;
  for (int n = 1; n <= cap; ++n)
  {
    for (int k = 1; n * k <= cap; ++k)
    {
      dbl += n * std::pow(q, double(n * k));
    }
  }
  EXPECT_NEAR(dbl, ref::zeta2_q05, 1e-13);
  EXPECT_NEAR(zeta2_un(QParam(0.5)).real(), ref::zeta2un_q05, 1e-14);
}

TEST(ZetaQ, ScaledHarmonicGrowsTowardOne)
{
  double prev = 0.0;
  for (double qv : {0.5, 0.75, 0.9})
  {
    double const v = (1 - qv) * zeta_q(1, QParam(qv)).real();
    EXPECT_GT(v, prev);
    prev = v;
  }
}

TEST(ZetaQ, RemainderMatchesPartialSums)
{
  // zeta_q(1) minus n - 1 alternating terms equals the n-th remainder expression.
  QParam const q(0.5);
  double const z1 = zeta_q(1, q).real();
  double       partial = 0.0;
  for (std::size_t n = 1; n <= 8; ++n)
  {
    EXPECT_LE(remainder_relation_residual(n, q), 1e-12) << n;
    double const qn   = std::pow(0.5, double(n));
    double const sign = (n % 2 == 1) ? 1.0 : -1.0;
    double const phi  = phi_eval({{qn, qn}, {qn * 0.5}, q, 0.5}).real();
    double const rem  = sign * std::pow(0.5, n * (n + 1) / 2.0) / (1 - qn) * phi;
    EXPECT_NEAR(z1 - partial, rem, 1e-14) << n;
    partial += s_q_taylor_coeff(n, q);
  }
}
