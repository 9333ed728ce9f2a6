// Copyright 2026 The Novelty Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "novelty/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/lambert_w.hpp>
#include <gtest/gtest.h>

namespace novelty::specfun {
namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

TEST(ErfInv, Zero) { EXPECT_EQ(erf_inv(0.0), 0.0); }

TEST(ErfInv, RoundTripOfErfOne) { EXPECT_NEAR(erf_inv(std::erf(1.0)), 1.0, 1e-14); }

TEST(ErfInv, KnownValue) {
  // 30-digit reference from an arbitrary-precision inversion.
  EXPECT_NEAR(erf_inv(0.95), 1.38590382434967794527797, 1e-14);
}

TEST(ErfInv, OddFunction) {
  for (double p : {0.1, 0.5, 0.9, 0.999}) EXPECT_EQ(erf_inv(-p), -erf_inv(p));
}

TEST(ErfInv, RejectsClosedEnds) {
  EXPECT_THROW(erf_inv(1.0), std::domain_error);
  EXPECT_THROW(erf_inv(-1.0), std::domain_error);
  EXPECT_THROW(erf_inv(std::nan("")), std::domain_error);
}

TEST(ErfInv, RoundTripErfWithinTolerance) {
  for (int i = -9999; i <= 9999; i += 7) {
    const double p = i / 10000.0;
    if (p == 0.0) continue;
    EXPECT_LE(rel(std::erf(erf_inv(p)), p), 1e-12) << p;
  }
}

TEST(ErfInv, AgreesWithBoostOracle) {
  for (int i = 1; i < 1000; ++i) {
    const double p = i / 1000.0;
    EXPECT_LE(rel(erf_inv(p), boost::math::erf_inv(p)), 1e-13) << p;
  }
  for (double p : {1e-12, 1e-6, 1.0 - 1e-6, 1.0 - 1e-12}) {
    EXPECT_LE(rel(erf_inv(p), boost::math::erf_inv(p)), 1e-12) << p;
  }
}

TEST(Ctilde, Values) {
  EXPECT_EQ(ctilde(0.0), 0.0);
  EXPECT_NEAR(ctilde(std::erf(1.0)), 1.0, 1e-14);
  EXPECT_NEAR(ctilde(0.5), 0.227468211559786375971, 1e-15);
  EXPECT_EQ(ctilde(1.0), kInfiniteCost);
  EXPECT_THROW(ctilde(-0.1), std::domain_error);
  EXPECT_THROW(ctilde(1.1), std::domain_error);
}

TEST(CtildePrime, Values) {
  EXPECT_EQ(ctilde_prime(0.0), 0.0);
  // Independent evaluation of sqrt(pi) i exp(i^2) at i = erf_inv(0.5).
  EXPECT_NEAR(ctilde_prime(0.5), 1.06126412104421193014, 1e-13);
  EXPECT_THROW(ctilde_prime(1.0), std::domain_error);
}

TEST(CtildeSecond, Values) {
  EXPECT_NEAR(ctilde_second(0.0), std::numbers::pi / 2.0, 1e-15);
  EXPECT_NEAR(ctilde_second(0.5), 3.60197149342943634469, 1e-12);
  EXPECT_GT(ctilde_second(1.0 - 1e-12), 1e10);
  EXPECT_THROW(ctilde_second(1.0), std::domain_error);
}

TEST(Ctilde, DerivativesMatchFiniteDifferences) {
  const double h = 1e-6;
  for (int i = 2; i <= 98; ++i) {
    const double r = i / 100.0;
    const double fd1 = (ctilde(r + h) - ctilde(r - h)) / (2 * h);
    const double fd2 = (ctilde_prime(r + h) - ctilde_prime(r - h)) / (2 * h);
    EXPECT_LE(rel(ctilde_prime(r), fd1), 1e-6) << r;
    EXPECT_LE(rel(ctilde_second(r), fd2), 1e-6) << r;
  }
}

TEST(Ctilde, ElasticityAndGapProperties) {
  double prev_e1 = 0.0, prev_e2 = 0.0, prev_gap = 0.0;
  for (int i = 1; i <= 99; ++i) {
    const double r = i / 100.0;
    const CostKernelPoint k = cost_kernel(r);
    EXPECT_GE(k.ctilde, 0.0);
    EXPECT_GE(k.ctilde_prime, 0.0);
    EXPECT_GE(k.ctilde_second, 0.0);
    const double e1 = r * k.ctilde_prime / k.ctilde;
    const double e2 = r * k.ctilde_second / k.ctilde_prime;
    const double gap = r * k.ctilde_prime - k.ctilde;
    EXPECT_GT(e1, 2.0);
    EXPECT_GT(e2, 1.0);
    EXPECT_GT(gap, 0.0);
    EXPECT_GT(k.ctilde_prime, k.ctilde / r);
    if (i > 1) {
      EXPECT_GT(e1, prev_e1);
      EXPECT_GT(e2, prev_e2);
      EXPECT_GT(gap, prev_gap);
    }
    prev_e1 = e1;
    prev_e2 = e2;
    prev_gap = gap;
  }
}

TEST(LambertW, Values) {
  EXPECT_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(std::numbers::e), 1.0, 1e-15);
  EXPECT_NEAR(lambert_w0(0.522112), 0.363127663030083924311, 1e-14);
  EXPECT_NEAR(lambert_w0(-std::exp(-1.0)), -1.0, 1e-7);
  EXPECT_THROW(lambert_w0(-0.4), std::domain_error);
}

TEST(LambertW, DefiningIdentityAndBoostOracle) {
  for (double x : {-0.3678, -0.35, -0.3, -0.1, -1e-5, 1e-9, 1e-3, 0.1, 0.5, 1.0, 2.0, 10.0,
                   123.0, 1e4, 1e8, 1e15, 1e100}) {
    const double w = lambert_w0(x);
    EXPECT_LE(rel(w * std::exp(w), x), 1e-12) << x;
    EXPECT_LE(rel(w, boost::math::lambert_w0(x)), 1e-12) << x;
  }
}

TEST(CtildePrimeInv, Values) {
  EXPECT_EQ(ctilde_prime_inv(0.0), 0.0);
  EXPECT_NEAR(ctilde_prime_inv(ctilde_prime(0.5)), 0.5, 1e-12);
  // erf(sqrt(W(1/(2 pi))/2)) evaluated at 30 digits.
  EXPECT_NEAR(ctilde_prime_inv(0.5), 0.290285012839664194565, 1e-13);
  EXPECT_THROW(ctilde_prime_inv(-1.0), std::domain_error);
}

TEST(CtildePrimeInv, RoundTrips) {
  for (int i = 1; i <= 99; ++i) {
    const double r = i / 100.0;
    EXPECT_NEAR(ctilde_prime_inv(ctilde_prime(r)), r, 1e-10) << r;
  }
  for (double x : {1e-8, 1e-3, 0.1, 1.0, 3.0, 10.0, 100.0, 1e4}) {
    const double r = ctilde_prime_inv(x);
    EXPECT_GE(r, 0.0);
    EXPECT_LT(r, 1.0);
    EXPECT_LE(rel(ctilde_prime(r), x), 1e-10) << x;
  }
}

TEST(CtildePrimeInv, HugeArgumentStaysBelowOne) {
  EXPECT_LT(ctilde_prime_inv(1e300), 1.0);
  EXPECT_LT(ctilde_prime_inv(std::numeric_limits<double>::infinity()), 1.0);
}

}  // namespace
}  // namespace novelty::specfun
