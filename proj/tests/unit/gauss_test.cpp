// Copyright 2026 The gaussiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussiso/gauss.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "gaussiso/error.hpp"

namespace gaussiso::gauss {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double Rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

TEST(Phi, MatchesHighPrecisionValues) {
  EXPECT_LT(Rel(Phi(-1.0), 0.15865525393145705141), 1e-15);
  EXPECT_LT(Rel(Phi(-10.0), 7.619853024160526066e-24), 1e-13);
  EXPECT_DOUBLE_EQ(Phi(0.0), 0.5);
  EXPECT_EQ(Phi(-kInf), 0.0);
  EXPECT_EQ(Phi(kInf), 1.0);
}

TEST(Phi, UpperTailHasNoCancellation) {
  EXPECT_LT(Rel(PhiUpper(10.0), 7.619853024160526066e-24), 1e-13);
  EXPECT_DOUBLE_EQ(PhiUpper(-3.0) + Phi(-3.0), 1.0);
}

TEST(Phi, ScaledTailStaysFiniteBeyondUnderflow) {
  EXPECT_LT(Rel(PhiScaled(-30.0), 0.013283349353983794274), 1e-13);
  EXPECT_LT(Rel(PhiScaled(-40.0), 0.0099673351883013099835), 1e-13);
  EXPECT_DOUBLE_EQ(PhiScaled(0.0), 0.5);
  // Continuity across the switch between erfc and the continued fraction.
  EXPECT_LT(Rel(PhiScaled(-25.999999), PhiScaled(-26.000001)), 1e-6);
}

TEST(PhiInv, KnownQuantiles) {
  EXPECT_LT(Rel(PhiInv(0.25), -0.67448975019608174320), 1e-14);
  EXPECT_LT(Rel(PhiInv(1e-10), -6.3613409024040562047), 1e-14);
  EXPECT_LT(Rel(PhiInv(0.975), 1.9599639845400542355), 1e-14);
  EXPECT_EQ(PhiInv(0.0), -kInf);
  EXPECT_EQ(PhiInv(1.0), kInf);
}

TEST(PhiInv, RejectsOutOfRange) {
  EXPECT_THROW(PhiInv(-0.1), Error);
  EXPECT_THROW(PhiInv(1.1), Error);
  EXPECT_THROW(PhiInv(std::nan("")), Error);
}

TEST(PhiInv, RoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int i = 0; i < 2000; ++i) {
    const double s = u(rng);
    // Above 0 the round trip goes through the upper tail, which Phi itself
    // cannot resolve near 1.
    const double back = s <= 0.0 ? PhiInv(Phi(s)) : -PhiInv(PhiUpper(s));
    EXPECT_NEAR(back, s, 1e-12 * (1.0 + std::abs(s))) << s;
  }
}

TEST(GaussMass, IntervalsAndTails) {
  EXPECT_LT(Rel(GaussMass(1.0, 2.0), 0.13590512198327784421), 1e-14);
  // Both endpoints deep in the lower tail: resolved relative to the tiny mass.
  EXPECT_LT(Rel(GaussMass(-37.0, -36.0), 4.1826240657972827592e-284), 1e-10);
  EXPECT_EQ(GaussMass(-kInf, kInf), 1.0);
  EXPECT_EQ(GaussMass(2.0, 2.0), 0.0);
  EXPECT_THROW(GaussMass(2.0, 1.0), Error);
}

TEST(PartialMoment, ClosedForm) {
  EXPECT_LT(Rel(PartialMoment(1.0, 2.0), 0.18797975800595529785), 1e-14);
  EXPECT_DOUBLE_EQ(PartialMoment(-kInf, kInf), 0.0);
  EXPECT_NEAR(PartialMoment(-kInf, 0.0), -kInvSqrt2Pi, 1e-16);
}

TEST(Chi2, CdfValues) {
  EXPECT_LT(Rel(Chi2Cdf(2, 1.0), 0.39346934028736657640), 1e-14);
  EXPECT_LT(Rel(Chi2Cdf(1, 4.0), 0.95449973610364158560), 1e-14);
  EXPECT_LT(Rel(Chi2Cdf(5, 3.0), 0.30001416412137249090), 1e-13);
  EXPECT_NEAR(Chi2Cdf(3, 2.5) + Chi2Upper(3, 2.5), 1.0, 1e-15);
}

TEST(Chi2, QuantileInvertsCdf) {
  for (int dim = 1; dim <= 12; ++dim) {
    for (double p : {0.01, 0.3, 0.5, 0.9, 0.99}) {
      EXPECT_NEAR(Chi2Cdf(dim, Chi2Quantile(dim, p)), p, 1e-12);
    }
  }
}

TEST(AdaptiveQuad, GaussianDensityIntegratesToOne) {
  const QuadResult r = AdaptiveQuad(Density, -kInf, kInf);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-13);
}

TEST(AdaptiveQuad, SemiInfiniteAndFinite) {
  EXPECT_NEAR(AdaptiveQuad(Density, -kInf, -1.0).value, Phi(-1.0), 1e-14);
  EXPECT_NEAR(AdaptiveQuad([](double x) { return x * Density(x); }, 1.0, 2.0).value,
              PartialMoment(1.0, 2.0), 1e-14);
  EXPECT_NEAR(AdaptiveQuad([](double x) { return std::sqrt(x); }, 0.0, 1.0).value,
              2.0 / 3.0, 1e-11);
}

TEST(AdaptiveQuad, ZeroIntegrandTerminates) {
  const QuadResult r = AdaptiveQuad([](double) { return 0.0; }, 0.0, 5.0);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.value, 0.0);
}

TEST(Weight, ExpOfMinusHalfSquare) {
  EXPECT_DOUBLE_EQ(Weight(0.0), 1.0);
  EXPECT_EQ(Weight(kInf), 0.0);
  EXPECT_EQ(Weight(-kInf), 0.0);
  EXPECT_DOUBLE_EQ(Density(1.0), std::exp(-0.5) * kInvSqrt2Pi);
}

}  // namespace
}  // namespace gaussiso::gauss
