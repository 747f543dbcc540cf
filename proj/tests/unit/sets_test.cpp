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

#include "gaussiso/sets.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "gaussiso/error.hpp"
#include "gaussiso/gauss.hpp"

namespace gaussiso {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kA = -0.67448975019608174320;  // Phi(kA) = 1/4

IntervalUnion1D E0() { return IntervalUnion1D::Normalize({{-kInf, kA}, {-kA, kInf}}); }

TEST(Normalize, SortsAndMerges) {
  const IntervalUnion1D u =
      IntervalUnion1D::Normalize({{3.0, 4.0}, {0.0, 1.0}, {0.5, 2.0}});
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u.intervals()[0], (Interval{0.0, 2.0}));
  EXPECT_EQ(u.intervals()[1], (Interval{3.0, 4.0}));
}

TEST(Normalize, MergesTouchingAndDropsSlivers) {
  const IntervalUnion1D u = IntervalUnion1D::Normalize(
      {{0.0, 1.0}, {1.0 + 1e-12, 2.0}, {5.0, 5.0 + 1e-12}});
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u.intervals()[0], (Interval{0.0, 2.0}));
}

TEST(Normalize, RejectsInvalidInput) {
  EXPECT_THROW(IntervalUnion1D::Normalize({{1.0, 0.0}}), Error);
  EXPECT_THROW(IntervalUnion1D::Normalize({{std::nan(""), 0.0}}), Error);
}

TEST(IntervalUnion1D, BoundaryContainsHalfLine) {
  const IntervalUnion1D e = E0();
  EXPECT_EQ(e.BoundaryPoints(), (std::vector<double>{kA, -kA}));
  EXPECT_TRUE(e.Contains(-3.0));
  EXPECT_FALSE(e.Contains(0.0));
  EXPECT_FALSE(e.IsHalfLine());
  EXPECT_TRUE(IntervalUnion1D::Normalize({{-kInf, 1.0}}).IsHalfLine());
  EXPECT_TRUE(IntervalUnion1D::Normalize({{1.0, kInf}}).IsHalfLine());
  EXPECT_FALSE(IntervalUnion1D::Normalize({{-1.0, 1.0}}).IsHalfLine());
}

TEST(IntervalUnion1D, ComplementAndIntersect) {
  const IntervalUnion1D e = E0();
  const IntervalUnion1D c = e.Complement();
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.intervals()[0], (Interval{kA, -kA}));
  EXPECT_EQ(c.Complement(), e);
  EXPECT_TRUE(e.Intersect(c).empty());
  const IntervalUnion1D h = IntervalUnion1D::Normalize({{-kInf, 0.0}});
  EXPECT_EQ(e.Intersect(h), IntervalUnion1D::Normalize({{-kInf, kA}}));
}

TEST(Measure, TwoRaySetAtHalfMass) {
  const GaussianSet e = E0();
  EXPECT_NEAR(Measure(e), 0.5, 1e-15);
  EXPECT_NEAR(Perimeter(e), 2.0 * std::exp(-0.5 * kA * kA), 1e-15);
  EXPECT_NEAR(Perimeter(e), 1.5930954842106313764, 1e-15);
  EXPECT_NEAR(Barycenter(e)[0], 0.0, 1e-17);
}

TEST(Measure, HalfLineBarycenter) {
  const GaussianSet h = IntervalUnion1D::Normalize({{-kInf, -1.0}});
  EXPECT_NEAR(Barycenter(h)[0], -std::exp(-0.5) * gauss::kInvSqrt2Pi, 1e-16);
  EXPECT_NEAR(Perimeter(h), std::exp(-0.5), 1e-16);
}

TEST(HalfSpace, RequiresUnitNormal) {
  EXPECT_THROW(HalfSpace::Make({1.0, 1.0}, 0.0), Error);
  EXPECT_THROW(HalfSpace::Make({}, 0.0), Error);
  const double r = 1.0 / std::sqrt(2.0);
  const GaussianSet h = HalfSpace::Make({r, r}, -1.0);
  EXPECT_NEAR(Measure(h), gauss::Phi(-1.0), 1e-16);
  EXPECT_NEAR(Perimeter(h), std::exp(-0.5), 1e-16);
  const std::vector<double> b = Barycenter(h);
  EXPECT_NEAR(b[0], -r * std::exp(-0.5) * gauss::kInvSqrt2Pi, 1e-16);
  EXPECT_TRUE(h.IsHalfSpace());
}

TEST(Ball, MeasureAndPerimeterOracles) {
  const GaussianSet b21 = CenteredBall::Make(2, 1.0);
  EXPECT_NEAR(Measure(b21), 0.39346934028736657640, 1e-15);
  EXPECT_NEAR(Perimeter(b21), 1.5203469010662808056, 1e-14);
  const GaussianSet b32 = CenteredBall::Make(3, 2.0);
  EXPECT_NEAR(Measure(b32), 0.73853587005088937780, 1e-15);
  EXPECT_NEAR(Perimeter(b32), 1.0826822658929015352, 1e-14);
  const GaussianSet b10 = CenteredBall::Make(10, 3.0);
  EXPECT_NEAR(Perimeter(b10), 1.4273314451589230944, 1e-13);
  for (double x : Barycenter(b10)) EXPECT_EQ(x, 0.0);
}

TEST(Ball, RejectsBadParameters) {
  EXPECT_THROW(CenteredBall::Make(0, 1.0), Error);
  EXPECT_THROW(CenteredBall::Make(2, -1.0), Error);
  try {
    Complement(CenteredBall::Make(2, 1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

TEST(SymmDiff, BallAgainstHalfSpaceQuadratureOracle) {
  const CenteredBall b = CenteredBall::Make(3, 2.0);
  const HalfSpace h = HalfSpace::Make({0.0, 1.0, 0.0}, -0.5);
  const double inside = 0.20480095700802561124;
  EXPECT_NEAR(SymmDiffMeasure(b, h),
              Measure(b) + gauss::Phi(-0.5) - 2.0 * inside, 1e-12);
}

TEST(SymmDiff, IntervalAgainstAxisHalfSpace) {
  const GaussianSet e = E0();
  EXPECT_NEAR(SymmDiffMeasure(e, HalfSpace::Make({1.0}, 0.0)), 0.5, 1e-15);
  EXPECT_NEAR(SymmDiffMeasure(e, HalfSpace::Make({-1.0}, 0.0)), 0.5, 1e-15);
  const GaussianSet h = IntervalUnion1D::Normalize({{-kInf, 0.3}});
  EXPECT_NEAR(SymmDiffMeasure(h, HalfSpace::Make({1.0}, 0.3)), 0.0, 1e-16);
  EXPECT_NEAR(SymmDiffMeasure(h, HalfSpace::Make({-1.0}, -0.3)), 1.0, 1e-15);
}

TEST(SymmDiff, SlabRequiresAxisDirection) {
  const GaussianSet slab = SlabSet::Make(3, E0());
  EXPECT_NEAR(SymmDiffMeasure(slab, HalfSpace::Make({0.0, 0.0, 1.0}, 0.0)), 0.5,
              1e-15);
  EXPECT_THROW(SymmDiffMeasure(slab, HalfSpace::Make({1.0, 0.0, 0.0}, 0.0)),
               Error);
}

TEST(Slab, MatchesProfile) {
  const SlabSet s = SlabSet::Make(4, E0());
  EXPECT_EQ(GaussianSet(s).dim(), 4);
  EXPECT_NEAR(Measure(s), 0.5, 1e-15);
  EXPECT_NEAR(Perimeter(s), Perimeter(E0()), 1e-16);
  const std::vector<double> b = Barycenter(s);
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(b[0], 0.0);
  EXPECT_TRUE(GaussianSet(SlabSet::Make(2, IntervalUnion1D::Normalize({{0.0, kInf}})))
                  .IsHalfSpace());
}

TEST(MonteCarlo, AgreesWithClosedFormsAtMillionSamples) {
  const GaussianSet sets[] = {
      E0(),
      IntervalUnion1D::Normalize({{-1.0, 0.5}, {1.5, 3.0}}),
      CenteredBall::Make(5, 2.0),
      SlabSet::Make(3, IntervalUnion1D::Normalize({{-0.2, 1.1}})),
      HalfSpace::Make({0.6, 0.8}, 0.4),
  };
  std::uint64_t seed = 11;
  for (const GaussianSet& set : sets) {
    const MonteCarloEstimate est = MonteCarloMeasure(set, 1000000, seed++);
    const double p = Measure(set);
    EXPECT_LT(std::abs(est.estimate - p), 5.0 * std::sqrt(p * (1 - p) / 1e6))
        << set.kind();
  }
}

TEST(MonteCarlo, DeterministicInSeed) {
  const GaussianSet b = CenteredBall::Make(3, 1.5);
  EXPECT_EQ(MonteCarloMeasure(b, 10000, 5).estimate,
            MonteCarloMeasure(b, 10000, 5).estimate);
}

}  // namespace
}  // namespace gaussiso
