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

#ifndef GAUSSISO_SETS_HPP_
#define GAUSSISO_SETS_HPP_

// Set representations with exact Gaussian measure, Gaussian perimeter and
// barycenter.
//
// Conventions: the Gaussian perimeter weights the boundary by
// (2 pi)^{-(n-1)/2} e^{-|x|^2/2}, so a finite endpoint x of a 1D set
// contributes e^{-x^2/2}. The barycenter is the non-renormalized first moment
// int_E x dgamma.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gaussiso {

// Gaps and lengths at or below this are collapsed by normalization.
inline constexpr double kMergeTol = 1e-9;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Canonical 1D set: sorted, pairwise disjoint intervals separated by gaps
// larger than kMergeTol. Endpoints may be +-inf.
class IntervalUnion1D {
 public:
  IntervalUnion1D() = default;

  // Sorts, merges overlapping or nearly touching pieces and drops pieces of
  // length <= kMergeTol. Throws kInvalidArgument on lo > hi or NaN.
  static IntervalUnion1D Normalize(std::vector<Interval> raw);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }

  // Finite endpoints in ascending order.
  std::vector<double> BoundaryPoints() const;

  bool Contains(double x) const;

  // Single ray (-inf, t) or (t, inf).
  bool IsHalfLine() const;

  IntervalUnion1D Complement() const;
  IntervalUnion1D Intersect(const IntervalUnion1D& other) const;

  friend bool operator==(const IntervalUnion1D&,
                         const IntervalUnion1D&) = default;

 private:
  std::vector<Interval> intervals_;
};

// {x : <x, omega> < s}.
struct HalfSpace {
  std::vector<double> omega;
  double s = 0.0;

  // Validates |omega| = 1 to 1e-12 and a non-NaN level.
  static HalfSpace Make(std::vector<double> omega, double s);
  int dim() const { return static_cast<int>(omega.size()); }
};

// R^{dim-1} x profile, the profile living on the last axis.
struct SlabSet {
  int dim = 1;
  IntervalUnion1D profile;

  static SlabSet Make(int dim, IntervalUnion1D profile);
};

// Centered ball of the given radius.
struct CenteredBall {
  int dim = 1;
  double radius = 1.0;

  static CenteredBall Make(int dim, double radius);
};

class GaussianSet {
 public:
  using Rep = std::variant<IntervalUnion1D, HalfSpace, SlabSet, CenteredBall>;

  GaussianSet(IntervalUnion1D v) : rep_(std::move(v)) {}  // NOLINT
  GaussianSet(HalfSpace v) : rep_(std::move(v)) {}        // NOLINT
  GaussianSet(SlabSet v) : rep_(std::move(v)) {}          // NOLINT
  GaussianSet(CenteredBall v) : rep_(v) {}                // NOLINT

  const Rep& rep() const { return rep_; }
  int dim() const;
  std::string_view kind() const;

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&rep_);
  }

  // Half-space, or a 1D / slab representation whose profile is one ray.
  bool IsHalfSpace() const;

 private:
  Rep rep_;
};

double Measure(const GaussianSet& set);
double Perimeter(const GaussianSet& set);
std::vector<double> Barycenter(const GaussianSet& set);

// Complement as a representation of the same kind. Balls are rejected with
// kUnsupported.
GaussianSet Complement(const GaussianSet& set);

// Gaussian measure of E symmetric-difference H. For 1D and slab sets the
// half-space must be parallel to the representation axis; half-space sets
// require h parallel or antiparallel; balls accept any direction.
double SymmDiffMeasure(const GaussianSet& set, const HalfSpace& h);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

// Fraction of standard Gaussian samples falling in the set. Deterministic in
// the seed.
MonteCarloEstimate MonteCarloMeasure(const GaussianSet& set,
                                     std::int64_t n_samples,
                                     std::uint64_t seed);

}  // namespace gaussiso

#endif  // GAUSSISO_SETS_HPP_
