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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "gaussiso/error.hpp"
#include "gaussiso/gauss.hpp"

namespace gaussiso {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDirectionTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double IntervalMass(const IntervalUnion1D& set) {
  double total = 0.0;
  for (const Interval& iv : set.intervals()) {
    total += gauss::GaussMass(iv.lo, iv.hi);
  }
  return total;
}

double IntervalPerimeter(const IntervalUnion1D& set) {
  double total = 0.0;
  for (double x : set.BoundaryPoints()) total += gauss::Weight(x);
  return total;
}

double IntervalBarycenter(const IntervalUnion1D& set) {
  double total = 0.0;
  for (const Interval& iv : set.intervals()) {
    total += gauss::PartialMoment(iv.lo, iv.hi);
  }
  return total;
}

// (-inf, s) for omega = +1 and (-s, inf) for omega = -1.
IntervalUnion1D AxisHalfLine(double sign, double s) {
  if (sign > 0) return IntervalUnion1D::Normalize({{-kInf, s}});
  return IntervalUnion1D::Normalize({{-s, kInf}});
}

// Mass of a ∩ b without re-normalizing, so thin overlaps still count.
double IntersectionMass(const IntervalUnion1D& a, const IntervalUnion1D& b) {
  double total = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  while (i < x.size() && j < y.size()) {
    const double lo = std::max(x[i].lo, y[j].lo);
    const double hi = std::min(x[i].hi, y[j].hi);
    if (lo < hi) total += gauss::GaussMass(lo, hi);
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

double IntervalSymmDiff(const IntervalUnion1D& set, const IntervalUnion1D& h) {
  return IntersectionMass(set, h.Complement()) +
         IntersectionMass(h, set.Complement());
}

// +1 or -1 when omega is +-e_axis to kDirectionTol, 0 otherwise.
double AxisSign(const std::vector<double>& omega, std::size_t axis) {
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (i != axis && std::abs(omega[i]) > kDirectionTol) return 0.0;
  }
  const double c = omega[axis];
  if (std::abs(c - 1.0) <= kDirectionTol) return 1.0;
  if (std::abs(c + 1.0) <= kDirectionTol) return -1.0;
  return 0.0;
}

[[noreturn]] void Misaligned(std::string_view kind) {
  Fail(ErrorCode::kUnsupported,
       std::string("symmetric difference: half-space not aligned with the ") +
           std::string(kind) + " axis");
}

// gamma(B ∩ {x_1 < s}) by integrating the sliced chi-square mass over the
// axis coordinate.
double BallHalfSpaceMass(const CenteredBall& ball, double s) {
  const double r = ball.radius;
  const double top = std::min(s, r);
  if (top <= -r) return 0.0;
  if (ball.dim == 1) return gauss::GaussMass(-r, top);
  const int rest = ball.dim - 1;
  auto slice = [r, rest](double t) {
    const double rem = r * r - t * t;
    if (rem <= 0.0) return 0.0;
    return gauss::Density(t) * gauss::Chi2Cdf(rest, rem);
  };
  gauss::QuadSettings settings;
  settings.abs_tol = 1e-15;
  settings.rel_tol = 1e-13;
  return gauss::AdaptiveQuad(slice, -r, top, settings).value;
}

}  // namespace

IntervalUnion1D IntervalUnion1D::Normalize(std::vector<Interval> raw) {
  for (const Interval& iv : raw) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi) || iv.lo > iv.hi) {
      Fail(ErrorCode::kInvalidArgument,
           "interval with lo > hi or NaN endpoint: (" + std::to_string(iv.lo) +
               ", " + std::to_string(iv.hi) + ")");
    }
  }
  std::erase_if(raw, [](const Interval& iv) {
    return !(iv.hi - iv.lo > kMergeTol);
  });
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  IntervalUnion1D out;
  for (const Interval& iv : raw) {
    if (!out.intervals_.empty() &&
        !(iv.lo - out.intervals_.back().hi > kMergeTol)) {
      out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

std::vector<double> IntervalUnion1D::BoundaryPoints() const {
  std::vector<double> points;
  points.reserve(2 * intervals_.size());
  for (const Interval& iv : intervals_) {
    if (std::isfinite(iv.lo)) points.push_back(iv.lo);
    if (std::isfinite(iv.hi)) points.push_back(iv.hi);
  }
  return points;
}

bool IntervalUnion1D::Contains(double x) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](double v, const Interval& iv) { return v < iv.hi; });
  return it != intervals_.end() && it->lo < x && x < it->hi;
}

bool IntervalUnion1D::IsHalfLine() const {
  if (intervals_.size() != 1) return false;
  const Interval& iv = intervals_.front();
  return std::isinf(iv.lo) != std::isinf(iv.hi);
}

IntervalUnion1D IntervalUnion1D::Complement() const {
  std::vector<Interval> out;
  double prev = -kInf;
  for (const Interval& iv : intervals_) {
    if (iv.lo > prev) out.push_back({prev, iv.lo});
    prev = iv.hi;
  }
  if (prev < kInf) out.push_back({prev, kInf});
  return Normalize(std::move(out));
}

IntervalUnion1D IntervalUnion1D::Intersect(const IntervalUnion1D& other) const {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& a = intervals_;
  const auto& b = other.intervals_;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].lo, b[j].lo);
    const double hi = std::min(a[i].hi, b[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return Normalize(std::move(out));
}

HalfSpace HalfSpace::Make(std::vector<double> omega, double s) {
  if (omega.empty()) {
    Fail(ErrorCode::kInvalidArgument, "half-space: empty normal vector");
  }
  const double norm =
      std::sqrt(std::inner_product(omega.begin(), omega.end(), omega.begin(),
                                   0.0));
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    Fail(ErrorCode::kInvalidArgument,
         "half-space: |omega| must be 1, got " + std::to_string(norm));
  }
  if (std::isnan(s)) Fail(ErrorCode::kInvalidArgument, "half-space: NaN level");
  return HalfSpace{std::move(omega), s};
}

SlabSet SlabSet::Make(int dim, IntervalUnion1D profile) {
  if (dim < 1) {
    Fail(ErrorCode::kInvalidArgument, "slab: dim must be >= 1");
  }
  return SlabSet{dim, std::move(profile)};
}

CenteredBall CenteredBall::Make(int dim, double radius) {
  if (dim < 1) Fail(ErrorCode::kInvalidArgument, "ball: dim must be >= 1");
  if (!(radius > 0.0) || std::isinf(radius)) {
    Fail(ErrorCode::kInvalidArgument, "ball: radius must be positive and finite");
  }
  return CenteredBall{dim, radius};
}

int GaussianSet::dim() const {
  return std::visit(Overloaded{
                        [](const IntervalUnion1D&) { return 1; },
                        [](const HalfSpace& h) { return h.dim(); },
                        [](const SlabSet& s) { return s.dim; },
                        [](const CenteredBall& b) { return b.dim; },
                    },
                    rep_);
}

std::string_view GaussianSet::kind() const {
  return std::visit(Overloaded{
                        [](const IntervalUnion1D&) { return "intervals"; },
                        [](const HalfSpace&) { return "halfspace"; },
                        [](const SlabSet&) { return "slab"; },
                        [](const CenteredBall&) { return "ball"; },
                    },
                    rep_);
}

bool GaussianSet::IsHalfSpace() const {
  return std::visit(Overloaded{
                        [](const IntervalUnion1D& u) { return u.IsHalfLine(); },
                        [](const HalfSpace&) { return true; },
                        [](const SlabSet& s) { return s.profile.IsHalfLine(); },
                        [](const CenteredBall&) { return false; },
                    },
                    rep_);
}

double Measure(const GaussianSet& set) {
  return std::visit(
      Overloaded{
          [](const IntervalUnion1D& u) { return IntervalMass(u); },
          [](const HalfSpace& h) { return gauss::Phi(h.s); },
          [](const SlabSet& s) { return IntervalMass(s.profile); },
          [](const CenteredBall& b) {
            return gauss::Chi2Cdf(b.dim, b.radius * b.radius);
          },
      },
      set.rep());
}

double Perimeter(const GaussianSet& set) {
  return std::visit(
      Overloaded{
          [](const IntervalUnion1D& u) { return IntervalPerimeter(u); },
          [](const HalfSpace& h) { return gauss::Weight(h.s); },
          [](const SlabSet& s) { return IntervalPerimeter(s.profile); },
          [](const CenteredBall& b) {
            // |S^{n-1}| R^{n-1} e^{-R^2/2} / (2 pi)^{(n-1)/2}
            const double n = b.dim;
            const double log_p = std::log(2.0) + 0.5 * n * std::log(gauss::kPi) -
                                 std::lgamma(0.5 * n) +
                                 (n - 1.0) * std::log(b.radius) -
                                 0.5 * b.radius * b.radius -
                                 0.5 * (n - 1.0) * std::log(2.0 * gauss::kPi);
            return std::exp(log_p);
          },
      },
      set.rep());
}

std::vector<double> Barycenter(const GaussianSet& set) {
  return std::visit(
      Overloaded{
          [](const IntervalUnion1D& u) {
            return std::vector<double>{IntervalBarycenter(u)};
          },
          [](const HalfSpace& h) {
            const double bs = gauss::kInvSqrt2Pi * gauss::Weight(h.s);
            std::vector<double> b(h.omega.size());
            for (std::size_t i = 0; i < b.size(); ++i) b[i] = -bs * h.omega[i];
            return b;
          },
          [](const SlabSet& s) {
            std::vector<double> b(static_cast<std::size_t>(s.dim), 0.0);
            b.back() = IntervalBarycenter(s.profile);
            return b;
          },
          [](const CenteredBall& b) {
            return std::vector<double>(static_cast<std::size_t>(b.dim), 0.0);
          },
      },
      set.rep());
}

GaussianSet Complement(const GaussianSet& set) {
  return std::visit(
      Overloaded{
          [](const IntervalUnion1D& u) -> GaussianSet { return u.Complement(); },
          [](const HalfSpace& h) -> GaussianSet {
            std::vector<double> omega = h.omega;
            for (double& c : omega) c = -c;
            return HalfSpace{std::move(omega), -h.s};
          },
          [](const SlabSet& s) -> GaussianSet {
            return SlabSet{s.dim, s.profile.Complement()};
          },
          [](const CenteredBall&) -> GaussianSet {
            Fail(ErrorCode::kUnsupported,
                 "complement of a ball has no supported representation");
          },
      },
      set.rep());
}

double SymmDiffMeasure(const GaussianSet& set, const HalfSpace& h) {
  if (h.dim() != set.dim()) {
    Fail(ErrorCode::kInvalidArgument,
         "symmetric difference: dimension mismatch (set " +
             std::to_string(set.dim()) + ", half-space " +
             std::to_string(h.dim()) + ")");
  }
  return std::visit(
      Overloaded{
          [&h](const IntervalUnion1D& u) {
            const double sign = AxisSign(h.omega, 0);
            if (sign == 0.0) Misaligned("interval");
            return IntervalSymmDiff(u, AxisHalfLine(sign, h.s));
          },
          [&h](const SlabSet& s) {
            const double sign =
                AxisSign(h.omega, static_cast<std::size_t>(s.dim - 1));
            if (sign == 0.0) Misaligned("slab");
            return IntervalSymmDiff(s.profile, AxisHalfLine(sign, h.s));
          },
          [&h](const HalfSpace& own) {
            const double dot = std::inner_product(
                own.omega.begin(), own.omega.end(), h.omega.begin(), 0.0);
            // Work on the line spanned by own.omega.
            const IntervalUnion1D mine = AxisHalfLine(1.0, own.s);
            if (std::abs(dot - 1.0) <= kDirectionTol) {
              return IntervalSymmDiff(mine, AxisHalfLine(1.0, h.s));
            }
            if (std::abs(dot + 1.0) <= kDirectionTol) {
              return IntervalSymmDiff(mine, AxisHalfLine(-1.0, h.s));
            }
            Fail(ErrorCode::kUnsupported,
                 "symmetric difference of non-parallel half-spaces");
          },
          [&h](const CenteredBall& b) {
            const double inside = BallHalfSpaceMass(b, h.s);
            const double ball = gauss::Chi2Cdf(b.dim, b.radius * b.radius);
            const double half = gauss::Phi(h.s);
            return std::max(0.0, ball - inside) + std::max(0.0, half - inside);
          },
      },
      set.rep());
}

MonteCarloEstimate MonteCarloMeasure(const GaussianSet& set,
                                     std::int64_t n_samples,
                                     std::uint64_t seed) {
  if (n_samples < 1) {
    Fail(ErrorCode::kInvalidArgument, "Monte Carlo: n_samples must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int dim = set.dim();
  std::int64_t hits = 0;
  std::vector<double> x(static_cast<std::size_t>(dim));

  for (std::int64_t k = 0; k < n_samples; ++k) {
    bool inside = std::visit(
        Overloaded{
            [&](const IntervalUnion1D& u) { return u.Contains(normal(rng)); },
            // Only the profile coordinate decides membership in a slab.
            [&](const SlabSet& s) { return s.profile.Contains(normal(rng)); },
            [&](const HalfSpace& h) {
              double dot = 0.0;
              for (int i = 0; i < dim; ++i) dot += h.omega[i] * normal(rng);
              return dot < h.s;
            },
            [&](const CenteredBall& b) {
              double r2 = 0.0;
              for (int i = 0; i < dim; ++i) {
                const double z = normal(rng);
                r2 += z * z;
              }
              return r2 <= b.radius * b.radius;
            },
        },
        set.rep());
    if (inside) ++hits;
  }
  const double n = static_cast<double>(n_samples);
  const double p = static_cast<double>(hits) / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

}  // namespace gaussiso
