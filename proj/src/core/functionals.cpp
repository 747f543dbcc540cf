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

#include "gaussiso/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gaussiso/error.hpp"
#include "gaussiso/gauss.hpp"

namespace gaussiso {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<double> Axis(int dim, std::size_t axis, double sign) {
  std::vector<double> e(static_cast<std::size_t>(dim), 0.0);
  e[axis] = sign;
  return e;
}

std::vector<double> Negated(const std::vector<double>& v) {
  std::vector<double> out(v);
  for (double& c : out) c = -c;
  return out;
}

// Excess of a 1D profile: nu = -1 at left endpoints, +1 at right ones, and
// omega ranges over {-1, +1}.
double ProfileExcess(const IntervalUnion1D& profile) {
  double best = std::numeric_limits<double>::infinity();
  for (double omega : {-1.0, 1.0}) {
    double total = 0.0;
    for (const Interval& iv : profile.intervals()) {
      if (std::isfinite(iv.lo)) {
        total += (-1.0 - omega) * (-1.0 - omega) * gauss::Weight(iv.lo);
      }
      if (std::isfinite(iv.hi)) {
        total += (1.0 - omega) * (1.0 - omega) * gauss::Weight(iv.hi);
      }
    }
    best = std::min(best, total);
  }
  return best;
}

// Surface average of |nu - e_1|^2 = 2 - 2 cos(theta) over the unit sphere in
// R^dim, using the polar-angle density sin^{dim-2}.
double SphereMisalignment(int dim) {
  const int power = dim - 2;
  auto density = [power](double theta) {
    return std::pow(std::sin(theta), power);
  };
  auto weighted = [power](double theta) {
    return (2.0 - 2.0 * std::cos(theta)) * std::pow(std::sin(theta), power);
  };
  gauss::QuadSettings settings;
  settings.abs_tol = 1e-15;
  settings.rel_tol = 1e-14;
  const double num = gauss::AdaptiveQuad(weighted, 0.0, gauss::kPi, settings).value;
  const double den = gauss::AdaptiveQuad(density, 0.0, gauss::kPi, settings).value;
  return num / den;
}

}  // namespace

double Norm(const std::vector<double>& v) {
  double total = 0.0;
  for (double c : v) total += c * c;
  return std::sqrt(total);
}

FunctionalParams FunctionalParams::Make(double s, double eps,
                                        double lambda_pen) {
  if (std::isnan(s)) Fail(ErrorCode::kInvalidArgument, "params: NaN level s");
  if (!(eps > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "params: eps must be positive");
  }
  if (!(lambda_pen > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "params: Lambda must be positive");
  }
  return FunctionalParams{s, eps, lambda_pen};
}

StabilityConstants StabilityConstantsAt(double s) {
  if (std::isnan(s)) Fail(ErrorCode::kInvalidArgument, "constants: NaN level");
  StabilityConstants out;
  if (s > 0.0) {
    s = -s;
    out.reflected = true;
  }
  const double s2 = s * s;
  out.eps = std::exp(0.5 * s2) / (40.0 * gauss::kPi * gauss::kPi * (1.0 + s2));
  // sqrt(2) e^{-s^2/2} / phi(s), evaluated through the scaled tail.
  out.lambda_pen = std::numbers::sqrt2 / gauss::PhiScaled(s);
  return out;
}

FunctionalParams StabilityParams(double s) {
  const StabilityConstants c = StabilityConstantsAt(s);
  return FunctionalParams::Make(s, c.eps, c.lambda_pen);
}

double BarycenterMax(double s) { return gauss::kInvSqrt2Pi * gauss::Weight(s); }

double MassLevel(const GaussianSet& set) {
  const double m = Measure(set);
  if (!(m > 0.0 && m < 1.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "mass level undefined: gamma(E) = " + std::to_string(m) +
             " is not in (0,1)");
  }
  return gauss::PhiInv(m);
}

double Deficit(const GaussianSet& set) {
  const double s = MassLevel(set);
  return Perimeter(set) - gauss::Weight(s);
}

double StrongAsymmetry(const GaussianSet& set) {
  const double s = MassLevel(set);
  return BarycenterMax(s) - Norm(Barycenter(set));
}

double StrongAsymmetryByDirection(const GaussianSet& set) {
  const double bs = BarycenterMax(MassLevel(set));
  const std::vector<double> b = Barycenter(set);
  const double norm = Norm(b);
  const int dim = static_cast<int>(b.size());

  std::vector<std::vector<double>> candidates;
  for (int i = 0; i < dim; ++i) {
    candidates.push_back(Axis(dim, static_cast<std::size_t>(i), 1.0));
    candidates.push_back(Axis(dim, static_cast<std::size_t>(i), -1.0));
  }
  if (norm >= kZeroBarycenterTol) {
    std::vector<double> omega = Negated(b);
    for (double& c : omega) c /= norm;
    candidates.push_back(std::move(omega));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& omega : candidates) {
    std::vector<double> diff(b);
    for (int i = 0; i < dim; ++i) diff[i] += bs * omega[i];
    best = std::min(best, Norm(diff));
  }
  return best;
}

double FraenkelHat(const GaussianSet& set) {
  const double s = MassLevel(set);
  const std::vector<double> b = Barycenter(set);
  const double norm = Norm(b);
  if (norm < kZeroBarycenterTol) return 2.0 * gauss::Phi(-std::abs(s));

  std::vector<double> omega = Negated(b);
  for (double& c : omega) c /= norm;
  // 1D and slab barycenters lie on the profile axis; snap to the exact axis
  // vector so the alignment check sees +-e_n.
  if (set.get_if<IntervalUnion1D>() || set.get_if<SlabSet>()) {
    const double sign = omega.back() > 0 ? 1.0 : -1.0;
    omega = Axis(set.dim(), omega.size() - 1, sign);
  }
  return SymmDiffMeasure(set, HalfSpace{std::move(omega), s});
}

double FraenkelAxis(const GaussianSet& set) {
  const double s = MassLevel(set);
  return std::visit(
      Overloaded{
          [&](const IntervalUnion1D&) {
            return std::min(SymmDiffMeasure(set, HalfSpace{{1.0}, s}),
                            SymmDiffMeasure(set, HalfSpace{{-1.0}, s}));
          },
          [&](const SlabSet& slab) {
            const auto axis = static_cast<std::size_t>(slab.dim - 1);
            return std::min(
                SymmDiffMeasure(set, HalfSpace{Axis(slab.dim, axis, 1.0), s}),
                SymmDiffMeasure(set, HalfSpace{Axis(slab.dim, axis, -1.0), s}));
          },
          [&](const HalfSpace& h) {
            return std::min(SymmDiffMeasure(set, HalfSpace{h.omega, s}),
                            SymmDiffMeasure(set, HalfSpace{Negated(h.omega), s}));
          },
          [&](const CenteredBall& ball) {
            return SymmDiffMeasure(set, HalfSpace{Axis(ball.dim, 0, 1.0), s});
          },
      },
      set.rep());
}

double Excess(const GaussianSet& set) {
  return std::visit(
      Overloaded{
          [](const IntervalUnion1D& u) { return ProfileExcess(u); },
          [](const SlabSet& slab) { return ProfileExcess(slab.profile); },
          // The normal is omega everywhere on the boundary hyperplane.
          [](const HalfSpace&) { return 0.0; },
          [&set](const CenteredBall& ball) {
            if (ball.dim == 1) {
              return ProfileExcess(IntervalUnion1D::Normalize(
                  {{-ball.radius, ball.radius}}));
            }
            // Rotation invariance: every omega gives the same value.
            return Perimeter(set) * SphereMisalignment(ball.dim);
          },
      },
      set.rep());
}

ExcessPair ExcessIdentity(const GaussianSet& set) {
  ExcessPair out;
  out.direct = Excess(set);
  out.via_identity =
      2.0 * Deficit(set) + 2.0 * gauss::kSqrt2Pi * StrongAsymmetry(set);
  return out;
}

double PenalizedFunctional(const GaussianSet& set,
                           const FunctionalParams& params) {
  const std::vector<double> b = Barycenter(set);
  double b2 = 0.0;
  for (double c : b) b2 += c * c;
  return Perimeter(set) + 0.5 * params.eps * b2 +
         params.lambda_pen * std::abs(Measure(set) - gauss::Phi(params.s));
}

double HalfSpaceFunctional(double t, const FunctionalParams& params) {
  const double w = gauss::Weight(t);
  return w + params.eps / (4.0 * gauss::kPi) * w * w +
         params.lambda_pen * std::abs(gauss::Phi(t) - gauss::Phi(params.s));
}

QuantityBundle ComputeBundle(const GaussianSet& set,
                             std::optional<double> target_s) {
  QuantityBundle q;
  q.gamma = Measure(set);
  q.s = MassLevel(set);
  q.perimeter = Perimeter(set);
  q.barycenter = Barycenter(set);
  q.b_s = BarycenterMax(q.s);
  q.deficit = q.perimeter - gauss::Weight(q.s);
  q.beta = q.b_s - Norm(q.barycenter);
  q.alpha_hat = FraenkelHat(set);
  q.excess = Excess(set);
  if (q.s > 0.0) {
    q.notes.emplace_back(
        "s > 0: deficit, beta and alpha_hat coincide with those of the "
        "complement at level -s");
  }
  if (target_s) {
    q.target_s = *target_s;
    q.mass_mismatch = q.gamma - gauss::Phi(*target_s);
  }
  return q;
}

}  // namespace gaussiso
