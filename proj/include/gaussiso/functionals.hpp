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

#ifndef GAUSSISO_FUNCTIONALS_HPP_
#define GAUSSISO_FUNCTIONALS_HPP_

// Derived quantities of a set E with gamma(E) = phi(s): deficit, strong and
// Fraenkel asymmetries, excess and the penalized functional
//   F(E) = P(E) + (eps/2) |b(E)|^2 + Lambda |gamma(E) - phi(s)|.
// Every s-dependent quantity takes s from the set's own mass.

#include <optional>
#include <string>
#include <vector>

#include "gaussiso/gauss.hpp"
#include "gaussiso/sets.hpp"

namespace gaussiso {

// 80 pi^2 sqrt(2 pi).
inline constexpr double kStabilityConstant =
    80.0 * gauss::kPi * gauss::kPi * gauss::kSqrt2Pi;

// |b| below this is treated as a vanishing barycenter.
inline constexpr double kZeroBarycenterTol = 1e-12;

struct FunctionalParams {
  double s = 0.0;
  double eps = 0.0;
  double lambda_pen = 0.0;

  // Throws kInvalidArgument unless eps > 0 and lambda_pen > 0.
  static FunctionalParams Make(double s, double eps, double lambda_pen);
};

// Constants that make half-spaces the unique minimizers of F at mass phi(s).
// Defined for s <= 0; a positive level is reflected to -s (the complement has
// the same asymmetry and deficit) and flagged.
struct StabilityConstants {
  double eps = 0.0;
  double lambda_pen = 0.0;
  double c = kStabilityConstant;
  bool reflected = false;
};

StabilityConstants StabilityConstantsAt(double s);

// FunctionalParams{s, eps(s), Lambda(s)} with the constants above.
FunctionalParams StabilityParams(double s);

// b_s = e^{-s^2/2} / sqrt(2 pi), the largest barycenter norm at mass phi(s).
double BarycenterMax(double s);

// phi^{-1}(gamma(E)). Throws kInvalidArgument unless gamma(E) is in (0, 1).
double MassLevel(const GaussianSet& set);

double Deficit(const GaussianSet& set);

// beta = b_s - |b(E)|.
double StrongAsymmetry(const GaussianSet& set);

// beta as min over directions of |b(E) + b_s omega|, evaluated over a
// candidate set of directions that contains the minimizer -b/|b|.
double StrongAsymmetryByDirection(const GaussianSet& set);

// gamma(E symm-diff H_{omega,s}) with omega = -b/|b|, or 2 phi(-|s|) when the
// barycenter vanishes.
double FraenkelHat(const GaussianSet& set);

// Fraenkel asymmetry for families whose symmetry pins the optimal direction:
// 1D and slab sets (min over +-axis), balls (any direction), half-spaces.
double FraenkelAxis(const GaussianSet& set);

// min_omega of the weighted boundary integral of |nu - omega|^2, computed from
// the boundary directly.
double Excess(const GaussianSet& set);

struct ExcessPair {
  double direct = 0.0;
  double via_identity = 0.0;  // 2 D + 2 sqrt(2 pi) beta
};

ExcessPair ExcessIdentity(const GaussianSet& set);

double PenalizedFunctional(const GaussianSet& set,
                           const FunctionalParams& params);

// F(H_t) for a half-space at level t: e^{-t^2/2} + eps/(4 pi) e^{-t^2}
// + Lambda |phi(t) - phi(s)|.
double HalfSpaceFunctional(double t, const FunctionalParams& params);

struct QuantityBundle {
  double s = 0.0;
  double gamma = 0.0;
  double perimeter = 0.0;
  std::vector<double> barycenter;
  double b_s = 0.0;
  double deficit = 0.0;
  double beta = 0.0;
  double alpha_hat = 0.0;
  double excess = 0.0;
  // Present only when a target level was requested: gamma - phi(target).
  std::optional<double> target_s;
  std::optional<double> mass_mismatch;
  std::vector<std::string> notes;
};

QuantityBundle ComputeBundle(const GaussianSet& set,
                             std::optional<double> target_s = std::nullopt);

double Norm(const std::vector<double>& v);

}  // namespace gaussiso

#endif  // GAUSSISO_FUNCTIONALS_HPP_
