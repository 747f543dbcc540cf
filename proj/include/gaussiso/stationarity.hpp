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

#ifndef GAUSSISO_STATIONARITY_HPP_
#define GAUSSISO_STATIONARITY_HPP_

// First and second order optimality of F on 1D sets.
//
// On a 0-dimensional boundary the mean curvature, |B_E|^2 and tangential
// derivatives all vanish, so the Euler equation reduces to
//   -x nu + k1 eps b x = lambda
// at every boundary point and the second variation to the k x k form
//   J[phi] = sum_i (-1 + k1 eps b nu_i) w_i phi_i^2 + k2 eps (sum_i x_i w_i phi_i)^2
// on test vectors with sum_i w_i phi_i = 0, where w_i = e^{-x_i^2/2}.
//
// The coefficients k1, k2 depend on how the derivative of the barycenter is
// normalized; see VariationScaling.

#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "gaussiso/functionals.hpp"
#include "gaussiso/sets.hpp"

namespace gaussiso {

inline constexpr double kStationTol = 1e-8;

enum class VariationScaling {
  // Derivatives of b and gamma taken as plain boundary integrals against the
  // weighted boundary measure: k1 = k2 = 1 and the multiplier bound is Lambda.
  kBoundaryWeighted,
  // Exact derivatives of b = int x dgamma and gamma: k1 = 1/sqrt(2 pi),
  // k2 = 1/(2 pi), multiplier bound Lambda/sqrt(2 pi). This is the form that
  // equals the second derivative of F along volume-preserving deformations.
  kExactDerivative,
};

struct BoundaryPoint1D {
  double x = 0.0;
  double nu = 0.0;  // exterior normal, +-1
  double weight = 0.0;
};

std::vector<BoundaryPoint1D> BoundaryOf(const IntervalUnion1D& set);

struct EulerReport {
  std::vector<double> residuals;
  double lambda_fit = 0.0;  // weight-averaged residual
  double max_dev = 0.0;     // max |residual - lambda_fit|
  bool stationary = false;  // max_dev < kStationTol
};

EulerReport EulerResidual(
    const IntervalUnion1D& set, const FunctionalParams& params,
    VariationScaling scaling = VariationScaling::kBoundaryWeighted);

// |lambda_fit| <= Lambda (scaled per VariationScaling) + 1e-10.
bool LagrangeBoundCheck(
    const EulerReport& report, const FunctionalParams& params,
    VariationScaling scaling = VariationScaling::kBoundaryWeighted);

struct QuadraticFormJ {
  Eigen::MatrixXd matrix;      // symmetric k x k
  Eigen::VectorXd constraint;  // boundary weights w_i
  std::vector<BoundaryPoint1D> points;

  double Evaluate(const Eigen::VectorXd& phi) const {
    return phi.dot(matrix * phi);
  }
};

QuadraticFormJ SecondVariationForm(
    const IntervalUnion1D& set, const FunctionalParams& params,
    VariationScaling scaling = VariationScaling::kBoundaryWeighted);

struct ConstrainedSpectrum {
  // +inf when the admissible subspace is trivial (k < 2).
  double min_eigenvalue = std::numeric_limits<double>::infinity();
  Eigen::VectorXd witness;  // unit vector with sum w_i phi_i = 0
};

// Smallest Rayleigh quotient phi^T M phi / |phi|^2 over the hyperplane
// sum_i w_i phi_i = 0.
ConstrainedSpectrum PsdOnZeroAverage(const QuadraticFormJ& form);

// Central second difference of F along the curve that moves boundary point
// `moved` by t along its normal and re-solves boundary point `balance` so the
// Gaussian mass is exactly unchanged. The matching first-order test vector is
// phi_moved = 1, phi_balance = -w_moved / w_balance.
struct FiniteDifferenceCheck {
  double second_difference = 0.0;
  double form_value = 0.0;  // J[phi] with VariationScaling::kExactDerivative
  Eigen::VectorXd phi;
};

FiniteDifferenceCheck VolumePreservingSecondDifference(
    const IntervalUnion1D& set, const FunctionalParams& params,
    std::size_t moved, std::size_t balance, double h = 1e-4);

// Sum over boundary points of x^2 w, the 1D value of
// int_{boundary} <x, omega>^2 dH_gamma.
double BoundarySecondMoment(const IntervalUnion1D& set);

}  // namespace gaussiso

#endif  // GAUSSISO_STATIONARITY_HPP_
