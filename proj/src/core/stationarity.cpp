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

#include "gaussiso/stationarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussiso/error.hpp"
#include "gaussiso/gauss.hpp"

namespace gaussiso {
namespace {

struct Coefficients {
  double first;     // multiplies eps <b, x> and eps <b, nu>
  double rank_one;  // multiplies eps |sum phi x w|^2
  double lambda;    // multiplies Lambda in the multiplier bound
};

Coefficients CoefficientsFor(VariationScaling scaling) {
  if (scaling == VariationScaling::kExactDerivative) {
    return {gauss::kInvSqrt2Pi, 1.0 / (2.0 * gauss::kPi), gauss::kInvSqrt2Pi};
  }
  return {1.0, 1.0, 1.0};
}

double ScalarBarycenter(const IntervalUnion1D& set) {
  return Barycenter(GaussianSet(set)).front();
}

// Moves the endpoint at `x` with exterior normal `nu` outward by t; returns
// the new position and the signed mass gained.
std::pair<double, double> MoveOutward(double x, double nu, double t) {
  const double moved = x + nu * t;
  const double lo = std::min(x, moved);
  const double hi = std::max(x, moved);
  const double gained = (t >= 0 ? 1.0 : -1.0) * gauss::GaussMass(lo, hi);
  return {moved, gained};
}

// Position x' of an endpoint with normal nu such that the mass it bounds
// changes by `gain`, solved in the tail containing x.
double SolveEndpoint(double x, double nu, double gain) {
  if (x <= 0.0) return gauss::PhiInv(gauss::Phi(x) + nu * gain);
  return -gauss::PhiInv(gauss::PhiUpper(x) - nu * gain);
}

IntervalUnion1D Rebuild(const IntervalUnion1D& set,
                        const std::vector<double>& boundary) {
  std::vector<Interval> out;
  std::size_t k = 0;
  for (const Interval& iv : set.intervals()) {
    Interval next = iv;
    if (std::isfinite(iv.lo)) next.lo = boundary[k++];
    if (std::isfinite(iv.hi)) next.hi = boundary[k++];
    out.push_back(next);
  }
  return IntervalUnion1D::Normalize(std::move(out));
}

}  // namespace

std::vector<BoundaryPoint1D> BoundaryOf(const IntervalUnion1D& set) {
  std::vector<BoundaryPoint1D> points;
  for (const Interval& iv : set.intervals()) {
    if (std::isfinite(iv.lo)) {
      points.push_back({iv.lo, -1.0, gauss::Weight(iv.lo)});
    }
    if (std::isfinite(iv.hi)) {
      points.push_back({iv.hi, 1.0, gauss::Weight(iv.hi)});
    }
  }
  return points;
}

EulerReport EulerResidual(const IntervalUnion1D& set,
                          const FunctionalParams& params,
                          VariationScaling scaling) {
  const std::vector<BoundaryPoint1D> points = BoundaryOf(set);
  if (points.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         "Euler residual: set has no finite boundary point");
  }
  const Coefficients k = CoefficientsFor(scaling);
  const double b = ScalarBarycenter(set);

  EulerReport report;
  double weighted = 0.0;
  double total_weight = 0.0;
  for (const BoundaryPoint1D& p : points) {
    const double r = -p.x * p.nu + k.first * params.eps * b * p.x;
    report.residuals.push_back(r);
    weighted += p.weight * r;
    total_weight += p.weight;
  }
  report.lambda_fit = weighted / total_weight;
  for (double r : report.residuals) {
    report.max_dev = std::max(report.max_dev, std::abs(r - report.lambda_fit));
  }
  report.stationary = report.max_dev < kStationTol;
  return report;
}

bool LagrangeBoundCheck(const EulerReport& report,
                        const FunctionalParams& params,
                        VariationScaling scaling) {
  const Coefficients k = CoefficientsFor(scaling);
  return std::abs(report.lambda_fit) <= k.lambda * params.lambda_pen + 1e-10;
}

QuadraticFormJ SecondVariationForm(const IntervalUnion1D& set,
                                   const FunctionalParams& params,
                                   VariationScaling scaling) {
  QuadraticFormJ form;
  form.points = BoundaryOf(set);
  if (form.points.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         "second variation: set has no finite boundary point");
  }
  const Coefficients k = CoefficientsFor(scaling);
  const double b = ScalarBarycenter(set);
  const auto n = static_cast<Eigen::Index>(form.points.size());

  form.matrix = Eigen::MatrixXd::Zero(n, n);
  form.constraint = Eigen::VectorXd(n);
  Eigen::VectorXd xw(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const BoundaryPoint1D& p = form.points[static_cast<std::size_t>(i)];
    form.matrix(i, i) = (-1.0 + k.first * params.eps * b * p.nu) * p.weight;
    form.constraint(i) = p.weight;
    xw(i) = p.x * p.weight;
  }
  form.matrix += k.rank_one * params.eps * xw * xw.transpose();
  return form;
}

ConstrainedSpectrum PsdOnZeroAverage(const QuadraticFormJ& form) {
  ConstrainedSpectrum out;
  const Eigen::Index n = form.matrix.rows();
  if (n < 2) return out;

  // The last n-1 columns of the Householder Q of w span w's orthogonal
  // complement.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(form.constraint);
  const Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd basis = q.rightCols(n - 1);
  const Eigen::MatrixXd reduced = basis.transpose() * form.matrix * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
      0.5 * (reduced + reduced.transpose()));
  out.min_eigenvalue = eig.eigenvalues()(0);
  out.witness = basis * eig.eigenvectors().col(0);
  return out;
}

FiniteDifferenceCheck VolumePreservingSecondDifference(
    const IntervalUnion1D& set, const FunctionalParams& params,
    std::size_t moved, std::size_t balance, double h) {
  const std::vector<BoundaryPoint1D> points = BoundaryOf(set);
  if (moved >= points.size() || balance >= points.size() || moved == balance) {
    Fail(ErrorCode::kInvalidArgument,
         "finite difference: need two distinct boundary points");
  }
  const BoundaryPoint1D& pm = points[moved];
  const BoundaryPoint1D& pb = points[balance];

  auto functional_at = [&](double t) {
    std::vector<double> boundary;
    for (const BoundaryPoint1D& p : points) boundary.push_back(p.x);
    const auto [x_moved, gained] = MoveOutward(pm.x, pm.nu, t);
    boundary[moved] = x_moved;
    boundary[balance] = SolveEndpoint(pb.x, pb.nu, -gained);
    return PenalizedFunctional(GaussianSet(Rebuild(set, boundary)), params);
  };

  FiniteDifferenceCheck out;
  out.second_difference =
      (functional_at(h) - 2.0 * functional_at(0.0) + functional_at(-h)) /
      (h * h);
  out.phi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(points.size()));
  out.phi(static_cast<Eigen::Index>(moved)) = 1.0;
  out.phi(static_cast<Eigen::Index>(balance)) = -pm.weight / pb.weight;
  out.form_value =
      SecondVariationForm(set, params, VariationScaling::kExactDerivative)
          .Evaluate(out.phi);
  return out;
}

double BoundarySecondMoment(const IntervalUnion1D& set) {
  double total = 0.0;
  for (const BoundaryPoint1D& p : BoundaryOf(set)) total += p.x * p.x * p.weight;
  return total;
}

}  // namespace gaussiso
