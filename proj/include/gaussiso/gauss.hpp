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

#ifndef GAUSSISO_GAUSS_HPP_
#define GAUSSISO_GAUSS_HPP_

// Scalar special functions for the one-dimensional standard Gaussian and the
// adaptive integrator that the rest of the library uses as an oracle.
//
// Extended reals are plain doubles: -inf and +inf are legal endpoints and every
// weight/moment formula treats exp(-inf) as 0.

#include <functional>
#include <numbers>

namespace gaussiso::gauss {

inline constexpr double kSqrt2Pi = 2.50662827463100050241576528481104525;
inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934381868;
inline constexpr double kPi = std::numbers::pi;

// e^{-x^2/2}; 0 at +-inf.
double Weight(double x);

// Standard normal density.
double Density(double x);

// phi(s) = P(Z < s). Monotone, phi(-inf) = 0, phi(+inf) = 1.
double Phi(double s);

// 1 - phi(s), computed without cancellation.
double PhiUpper(double s);

// phi(s) * e^{s^2/2}. Finite for every s <= 0, including s far below the
// underflow threshold of phi itself (tends to 0 like 1/(|s| sqrt(2 pi))).
double PhiScaled(double s);

// Inverse of Phi. Returns -inf at 0 and +inf at 1; throws kInvalidArgument
// outside [0, 1].
double PhiInv(double p);

// Gaussian mass of (a, b), i.e. phi(b) - phi(a), evaluated in whichever tail
// keeps the subtraction well conditioned. Requires a <= b.
double GaussMass(double a, double b);

// First Gaussian moment of (a, b): (e^{-a^2/2} - e^{-b^2/2}) / sqrt(2 pi).
double PartialMoment(double a, double b);

// P(|X|^2 <= t) for X a dim-dimensional standard Gaussian.
double Chi2Cdf(int dim, double t);

// 1 - Chi2Cdf(dim, t) without cancellation.
double Chi2Upper(int dim, double t);

// Smallest t with Chi2Cdf(dim, t) >= p, p in (0, 1).
double Chi2Quantile(int dim, double p);

struct QuadSettings {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 60;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
  int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) quadrature on (a, b). Infinite
// endpoints are mapped onto a finite interval. converged is set when the
// summed error estimate is below max(abs_tol, rel_tol * |value|); a subinterval
// is never bisected beyond max_depth.
QuadResult AdaptiveQuad(const std::function<double(double)>& f, double a,
                        double b, const QuadSettings& settings = {});

}  // namespace gaussiso::gauss

#endif  // GAUSSISO_GAUSS_HPP_
