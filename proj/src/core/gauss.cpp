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

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "gaussiso/error.hpp"

namespace gaussiso::gauss {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2 = std::numbers::sqrt2;

// Below this level erfc(-s/sqrt2) * e^{s^2/2} starts losing the product to
// underflow; the Mills-ratio continued fraction is used instead.
constexpr double kMillsSwitch = -26.0;

// Mills ratio R(x) = (1 - phi(x)) / density(x) for x >= 26, evaluated as the
// continued fraction 1/(x + 1/(x + 2/(x + 3/(x + ...)))) from the tail.
double MillsRatio(double x) {
  double tail = x;
  for (int k = 80; k >= 1; --k) tail = x + k / tail;
  return 1.0 / tail;
}

void RequireProbability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + ": probability outside [0,1]: " +
             std::to_string(p));
  }
}

void RequireDim(int dim) {
  if (dim < 1) {
    Fail(ErrorCode::kInvalidArgument,
         "chi-square: dimension must be >= 1, got " + std::to_string(dim));
  }
}

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  int depth;
  bool operator<(const Segment& other) const { return error < other.error; }
};

// One Gauss-Kronrod 7/15 panel on [lo, hi].
template <class F>
Segment Panel(const F& f, double lo, double hi, int depth) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double f0 = f(mid);
  double kronrod = f0 * wk[0];
  double gauss = f0 * wg[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double sum = f(mid + half * x[i]) + f(mid - half * x[i]);
    kronrod += sum * wk[i];
    if (i % 2 == 0) gauss += sum * wg[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  const double err =
      std::max(std::abs(kronrod - gauss),
               std::abs(kronrod) * 2.0 * std::numeric_limits<double>::epsilon());
  return {lo, hi, kronrod, err, depth};
}

}  // namespace

double Weight(double x) {
  if (std::isinf(x)) return 0.0;
  return std::exp(-0.5 * x * x);
}

double Density(double x) { return kInvSqrt2Pi * Weight(x); }

double Phi(double s) {
  if (s == -kInf) return 0.0;
  if (s == kInf) return 1.0;
  return 0.5 * std::erfc(-s / kSqrt2);
}

double PhiUpper(double s) { return Phi(-s); }

double PhiScaled(double s) {
  if (s == -kInf) return 0.0;
  if (s < kMillsSwitch) return kInvSqrt2Pi * MillsRatio(-s);
  return Phi(s) * std::exp(0.5 * s * s);
}

double PhiInv(double p) {
  RequireProbability(p, "PhiInv");
  if (p == 0.0) return -kInf;
  if (p == 1.0) return kInf;
  if (p < 0.5) return -kSqrt2 * boost::math::erfc_inv(2.0 * p);
  // 1 - p is exact for p >= 0.5.
  return kSqrt2 * boost::math::erfc_inv(2.0 * (1.0 - p));
}

double GaussMass(double a, double b) {
  if (!(a <= b)) {
    Fail(ErrorCode::kInvalidArgument, "GaussMass: requires a <= b");
  }
  if (a >= 0.0) return PhiUpper(a) - PhiUpper(b);
  return Phi(b) - Phi(a);
}

double PartialMoment(double a, double b) {
  if (!(a <= b)) {
    Fail(ErrorCode::kInvalidArgument, "PartialMoment: requires a <= b");
  }
  return kInvSqrt2Pi * (Weight(a) - Weight(b));
}

double Chi2Cdf(int dim, double t) {
  RequireDim(dim);
  if (!(t >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "Chi2Cdf: requires t >= 0");
  }
  if (t == 0.0) return 0.0;
  if (std::isinf(t)) return 1.0;
  return boost::math::gamma_p(0.5 * dim, 0.5 * t);
}

double Chi2Upper(int dim, double t) {
  RequireDim(dim);
  if (!(t >= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "Chi2Upper: requires t >= 0");
  }
  if (t == 0.0) return 1.0;
  if (std::isinf(t)) return 0.0;
  return boost::math::gamma_q(0.5 * dim, 0.5 * t);
}

double Chi2Quantile(int dim, double p) {
  RequireDim(dim);
  if (!(p > 0.0 && p < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "Chi2Quantile: requires p in (0,1)");
  }
  return 2.0 * boost::math::gamma_p_inv(0.5 * dim, p);
}

QuadResult AdaptiveQuad(const std::function<double(double)>& f, double a,
                        double b, const QuadSettings& settings) {
  if (!(settings.abs_tol > 0.0 && settings.rel_tol > 0.0) ||
      settings.max_depth < 1) {
    Fail(ErrorCode::kInvalidArgument, "AdaptiveQuad: invalid settings");
  }
  if (std::isnan(a) || std::isnan(b)) {
    Fail(ErrorCode::kInvalidArgument, "AdaptiveQuad: NaN bound");
  }
  if (a == b) return {0.0, 0.0, true, 0};
  if (a > b) {
    QuadResult r = AdaptiveQuad(f, b, a, settings);
    r.value = -r.value;
    return r;
  }

  // Map infinite ranges onto bounded ones; the Kronrod nodes are interior, so
  // the singular end of each map is never evaluated.
  std::function<double(double)> g;
  double lo = a;
  double hi = b;
  if (std::isinf(a) && std::isinf(b)) {
    g = [&f](double t) {
      const double d = 1.0 - t * t;
      return f(t / d) * (1.0 + t * t) / (d * d);
    };
    lo = -1.0;
    hi = 1.0;
  } else if (std::isinf(b)) {
    g = [&f, a](double t) {
      const double d = 1.0 - t;
      return f(a + t / d) / (d * d);
    };
    lo = 0.0;
    hi = 1.0;
  } else if (std::isinf(a)) {
    g = [&f, b](double t) {
      const double d = 1.0 - t;
      return f(b - t / d) / (d * d);
    };
    lo = 0.0;
    hi = 1.0;
  } else {
    g = f;
  }

  constexpr int kMaxSegments = 20000;
  std::priority_queue<Segment> heap;
  Segment first = Panel(g, lo, hi, 0);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);

  QuadResult result;
  while (true) {
    const double target =
        std::max(settings.abs_tol, settings.rel_tol * std::abs(total));
    if (total_err <= target) {
      result.converged = true;
      break;
    }
    Segment worst = heap.top();
    if (worst.depth >= settings.max_depth ||
        static_cast<int>(heap.size()) >= kMaxSegments) {
      break;
    }
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      heap.push(worst);
      break;
    }
    Segment left = Panel(g, worst.lo, mid, worst.depth + 1);
    Segment right = Panel(g, mid, worst.hi, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of incremental updates.
  double sum = 0.0;
  double err = 0.0;
  result.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  result.value = sum;
  result.error = err;
  return result;
}

}  // namespace gaussiso::gauss
