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

#ifndef GAUSSISO_TESTS_GENERATORS_HPP_
#define GAUSSISO_TESTS_GENERATORS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "gaussiso/gauss.hpp"
#include "gaussiso/sets.hpp"

namespace gaussiso::testing {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Union of 1..k_max components with sorted N(0, scale^2) endpoints; no
// rejection, so masses near 0 or 1 and tiny pieces do occur.
inline IntervalUnion1D AnyUnion(std::mt19937_64& rng, int k_max = 5,
                                double scale = 2.0) {
  std::uniform_int_distribution<int> count(1, k_max);
  std::bernoulli_distribution coin(0.5);
  std::normal_distribution<double> endpoint(0.0, scale);
  const int k = count(rng);
  const bool left = coin(rng);
  const bool right = coin(rng) && !(k == 1 && left);
  const int n = 2 * k - left - right;
  std::vector<double> e(static_cast<std::size_t>(n));
  for (double& x : e) x = endpoint(rng);
  std::sort(e.begin(), e.end());
  std::vector<Interval> raw;
  std::size_t i = 0;
  if (left) raw.push_back({-kInf, e[i++]});
  for (int b = 0; b < k - left - right; ++b, i += 2) {
    raw.push_back({e[i], e[i + 1]});
  }
  if (right) raw.push_back({e[i], kInf});
  return IntervalUnion1D::Normalize(std::move(raw));
}

// Like AnyUnion but with mass in (0.01, 0.99).
inline IntervalUnion1D ProperUnion(std::mt19937_64& rng, int k_max = 5) {
  for (;;) {
    IntervalUnion1D u = AnyUnion(rng, k_max);
    const double m = Measure(u);
    if (m > 0.01 && m < 0.99) return u;
  }
}

inline std::vector<double> UnitVector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(dim));
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& x : v) {
      x = n(rng);
      norm += x * x;
    }
  } while (norm < 1e-6);
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

inline CenteredBall ProperBall(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dims(2, 10);
  std::uniform_real_distribution<double> mass(0.01, 0.99);
  const int dim = dims(rng);
  return CenteredBall::Make(dim, std::sqrt(gauss::Chi2Quantile(dim, mass(rng))));
}

inline SlabSet ProperSlab(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dims(2, 10);
  const int dim = dims(rng);
  return SlabSet::Make(dim, ProperUnion(rng, 3));
}

}  // namespace gaussiso::testing

#endif  // GAUSSISO_TESTS_GENERATORS_HPP_
