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

#ifndef GAUSSISO_OPTIMIZER_HPP_
#define GAUSSISO_OPTIMIZER_HPP_

// Multistart Nelder-Mead minimization of F over unions of at most k_max
// intervals, the half-space profile f(t) = F(H_t), and the two-ray family
// E_s = (-inf, a(s)) u (-a(s), inf) with 2 Phi(a(s)) = Phi(s).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussiso/functionals.hpp"
#include "gaussiso/sets.hpp"

namespace gaussiso {

// Which components a candidate set has: an optional left ray (-inf, e0), some
// bounded intervals, an optional right ray (e_last, inf).
struct IntervalTemplate {
  bool left_ray = false;
  int bounded = 0;
  bool right_ray = false;

  int components() const { return bounded + (left_ray ? 1 : 0) + (right_ray ? 1 : 0); }
  int endpoints() const { return 2 * bounded + (left_ray ? 1 : 0) + (right_ray ? 1 : 0); }
  std::string Name() const;
  friend bool operator==(const IntervalTemplate&, const IntervalTemplate&) = default;
};

// Every template with 1..k_max components and at least one finite endpoint,
// ordered by component count.
std::vector<IntervalTemplate> EnumerateTemplates(int k_max);

struct KIntervalConfig {
  IntervalTemplate layout;
  std::vector<double> endpoints;

  // nullopt unless the endpoints are strictly increasing and match the layout.
  std::optional<IntervalUnion1D> Decode() const;
};

struct OptimizerSettings {
  int multistarts = 64;  // random starts, spread round-robin over templates
  std::uint64_t seed = 0;
  double step_tol = 1e-10;
  double f_tol = 1e-12;
  int max_iters = 10000;
  int jobs = 1;

  void Validate() const;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int restarts = 0;
  bool converged = false;
};

// Nelder-Mead with standard coefficients, restarted from the incumbent until a
// restart no longer improves by more than f_tol.
NelderMeadResult NelderMead(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<double> start, double initial_step, double step_tol,
    double f_tol, int max_iters);

struct StartDiagnostics {
  IntervalTemplate layout;
  std::string origin;  // "half-line", "two-ray", "symmetric-interval", "random"
  double start_value = 0.0;
  double final_value = 0.0;
  int iterations = 0;
  int restarts = 0;
  bool converged = false;
  IntervalUnion1D final_set;
};

struct MinimizeResult {
  IntervalUnion1D best;
  double best_value = 0.0;
  std::size_t best_start = 0;
  double half_line_value = 0.0;  // F(H_s)
  // best is one ray with its endpoint at s (left ray) or -s (right ray),
  // within 1e-6.
  bool best_is_half_line = false;
  // Some explored configuration beats F(H_s) by more than f_tol.
  bool half_line_beaten = false;
  int failed_starts = 0;
  std::vector<StartDiagnostics> starts;
};

// Penalty added to the objective for endpoint vectors that are not strictly
// increasing.
inline constexpr double kOrderPenalty = 1e6;

// Objective used by MinimizeF for a fixed template.
double TemplateObjective(const IntervalTemplate& layout,
                         std::span<const double> endpoints,
                         const FunctionalParams& params);

// Global best over multistarts and templates with <= k_max components. Among
// results within f_tol of the best value the one with fewest components wins.
MinimizeResult MinimizeF(const FunctionalParams& params, int k_max,
                         const OptimizerSettings& settings);

struct HalfSpaceProfile {
  std::vector<double> t;
  std::vector<double> values;
  double argmin = 0.0;
  double min_value = 0.0;
};

// f(t) = F(H_t) on the grid.
HalfSpaceProfile ProfileHalfSpaces(const FunctionalParams& params,
                                   std::span<const double> t_grid);

// a(s) with 2 Phi(a) = Phi(s), for s <= 0.
double SolveTwoRayEndpoint(double s);

// E_s as an interval union.
IntervalUnion1D TwoRaySet(double s);

struct MassSweepRow {
  double s = 0.0;
  double a_s = 0.0;
  double gap = 0.0;  // s - a(s)
  double deficit = 0.0;
  double beta = 0.0;
  double ratio = 0.0;        // D / (s^{-2} beta)
  double log_deficit = 0.0;  // kept for levels where D underflows
};

// One row per level (all s < 0), sorted by s.
std::vector<MassSweepRow> MassSweep(std::vector<double> s_values);

}  // namespace gaussiso

#endif  // GAUSSISO_OPTIMIZER_HPP_
