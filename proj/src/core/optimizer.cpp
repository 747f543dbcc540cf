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

#include "gaussiso/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "gaussiso/error.hpp"
#include "gaussiso/gauss.hpp"
#include "gaussiso/seeding.hpp"

namespace gaussiso {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfLineTol = 1e-6;
constexpr double kInitialStep = 0.5;
constexpr double kProposalScale = 2.0;
constexpr int kMaxRestarts = 8;

struct StartPoint {
  std::size_t template_index;
  std::string origin;
  std::vector<double> endpoints;
};

struct NelderMeadPass {
  std::vector<double> x;
  double value;
  int iterations;
  bool converged;
};

NelderMeadPass RunSimplex(
    const std::function<double(std::span<const double>)>& f,
    const std::vector<double>& start, double step, double step_tol,
    double f_tol, int max_iters) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n);
  std::vector<double> trial(n);
  std::vector<double> trial2(n);
  int iter = 0;
  bool converged = false;

  auto along = [&](double coef, const std::vector<double>& worst,
                   std::vector<double>& out) {
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = centroid[j] + coef * (worst[j] - centroid[j]);
    }
  };

  for (; iter < max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return values[a] < values[b];
                     });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];

    double x_spread = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        x_spread = std::max(x_spread, std::abs(simplex[i][j] - simplex[best][j]));
      }
    }
    const double f_spread = values[worst] - values[best];
    if (x_spread <= step_tol || f_spread <= f_tol) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    along(-1.0, simplex[worst], trial);
    const double f_reflect = f(trial);
    if (f_reflect < values[best]) {
      along(-2.0, simplex[worst], trial2);
      const double f_expand = f(trial2);
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[second]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    // Outside or inside contraction.
    const bool outside = f_reflect < values[worst];
    along(outside ? -0.5 : 0.5, simplex[worst], trial2);
    const double f_contract = f(trial2);
    if (f_contract < std::min(f_reflect, values[worst])) {
      simplex[worst] = trial2;
      values[worst] = f_contract;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) {
        simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = f(simplex[i]);
    }
  }
  const auto best_it = std::min_element(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(best_it - values.begin());
  return {simplex[idx], *best_it, iter, converged};
}

std::vector<StartPoint> BuildStarts(const std::vector<IntervalTemplate>& layouts,
                                    const FunctionalParams& params,
                                    const OptimizerSettings& settings) {
  std::vector<StartPoint> starts;
  const double s = params.s;
  for (std::size_t t = 0; t < layouts.size(); ++t) {
    const IntervalTemplate& l = layouts[t];
    if (l == IntervalTemplate{true, 0, false}) {
      starts.push_back({t, "half-line", {s}});
    } else if (l == IntervalTemplate{false, 0, true}) {
      starts.push_back({t, "half-line", {-s}});
    } else if (l == IntervalTemplate{true, 0, true} && s <= 0.0) {
      const double a = SolveTwoRayEndpoint(s);
      starts.push_back({t, "two-ray", {a, -a}});
    } else if (l == IntervalTemplate{false, 1, false}) {
      const double c = gauss::PhiInv(0.5 * (1.0 + gauss::Phi(s)));
      starts.push_back({t, "symmetric-interval", {-c, c}});
    }
  }
  for (int k = 0; k < settings.multistarts; ++k) {
    const std::size_t t = static_cast<std::size_t>(k) % layouts.size();
    std::mt19937_64 rng(DeriveSeed(settings.seed, t, static_cast<std::uint64_t>(k)));
    std::normal_distribution<double> proposal(0.0, kProposalScale);
    std::vector<double> e(static_cast<std::size_t>(layouts[t].endpoints()));
    for (double& x : e) x = proposal(rng);
    std::sort(e.begin(), e.end());
    starts.push_back({t, "random", std::move(e)});
  }
  return starts;
}

bool IsHalfLineAt(const IntervalUnion1D& set, double s) {
  if (!set.IsHalfLine()) return false;
  const Interval& iv = set.intervals().front();
  if (std::isinf(iv.lo)) return std::abs(iv.hi - s) <= kHalfLineTol;
  return std::abs(iv.lo + s) <= kHalfLineTol;
}

}  // namespace

std::string IntervalTemplate::Name() const {
  std::string name;
  if (left_ray) name += "L";
  for (int i = 0; i < bounded; ++i) name += "B";
  if (right_ray) name += "R";
  return name;
}

std::vector<IntervalTemplate> EnumerateTemplates(int k_max) {
  std::vector<IntervalTemplate> out;
  for (int k = 1; k <= k_max; ++k) {
    for (int rays = 0; rays <= 2; ++rays) {
      if (rays > k) continue;
      const int bounded = k - rays;
      if (rays == 1) {
        out.push_back({true, bounded, false});
        out.push_back({false, bounded, true});
      } else {
        out.push_back({rays == 2, bounded, rays == 2});
      }
    }
  }
  return out;
}

std::optional<IntervalUnion1D> KIntervalConfig::Decode() const {
  if (static_cast<int>(endpoints.size()) != layout.endpoints()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    if (!std::isfinite(endpoints[i])) return std::nullopt;
    if (i > 0 && !(endpoints[i] > endpoints[i - 1])) return std::nullopt;
  }
  std::vector<Interval> raw;
  std::size_t k = 0;
  if (layout.left_ray) raw.push_back({-kInf, endpoints[k++]});
  for (int b = 0; b < layout.bounded; ++b) {
    raw.push_back({endpoints[k], endpoints[k + 1]});
    k += 2;
  }
  if (layout.right_ray) raw.push_back({endpoints[k], kInf});
  return IntervalUnion1D::Normalize(std::move(raw));
}

void OptimizerSettings::Validate() const {
  if (multistarts < 0 || !(step_tol > 0.0) || !(f_tol > 0.0) ||
      max_iters < 1 || jobs < 1) {
    Fail(ErrorCode::kInvalidArgument, "optimizer: invalid settings");
  }
}

NelderMeadResult NelderMead(
    const std::function<double(std::span<const double>)>& objective,
    std::vector<double> start, double initial_step, double step_tol,
    double f_tol, int max_iters) {
  NelderMeadResult out;
  out.x = std::move(start);
  out.value = objective(out.x);
  double step = initial_step;
  for (int r = 0; r <= kMaxRestarts; ++r) {
    const int budget = max_iters - out.iterations;
    if (budget <= 0) break;
    NelderMeadPass pass =
        RunSimplex(objective, out.x, step, step_tol, f_tol, budget);
    out.iterations += pass.iterations;
    out.converged = pass.converged;
    const bool improved = pass.value < out.value - f_tol;
    if (pass.value <= out.value) {
      out.x = std::move(pass.x);
      out.value = pass.value;
    }
    out.restarts = r;
    if (!improved && r > 0) break;
    step = std::max(10.0 * step_tol, 0.5 * step);
  }
  return out;
}

double TemplateObjective(const IntervalTemplate& layout,
                         std::span<const double> endpoints,
                         const FunctionalParams& params) {
  double violation = 0.0;
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    if (!std::isfinite(endpoints[i])) return kInf;
    if (i > 0 && !(endpoints[i] > endpoints[i - 1])) {
      violation += endpoints[i - 1] - endpoints[i];
    }
  }
  if (violation > 0.0 || (endpoints.size() > 1 && violation == 0.0 &&
                          std::adjacent_find(endpoints.begin(), endpoints.end()) !=
                              endpoints.end())) {
    return kOrderPenalty + violation;
  }
  KIntervalConfig config{layout, {endpoints.begin(), endpoints.end()}};
  return PenalizedFunctional(GaussianSet(*config.Decode()), params);
}

MinimizeResult MinimizeF(const FunctionalParams& params, int k_max,
                         const OptimizerSettings& settings) {
  if (k_max < 1 || k_max > 4) {
    Fail(ErrorCode::kInvalidArgument, "minimize: k_max must be in [1,4]");
  }
  settings.Validate();
  const std::vector<IntervalTemplate> layouts = EnumerateTemplates(k_max);
  const std::vector<StartPoint> starts = BuildStarts(layouts, params, settings);

  MinimizeResult result;
  result.starts.resize(starts.size());
  std::vector<char> ok(starts.size(), 0);

  auto run_one = [&](std::size_t i) {
    const StartPoint& sp = starts[i];
    const IntervalTemplate& layout = layouts[sp.template_index];
    auto objective = [&](std::span<const double> x) {
      return TemplateObjective(layout, x, params);
    };
    StartDiagnostics& d = result.starts[i];
    d.layout = layout;
    d.origin = sp.origin;
    d.start_value = objective(sp.endpoints);
    NelderMeadResult nm = NelderMead(objective, sp.endpoints, kInitialStep,
                                     settings.step_tol, settings.f_tol,
                                     settings.max_iters);
    d.final_value = nm.value;
    d.iterations = nm.iterations;
    d.restarts = nm.restarts;
    d.converged = nm.converged;
    KIntervalConfig config{layout, nm.x};
    if (auto decoded = config.Decode(); decoded && nm.value < kOrderPenalty) {
      d.final_set = *decoded;
      ok[i] = 1;
    }
  };

  if (settings.jobs <= 1) {
    for (std::size_t i = 0; i < starts.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < settings.jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < starts.size(); i = next++) run_one(i);
      });
    }
    for (auto& w : workers) w.join();
  }

  double best_value = kInf;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (!ok[i] || !result.starts[i].converged) {
      ++result.failed_starts;
    }
    if (ok[i]) best_value = std::min(best_value, result.starts[i].final_value);
  }
  if (!std::isfinite(best_value)) {
    Fail(ErrorCode::kNoConvergence, "minimize: every start failed");
  }
  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (!ok[i]) continue;
    const StartDiagnostics& d = result.starts[i];
    if (d.final_value > best_value + settings.f_tol) continue;
    if (!chosen) {
      chosen = i;
      continue;
    }
    const StartDiagnostics& c = result.starts[*chosen];
    if (d.final_set.size() < c.final_set.size() ||
        (d.final_set.size() == c.final_set.size() &&
         d.final_value < c.final_value)) {
      chosen = i;
    }
  }
  result.best_start = *chosen;
  result.best = result.starts[*chosen].final_set;
  result.best_value = result.starts[*chosen].final_value;
  result.half_line_value = HalfSpaceFunctional(params.s, params);
  result.best_is_half_line = IsHalfLineAt(result.best, params.s);
  result.half_line_beaten =
      best_value < result.half_line_value - settings.f_tol;
  return result;
}

HalfSpaceProfile ProfileHalfSpaces(const FunctionalParams& params,
                                   std::span<const double> t_grid) {
  if (t_grid.empty()) {
    Fail(ErrorCode::kInvalidArgument, "half-space profile: empty grid");
  }
  HalfSpaceProfile out;
  out.t.assign(t_grid.begin(), t_grid.end());
  out.min_value = kInf;
  for (double t : t_grid) {
    const double v = HalfSpaceFunctional(t, params);
    out.values.push_back(v);
    if (v < out.min_value) {
      out.min_value = v;
      out.argmin = t;
    }
  }
  return out;
}

double SolveTwoRayEndpoint(double s) {
  if (!(s <= 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "two-ray set: requires s <= 0");
  }
  return gauss::PhiInv(0.5 * gauss::Phi(s));
}

IntervalUnion1D TwoRaySet(double s) {
  const double a = SolveTwoRayEndpoint(s);
  return IntervalUnion1D::Normalize({{-kInf, a}, {-a, kInf}});
}

std::vector<MassSweepRow> MassSweep(std::vector<double> s_values) {
  std::sort(s_values.begin(), s_values.end());
  std::vector<MassSweepRow> rows;
  for (double s : s_values) {
    if (!(s < 0.0)) {
      Fail(ErrorCode::kInvalidArgument, "mass sweep: every level must be < 0");
    }
    MassSweepRow row;
    row.s = s;
    row.a_s = SolveTwoRayEndpoint(s);
    row.gap = s - row.a_s;
    // D e^{s^2/2} = 2 e^{(s^2 - a^2)/2} - 1 with s^2 - a^2 = gap (s + a).
    const double scaled = 1.0 + 2.0 * std::expm1(0.5 * row.gap * (s + row.a_s));
    row.log_deficit = -0.5 * s * s + std::log(scaled);
    row.deficit = std::exp(row.log_deficit);
    row.beta = BarycenterMax(s);
    row.ratio = gauss::kSqrt2Pi * s * s * scaled;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gaussiso
