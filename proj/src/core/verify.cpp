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

#include "gaussiso/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "gaussiso/error.hpp"
#include "gaussiso/functionals.hpp"
#include "gaussiso/gauss.hpp"
#include "gaussiso/json_io.hpp"
#include "gaussiso/optimizer.hpp"
#include "gaussiso/seeding.hpp"
#include "gaussiso/stationarity.hpp"

namespace gaussiso {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMassLo = 0.01;
constexpr double kMassHi = 0.99;
constexpr double kEqualityTol = 1e-10;
constexpr std::size_t kMonteCarloStride = 50;
constexpr std::int64_t kMonteCarloSamples = 20000;
constexpr double kMonteCarloSigmas = 6.0;
constexpr double kFiniteDifferenceRelTol = 1e-3;

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

template <class Fn>
void ParallelFor(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const auto count = static_cast<std::size_t>(jobs) < n ? jobs : static_cast<int>(n);
  for (int w = 0; w < count; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

std::vector<double> Grid(double lo, double hi, std::size_t points) {
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) /
                    static_cast<double>(points - 1);
  }
  return g;
}

// Margins that are NaN for "not applicable" are skipped.
CheckResult Collect(std::string name, std::string anchor,
                    const std::vector<double>& margins, std::uint64_t seed,
                    double wall_time) {
  CheckResult r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.seed = seed;
  r.wall_time = wall_time;
  for (double m : margins) {
    if (!std::isnan(m)) r.Record(m);
  }
  return r;
}

// Margin of |x| <= tol, in units of tol, shifted so negative iff violated.
double WithinMargin(double diff, double tol) { return tol - std::abs(diff); }

// Equality expected exactly on half-space members, strict inequality on all
// others.
double EqualityCaseMargin(double slack, bool half_space) {
  return half_space ? kEqualityTol - std::abs(slack)
                    : std::abs(slack) - kEqualityTol;
}

double IntervalQuad(const IntervalUnion1D& set,
                    const std::function<double(double)>& f) {
  double total = 0.0;
  for (const Interval& iv : set.intervals()) {
    total += gauss::AdaptiveQuad(f, iv.lo, iv.hi).value;
  }
  return total;
}

const IntervalUnion1D* Profile(const GaussianSet& set) {
  if (const auto* u = set.get_if<IntervalUnion1D>()) return u;
  if (const auto* s = set.get_if<SlabSet>()) return &s->profile;
  return nullptr;
}

double BallMassByQuadrature(const CenteredBall& ball) {
  const double n = ball.dim;
  const double log_norm =
      (0.5 * n - 1.0) * std::log(2.0) + std::log(std::tgamma(0.5 * n));
  auto radial = [&](double r) {
    if (r <= 0.0) return 0.0;
    return std::exp((n - 1.0) * std::log(r) - 0.5 * r * r - log_norm);
  };
  return gauss::AdaptiveQuad(radial, 0.0, ball.radius).value;
}

struct Evaluated {
  const CorpusEntry* entry = nullptr;
  QuantityBundle q;
  bool half_space = false;
};

class SuiteRunner {
 public:
  explicit SuiteRunner(const VerifyConfig& config) : config_(config) {}

  VerificationReport Run(std::string_view name) {
    VerificationReport report;
    report.suite = std::string(name);
    report.seed = config_.seed;
    const bool all = name == "all";
    const bool needs_corpus = name != "scalar-functions" && name != "stationarity";
    if (needs_corpus) {
      report.corpus_size = config_.samples;
      BuildEvaluated();
    }
    auto add = [&](std::vector<CheckResult> checks) {
      for (auto& c : checks) report.checks.push_back(std::move(c));
    };
    if (all || name == "measure-oracle") add(MeasureOracle());
    if (all || name == "iso") add(Isoperimetric());
    if (all || name == "barycenter-max") add(BarycenterMaximality());
    if (all || name == "main") add(MainInequality());
    if (all || name == "strong-vs-standard") add(StrongVsStandard());
    if (all || name == "alpha-hat-corollary") add(AlphaHatCorollary());
    if (all || name == "excess-identity") add(ExcessIdentityCheck());
    if (all || name == "scalar-functions") add(ScalarFunctions());
    if (all || name == "stationarity") add(Stationarity());
    return report;
  }

 private:
  double StabilityC() const {
    return config_.constant.value_or(kStabilityConstant);
  }

  void BuildEvaluated() {
    corpus_ = BuildCorpus(config_.seed, config_.samples);
    evaluated_.resize(corpus_.size());
    ParallelFor(corpus_.size(), config_.jobs, [&](std::size_t i) {
      evaluated_[i].entry = &corpus_[i];
      evaluated_[i].q = ComputeBundle(corpus_[i].set);
      evaluated_[i].half_space = corpus_[i].set.IsHalfSpace();
    });
  }

  // Runs fn over the evaluated corpus in parallel; fn returns NaN for sets
  // the check does not apply to.
  CheckResult OverCorpus(std::string name, std::string anchor,
                         const std::function<double(std::size_t)>& fn) {
    Stopwatch clock;
    std::vector<double> margins(evaluated_.size());
    ParallelFor(evaluated_.size(), config_.jobs,
                [&](std::size_t i) { margins[i] = fn(i); });
    return Collect(std::move(name), std::move(anchor), margins, config_.seed,
                   clock.Seconds());
  }

  CheckResult OverGrid(std::string name, std::string anchor, std::size_t n,
                       const std::function<double(std::size_t)>& fn) {
    Stopwatch clock;
    std::vector<double> margins(n);
    ParallelFor(n, config_.jobs, [&](std::size_t i) { margins[i] = fn(i); });
    return Collect(std::move(name), std::move(anchor), margins, config_.seed,
                   clock.Seconds());
  }

  std::vector<CheckResult> MeasureOracle() {
    std::vector<CheckResult> out;
    out.push_back(OverCorpus(
        "measure-quadrature", "gamma(E) = integral of the Gaussian density over E",
        [&](std::size_t i) {
          const GaussianSet& set = corpus_[i].set;
          double quad = 0.0;
          if (const auto* p = Profile(set)) {
            quad = IntervalQuad(*p, gauss::Density);
          } else if (const auto* b = set.get_if<CenteredBall>()) {
            quad = BallMassByQuadrature(*b);
          } else {
            return std::nan("");
          }
          return InequalityMargin(std::abs(evaluated_[i].q.gamma - quad), 0.0);
        }));
    out.push_back(OverCorpus(
        "barycenter-quadrature", "b(E) = integral of x over E against gamma",
        [&](std::size_t i) {
          const GaussianSet& set = corpus_[i].set;
          const IntervalUnion1D* p = Profile(set);
          if (p == nullptr) return std::nan("");
          const double quad =
              IntervalQuad(*p, [](double x) { return x * gauss::Density(x); });
          const double b = evaluated_[i].q.barycenter.back();
          return InequalityMargin(std::abs(b - quad), 0.0);
        }));
    out.push_back(OverCorpus(
        "mass-level-roundtrip", "Phi(s(E)) = gamma(E)", [&](std::size_t i) {
          const QuantityBundle& q = evaluated_[i].q;
          return InequalityMargin(std::abs(gauss::Phi(q.s) - q.gamma), 0.0);
        }));
    CheckResult mc = OverCorpus(
        "measure-monte-carlo",
        "gamma(E) agrees with a Monte Carlo estimate within 6 standard errors",
        [&](std::size_t i) {
          if (i % kMonteCarloStride != 0) {
            return std::nan("");
          }
          const double p = evaluated_[i].q.gamma;
          const MonteCarloEstimate est = MonteCarloMeasure(
              corpus_[i].set, kMonteCarloSamples, DeriveSeed(config_.seed, i, 1));
          const double sigma =
              std::sqrt(p * (1.0 - p) / static_cast<double>(kMonteCarloSamples));
          return InequalityMargin(std::abs(est.estimate - p),
                                  kMonteCarloSigmas * sigma);
        });
    mc.params = {{"mc_samples", static_cast<double>(kMonteCarloSamples)},
                 {"stride", static_cast<double>(kMonteCarloStride)}};
    out.push_back(std::move(mc));
    return out;
  }

  std::vector<CheckResult> Isoperimetric() {
    std::vector<CheckResult> out;
    out.push_back(OverCorpus("iso", "P(E) >= e^{-s^2/2}", [&](std::size_t i) {
      const QuantityBundle& q = evaluated_[i].q;
      return InequalityMargin(gauss::Weight(q.s), q.perimeter);
    }));
    CheckResult eq = OverCorpus(
        "iso-equality-case", "P(E) = e^{-s^2/2} exactly when E is a half-space",
        [&](std::size_t i) {
          return EqualityCaseMargin(evaluated_[i].q.deficit,
                                    evaluated_[i].half_space);
        });
    eq.params = {{"equality_tol", kEqualityTol}};
    eq.stats = {{"half_space_members", CountHalfSpaces()}};
    out.push_back(std::move(eq));
    return out;
  }

  std::vector<CheckResult> BarycenterMaximality() {
    std::vector<CheckResult> out;
    out.push_back(OverCorpus("barycenter-max", "|b(E)| <= b_s", [&](std::size_t i) {
      const QuantityBundle& q = evaluated_[i].q;
      return InequalityMargin(Norm(q.barycenter), q.b_s);
    }));
    CheckResult eq = OverCorpus(
        "barycenter-max-equality-case",
        "|b(E)| = b_s exactly when E is a half-space", [&](std::size_t i) {
          return EqualityCaseMargin(evaluated_[i].q.beta,
                                    evaluated_[i].half_space);
        });
    eq.params = {{"equality_tol", kEqualityTol}};
    eq.stats = {{"half_space_members", CountHalfSpaces()}};
    out.push_back(std::move(eq));
    return out;
  }

  std::vector<CheckResult> MainInequality() {
    const double c = StabilityC();
    CheckResult r = OverCorpus(
        "main", "beta(E) <= c (1+s^2) D(E)", [&](std::size_t i) {
          const QuantityBundle& q = evaluated_[i].q;
          return InequalityMargin(q.beta, c * (1.0 + q.s * q.s) * q.deficit);
        });
    double min_ratio = kInf;
    double argmin = -1.0;
    for (std::size_t i = 0; i < evaluated_.size(); ++i) {
      const Evaluated& e = evaluated_[i];
      if (e.half_space || !(e.q.beta > 0.0)) continue;
      const double ratio = c * (1.0 + e.q.s * e.q.s) * e.q.deficit / e.q.beta;
      if (ratio < min_ratio) {
        min_ratio = ratio;
        argmin = static_cast<double>(i);
      }
    }
    r.params = {{"c", c}};
    r.stats = {{"min_ratio", min_ratio}, {"min_ratio_index", argmin}};
    return {std::move(r)};
  }

  std::vector<CheckResult> StrongVsStandard() {
    std::vector<CheckResult> out;
    out.push_back(OverCorpus(
        "strong-vs-standard", "beta(E) >= (e^{s^2/2}/4) alpha_hat(E)^2",
        [&](std::size_t i) {
          const QuantityBundle& q = evaluated_[i].q;
          return InequalityMargin(
              0.25 * std::exp(0.5 * q.s * q.s) * q.alpha_hat * q.alpha_hat,
              q.beta);
        }));
    out.push_back(OverCorpus(
        "complement-symmetry",
        "D, beta and alpha_hat are unchanged under complementation",
        [&](std::size_t i) {
          const GaussianSet& set = corpus_[i].set;
          if (set.get_if<CenteredBall>() != nullptr) return std::nan("");
          const QuantityBundle& q = evaluated_[i].q;
          const QuantityBundle c = ComputeBundle(Complement(set));
          const double diff = std::max({std::abs(q.deficit - c.deficit),
                                        std::abs(q.beta - c.beta),
                                        std::abs(q.alpha_hat - c.alpha_hat)});
          return InequalityMargin(diff, 0.0);
        }));
    return out;
  }

  std::vector<CheckResult> AlphaHatCorollary() {
    const double c = StabilityC();
    CheckResult r = OverCorpus(
        "alpha-hat-corollary", "alpha_hat(E)^2 <= c (1+s^2) e^{-s^2/2} D(E)",
        [&](std::size_t i) {
          const QuantityBundle& q = evaluated_[i].q;
          return InequalityMargin(
              q.alpha_hat * q.alpha_hat,
              c * (1.0 + q.s * q.s) * gauss::Weight(q.s) * q.deficit);
        });
    r.params = {{"c", c}};
    return {std::move(r)};
  }

  std::vector<CheckResult> ExcessIdentityCheck() {
    constexpr double kRelTol = 1e-10;
    double worst = 0.0;
    std::vector<double> diffs(corpus_.size());
    CheckResult r = OverCorpus(
        "excess-identity", "excess(E) = 2 D(E) + 2 sqrt(2 pi) beta(E)",
        [&](std::size_t i) {
          const QuantityBundle& q = evaluated_[i].q;
          const double via = 2.0 * q.deficit + 2.0 * gauss::kSqrt2Pi * q.beta;
          diffs[i] = std::abs(q.excess - via);
          return WithinMargin(q.excess - via, kRelTol * std::max(1.0, std::abs(via)));
        });
    for (double d : diffs) worst = std::max(worst, d);
    r.params = {{"rel_tol", kRelTol}};
    r.stats = {{"max_abs_diff", worst}};
    return {std::move(r)};
  }

  std::vector<CheckResult> ScalarFunctions() {
    std::vector<CheckResult> out;
    const std::vector<double> s_grid = Grid(-40.0, 0.0, 40001);

    // Every check below is multiplied through by e^{s^2/2} so that the whole
    // range stays finite.
    CheckResult g = OverGrid(
        "g-nonpositive", "e^{-s^2/2} + (sqrt(2 pi) s - pi) Phi(s) <= 0 on [-40, 0]",
        s_grid.size(), [&](std::size_t i) {
          const double s = s_grid[i];
          return InequalityMargin(
              1.0 + (gauss::kSqrt2Pi * s - gauss::kPi) * gauss::PhiScaled(s), 0.0);
        });
    g.stats = {{"g_at_0", gauss::Weight(0.0) - gauss::kPi * gauss::Phi(0.0)}};
    out.push_back(std::move(g));

    out.push_back(OverGrid(
        "lambda-bound", "Lambda^2 + 1 <= (9/2) pi^2 (1+s^2) on [-40, 0]",
        s_grid.size(), [&](std::size_t i) {
          const double s = s_grid[i];
          const double lam = StabilityConstantsAt(s).lambda_pen;
          return InequalityMargin(lam * lam + 1.0,
                                  4.5 * gauss::kPi * gauss::kPi * (1.0 + s * s));
        }));

    out.push_back(OverGrid("f-nonnegative", "e^{-s^2/2} >= 2 Phi(s) on [-40, 0]",
                           s_grid.size(), [&](std::size_t i) {
                             return InequalityMargin(
                                 2.0 * gauss::PhiScaled(s_grid[i]), 1.0);
                           }));

    const std::vector<double> s_coarse = Grid(-40.0, 0.0, 81);
    const std::vector<double> t_grid = Grid(0.0, 40.0, 2001);
    CheckResult gt = OverGrid(
        "g-t-nonnegative",
        "int_{s-t}^s (s-x) e^{-x^2/2} dx >= (e^{s^2/2}/2) (int_{s-t}^s "
        "e^{-x^2/2} dx)^2 for t in [0, 40], s in [-40, 0]",
        s_coarse.size() * t_grid.size(), [&](std::size_t k) {
          const double s = s_coarse[k / t_grid.size()];
          const double t = t_grid[k % t_grid.size()];
          const double u = s - t;
          const double ratio_m1 = std::expm1(0.5 * t * (2.0 * s - t));
          const double mass = gauss::kSqrt2Pi *
                              (gauss::PhiScaled(s) -
                               gauss::PhiScaled(u) * (1.0 + ratio_m1));
          const double value = s * mass - ratio_m1 - 0.5 * mass * mass;
          return InequalityMargin(0.0, value);
        });
    gt.params = {{"s_points", static_cast<double>(s_coarse.size())},
                 {"t_points", static_cast<double>(t_grid.size())}};
    out.push_back(std::move(gt));

    out.push_back(OverGrid(
        "eps-times-bs", "eps b_s <= 1/4 on [-40, 0]", s_grid.size(),
        [&](std::size_t i) {
          const double s = s_grid[i];
          // eps e^{-s^2/2} times b_s e^{s^2/2}.
          const double eps_scaled =
              1.0 / (40.0 * gauss::kPi * gauss::kPi * (1.0 + s * s));
          return InequalityMargin(eps_scaled * gauss::kInvSqrt2Pi, 0.25);
        }));

    out.push_back(OverGrid(
        "half-space-functional-bound", "F(H_s) <= (10/9) e^{-s^2/2} on [-40, 0]",
        s_grid.size(), [&](std::size_t i) {
          const double s = s_grid[i];
          const double eps_scaled =
              1.0 / (40.0 * gauss::kPi * gauss::kPi * (1.0 + s * s));
          return InequalityMargin(1.0 + eps_scaled / (4.0 * gauss::kPi),
                                  10.0 / 9.0);
        }));

    // Slab competitors F = R^{n-1} x ((-inf, s-a1) u [s, s+a2)) with both
    // pieces of mass m around H = {x_n < s}.
    const std::vector<double> s_slab = Grid(-5.0, 0.0, 26);
    const std::vector<double> fractions = Grid(0.02, 0.98, 25);
    const std::size_t n_slab = s_slab.size() * fractions.size();
    std::vector<SlabSet> slabs(n_slab);
    std::vector<double> removed(n_slab);
    for (std::size_t k = 0; k < n_slab; ++k) {
      const double s = s_slab[k / fractions.size()];
      const double p = gauss::Phi(s);
      const double m = fractions[k % fractions.size()] * p;
      const double lo = gauss::PhiInv(p - m);
      const double hi = gauss::PhiInv(p + m);
      const int dim = 2 + static_cast<int>(k % 9);
      slabs[k] = SlabSet::Make(
          dim, IntervalUnion1D::Normalize({{-kInf, lo}, {s, hi}}));
      removed[k] = m;
    }
    out.push_back(OverGrid(
        "slab-competitor",
        "b_s + <b(F), e_n> >= sqrt(pi/2) e^{s^2/2} gamma(E \\ H)^2 on slab "
        "competitors",
        n_slab, [&](std::size_t k) {
          const double s = s_slab[k / fractions.size()];
          const double scale = std::exp(0.5 * s * s);
          // Asymmetry measured against H itself rather than the half-space
          // facing -b(F).
          const double beta = BarycenterMax(s) + Barycenter(slabs[k]).back();
          return InequalityMargin(
              std::sqrt(0.5 * gauss::kPi) * scale * scale * removed[k] * removed[k],
              scale * beta);
        }));
    out.push_back(OverGrid(
        "slab-transverse-barycenter",
        "<b(E), e_j> = 0 for every direction e_j transverse to a slab", n_slab,
        [&](std::size_t k) {
          const std::vector<double> b = Barycenter(slabs[k]);
          double worst = 0.0;
          for (std::size_t j = 0; j + 1 < b.size(); ++j) {
            worst = std::max(worst, std::abs(b[j]));
          }
          return InequalityMargin(worst, 0.0);
        }));
    return out;
  }

  std::vector<CheckResult> Stationarity() {
    std::vector<CheckResult> out;
    const std::vector<double> s_grid = Grid(-5.0, 0.0, 51);
    const VariationScaling literal = VariationScaling::kBoundaryWeighted;

    out.push_back(OverGrid(
        "two-ray-euler",
        "E_s solves -<x, nu> + eps <b, x> = lambda on its boundary",
        s_grid.size(), [&](std::size_t i) {
          const double s = s_grid[i];
          const EulerReport e = EulerResidual(TwoRaySet(s), StabilityParams(s), literal);
          return kEqualityTol - e.max_dev;
        }));

    out.push_back(OverGrid(
        "two-ray-second-variation",
        "J[phi] < 0 for some zero-average phi at E_s", s_grid.size(),
        [&](std::size_t i) {
          const double s = s_grid[i];
          const ConstrainedSpectrum sp = PsdOnZeroAverage(
              SecondVariationForm(TwoRaySet(s), StabilityParams(s), literal));
          return -sp.min_eigenvalue;
        }));

    out.push_back(OverGrid(
        "half-line-multiplier", "|lambda| <= Lambda at H_s", s_grid.size(),
        [&](std::size_t i) {
          const double s = s_grid[i];
          const FunctionalParams params = StabilityParams(s);
          const IntervalUnion1D h = IntervalUnion1D::Normalize({{-kInf, s}});
          const EulerReport e = EulerResidual(h, params, literal);
          return InequalityMargin(std::abs(e.lambda_fit), params.lambda_pen);
        }));

    out.push_back(OverGrid(
        "half-line-second-moment",
        "int_{boundary} <x, omega>^2 dH_gamma <= 20 pi^2 (1+s^2) e^{-s^2/2} at H_s",
        s_grid.size(), [&](std::size_t i) {
          const double s = s_grid[i];
          const IntervalUnion1D h = IntervalUnion1D::Normalize({{-kInf, s}});
          return InequalityMargin(
              BoundarySecondMoment(h),
              20.0 * gauss::kPi * gauss::kPi * (1.0 + s * s) * gauss::Weight(s));
        }));

    constexpr double kProfileStep = 1e-3;
    out.push_back(OverGrid(
        "half-space-profile", "t -> F(H_t) attains its minimum at t = s",
        s_grid.size(), [&](std::size_t i) {
          const double s = s_grid[i];
          const std::vector<double> t = Grid(s - 3.0, s + 3.0, 6001);
          const HalfSpaceProfile prof = ProfileHalfSpaces(StabilityParams(s), t);
          return WithinMargin(prof.argmin - s, kProfileStep);
        }));

    // Stationary sets with b = 0: E_s and the symmetric interval of the same
    // mass.
    const std::vector<double> s_fd = Grid(-3.0, 0.0, 31);
    out.push_back(OverGrid(
        "second-variation-finite-difference",
        "J[phi] equals the second derivative of F along volume-preserving "
        "deformations",
        2 * s_fd.size(), [&](std::size_t k) {
          const double s = s_fd[k / 2];
          IntervalUnion1D set;
          if (k % 2 == 0) {
            set = TwoRaySet(s);
          } else {
            const double c = gauss::PhiInv(0.5 * (1.0 + gauss::Phi(s)));
            set = IntervalUnion1D::Normalize({{-c, c}});
          }
          const FiniteDifferenceCheck fd =
              VolumePreservingSecondDifference(set, StabilityParams(s), 0, 1);
          return WithinMargin(fd.second_difference - fd.form_value,
                              kFiniteDifferenceRelTol * std::abs(fd.form_value));
        }));
    return out;
  }

  double CountHalfSpaces() const {
    return static_cast<double>(std::count_if(
        evaluated_.begin(), evaluated_.end(),
        [](const Evaluated& e) { return e.half_space; }));
  }

  VerifyConfig config_;
  std::vector<CorpusEntry> corpus_;
  std::vector<Evaluated> evaluated_;
};

std::string JsonString(const std::string& s) { return nlohmann::json(s).dump(); }

std::string JsonReal(double x) {
  return std::isfinite(x) ? FormatReal(x) : std::string("null");
}

std::string JsonPairs(const std::vector<std::pair<std::string, double>>& kv) {
  std::string out = "{";
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i > 0) out += ", ";
    out += JsonString(kv[i].first) + ": " + JsonReal(kv[i].second);
  }
  return out + "}";
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void RandomSetSpec::Validate() const {
  if (k_min < 1 || k_min > k_max || k_max > 6 || !(endpoint_scale > 0.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "random set spec: need 1 <= k_min <= k_max <= 6 and scale > 0");
  }
}

IntervalUnion1D RandomIntervalUnion(const RandomSetSpec& spec) {
  spec.Validate();
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> count(spec.k_min, spec.k_max);
  std::bernoulli_distribution coin(0.5);
  std::normal_distribution<double> endpoint(0.0, spec.endpoint_scale);
  for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
    const int k = count(rng);
    bool left = false;
    bool right = false;
    if (spec.include_rays) {
      do {
        left = coin(rng);
        right = coin(rng);
      } while (k == 1 && left && right);
    }
    const int n = 2 * k - (left ? 1 : 0) - (right ? 1 : 0);
    std::vector<double> e(static_cast<std::size_t>(n));
    for (double& x : e) x = endpoint(rng);
    std::sort(e.begin(), e.end());
    const IntervalTemplate layout{left, k - (left ? 1 : 0) - (right ? 1 : 0), right};
    const std::optional<IntervalUnion1D> set = KIntervalConfig{layout, e}.Decode();
    if (!set) continue;
    const double mass = Measure(*set);
    if (!(mass > kMassLo && mass < kMassHi)) continue;
    const std::vector<double> pts = set->BoundaryPoints();
    if (std::any_of(pts.begin(), pts.end(), [](double x) {
          return gauss::Weight(x) < kMinBoundaryWeight;
        })) {
      continue;
    }
    return *set;
  }
  Fail(ErrorCode::kNoConvergence,
       "random interval union: no admissible draw after 100 retries");
}

CorpusEntry CorpusMember(std::uint64_t seed, std::size_t index) {
  const std::uint64_t member_seed = DeriveSeed(seed, index);
  const std::size_t slot = index % 20;
  if (slot < 14) {
    RandomSetSpec spec;
    spec.seed = member_seed;
    return {"interval-union", RandomIntervalUnion(spec)};
  }
  if (slot < 17) {
    const std::size_t j = 3 * (index / 20) + (slot - 14);
    const double s = -5.0 * static_cast<double>(j % 51) / 50.0;
    return {"two-ray", TwoRaySet(s)};
  }
  std::mt19937_64 rng(member_seed);
  std::uniform_int_distribution<int> dims(2, 10);
  const int dim = dims(rng);
  if (slot < 19) {
    std::uniform_real_distribution<double> mass(kMassLo, kMassHi);
    const double r2 = gauss::Chi2Quantile(dim, mass(rng));
    return {"ball", CenteredBall::Make(dim, std::sqrt(r2))};
  }
  RandomSetSpec spec;
  spec.k_max = 3;
  spec.seed = rng();
  return {"slab", SlabSet::Make(dim, RandomIntervalUnion(spec))};
}

std::vector<CorpusEntry> BuildCorpus(std::uint64_t seed, std::size_t size) {
  std::vector<CorpusEntry> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) out.push_back(CorpusMember(seed, i));
  return out;
}

double InequalityMargin(double lhs, double rhs) {
  return (rhs - lhs) + kViolationRelTol * std::max(1.0, std::abs(rhs));
}

void CheckResult::Record(double margin) {
  ++samples;
  if (margin < 0.0 || std::isnan(margin)) ++violations;
  worst_margin = std::min(worst_margin, margin);
}

std::size_t VerificationReport::total_violations() const {
  std::size_t n = 0;
  for (const CheckResult& c : checks) n += c.violations;
  return n;
}

bool IsSuiteName(std::string_view name) {
  return std::find(std::begin(kSuiteNames), std::end(kSuiteNames), name) !=
         std::end(kSuiteNames);
}

VerificationReport RunSuite(std::string_view name, const VerifyConfig& config) {
  if (!IsSuiteName(name)) {
    Fail(ErrorCode::kInvalidArgument, "unknown suite \"" + std::string(name) + "\"");
  }
  if (config.jobs < 1) Fail(ErrorCode::kInvalidArgument, "jobs must be >= 1");
  if (config.constant && !(*config.constant > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "constant override must be positive");
  }
  return SuiteRunner(config).Run(name);
}

std::string RenderReport(const VerificationReport& report, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::kCsv) {
    os << "name,anchor,samples,violations,worst_margin,seed,wall_time\n";
    for (const CheckResult& c : report.checks) {
      os << CsvField(c.name) << ',' << CsvField(c.anchor) << ',' << c.samples
         << ',' << c.violations << ',' << FormatReal(c.worst_margin) << ','
         << c.seed << ',' << FormatReal(c.wall_time) << '\n';
    }
    return os.str();
  }
  os << "{\n  \"suite\": " << JsonString(report.suite)
     << ",\n  \"corpus_size\": " << report.corpus_size
     << ",\n  \"seed\": " << report.seed << ",\n  \"checks\": [";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckResult& c = report.checks[i];
    os << (i == 0 ? "\n" : ",\n") << "    {\"name\": " << JsonString(c.name)
       << ", \"anchor\": " << JsonString(c.anchor)
       << ", \"samples\": " << c.samples << ", \"violations\": " << c.violations
       << ", \"worst_margin\": " << JsonReal(c.worst_margin)
       << ", \"seed\": " << c.seed << ", \"params\": " << JsonPairs(c.params)
       << ", \"stats\": " << JsonPairs(c.stats)
       << ", \"wall_time\": " << JsonReal(c.wall_time) << "}";
  }
  os << (report.checks.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

void EmitReport(const VerificationReport& report, const std::string& path,
                ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kIo, "cannot open report file " + path);
  out << RenderReport(report, format);
  out.flush();
  if (!out) Fail(ErrorCode::kIo, "failed writing report file " + path);
}

}  // namespace gaussiso
