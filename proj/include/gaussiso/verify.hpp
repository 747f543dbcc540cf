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

#ifndef GAUSSISO_VERIFY_HPP_
#define GAUSSISO_VERIFY_HPP_

// Random corpora and the inequality / identity suites run over them.

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussiso/sets.hpp"

namespace gaussiso {

struct RandomSetSpec {
  int k_min = 1;
  int k_max = 4;
  double endpoint_scale = 2.0;
  bool include_rays = true;
  std::uint64_t seed = 0;

  // Throws kInvalidArgument unless 1 <= k_min <= k_max <= 6 and the scale is
  // positive.
  void Validate() const;
};

// Draws are rejected and redrawn when the mass falls outside (0.01, 0.99) or
// a boundary point carries weight below this.
inline constexpr double kMinBoundaryWeight = 1e-8;
inline constexpr int kMaxRedraws = 100;

// k ~ U{k_min..k_max}; each side is a ray with probability 1/2 when rays are
// enabled; endpoints are sorted N(0, scale^2) draws.
IntervalUnion1D RandomIntervalUnion(const RandomSetSpec& spec);

struct CorpusEntry {
  std::string family;  // "interval-union", "two-ray", "ball", "slab"
  GaussianSet set;
};

// Entry i depends only on (seed, i). Of every 20 entries 14 are random 1D
// unions, 3 two-ray sets on an s-grid in [-5, 0], 2 balls and 1 slab.
CorpusEntry CorpusMember(std::uint64_t seed, std::size_t index);
std::vector<CorpusEntry> BuildCorpus(std::uint64_t seed, std::size_t size);

// A <= B is violated when A - B > kViolationRelTol * max(1, |B|).
inline constexpr double kViolationRelTol = 1e-9;

// Slack of A <= B, shifted by the tolerance so it is negative iff violated.
double InequalityMargin(double lhs, double rhs);

struct CheckResult {
  std::string name;
  std::string anchor;  // the statement checked
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
  double wall_time = 0.0;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<std::string, double>> stats;

  void Record(double margin);
};

struct VerificationReport {
  std::string suite;
  std::size_t corpus_size = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  std::size_t total_violations() const;
};

inline constexpr std::string_view kSuiteNames[] = {
    "measure-oracle", "iso",
    "barycenter-max", "main",
    "strong-vs-standard", "alpha-hat-corollary",
    "excess-identity", "scalar-functions",
    "stationarity", "all"};

bool IsSuiteName(std::string_view name);

struct VerifyConfig {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  int jobs = 1;
  // Replaces 80 pi^2 sqrt(2 pi) in the deficit-controls-asymmetry checks.
  std::optional<double> constant;
};

// Throws kInvalidArgument for an unknown suite name.
VerificationReport RunSuite(std::string_view name, const VerifyConfig& config);

enum class ReportFormat { kJson, kCsv };

// JSON: {"suite", "corpus_size", "seed", "checks": [...]}. CSV: header
// name,anchor,samples,violations,worst_margin,seed,wall_time and one row per
// check. Reals are written with 17 significant digits.
std::string RenderReport(const VerificationReport& report, ReportFormat format);

// Throws kIo with the path on failure.
void EmitReport(const VerificationReport& report, const std::string& path,
                ReportFormat format);

}  // namespace gaussiso

#endif  // GAUSSISO_VERIFY_HPP_
