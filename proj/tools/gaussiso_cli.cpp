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

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaussiso/gaussiso.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

struct StringDeleter {
  void operator()(char* s) const { gi_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int Report(gi_status status) {
  std::fprintf(stderr, "error: %s: %s\n", gi_status_name(status), gi_last_error());
  switch (status) {
    case GI_INVALID_ARGUMENT:
    case GI_PARSE:
    case GI_UNSUPPORTED:
    case GI_IO:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

// "paper" selects the stability constant at s.
bool ParseConstant(const std::string& text, int* use_default, double* value) {
  if (text == "paper") {
    *use_default = 1;
    return true;
  }
  errno = 0;
  char* end = nullptr;
  *value = std::strtod(text.c_str(), &end);
  *use_default = 0;
  return errno == 0 && end != text.c_str() && *end == '\0';
}

bool ParseList(std::string text, std::vector<double>* out) {
  for (char& c : text) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(token.c_str(), &end);
    if (errno != 0 || *end != '\0') return false;
    out->push_back(v);
  }
  return !out->empty();
}

int PrintOwned(gi_status status, char* raw) {
  OwnedString text(raw);
  if (status != GI_OK) return Report(status);
  std::printf("%s\n", text.get());
  return kExitOk;
}

int RunEval(const std::string& set_json, const std::vector<double>& target) {
  gi_set* set = nullptr;
  if (gi_status st = gi_set_from_json(set_json.c_str(), &set); st != GI_OK) {
    return Report(st);
  }
  std::unique_ptr<gi_set, decltype(&gi_set_free)> owned(set, gi_set_free);
  char* out = nullptr;
  const gi_status st =
      gi_set_bundle_json(set, target.empty() ? nullptr : target.data(), &out);
  return PrintOwned(st, out);
}

struct VerifyFlags {
  std::string suite = "all";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  int jobs = 1;
  std::vector<double> constant;
};

int RunVerify(const VerifyFlags& f) {
  if (!gi_is_suite_name(f.suite.c_str())) {
    std::fprintf(stderr, "error: unknown suite \"%s\"\n", f.suite.c_str());
    return kExitUsage;
  }
  gi_verify_options options;
  gi_verify_options_init(&options);
  options.suite = f.suite.c_str();
  options.samples = f.samples;
  options.seed = f.seed;
  options.jobs = f.jobs;
  if (!f.constant.empty()) {
    options.has_constant = 1;
    options.constant = f.constant.front();
  }
  gi_report* report = nullptr;
  if (gi_status st = gi_verify(&options, &report); st != GI_OK) return Report(st);
  std::unique_ptr<gi_report, decltype(&gi_report_free)> owned(report,
                                                              gi_report_free);
  const gi_report_format format =
      f.format == "csv" ? GI_FORMAT_CSV : GI_FORMAT_JSON;
  if (f.out.empty()) {
    char* text = nullptr;
    const gi_status st = gi_report_render(report, format, &text);
    if (int rc = PrintOwned(st, text); rc != kExitOk) return rc;
  } else if (gi_status st = gi_report_write(report, f.out.c_str(), format);
             st != GI_OK) {
    return Report(st);
  }
  std::uint64_t violations = 0;
  gi_report_violations(report, &violations);
  std::fprintf(stderr, "suite %s: %llu violation(s)\n", f.suite.c_str(),
               static_cast<unsigned long long>(violations));
  return violations == 0 ? kExitOk : kExitViolations;
}

struct MinimizeFlags {
  double s = 0.0;
  std::string eps = "paper";
  std::string lambda = "paper";
  int k_max = 3;
  int starts = 64;
  std::uint64_t seed = 0;
  int jobs = 1;
};

int RunMinimize(const MinimizeFlags& f) {
  gi_minimize_options options;
  gi_minimize_options_init(&options);
  options.s = f.s;
  if (!ParseConstant(f.eps, &options.default_eps, &options.eps) ||
      !ParseConstant(f.lambda, &options.default_lambda, &options.lambda)) {
    std::fprintf(stderr, "error: --eps and --lambda take a number or \"paper\"\n");
    return kExitUsage;
  }
  options.k_max = f.k_max;
  options.starts = f.starts;
  options.seed = f.seed;
  options.jobs = f.jobs;
  gi_minimize_result* result = nullptr;
  if (gi_status st = gi_minimize(&options, &result); st != GI_OK) {
    return Report(st);
  }
  std::unique_ptr<gi_minimize_result, decltype(&gi_minimize_free)> owned(
      result, gi_minimize_free);
  char* text = nullptr;
  const gi_status st = gi_minimize_json(result, &text);
  return PrintOwned(st, text);
}

int RunSweep(const std::string& list) {
  std::vector<double> s;
  if (!ParseList(list, &s)) {
    std::fprintf(stderr, "error: --s-list must be a list of numbers\n");
    return kExitUsage;
  }
  char* text = nullptr;
  const gi_status st = gi_sweep_json(s.data(), s.size(), &text);
  return PrintOwned(st, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian isoperimetric stability toolkit"};
  app.require_subcommand(1);

  std::string set_json;
  std::vector<double> target;
  CLI::App* eval = app.add_subcommand("eval", "Quantities of one set");
  eval->add_option("--set", set_json, "Set descriptor (JSON)")->required();
  eval->add_option("--target-s", target, "Report gamma - Phi(target)")
      ->expected(1);

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", vf.suite, "Suite name")->capture_default_str();
  verify->add_option("--samples", vf.samples, "Corpus size")->capture_default_str();
  verify->add_option("--seed", vf.seed, "Base seed")->capture_default_str();
  verify->add_option("--out", vf.out, "Report path (default: stdout)");
  verify->add_option("--format", vf.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  verify->add_option("--jobs", vf.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--constant", vf.constant,
                     "Replace the stability constant c")
      ->expected(1);

  MinimizeFlags mf;
  CLI::App* minimize = app.add_subcommand("minimize", "Minimize F over interval unions");
  minimize->add_option("--s", mf.s, "Mass level")->required();
  minimize->add_option("--eps", mf.eps, "Number, or \"paper\" for the stability constant at s")->capture_default_str();
  minimize->add_option("--lambda", mf.lambda, "Number, or \"paper\" for the stability constant at s")
      ->capture_default_str();
  minimize->add_option("--kmax", mf.k_max, "Maximum interval count")
      ->capture_default_str();
  minimize->add_option("--starts", mf.starts, "Random starts")->capture_default_str();
  minimize->add_option("--seed", mf.seed, "Seed")->capture_default_str();
  minimize->add_option("--jobs", mf.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string s_list;
  CLI::App* sweep = app.add_subcommand("sweep", "Two-ray mass sweep");
  sweep->add_option("--s-list", s_list, "Levels, comma or space separated")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (*eval) return RunEval(set_json, target);
  if (*verify) return RunVerify(vf);
  if (*minimize) return RunMinimize(mf);
  if (*sweep) return RunSweep(s_list);
  return kExitUsage;
}
