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

#include "gaussiso/gaussiso.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gaussiso/error.hpp"
#include "gaussiso/functionals.hpp"
#include "gaussiso/json_io.hpp"
#include "gaussiso/optimizer.hpp"
#include "gaussiso/sets.hpp"
#include "gaussiso/verify.hpp"

struct gi_set {
  gaussiso::GaussianSet set;
};

struct gi_report {
  gaussiso::VerificationReport report;
};

struct gi_minimize_result {
  gaussiso::MinimizeResult result;
  gaussiso::FunctionalParams params;
};

namespace {

thread_local std::string last_error;

gi_status SetError(gi_status status, const char* what) {
  last_error = what;
  return status;
}

gi_status FromCode(gaussiso::ErrorCode code) {
  using gaussiso::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return GI_INVALID_ARGUMENT;
    case ErrorCode::kUnsupported: return GI_UNSUPPORTED;
    case ErrorCode::kParse: return GI_PARSE;
    case ErrorCode::kIo: return GI_IO;
    case ErrorCode::kNoConvergence: return GI_NUMERIC;
  }
  return GI_INTERNAL;
}

template <class Fn>
gi_status Guard(Fn&& fn) {
  try {
    fn();
    return GI_OK;
  } catch (const gaussiso::Error& e) {
    return SetError(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return SetError(GI_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return SetError(GI_INTERNAL, e.what());
  }
}

gi_status NullArgument() { return SetError(GI_INVALID_ARGUMENT, "null argument"); }

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* gi_version(void) { return "0.1.0"; }

const char* gi_last_error(void) { return last_error.c_str(); }

const char* gi_status_name(gi_status status) {
  switch (status) {
    case GI_OK: return "ok";
    case GI_INVALID_ARGUMENT: return "invalid argument";
    case GI_PARSE: return "parse error";
    case GI_UNSUPPORTED: return "unsupported";
    case GI_IO: return "i/o error";
    case GI_NUMERIC: return "numerical failure";
    case GI_INTERNAL: return "internal error";
  }
  return "unknown";
}

void gi_string_free(char* s) { delete[] s; }

gi_status gi_set_from_json(const char* json, gi_set** out) {
  if (json == nullptr || out == nullptr) return NullArgument();
  *out = nullptr;
  return Guard([&] { *out = new gi_set{gaussiso::ParseSetText(json)}; });
}

void gi_set_free(gi_set* set) { delete set; }

gi_status gi_set_dim(const gi_set* set, int* out) {
  if (set == nullptr || out == nullptr) return NullArgument();
  return Guard([&] { *out = set->set.dim(); });
}

gi_status gi_set_measure(const gi_set* set, double* out) {
  if (set == nullptr || out == nullptr) return NullArgument();
  return Guard([&] { *out = gaussiso::Measure(set->set); });
}

gi_status gi_set_perimeter(const gi_set* set, double* out) {
  if (set == nullptr || out == nullptr) return NullArgument();
  return Guard([&] { *out = gaussiso::Perimeter(set->set); });
}

gi_status gi_set_barycenter(const gi_set* set, double* out, size_t capacity,
                            size_t* dim) {
  if (set == nullptr || dim == nullptr || (out == nullptr && capacity > 0)) {
    return NullArgument();
  }
  return Guard([&] {
    const std::vector<double> b = gaussiso::Barycenter(set->set);
    *dim = b.size();
    for (size_t i = 0; i < b.size() && i < capacity; ++i) out[i] = b[i];
  });
}

gi_status gi_set_bundle_json(const gi_set* set, const double* target_s,
                             char** out_json) {
  if (set == nullptr || out_json == nullptr) return NullArgument();
  *out_json = nullptr;
  return Guard([&] {
    std::optional<double> target;
    if (target_s != nullptr) target = *target_s;
    const gaussiso::QuantityBundle q = gaussiso::ComputeBundle(set->set, target);
    nlohmann::json j = gaussiso::BundleToJson(q);
    j["set"] = gaussiso::SetToJson(set->set);
    *out_json = CopyString(j.dump(2));
  });
}

gi_status gi_stability_constants(double s, double* eps, double* lambda,
                                 double* c) {
  if (eps == nullptr || lambda == nullptr || c == nullptr) return NullArgument();
  return Guard([&] {
    const gaussiso::StabilityConstants k = gaussiso::StabilityConstantsAt(s);
    *eps = k.eps;
    *lambda = k.lambda_pen;
    *c = k.c;
  });
}

void gi_verify_options_init(gi_verify_options* options) {
  if (options == nullptr) return;
  options->suite = "all";
  options->samples = 10000;
  options->seed = 0;
  options->jobs = 1;
  options->has_constant = 0;
  options->constant = 0.0;
}

int gi_is_suite_name(const char* name) {
  return name != nullptr && gaussiso::IsSuiteName(name) ? 1 : 0;
}

gi_status gi_verify(const gi_verify_options* options, gi_report** out) {
  if (options == nullptr || options->suite == nullptr || out == nullptr) {
    return NullArgument();
  }
  *out = nullptr;
  return Guard([&] {
    gaussiso::VerifyConfig config;
    config.samples = static_cast<std::size_t>(options->samples);
    config.seed = options->seed;
    config.jobs = options->jobs;
    if (options->has_constant) config.constant = options->constant;
    *out = new gi_report{gaussiso::RunSuite(options->suite, config)};
  });
}

void gi_report_free(gi_report* report) { delete report; }

gi_status gi_report_violations(const gi_report* report, uint64_t* out) {
  if (report == nullptr || out == nullptr) return NullArgument();
  *out = report->report.total_violations();
  return GI_OK;
}

gi_status gi_report_render(const gi_report* report, gi_report_format format,
                           char** out) {
  if (report == nullptr || out == nullptr) return NullArgument();
  *out = nullptr;
  return Guard([&] {
    *out = CopyString(gaussiso::RenderReport(
        report->report, format == GI_FORMAT_CSV ? gaussiso::ReportFormat::kCsv
                                                : gaussiso::ReportFormat::kJson));
  });
}

gi_status gi_report_write(const gi_report* report, const char* path,
                          gi_report_format format) {
  if (report == nullptr || path == nullptr) return NullArgument();
  return Guard([&] {
    gaussiso::EmitReport(report->report, path,
                         format == GI_FORMAT_CSV ? gaussiso::ReportFormat::kCsv
                                                 : gaussiso::ReportFormat::kJson);
  });
}

void gi_minimize_options_init(gi_minimize_options* options) {
  if (options == nullptr) return;
  const gaussiso::OptimizerSettings defaults;
  options->s = 0.0;
  options->default_eps = 1;
  options->eps = 0.0;
  options->default_lambda = 1;
  options->lambda = 0.0;
  options->k_max = 3;
  options->starts = defaults.multistarts;
  options->seed = defaults.seed;
  options->jobs = defaults.jobs;
}

gi_status gi_minimize(const gi_minimize_options* options,
                      gi_minimize_result** out) {
  if (options == nullptr || out == nullptr) return NullArgument();
  *out = nullptr;
  return Guard([&] {
    const gaussiso::StabilityConstants k =
        gaussiso::StabilityConstantsAt(options->s);
    const gaussiso::FunctionalParams params = gaussiso::FunctionalParams::Make(
        options->s, options->default_eps ? k.eps : options->eps,
        options->default_lambda ? k.lambda_pen : options->lambda);
    gaussiso::OptimizerSettings settings;
    settings.multistarts = options->starts;
    settings.seed = options->seed;
    settings.jobs = options->jobs;
    *out = new gi_minimize_result{
        gaussiso::MinimizeF(params, options->k_max, settings), params};
  });
}

void gi_minimize_free(gi_minimize_result* result) { delete result; }

gi_status gi_minimize_summary(const gi_minimize_result* result,
                              double* best_value, int* best_is_half_line,
                              int* half_line_beaten) {
  if (result == nullptr) return NullArgument();
  if (best_value != nullptr) *best_value = result->result.best_value;
  if (best_is_half_line != nullptr) {
    *best_is_half_line = result->result.best_is_half_line ? 1 : 0;
  }
  if (half_line_beaten != nullptr) {
    *half_line_beaten = result->result.half_line_beaten ? 1 : 0;
  }
  return GI_OK;
}

gi_status gi_minimize_json(const gi_minimize_result* result, char** out_json) {
  if (result == nullptr || out_json == nullptr) return NullArgument();
  *out_json = nullptr;
  return Guard([&] {
    *out_json = CopyString(
        gaussiso::MinimizeToJson(result->result, result->params).dump(2));
  });
}

gi_status gi_sweep_json(const double* s_values, size_t n, char** out_json) {
  if ((s_values == nullptr && n > 0) || out_json == nullptr) return NullArgument();
  *out_json = nullptr;
  return Guard([&] {
    std::vector<double> s(s_values, s_values + n);
    *out_json = CopyString(gaussiso::SweepToJson(gaussiso::MassSweep(s)).dump(2));
  });
}

}  // extern "C"
