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

#ifndef GAUSSISO_GAUSSISO_H_
#define GAUSSISO_GAUSSISO_H_

/* C interface to the gaussiso library.
 *
 * Every fallible call returns a gi_status; on failure gi_last_error() holds a
 * message for the calling thread until its next failing call. Strings handed
 * out through char** parameters are owned by the caller and released with
 * gi_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GAUSSISO_BUILDING)
#define GI_API __declspec(dllexport)
#else
#define GI_API __declspec(dllimport)
#endif
#else
#define GI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gi_status {
  GI_OK = 0,
  GI_INVALID_ARGUMENT = 1,
  GI_PARSE = 2,
  GI_UNSUPPORTED = 3,
  GI_IO = 4,
  GI_NUMERIC = 5,
  GI_INTERNAL = 6
} gi_status;

typedef enum gi_report_format { GI_FORMAT_JSON = 0, GI_FORMAT_CSV = 1 } gi_report_format;

typedef struct gi_set gi_set;
typedef struct gi_report gi_report;
typedef struct gi_minimize_result gi_minimize_result;

GI_API const char* gi_version(void);
GI_API const char* gi_last_error(void);
GI_API const char* gi_status_name(gi_status status);
GI_API void gi_string_free(char* s);

/* Sets. See the README for the descriptor grammar. */
GI_API gi_status gi_set_from_json(const char* json, gi_set** out);
GI_API void gi_set_free(gi_set* set);
GI_API gi_status gi_set_dim(const gi_set* set, int* out);
GI_API gi_status gi_set_measure(const gi_set* set, double* out);
GI_API gi_status gi_set_perimeter(const gi_set* set, double* out);
/* Writes min(capacity, dim) coordinates; *dim receives the full dimension. */
GI_API gi_status gi_set_barycenter(const gi_set* set, double* out,
                                   size_t capacity, size_t* dim);
/* target_s may be NULL. */
GI_API gi_status gi_set_bundle_json(const gi_set* set, const double* target_s,
                                    char** out_json);

/* Penalty constants eps(s), Lambda(s) and the stability constant c. */
GI_API gi_status gi_stability_constants(double s, double* eps, double* lambda,
                                        double* c);

/* Verification suites. */
typedef struct gi_verify_options {
  const char* suite;
  uint64_t samples;
  uint64_t seed;
  int jobs;
  int has_constant; /* nonzero: use `constant` in place of c */
  double constant;
} gi_verify_options;

GI_API void gi_verify_options_init(gi_verify_options* options);
GI_API int gi_is_suite_name(const char* name);
GI_API gi_status gi_verify(const gi_verify_options* options, gi_report** out);
GI_API void gi_report_free(gi_report* report);
GI_API gi_status gi_report_violations(const gi_report* report, uint64_t* out);
GI_API gi_status gi_report_render(const gi_report* report,
                                  gi_report_format format, char** out);
GI_API gi_status gi_report_write(const gi_report* report, const char* path,
                                 gi_report_format format);

/* Minimization of F over unions of at most k_max intervals. */
typedef struct gi_minimize_options {
  double s;
  int default_eps; /* nonzero: eps = eps(s) */
  double eps;
  int default_lambda; /* nonzero: Lambda = Lambda(s) */
  double lambda;
  int k_max;
  int starts;
  uint64_t seed;
  int jobs;
} gi_minimize_options;

GI_API void gi_minimize_options_init(gi_minimize_options* options);
GI_API gi_status gi_minimize(const gi_minimize_options* options,
                             gi_minimize_result** out);
GI_API void gi_minimize_free(gi_minimize_result* result);
GI_API gi_status gi_minimize_summary(const gi_minimize_result* result,
                                     double* best_value, int* best_is_half_line,
                                     int* half_line_beaten);
GI_API gi_status gi_minimize_json(const gi_minimize_result* result,
                                  char** out_json);

/* Two-ray mass sweep; every level must be negative. */
GI_API gi_status gi_sweep_json(const double* s_values, size_t n,
                               char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GAUSSISO_GAUSSISO_H_ */
