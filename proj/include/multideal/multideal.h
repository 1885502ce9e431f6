// Copyright 2026 The multideal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the multideal library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an mi_status; on failure a description of the
 * last error on the calling thread is available from mi_last_error().
 * Strings handed out by the library are NUL-terminated, heap allocated and
 * released with mi_string_free().
 *
 * Rationals cross the boundary as decimal strings "p/q" or "p".
 */
#ifndef MULTIDEAL_H_
#define MULTIDEAL_H_

#if defined(MULTIDEAL_BUILDING_LIBRARY)
#define MI_API __attribute__((visibility("default")))
#else
#define MI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mi_status {
  MI_OK = 0,
  MI_ERR_PARSE = 1,
  MI_ERR_ZERO_IDEAL = 2,
  MI_ERR_DIMENSION = 3,
  MI_ERR_INVALID_ARGUMENT = 4,
  MI_ERR_VERIFY_MISMATCH = 5,
  MI_ERR_INTERNAL = 6
} mi_status;

typedef enum mi_point_class {
  MI_INTERIOR = 0,
  MI_BOUNDARY = 1,
  MI_EXTERIOR = 2
} mi_point_class;

typedef enum mi_plot_format { MI_PLOT_SVG = 0, MI_PLOT_CSV = 1 } mi_plot_format;

typedef struct mi_ideal mi_ideal;

MI_API const char* mi_version(void);
MI_API const char* mi_status_string(mi_status status);
/* Message of the last failed call on this thread; "" if none. */
MI_API const char* mi_last_error(void);
MI_API void mi_string_free(char* str);

/* Text grammar or JSON document; nvars == 0 infers the variable count. */
MI_API mi_status mi_ideal_parse(const char* source, int nvars,
                                mi_ideal** out);
MI_API void mi_ideal_free(mi_ideal* ideal);
MI_API int mi_ideal_nvars(const mi_ideal* ideal);
MI_API int mi_ideal_num_generators(const mi_ideal* ideal);
MI_API int mi_ideal_is_zero(const mi_ideal* ideal);
/* Copies generator `index` into exponents[0..nvars). */
MI_API mi_status mi_ideal_generator(const mi_ideal* ideal, int index,
                                    long long* exponents);
MI_API int mi_ideal_equal(const mi_ideal* a, const mi_ideal* b);
MI_API mi_status mi_ideal_to_text(const mi_ideal* ideal, char** out);
MI_API mi_status mi_ideal_to_json(const mi_ideal* ideal, char** out);

/* J(r * a). */
MI_API mi_status mi_multiplier_ideal(const mi_ideal* ideal, const char* r,
                                     mi_ideal** out);
MI_API mi_status mi_integral_closure(const mi_ideal* ideal, mi_ideal** out);

/* Newton polyhedron as {"nvars", "facets", "vertices"}. */
MI_API mi_status mi_facets_json(const mi_ideal* ideal, char** out);
/* Classifies a point given as comma-separated rationals against rP. */
MI_API mi_status mi_classify(const mi_ideal* ideal, const char* r,
                             const char* point, mi_point_class* out);
MI_API mi_status mi_lct_json(const mi_ideal* ideal, char** out);
/* Two-variable picture of J(r * a); r may be NULL (r = 1). */
MI_API mi_status mi_plot2d(const mi_ideal* ideal, const char* r,
                           mi_plot_format format, char** out);

/* Receives one {"threshold", "witness_ideal"} JSON record at a time, in
 * increasing threshold order. A nonzero return stops the stream. */
typedef int (*mi_search_callback)(const char* record_json, void* user_data);

/* diagonal_only != 0 restricts to (x_1^a_1, ..., x_n^a_n). */
MI_API mi_status mi_threshold_search(int dim, int max_exponent,
                                     int max_generators, int diagonal_only,
                                     int jobs, mi_search_callback callback,
                                     void* user_data);

/* Cross-checks the facet-based results against the LP oracle. r may be
 * NULL (r = 1). Returns MI_ERR_VERIFY_MISMATCH and a newline-separated
 * report in *diff when the two paths disagree; *diff is "" otherwise. */
MI_API mi_status mi_verify(const mi_ideal* ideal, const char* r, char** diff);

#ifdef __cplusplus
}
#endif

#endif /* MULTIDEAL_H_ */
